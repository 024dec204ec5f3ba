#pragma once

#include <span>
#include <string>
#include <vector>

namespace jumpkit {

// Unit l^q ball, or an axis-aligned box given by half-widths and an optional center.
// Offset boxes are the only non-symmetric bodies supported.
class ConvexBodySpec {
public:
    enum class Kind { lq_ball, box };

    static ConvexBodySpec lq_ball(int d, double q);  // q in [1, inf]
    static ConvexBodySpec box(std::vector<double> half_widths, std::vector<double> center = {});

    Kind kind() const { return kind_; }
    int dim() const { return d_; }
    double q() const { return q_; }
    const std::vector<double>& half_widths() const { return w_; }
    const std::vector<double>& center() const { return c_; }
    bool symmetric() const;
    std::string label() const;

    bool contains(std::span<const double> x) const;  // open body
    double volume() const;
    double circumradius() const;  // max |x| over the body
    double diameter() const;
    // Distance from the origin to the boundary along the unit direction u (origin must be inside).
    double radial(std::span<const double> u) const;

    struct Distance {
        double value;
        bool exact;
    };
    // Euclidean distance from x to the boundary; exact for q in {1, 2, inf} and boxes, radial otherwise.
    Distance boundary_distance(std::span<const double> x) const;

    // Axis-aligned bounding box [lo, hi] of the body.
    void bounding_box(std::vector<double>& lo, std::vector<double>& hi) const;

private:
    Kind kind_ = Kind::lq_ball;
    int d_ = 1;
    double q_ = 2;
    std::vector<double> w_, c_;
};

double lq_norm(std::span<const double> x, double q);

}  // namespace jumpkit
