#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace jumpkit {

// Exact dyadic rational num / 2^exp, kept normalized (num odd whenever exp > 0).
class DyadicTime {
public:
    static constexpr int max_exponent = 62;

    DyadicTime() = default;
    DyadicTime(std::int64_t num, int exp = 0);

    static DyadicTime parse(std::string_view text);
    static DyadicTime from_integer(std::int64_t n) { return DyadicTime(n, 0); }

    std::int64_t numerator() const { return num_; }
    int exponent() const { return exp_; }

    double to_double() const;
    std::string to_string() const;  // "p/2^q"

    bool is_positive() const { return num_ > 0; }
    bool is_power_of_two() const;
    // floor(log2 t) for t > 0.
    int floor_log2() const;

    friend std::strong_ordering operator<=>(const DyadicTime& a, const DyadicTime& b);
    friend bool operator==(const DyadicTime& a, const DyadicTime& b) = default;

private:
    std::int64_t num_ = 0;
    int exp_ = 0;
};

}  // namespace jumpkit
