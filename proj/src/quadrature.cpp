#include "jumpkit/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "jumpkit/errors.hpp"
#include "jumpkit/summation.hpp"

namespace jumpkit {

namespace {

template <int N>
GaussRule make_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    GaussRule r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            r.x.push_back(0);
            r.w.push_back(w[i]);
            continue;
        }
        r.x.push_back(-a[i]);
        r.w.push_back(w[i]);
        r.x.push_back(a[i]);
        r.w.push_back(w[i]);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
    static const GaussRule r8 = make_rule<8>(), r10 = make_rule<10>(), r16 = make_rule<16>(),
                           r20 = make_rule<20>(), r30 = make_rule<30>();
    switch (n) {
        case 8: return r8;
        case 10: return r10;
        case 16: return r16;
        case 20: return r20;
        case 30: return r30;
        default: throw InvalidArgument("unsupported Gauss-Legendre order");
    }
}

OscillatoryResult integrate_oscillatory(const std::function<cplx(double)>& f,
                                        const std::function<double(double, double)>& increment_bound,
                                        std::vector<double> cuts, const OscillatoryOptions& opt) {
    require(cuts.size() >= 2, "oscillatory integral needs an interval");
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const GaussRule& g = gauss_rule(opt.rule);

    std::vector<double> edges{cuts.front()};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        // split [l, r] into equal pieces so each respects the phase bound
        std::vector<std::pair<double, double>> stack{{cuts[i], cuts[i + 1]}};
        while (!stack.empty()) {
            auto [l, r] = stack.back();
            stack.pop_back();
            double inc = increment_bound(l, r);
            if (inc <= opt.max_increment || r - l <= 1e-14 * std::max(1.0, std::fabs(l))) {
                edges.push_back(r);
                continue;
            }
            std::size_t pieces = static_cast<std::size_t>(std::ceil(inc / opt.max_increment));
            if (pieces > opt.max_panels) throw NumericFailure("oscillatory integral needs too many panels");
            if (pieces <= 2) {
                double m = 0.5 * (l + r);
                stack.push_back({m, r});
                stack.push_back({l, m});
                continue;
            }
            // push in reverse so edges come out in increasing order
            for (std::size_t p = pieces; p-- > 0;)
                stack.push_back({l + (r - l) * double(p) / double(pieces), p + 1 == pieces ? r : l + (r - l) * double(p + 1) / double(pieces)});
        }
    }
    if (edges.size() - 1 > opt.max_panels) throw NumericFailure("oscillatory integral needs too many panels");

    auto sum_over = [&](const std::vector<double>& e) {
        CompensatedSum re, im;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            cplx v = gauss_panel(f, e[i], e[i + 1], g);
            re.add(v.real());
            im.add(v.imag());
        }
        return cplx(re.value(), im.value());
    };

    cplx prev = sum_over(edges);
    for (int h = 0; h < opt.max_halvings; ++h) {
        std::vector<double> finer;
        finer.reserve(2 * edges.size());
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            finer.push_back(edges[i]);
            finer.push_back(0.5 * (edges[i] + edges[i + 1]));
        }
        finer.push_back(edges.back());
        if (finer.size() - 1 > opt.max_panels) break;
        cplx next = sum_over(finer);
        double err = std::abs(next - prev);
        edges.swap(finer);
        if (err <= opt.tol) return {next, err, edges.size() - 1};
        prev = next;
    }
    throw NumericFailure("oscillatory quadrature did not converge");
}

}  // namespace jumpkit
