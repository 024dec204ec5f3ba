// Acceptance run: one PASS/FAIL line per criterion, with the measured constants.
// Criteria listed in `expected_failures` are reported but do not fail the process.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jumpkit/fourier.hpp"
#include "jumpkit/geometry.hpp"
#include "jumpkit/harness.hpp"
#include "jumpkit/modulus.hpp"
#include "jumpkit/oscillatory.hpp"
#include "jumpkit/random.hpp"
#include "jumpkit/variation.hpp"
#include "oracles.hpp"

using namespace jumpkit;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

// Pointwise long/short ratio is unbounded (see the counterexample in the unit tests); the
// Poisson/envelope off-diagonal sums do not decay at rate 2^{-|j|/4}.
const std::set<int> expected_failures{4, 6};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ResultTable run(const std::string& kind, const std::string& text) {
    return run_experiment(parse_experiment_config(kind, text));
}

std::vector<const ResultRow*> rows_of(const ResultTable& t, const std::string& id) {
    std::vector<const ResultRow*> out;
    for (const auto& r : t.rows())
        if (r.experiment == id) out.push_back(&r);
    return out;
}

double param(const ResultRow& r, const std::string& key) {
    for (const auto& [k, v] : r.params)
        if (k == key) return v;
    return std::nan("");
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 1. exhaustive oracle equivalence on length-6 patterns over {0, +-1, +-2}
Outcome oracle_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    const double lambdas[] = {0.5, 1, 1.5};
    const double rs[] = {1, 1.5, 2, 3, infinity};
    std::size_t mismatches = 0, checks = 0;
    double worst = 0;
    std::vector<oracle::cplx> v(6);
    for (int code = 0; code < 15625; ++code) {
        int c = code;
        for (auto& x : v) {
            x = double(c % 5 - 2);
            c /= 5;
        }
        for (double l : lambdas) {
            ++checks;
            if (jump_count(v, l) != oracle::brute_jump_count(v, l)) ++mismatches;
        }
        for (double r : rs) {
            ++checks;
            double e = std::fabs(variation(v, r) - oracle::brute_variation(v, r));
            worst = std::max(worst, e);
            if (e > 1e-12) ++mismatches;
        }
    }
    double secs = seconds_since(t0);
    return {mismatches == 0 && secs < 60,
            fmt("%zu checks, %zu mismatches, max |V - brute| = %.3g, %.1f s", checks, mismatches, worst, secs)};
}

// 2. lambda N_lambda^{1/r} <= V^r on 1e5 random paths, at every breakpoint of N
Outcome bridge_inequality() {
    auto t0 = std::chrono::steady_clock::now();
    const double rs[] = {1, 1.5, 2, 3, infinity};
    std::size_t violations = 0;
    double worst = 0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        Rng rng(stream_seed(2024, 2, i));
        int len = 2 + static_cast<int>(uniform01(rng) * 31);
        std::vector<cplx> v(len);
        for (auto& x : v) x = {uniform(rng, -2, 2), uniform(rng, -2, 2)};
        auto prof = jump_breakpoints(v);
        for (double r : rs) {
            double V = variation(v, r);
            for (const auto& b : prof.breakpoints()) {
                double lhs = b.magnitude * (std::isinf(r) ? 1.0 : std::pow(double(b.count), 1 / r));
                worst = std::max(worst, lhs / V);
                if (lhs > V * (1 + 1e-12)) ++violations;
            }
        }
    }
    return {violations == 0, fmt("1e5 paths, %zu violations, max ratio %.6f, %.1f s", violations, worst,
                                 seconds_since(t0))};
}

struct CorpusRuns {
    std::vector<ResultTable> tables;
    double first_secs = 0;
};

CorpusRuns& corpus_runs() {
    static CorpusRuns runs = [] {
        CorpusRuns c;
        for (int seed : {1, 2, 3}) {
            auto t0 = std::chrono::steady_clock::now();
            c.tables.push_back(run("jump-corpus", fmt(R"({"seed": %d, "paths": 10000, "max_len": 32})", seed)));
            if (seed == 1) c.first_secs = seconds_since(t0);
        }
        return c;
    }();
    return runs;
}

// 3. two-level dyadic bound, 1e4 paths per r
Outcome lewko_bound_holds() {
    auto& c = corpus_runs();
    bool ok = c.first_secs < 120;
    std::string d;
    for (const auto* r : rows_of(c.tables[0], "lewko")) {
        ok = ok && r->measured <= 1 + 1e-12;
        d += fmt("r=%g max lhs/rhs %.4f; ", param(*r, "r"), r->measured);
    }
    return {ok, d + fmt("corpus run %.1f s", c.first_secs)};
}

// 4. long/short constant, three seeds
Outcome long_short_constant() {
    auto& c = corpus_runs();
    std::vector<double> pw, sn;
    for (const auto& t : c.tables) {
        pw.push_back(rows_of(t, "long-short").at(0)->measured);
        sn.push_back(rows_of(t, "long-short-seminorm").at(0)->measured);
    }
    auto spread = [](const std::vector<double>& v) {
        return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
    };
    bool finite = std::all_of(pw.begin(), pw.end(), [](double x) { return std::isfinite(x); });
    bool ok = finite && spread(pw) <= 1.1;
    return {ok, fmt("pointwise sup per seed %g %g %g; sup-over-lambda form %.4f %.4f %.4f (spread %.3f)", pw[0], pw[1],
                    pw[2], sn[0], sn[1], sn[2], spread(sn))};
}

// 5. resolution of identity against the telescoping tail bound
Outcome resolution_of_identity() {
    auto t = run("symbol-envelope", R"({"seed": 5, "checks": ["resolution"], "dims": [1, 2, 4], "grid_points": 1000, "K": 20})");
    bool ok = true;
    std::string d;
    for (const auto* r : rows_of(t, "resolution-of-identity")) {
        // rounding slack: both sides are sums of doubles near 1
        ok = ok && r->measured <= 1e-14;
        d += fmt("d=%g max(lhs - bound) %.3g, max lhs/bound %.4f; ", param(*r, "d"), r->measured, r->ratio);
    }
    return {ok, d};
}

// 6. off-diagonal decay with C fitted at j = 0
Outcome off_diagonal() {
    auto t0 = std::chrono::steady_clock::now();
    auto t = run("symbol-envelope", R"({"seed": 5, "checks": ["off-diagonal"], "grid_points": 1000, "j_max": 20, "k_range": 40})");
    double secs = seconds_since(t0);
    double worst[2] = {0, 0};
    int worst_j[2] = {0, 0};
    for (const auto* r : rows_of(t, "off-diagonal")) {
        int pair = static_cast<int>(param(*r, "pair"));
        if (r->ratio > worst[pair]) {
            worst[pair] = r->ratio;
            worst_j[pair] = static_cast<int>(param(*r, "j"));
        }
    }
    bool ok = worst[0] <= 1 + 1e-12 && secs < 30;
    return {ok, fmt("envelope/poisson max a_j / (a_0 2^{-|j|/4}) = %.4f at j=%d; envelope/envelope %.4f at j=%d; "
                    "%.1f s",
                    worst[0], worst_j[0], worst[1], worst_j[1], secs)};
}

// 7. discrete symbol constants and their growth in d
Outcome discrete_symbols() {
    auto t0 = std::chrono::steady_clock::now();
    auto t = run("symbol-envelope", R"({"seed": 5, "checks": ["discrete"], "discrete_dims": [1, 2, 3, 4, 5, 6],
                                        "grid_points": 10000, "n_max": 64})");
    bool ok = true;
    std::string d;
    const char* names[] = {"decay", "near-zero", "lipschitz"};
    for (const auto* r : rows_of(t, "discrete-growth")) {
        ok = ok && std::isfinite(r->measured) && r->ratio <= 1.5;
        d += fmt("%s d=1 %.4f max %.4f growth %.3f; ", names[static_cast<int>(param(*r, "bound"))], r->reference,
                 r->measured, r->ratio);
    }
    return {ok, d + fmt("%.1f s", seconds_since(t0))};
}

// 8. dimension sweep of the jump seminorm of dyadic cube averages
Outcome dimension_sweep() {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = parse_experiment_config("dimension-sweep", slurp(fs::path(JUMPKIT_EXAMPLE_DIR) / "sweep_dim.json"));
    auto t = run_experiment(cfg);
    double secs = seconds_since(t0);
    double worst = 0, delta = 0;
    for (const auto* r : rows_of(t, "dim-sweep-random")) worst = std::max(worst, r->ratio);
    for (const auto* r : rows_of(t, "dim-sweep-delta")) delta = std::max(delta, r->ratio);
    std::string d;
    for (const auto* r : rows_of(t, "dim-sweep-random"))
        if (param(*r, "d") == 1) d += fmt("p=%g d=1 ratio %.4f; ", param(*r, "p"), r->measured);
    return {worst <= 1.5 && secs < 600,
            d + fmt("max ratio to d=1 over d<=6: %.4f (unit mass %.4f), %.1f s", worst, delta, secs)};
}

// 9. van der Corput ratios: closed forms and per-decade stability
Outcome vdc_stability() {
    auto t0 = std::chrono::steady_clock::now();
    double qerr = 0;
    for (double l : {10.0, 37.0, 100.0, 512.0}) {
        auto a = vdc_1d(PhaseSpec::monomial(l, 1, 0, 1), AmplitudeSpec::indicator(0, 1));
        qerr = std::max(qerr, std::fabs(a.lhs - std::abs(std::polar(1.0, l) - 1.0) / l));
        auto h = vdc_1d(PhaseSpec::monomial(l, 1, 0, 1), AmplitudeSpec::hat(0, 1));
        double s = std::sin(l / 4) / (l / 4);
        qerr = std::max(qerr, std::fabs(h.lhs - 0.5 * s * s));
        auto m = vdc_multidim(PhaseSpec::polynomial(2, {{{1, 0}, l}, {{0, 1}, 2 * l}}), AmplitudeSpec::box(0, 0.25, 0, 0.25), 1);
        double ref = std::abs(std::polar(1.0, l / 4) - 1.0) / l * std::abs(std::polar(1.0, l / 2) - 1.0) / (2 * l);
        qerr = std::max(qerr, std::fabs(m.lhs - ref));
    }
    // per-decade sup of the ratio; the sup against the first decade
    double worst_growth = 0;
    std::string d;
    auto stability = [&](const std::string& name, const std::function<double(double)>& ratio) {
        std::map<int, double> sup;
        for (int i = 0; i < 24; ++i) {
            double l = std::pow(10.0, 1 + i / 12.0);
            sup[1 + i / 12] = std::max(sup[1 + i / 12], ratio(l));
        }
        double g = sup[2] / sup[1];
        worst_growth = std::max(worst_growth, g);
        if (!(sup[1] > 0 && std::isfinite(sup[2]))) worst_growth = infinity;
        d += fmt("%s %.3f->%.3f; ", name.c_str(), sup[1], sup[2]);
    };
    for (int k : {1, 2, 3}) {
        stability(fmt("k=%d ind", k), [k](double l) {
            return vdc_1d(PhaseSpec::monomial(l, k, 0, 1), AmplitudeSpec::indicator(0, 1)).ratio();
        });
        stability(fmt("k=%d hat", k), [k](double l) {
            return vdc_1d(PhaseSpec::monomial(l, k, 0, 1), AmplitudeSpec::hat(0, 1)).ratio();
        });
    }
    for (auto* amp : {"box", "hat"}) {
        auto psi = std::string(amp) == "box" ? AmplitudeSpec::box(0, 0.25, 0, 0.25)
                                             : AmplitudeSpec::tensor_hat(0, 0.25, 0, 0.25);
        // Lambda = 3 s for the linear phase and 2 s for the quadratic one (R = 1)
        stability(fmt("2d linear %s", amp), [&](double L) {
            return vdc_multidim(PhaseSpec::polynomial(2, {{{1, 0}, L / 3}, {{0, 1}, 2 * L / 3}}), psi, 1).ratio();
        });
        stability(fmt("2d quadratic %s", amp), [&](double L) {
            return vdc_multidim(PhaseSpec::polynomial(2, {{{2, 0}, L / 2}, {{0, 2}, L / 2}}), psi, 1).ratio();
        });
    }
    return {qerr <= 1e-8 && worst_growth <= 2,
            fmt("closed-form error %.2g; max decade growth %.3f; ", qerr, worst_growth) + d +
                fmt("%.1f s", seconds_since(t0))};
}

// 10. boundary neighbourhoods: Monte Carlo against the exact measures
Outcome boundary_measure() {
    auto t0 = std::chrono::steady_clock::now();
    auto t = run("boundary-measure", R"({"seed": 10, "samples": 1000000, "s_exponents": [2, 3, 4, 5, 6, 7, 8],
        "bodies": [{"type": "lq", "d": 2, "q": "inf"}, {"type": "lq", "d": 2, "q": 2}, {"type": "box", "half_widths": [0.5, 0.5]},
                   {"type": "lq", "d": 2, "q": 1}, {"type": "lq", "d": 3, "q": 2}, {"type": "lq", "d": 3, "q": "inf"}]})");
    std::size_t checks = 0, outside = 0;
    double worst_z = 0;
    for (const auto* r : rows_of(t, "boundary-exact")) {
        ++checks;
        double z = std::fabs(r->ratio - 1) / r->error;
        worst_z = std::max(worst_z, z);
        if (z > 3) ++outside;
    }
    double max_ratio = 0;
    bool finite = true;
    for (const auto* r : rows_of(t, "boundary")) {
        finite = finite && std::isfinite(r->ratio);
        max_ratio = std::max(max_ratio, r->ratio);
    }
    // s -> 0 limits: 4 sqrt 2 for squares, 2 pi for the disc
    double sq = 0, disc = 0, s_sq = infinity, s_disc = infinity;
    for (const auto* r : rows_of(t, "boundary")) {
        double s = param(*r, "s");
        if (param(*r, "body") == 0 && s < s_sq) s_sq = s, sq = r->ratio;
        if (param(*r, "body") == 1 && s < s_disc) s_disc = s, disc = r->ratio;
    }
    return {outside == 0 && finite && max_ratio < 16,
            fmt("%zu exact comparisons, %zu beyond 3 stderr (max %.2f); smallest s: square %.4f (4 sqrt 2 = %.4f), "
                "disc %.4f (2 pi = %.4f); max ratio %.3f; %.1f s",
                checks, outside, worst_z, sq, 4 * std::sqrt(2.0), disc, 2 * pi, max_ratio, seconds_since(t0))};
}

// 11. envelopes of the parabolic singular multiplier with K = 1/y
Outcome singular_envelopes() {
    auto t0 = std::chrono::steady_clock::now();
    auto gamma = CanonicalMapSpec::moment_curve(2);
    auto body = ConvexBodySpec::lq_ball(1, 2);
    auto grid = log_radial_grid(2, 1000, -8, 8, 11);
    double hi_min = infinity, hi_max = 0, lo_min = infinity, lo_max = 0;
    std::string d;
    for (int e = -4; e <= 4; ++e) {
        auto r = singular_envelope_check(gamma, body, KernelSpec::hilbert(), std::ldexp(1.0, e), 0.5, grid);
        hi_min = std::min(hi_min, r.high_constant);
        hi_max = std::max(hi_max, r.high_constant);
        lo_min = std::min(lo_min, r.low_constant);
        lo_max = std::max(lo_max, r.low_constant);
        d += fmt("t=2^%d (%.3f, %.3f); ", e, r.high_constant, r.low_constant);
    }
    double secs = seconds_since(t0);
    bool ok = hi_min > 0 && lo_min > 0 && hi_max <= 2 * hi_min && lo_max <= 2 * lo_min && secs < 300;
    return {ok, fmt("high spread %.3f, low spread %.3f; ", hi_max / hi_min, lo_max / lo_min) + d +
                    fmt("%.1f s", secs)};
}

// 12. Dini norms of t^theta
Outcome dini() {
    double worst = 0;
    std::string d;
    for (double th : {0.1, 0.5, 1.0}) {
        auto r = dini_norms(ModulusOfContinuity::power(th));
        double e = std::max(std::fabs(r.dini - 1 / th), std::fabs(r.log_dini - 1 / (th * th)));
        worst = std::max(worst, e);
        d += fmt("theta=%g (%.12f, %.12f); ", th, r.dini, r.log_dini);
    }
    return {worst <= 1e-8, fmt("max abs error %.3g; ", worst) + d};
}

// 13. CLI reruns are byte-identical
Outcome cli_determinism() {
    const std::vector<std::pair<std::string, std::string>> runs{
        {"boundary", "boundary.json"},          {"jump-corpus", "jump_corpus.json"},
        {"jump-count", "jump_count.json"},      {"jump-seminorm", "jump_seminorm.json"},
        {"lewko", "lewko.json"},                {"sweep-dim", "sweep_dim_small.json"},
        {"sweep-dim", "sweep_single_atom.json"}, {"symbols", "symbols.json"},
        {"variation", "variation.json"},        {"vdc", "vdc.json"}};
    const fs::path dir = fs::temp_directory_path();
    std::size_t same = 0, total = 0;
    std::string bad;
    for (const auto& [cmd, file] : runs)
        for (const char* format : {"csv", "json"}) {
            std::string out[2];
            bool ran = true;
            for (int k = 0; k < 2; ++k) {
                fs::path o = dir / fmt("jumpkit_acceptance_%d.%s", k, format);
                std::string line = std::string(JUMPKIT_CLI_PATH) + " " + cmd + " --config " +
                                   (fs::path(JUMPKIT_EXAMPLE_DIR) / file).string() + " --format " + format +
                                   " --out " + o.string();
                ran = ran && std::system(line.c_str()) == 0;
                out[k] = slurp(o);
                fs::remove(o);
            }
            ++total;
            if (ran && !out[0].empty() && out[0] == out[1]) ++same;
            else bad += file + "/" + format + " ";
        }
    return {same == total, fmt("%zu of %zu config/format pairs identical", same, total) +
                               (bad.empty() ? "" : "; differing: " + bad)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Criterion criteria[] = {
        {1, "oracle-equivalence", oracle_equivalence},   {2, "bridge-inequality", bridge_inequality},
        {3, "two-level-dyadic-bound", lewko_bound_holds}, {4, "long-short-constant", long_short_constant},
        {5, "resolution-of-identity", resolution_of_identity}, {6, "off-diagonal-decay", off_diagonal},
        {7, "discrete-symbol-bounds", discrete_symbols}, {8, "dimension-sweep", dimension_sweep},
        {9, "oscillatory-ratio-stability", vdc_stability}, {10, "boundary-neighbourhood", boundary_measure},
        {11, "singular-multiplier-envelopes", singular_envelopes}, {12, "dini-norms", dini},
        {13, "cli-determinism", cli_determinism},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        bool expected = expected_failures.count(c.id) > 0;
        std::printf("criterion %2d %-30s %s  %s%s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                    !o.pass && expected ? " [known failure]" : "");
        std::fflush(stdout);
        if (!o.pass && !expected) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
