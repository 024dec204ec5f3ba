#include "jumpkit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

#include "json_detail.hpp"
#include "jumpkit/averaging.hpp"
#include "jumpkit/errors.hpp"
#include "jumpkit/fourier.hpp"
#include "jumpkit/geometry.hpp"
#include "jumpkit/kernels.hpp"
#include "jumpkit/random.hpp"
#include "jumpkit/summation.hpp"
#include "jumpkit/variation.hpp"

namespace jumpkit {

using detail::json;
using kernels::Exec;

namespace {

// ---- schema helpers

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw InvalidArgument(where + " must be a JSON object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw InvalidArgument("unknown key \"" + it.key() + "\" in " + where);
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    if constexpr (std::is_same_v<T, double>) return detail::number_from(j[key]);
    else return j[key].get<T>();
}

std::vector<double> numbers_or(const json& j, const char* key, std::vector<double> fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j[key];
    if (!v.is_array()) return {detail::number_from(v)};
    std::vector<double> out;
    for (const auto& x : v) out.push_back(detail::number_from(x));
    return out;
}

AmplitudeSpec amplitude_from(const json& j) {
    auto type = j.at("type").get<std::string>();
    if (type == "zero") {
        only_keys(j, {"type", "k"}, "amplitude");
        return AmplitudeSpec::zero(get_or<int>(j, "k", 1));
    }
    if (type == "indicator" || type == "hat") {
        only_keys(j, {"type", "lo", "hi"}, "amplitude");
        double lo = detail::number_from(j.at("lo")), hi = detail::number_from(j.at("hi"));
        return type == "hat" ? AmplitudeSpec::hat(lo, hi) : AmplitudeSpec::indicator(lo, hi);
    }
    if (type == "step") {
        only_keys(j, {"type", "breaks", "values"}, "amplitude");
        return AmplitudeSpec::step_table(j.at("breaks").get<std::vector<double>>(),
                                         j.at("values").get<std::vector<double>>());
    }
    if (type == "sampled") {
        only_keys(j, {"type", "lo", "hi", "samples"}, "amplitude");
        return AmplitudeSpec::sampled(detail::number_from(j.at("lo")), detail::number_from(j.at("hi")),
                                      j.at("samples").get<std::vector<double>>());
    }
    if (type == "box" || type == "tensor-hat") {
        only_keys(j, {"type", "lo", "hi"}, "amplitude");
        auto lo = j.at("lo").get<std::vector<double>>(), hi = j.at("hi").get<std::vector<double>>();
        require(lo.size() == 2 && hi.size() == 2, "2-d amplitudes need two-entry lo and hi");
        return type == "box" ? AmplitudeSpec::box(lo[0], hi[0], lo[1], hi[1])
                             : AmplitudeSpec::tensor_hat(lo[0], hi[0], lo[1], hi[1]);
    }
    throw InvalidArgument("unknown amplitude type: " + type);
}

PhaseSpec phase_from(const json& j, double default_lambda) {
    auto type = j.at("type").get<std::string>();
    if (type == "monomial") {
        only_keys(j, {"type", "lambda", "k", "a", "b"}, "phase");
        return PhaseSpec::monomial(get_or<double>(j, "lambda", default_lambda), j.at("k").get<int>(),
                                   detail::number_from(j.at("a")), detail::number_from(j.at("b")));
    }
    if (type == "polynomial-1d") {
        only_keys(j, {"type", "coeffs", "k", "lambda", "a", "b"}, "phase");
        return PhaseSpec::polynomial_1d(j.at("coeffs").get<std::vector<double>>(), j.at("k").get<int>(),
                                        detail::number_from(j.at("lambda")), detail::number_from(j.at("a")),
                                        detail::number_from(j.at("b")));
    }
    if (type == "polynomial") {
        only_keys(j, {"type", "vars", "terms"}, "phase");
        std::vector<PhaseSpec::Term> terms;
        for (const auto& t : j.at("terms")) {
            only_keys(t, {"alpha", "coeff"}, "phase term");
            terms.push_back({t.at("alpha").get<std::vector<int>>(), detail::number_from(t.at("coeff"))});
        }
        return PhaseSpec::polynomial(j.at("vars").get<int>(), std::move(terms));
    }
    throw InvalidArgument("unknown phase type: " + type);
}

DimensionSweepConfig dimension_from(const json& j) {
    only_keys(j, {"kind", "seed", "d_min", "d_max", "M", "N", "fields", "p", "field_kind", "delta", "growth_limit",
                  "convex_q", "convex_t", "field"},
              "dimension-sweep config");
    DimensionSweepConfig c;
    c.d_min = get_or<int>(j, "d_min", c.d_min);
    c.d_max = get_or<int>(j, "d_max", c.d_max);
    c.M = get_or<int>(j, "M", c.M);
    c.N = get_or<std::vector<int>>(j, "N", c.N);
    c.fields = get_or<int>(j, "fields", c.fields);
    c.p = numbers_or(j, "p", c.p);
    c.field_kind = get_or<std::string>(j, "field_kind", c.field_kind);
    c.delta = get_or<bool>(j, "delta", c.delta);
    c.growth_limit = get_or<double>(j, "growth_limit", c.growth_limit);
    c.convex_q = numbers_or(j, "convex_q", {});
    c.convex_t = numbers_or(j, "convex_t", {});
    if (j.contains("field")) c.field = detail::field_from(j["field"]);
    require(1 <= c.d_min && c.d_min <= c.d_max, "need 1 <= d_min <= d_max");
    require(c.M >= 2, "M must be at least 2");
    require(!c.N.empty(), "N list must be nonempty");
    for (int n : c.N) require(n >= 0 && 2 * n + 1 <= c.M, "cube radii need 2N+1 <= M");
    require(c.fields >= 0, "fields must be nonnegative");
    require(!c.p.empty(), "p list must be nonempty");
    for (double p : c.p) require(p > 1 && std::isfinite(p), "p must lie in (1, inf)");
    require(c.field_kind == "normal" || c.field_kind == "zero", "field_kind is normal or zero");
    require(c.convex_q.empty() == c.convex_t.empty(), "convex_q and convex_t go together");
    for (int d = c.d_min; d <= c.d_max; ++d)
        require(d * std::log2(double(c.M)) <= LatticeField::default_budget_bits, "M^d exceeds the memory budget");
    return c;
}

VdcSweepConfig vdc_from(const json& j) {
    only_keys(j, {"kind", "seed", "corpus", "constant"}, "vdc-sweep config");
    VdcSweepConfig c;
    c.constant = get_or<double>(j, "constant", 0.0);
    if (j.contains("corpus"))
        for (const auto& e : j["corpus"]) {
            only_keys(e, {"kind", "phase", "amplitude", "lambdas", "scales", "R"}, "vdc corpus entry");
            VdcEntry v;
            auto kind = e.at("kind").get<std::string>();
            require(kind == "1d" || kind == "multi", "corpus entry kind is 1d or multi");
            v.multi = kind == "multi";
            v.lambdas = numbers_or(e, "lambdas", {});
            v.scales = numbers_or(e, "scales", {1.0});
            v.R = get_or<double>(e, "R", 1.0);
            v.phase = phase_from(e.at("phase"), v.lambdas.empty() ? 1.0 : v.lambdas.front());
            v.amplitude = amplitude_from(e.at("amplitude"));
            if (!v.multi && !v.lambdas.empty())
                require(e.at("phase").at("type") == "monomial", "lambda sweeps need a monomial phase");
            c.corpus.push_back(std::move(v));
        }
    return c;
}

BoundaryConfig boundary_from(const json& j) {
    only_keys(j, {"kind", "seed", "bodies", "s_exponents", "s", "samples"}, "boundary-measure config");
    BoundaryConfig c;
    if (j.contains("bodies"))
        for (const auto& b : j["bodies"]) c.bodies.push_back(detail::body_from(b));
    c.s_exponents = get_or<std::vector<int>>(j, "s_exponents", c.s_exponents);
    c.s = numbers_or(j, "s", {});
    c.samples = get_or<std::uint64_t>(j, "samples", c.samples);
    require(c.samples >= 2, "need at least two samples");
    return c;
}

SymbolConfig symbol_from(const json& j) {
    only_keys(j, {"kind", "seed", "checks", "dims", "discrete_dims", "grid_points", "K", "j_max", "k_range", "n_max"},
              "symbol-envelope config");
    SymbolConfig c;
    c.checks = get_or<std::vector<std::string>>(j, "checks", c.checks);
    c.dims = get_or<std::vector<int>>(j, "dims", c.dims);
    c.discrete_dims = get_or<std::vector<int>>(j, "discrete_dims", c.discrete_dims);
    c.grid_points = get_or<std::uint64_t>(j, "grid_points", c.grid_points);
    c.K = get_or<int>(j, "K", c.K);
    c.j_max = get_or<int>(j, "j_max", c.j_max);
    c.k_range = get_or<int>(j, "k_range", c.k_range);
    c.n_max = get_or<int>(j, "n_max", c.n_max);
    static const std::set<std::string> known{"resolution", "lp-bound", "off-diagonal", "discrete", "cube-envelope"};
    for (const auto& ch : c.checks) require(known.count(ch) > 0, "unknown symbol check: " + ch);
    for (int d : c.dims) require(d >= 1 && d <= 16, "dims must lie in [1, 16]");
    for (int d : c.discrete_dims) require(d >= 1 && d <= 16, "discrete_dims must lie in [1, 16]");
    require(c.grid_points >= 1 && c.K >= 0 && c.j_max >= 0 && c.k_range >= 1 && c.n_max >= 1,
            "symbol grid sizes must be positive");
    return c;
}

JumpCorpusConfig corpus_from(const json& j) {
    only_keys(j, {"kind", "seed", "paths", "max_len", "lambdas", "r"}, "jump-corpus config");
    JumpCorpusConfig c;
    c.paths = get_or<std::uint64_t>(j, "paths", c.paths);
    c.max_len = get_or<int>(j, "max_len", c.max_len);
    c.lambdas = numbers_or(j, "lambdas", c.lambdas);
    c.r = numbers_or(j, "r", c.r);
    require(c.max_len >= 6 && c.max_len <= 1000, "max_len must lie in [6, 1000]");
    for (double l : c.lambdas) require(l > 0, "lambdas must be positive");
    for (double r : c.r) require(r >= 1, "r must be >= 1");
    return c;
}

PointQueryConfig point_from(const std::string& kind, const json& j) {
    PointQueryConfig c;
    if (kind == "jump-seminorm") {
        only_keys(j, {"kind", "seed", "field", "p"}, kind + " config");
        c.field = detail::field_from(j.at("field"));
        c.values = numbers_or(j, "p", {2.0});
        return c;
    }
    const char* key = kind == "jump-count" ? "lambda" : "r";
    only_keys(j, {"kind", "seed", "path", key}, kind + " config");
    c.path = detail::path_from(j.at("path"));
    c.values = numbers_or(j, key, {kind == "jump-count" ? 1.0 : 2.0});
    return c;
}

// ---- runners

ResultTable table_for(const ExperimentConfig& config) {
    ResultTable t;
    t.provenance.config = config.canonical;
    t.provenance.config_hash = config.hash();
    t.provenance.seed = config.seed;
    t.provenance.version = JUMPKIT_VERSION;
    return t;
}

// Box-Muller on the portable uniform generator, so fields agree across standard libraries.
void fill_normal(std::vector<double>& v, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < v.size(); i += 2) {
        double u1 = 1.0 - uniform01(rng), u2 = uniform01(rng);
        double r = std::sqrt(-2 * std::log(u1));
        v[i] = r * std::cos(2 * std::numbers::pi * u2);
        if (i + 1 < v.size()) v[i + 1] = r * std::sin(2 * std::numbers::pi * u2);
    }
}

double safe_ratio(double num, double den) { return num == 0 ? 0.0 : num / den; }

// Seminorm / norm for each p, with paths stored point-major (len values per point).
std::vector<double> seminorm_ratios(std::span<const double> paths, std::size_t len, std::span<const double> f,
                                    const std::vector<double>& ps) {
    kernels::JumpEventIndex events(kernels::collect_jump_events(paths, len, Exec::parallel));
    std::vector<double> out;
    for (double p : ps) {
        double J = events.seminorm({}, p).value;
        double norm = std::pow(kernels::blocked_pow_sum(f, p, Exec::parallel), 1.0 / p);
        out.push_back(safe_ratio(J, norm));
    }
    return out;
}

}  // namespace

std::string ExperimentConfig::hash() const { return fnv1a_hex(canonical); }

ExperimentConfig parse_experiment_config(const std::string& kind, const std::string& json_text,
                                         std::optional<std::uint64_t> seed_override) {
    json j = detail::parse_text(json_text);
    if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
    if (j.contains("kind") && j["kind"] != kind)
        throw InvalidArgument("config kind " + j["kind"].dump() + " does not match " + kind);
    ExperimentConfig c;
    c.kind = kind;
    try {
        c.seed = seed_override ? *seed_override : get_or<std::uint64_t>(j, "seed", 0);
        if (kind == "dimension-sweep") c.params = dimension_from(j);
        else if (kind == "vdc-sweep") c.params = vdc_from(j);
        else if (kind == "boundary-measure") c.params = boundary_from(j);
        else if (kind == "symbol-envelope") c.params = symbol_from(j);
        else if (kind == "jump-corpus") c.params = corpus_from(j);
        else if (kind == "jump-count" || kind == "variation" || kind == "jump-seminorm" || kind == "lewko")
            c.params = point_from(kind, j);
        else throw InvalidArgument("unknown experiment kind: " + kind);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("config shape error: ") + e.what());
    }
    j["kind"] = kind;
    j["seed"] = c.seed;
    c.canonical = j.dump();
    return c;
}

ResultTable run_experiment(const ExperimentConfig& config) {
    if (config.kind == "dimension-sweep") return run_dimension_sweep(config);
    if (config.kind == "vdc-sweep") return run_vdc_sweep(config);
    if (config.kind == "boundary-measure") return run_boundary_sweep(config);
    if (config.kind == "symbol-envelope") return run_symbol_checks(config);
    if (config.kind == "jump-corpus") return run_jump_corpus(config);
    return run_point_query(config);
}

ResultTable run_dimension_sweep(const ExperimentConfig& config) {
    const auto& c = std::get<DimensionSweepConfig>(config.params);
    ResultTable table = table_for(config);

    if (c.field) {
        for (double p : c.p) {
            auto res = jump_seminorm_detail(*c.field, p);
            CompensatedSum s;
            for (const auto& a : c.field->atoms()) {
                double m = 0;
                for (const auto& v : a.path.values()) m = std::max(m, std::abs(v));
                s.add(a.weight * std::pow(m, p));
            }
            double maxnorm = std::pow(s.value(), 1.0 / p);
            table.add({"dim-sweep-field", {{"p", p}}, res.value, maxnorm, safe_ratio(res.value, maxnorm), 0});
        }
        table.sort_rows();
        return table;
    }

    const std::size_t L = c.N.size();
    std::map<double, double> first_random, first_delta, max_random, max_delta;
    for (int d = c.d_min; d <= c.d_max; ++d) {
        std::size_t n = 1;
        for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(c.M);
        std::vector<double> f(n), avg(n), paths(n * L);
        std::vector<double> best(c.p.size(), 0.0);
        std::vector<std::vector<double>> best_convex(c.convex_q.size(), std::vector<double>(c.p.size(), 0.0));

        auto build_paths = [&] {
            for (std::size_t i = 0; i < L; ++i) {
                avg_discrete_cube_real(f, avg, d, c.M, c.N[i], Exec::parallel);
                for (std::size_t x = 0; x < n; ++x) paths[x * L + i] = avg[x];
            }
        };

        for (int trial = 0; trial < c.fields; ++trial) {
            if (c.field_kind == "normal")
                fill_normal(f, stream_seed(config.seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(trial)));
            else
                std::fill(f.begin(), f.end(), 0.0);
            build_paths();
            auto r = seminorm_ratios(paths, L, f, c.p);
            for (std::size_t i = 0; i < r.size(); ++i) best[i] = std::max(best[i], r[i]);

            for (std::size_t qi = 0; qi < c.convex_q.size(); ++qi) {
                LatticeField lf(d, c.M);
                for (std::size_t x = 0; x < n; ++x) lf[x] = f[x];
                auto body = ConvexBodySpec::lq_ball(d, c.convex_q[qi]);
                std::vector<double> cp(n * c.convex_t.size());
                for (std::size_t ti = 0; ti < c.convex_t.size(); ++ti) {
                    auto out = avg_convex(lf, body, c.convex_t[ti]);
                    for (std::size_t x = 0; x < n; ++x) cp[x * c.convex_t.size() + ti] = out[x].real();
                }
                auto rc = seminorm_ratios(cp, c.convex_t.size(), f, c.p);
                for (std::size_t i = 0; i < rc.size(); ++i) best_convex[qi][i] = std::max(best_convex[qi][i], rc[i]);
            }
        }
        for (std::size_t i = 0; i < c.p.size(); ++i) {
            double p = c.p[i];
            if (d == c.d_min) first_random[p] = best[i];
            max_random[p] = std::max(max_random[p], best[i]);
            table.add({"dim-sweep-random", {{"d", double(d)}, {"p", p}}, best[i], first_random[p],
                       safe_ratio(best[i], first_random[p]), 0});
            for (std::size_t qi = 0; qi < c.convex_q.size(); ++qi)
                table.add({"dim-sweep-convex", {{"d", double(d)}, {"p", p}, {"q", c.convex_q[qi]}},
                           best_convex[qi][i], 0, 0, 0});
        }

        if (c.delta) {
            std::fill(f.begin(), f.end(), 0.0);
            f[0] = 1.0;
            build_paths();
            auto r = seminorm_ratios(paths, L, f, c.p);
            for (std::size_t i = 0; i < c.p.size(); ++i) {
                double p = c.p[i];
                if (d == c.d_min) first_delta[p] = r[i];
                max_delta[p] = std::max(max_delta[p], r[i]);
                table.add({"dim-sweep-delta", {{"d", double(d)}, {"p", p}}, r[i], first_delta[p],
                           safe_ratio(r[i], first_delta[p]), 0});
            }
        }
    }
    // dimension-free proxy: max over d against the d_min value, to be compared with growth_limit
    for (double p : c.p) {
        table.add({"dim-sweep-summary", {{"growth_limit", c.growth_limit}, {"p", p}, {"statistic", 0}},
                   max_random[p], first_random[p], safe_ratio(max_random[p], first_random[p]), 0});
        if (c.delta)
            table.add({"dim-sweep-summary", {{"growth_limit", c.growth_limit}, {"p", p}, {"statistic", 1}},
                       max_delta[p], first_delta[p], safe_ratio(max_delta[p], first_delta[p]), 0});
    }
    table.sort_rows();
    return table;
}

ResultTable run_vdc_sweep(const ExperimentConfig& config) {
    const auto& c = std::get<VdcSweepConfig>(config.params);
    ResultTable table = table_for(config);
    for (std::size_t e = 0; e < c.corpus.size(); ++e) {
        const auto& v = c.corpus[e];
        std::map<int, double> decade_sup;
        auto flag = [&](double ratio) { return c.constant > 0 && ratio > c.constant ? 1.0 : 0.0; };
        if (!v.multi) {
            std::vector<double> lambdas = v.lambdas;
            if (lambdas.empty()) lambdas = {v.phase.lambda()};
            for (double lam : lambdas) {
                PhaseSpec ph = v.lambdas.empty() ? v.phase
                                                 : PhaseSpec::monomial(lam, v.phase.order(), v.phase.a(), v.phase.b());
                auto r = vdc_1d(ph, v.amplitude);
                double rhs = r.rhs_window + r.rhs_smoothness;
                table.add({"vdc-1d",
                           {{"entry", double(e)}, {"exceeds", flag(r.ratio())}, {"lambda", lam}},
                           r.lhs, rhs, r.ratio(), r.lhs_error});
                table.add({"vdc-1d-terms", {{"entry", double(e)}, {"lambda", lam}}, r.rhs_window,
                           r.rhs_smoothness, 0, 0});
                int dec = static_cast<int>(std::floor(std::log10(lam) + 1e-9));
                decade_sup[dec] = std::max(decade_sup[dec], r.ratio());
            }
        } else {
            for (double sc : v.scales) {
                std::vector<PhaseSpec::Term> terms = v.phase.terms();
                for (auto& t : terms) t.coeff *= sc;
                auto ph = PhaseSpec::polynomial(v.phase.vars(), terms);
                auto r = vdc_multidim(ph, v.amplitude, v.R);
                table.add({"vdc-multi",
                           {{"Lambda", r.Lambda}, {"entry", double(e)}, {"exceeds", flag(r.ratio())}, {"scale", sc}},
                           r.lhs, r.rhs, r.ratio(), r.lhs_error});
                int dec = static_cast<int>(std::floor(std::log10(r.Lambda) + 1e-9));
                decade_sup[dec] = std::max(decade_sup[dec], r.ratio());
            }
        }
        // measured constant per decade: the largest against the first decade
        if (decade_sup.size() >= 2) {
            double first = decade_sup.begin()->second, worst = 0;
            for (const auto& [dec, s] : decade_sup) worst = std::max(worst, s);
            table.add({"vdc-stability", {{"entry", double(e)}}, worst, first, safe_ratio(worst, first), 0});
        }
    }
    table.sort_rows();
    return table;
}

ResultTable run_boundary_sweep(const ExperimentConfig& config) {
    const auto& c = std::get<BoundaryConfig>(config.params);
    ResultTable table = table_for(config);
    for (std::size_t b = 0; b < c.bodies.size(); ++b) {
        const auto& body = c.bodies[b];
        const double diam = body.diameter();
        std::vector<double> radii = c.s;
        if (radii.empty())
            for (int j : c.s_exponents) radii.push_back(diam * std::ldexp(1.0, -j));
        for (std::size_t i = 0; i < radii.size(); ++i) {
            double s = radii[i];
            auto m = boundary_neighborhood_measure(body, s, c.samples, stream_seed(config.seed, b, i));
            std::vector<std::pair<std::string, double>> params{
                {"body", double(b)}, {"k", double(body.dim())}, {"s", s}, {"samples", double(m.samples)}};
            table.add({"boundary", params, m.estimate, s * std::pow(diam, body.dim() - 1), m.ratio, m.stderr_});
            if (auto exact = exact_boundary_neighborhood(body, s))
                table.add({"boundary-exact", params, m.estimate, *exact, m.estimate / *exact, m.stderr_ / *exact});
        }
    }
    table.sort_rows();
    return table;
}

ResultTable run_symbol_checks(const ExperimentConfig& config) {
    const auto& c = std::get<SymbolConfig>(config.params);
    ResultTable table = table_for(config);
    auto has = [&](const char* name) { return std::find(c.checks.begin(), c.checks.end(), name) != c.checks.end(); };
    const auto cont = PoissonFlavor::continuous;

    if (has("resolution")) {
        for (int d : c.dims) {
            auto grid = log_radial_grid(d, c.grid_points, -30, 30, stream_seed(config.seed, 1, d));
            double worst = 0, excess = -infinity;
            for (const auto& xi : grid) {
                CompensatedSum s;
                for (int k = -c.K; k <= c.K; ++k) s.add(littlewood_paley_symbol(k, xi, cont));
                double lhs = std::fabs(s.value() - 1);
                double bound = poisson_symbol(std::ldexp(1.0, c.K + 1), xi, cont) -
                               std::expm1(-2 * std::numbers::pi * std::ldexp(euclidean_norm(xi), -c.K));
                worst = std::max(worst, safe_ratio(lhs, bound));
                excess = std::max(excess, lhs - bound);
            }
            table.add({"resolution-of-identity", {{"K", double(c.K)}, {"d", double(d)}}, excess, 0, worst, 0});
        }
    }
    if (has("lp-bound")) {
        for (int d : c.dims) {
            auto grid = log_radial_grid(d, c.grid_points, -30, 30, stream_seed(config.seed, 2, d));
            double worst = 0;
            for (int k = -c.K; k <= c.K; ++k)
                for (const auto& xi : grid)
                    worst = std::max(worst, littlewood_paley_symbol(k, xi, cont) / lp_envelope(k, xi));
            table.add({"lp-envelope-constant", {{"d", double(d)}}, worst, 2 * std::numbers::pi,
                       worst / (2 * std::numbers::pi), 0});
        }
    }
    if (has("off-diagonal")) {
        auto grid = log_radial_grid(1, c.grid_points, -30, 30, stream_seed(config.seed, 3));
        struct Pair {
            const char* name;
            SymbolFamily m, s;
            double env_m, env_s;
        };
        std::vector<Pair> pairs{{"envelope/poisson", envelope_family(), littlewood_paley_family(cont), 1.0, 1.0},
                                {"envelope/envelope", envelope_family(), envelope_family(), 1.0, 1.0}};
        for (std::size_t pi_ = 0; pi_ < pairs.size(); ++pi_) {
            const auto& P = pairs[pi_];
            OffDiagonalOptions opt{P.env_m, P.env_s, 400};
            double a0 = off_diagonal_decay(P.m, P.s, 0, -c.k_range, c.k_range, grid, opt).a_j;
            for (int j = -c.j_max; j <= c.j_max; ++j) {
                auto r = off_diagonal_decay(P.m, P.s, j, -c.k_range, c.k_range, grid, opt);
                double ref = a0 * std::pow(2.0, -std::abs(j) / 4.0);
                table.add({"off-diagonal", {{"j", double(j)}, {"pair", double(pi_)}}, r.a_j, ref,
                           safe_ratio(r.a_j, ref), r.tail_bound});
            }
        }
    }
    if (has("discrete")) {
        DiscreteSymbolConstants first{};
        DiscreteSymbolConstants worst{};
        for (std::size_t i = 0; i < c.discrete_dims.size(); ++i) {
            int d = c.discrete_dims[i];
            auto grid = torus_grid(d, c.grid_points, stream_seed(config.seed, 4, d));
            auto k = discrete_symbol_constants(c.n_max, grid);
            if (i == 0) first = k;
            worst.decay = std::max(worst.decay, k.decay);
            worst.near_zero = std::max(worst.near_zero, k.near_zero);
            worst.lipschitz = std::max(worst.lipschitz, k.lipschitz);
            table.add({"discrete-decay", {{"d", double(d)}}, k.decay, first.decay, safe_ratio(k.decay, first.decay), 0});
            table.add({"discrete-near-zero", {{"d", double(d)}}, k.near_zero, first.near_zero,
                       safe_ratio(k.near_zero, first.near_zero), 0});
            table.add({"discrete-lipschitz", {{"d", double(d)}}, k.lipschitz, first.lipschitz,
                       safe_ratio(k.lipschitz, first.lipschitz), 0});
        }
        if (!c.discrete_dims.empty()) {
            table.add({"discrete-growth", {{"bound", 0}}, worst.decay, first.decay, safe_ratio(worst.decay, first.decay), 0});
            table.add({"discrete-growth", {{"bound", 1}}, worst.near_zero, first.near_zero,
                       safe_ratio(worst.near_zero, first.near_zero), 0});
            table.add({"discrete-growth", {{"bound", 2}}, worst.lipschitz, first.lipschitz,
                       safe_ratio(worst.lipschitz, first.lipschitz), 0});
        }
    }
    if (has("cube-envelope")) {
        auto grid = log_radial_grid(1, c.grid_points, -12, 12, stream_seed(config.seed, 5));
        std::vector<double> ts;
        for (int e = -4; e <= 4; ++e) ts.push_back(std::ldexp(1.0, e));
        QuasiNorm qn = [](std::span<const double> xi) { return euclidean_norm(xi); };
        // high side against omega(s) = s / (2 pi), low side against omega(s) = s
        const double C = 1 / (2 * std::numbers::pi);
        auto high = symbol_envelope_check(cube_family(), ModulusOfContinuity::power(1.0, C), qn, ts, grid, 1.0);
        auto low = symbol_envelope_check(cube_family(), ModulusOfContinuity::power(1.0, 1.0), qn, ts, grid, 1.0);
        table.add({"cube-envelope", {{"side", 1}}, high.max_high_ratio, 1.0, high.max_high_ratio, 0});
        table.add({"cube-envelope", {{"side", 0}}, low.max_low_ratio, 1.0, low.max_low_ratio, 0});
        std::vector<double> hs{1.0 / 64, 1.0 / 16, 1.0 / 4};
        double lip = symbol_lipschitz_constant(cube_family(), ts, hs, grid);
        table.add({"cube-lipschitz", {}, lip, 0, 0, 0});
    }
    table.sort_rows();
    return table;
}

ResultTable run_jump_corpus(const ExperimentConfig& config) {
    const auto& c = std::get<JumpCorpusConfig>(config.params);
    ResultTable table = table_for(config);
    std::vector<double> bridge(c.r.size(), 0.0), lewko(c.r.size(), 0.0);
    double ls = 0, ls_norm = 0;
    for (std::uint64_t i = 0; i < c.paths; ++i) {
        Rng rng(stream_seed(config.seed, 7, i));
        // random dyadic times in [1, 64) at resolution 1/16, always containing 1, 2, ..., 32 so that
        // every block [2^k, 2^{k+1}) starts at a sample
        int len = std::max(6, 2 + static_cast<int>(uniform01(rng) * (c.max_len - 1)));
        std::set<std::int64_t> ticks;
        for (int k = 0; k <= 5; ++k) ticks.insert(std::int64_t(16) << k);
        while (static_cast<int>(ticks.size()) < len) ticks.insert(16 + static_cast<std::int64_t>(uniform01(rng) * 1008));
        std::vector<DyadicTime> times;
        for (auto t : ticks) times.emplace_back(t, 4);
        std::vector<cplx> vals(len);
        for (auto& v : vals) v = {uniform(rng, -2, 2), uniform(rng, -2, 2)};
        SampledPath path(times, vals);
        for (std::size_t ri = 0; ri < c.r.size(); ++ri) {
            double V = variation(path, c.r[ri]);
            for (double lam : c.lambdas) {
                double lhs = lam * std::pow(jump_count(path, lam), 1.0 / c.r[ri]);
                bridge[ri] = std::max(bridge[ri], safe_ratio(lhs, V));
            }
        }
        ls = std::max(ls, long_short_sup_ratio(path));
        ls_norm = std::max(ls_norm, long_short_seminorm_ratio(path));

        // full dyadic grid 0, h, ..., 2^n h for the two-level bound
        int levels = 1 + static_cast<int>(uniform01(rng) * 5);
        std::vector<DyadicTime> grid;
        std::vector<cplx> g;
        for (int u = 0; u <= (1 << levels); ++u) {
            grid.emplace_back(u, 2);
            g.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1));
        }
        SampledPath dp(grid, g);
        for (std::size_t ri = 0; ri < c.r.size(); ++ri) {
            auto lr = lewko_bound(dp, c.r[ri]);
            lewko[ri] = std::max(lewko[ri], safe_ratio(lr.lhs, lr.rhs));
        }
    }
    for (std::size_t ri = 0; ri < c.r.size(); ++ri) {
        table.add({"bridge", {{"r", c.r[ri]}}, bridge[ri], 1.0, bridge[ri], 0});
        table.add({"lewko", {{"r", c.r[ri]}}, lewko[ri], 1.0, lewko[ri], 0});
    }
    table.add({"long-short", {}, ls, 0, 0, 0});
    table.add({"long-short-seminorm", {}, ls_norm, 0, 0, 0});
    table.sort_rows();
    return table;
}

ResultTable run_point_query(const ExperimentConfig& config) {
    const auto& c = std::get<PointQueryConfig>(config.params);
    ResultTable table = table_for(config);
    for (double v : c.values) {
        if (config.kind == "jump-count") {
            table.add({"jump-count", {{"lambda", v}}, double(jump_count(*c.path, v)), 0, 0, 0});
        } else if (config.kind == "variation") {
            table.add({"variation", {{"r", v}}, variation(*c.path, v), 0, 0, 0});
        } else if (config.kind == "jump-seminorm") {
            auto r = jump_seminorm_detail(*c.field, v);
            table.add({"jump-seminorm", {{"p", v}}, r.value, r.argmax_lambda, 0, 0});
        } else if (config.kind == "lewko") {
            auto r = lewko_bound(*c.path, v);
            table.add({"lewko", {{"r", v}}, r.lhs, r.rhs, safe_ratio(r.lhs, r.rhs), 0});
        }
    }
    table.sort_rows();
    return table;
}

}  // namespace jumpkit
