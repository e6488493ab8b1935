#include "bg/sweep.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bg/errors.hpp"
#include "bg/gain.hpp"
#include "bg/radial.hpp"
#include "bg/spherical.hpp"

namespace bg {

namespace {

double parse_exponent(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw ConfigError("exponent strings must be \"inf\"");
    }
    return j.get<double>();
}

VelocityFunction random_test_function(int n, std::mt19937_64& rng) {
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    double R = uni(0.8, 1.6);
    Vec c = Vec::zero(n);
    for (int i = 0; i < n; ++i) c[i] = uni(-0.6, 0.6);
    VelocityFunction f = VelocityFunction::shifted(VelocityFunction::bump(n, R), c);
    if (rng() & 1) f = VelocityFunction::linearmod(f);
    return f;
}

}  // namespace

SweepSpec SweepSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("bad sweep config: ") + e.what());
    }
    SweepSpec s;
    try {
        if (j.contains("check")) s.check = j["check"].get<std::string>();
        if (j.contains("n")) s.n_list = j["n"].get<std::vector<int>>();
        if (j.contains("alpha")) s.alpha_list = j["alpha"].get<std::vector<double>>();
        if (j.contains("lambda")) s.lambda_list = j["lambda"].get<std::vector<double>>();
        if (j.contains("kernels")) s.kernel_list = j["kernels"].get<std::vector<std::string>>();
        if (j.contains("exponents")) {
            s.exponent_list.clear();
            for (const auto& row : j["exponents"]) {
                if (row.size() != 3) throw ConfigError("exponent rows need [p,q,r]");
                s.exponent_list.push_back(
                    {parse_exponent(row[0]), parse_exponent(row[1]), parse_exponent(row[2])});
            }
        }
        if (j.contains("eps")) s.eps_list = j["eps"].get<std::vector<double>>();
        if (j.contains("g")) {
            if (j["g"].is_array())
                s.g_list = j["g"].get<std::vector<std::string>>();
            else
                s.g_list = {j["g"].get<std::string>()};
        }
        if (j.contains("h")) {
            if (j["h"].is_array())
                s.h_list = j["h"].get<std::vector<std::string>>();
            else
                s.h_list = {j["h"].get<std::string>()};
        }
        if (j.contains("f")) s.f = j["f"].get<std::string>();
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("rotations")) s.rotations = j["rotations"].get<int>();
        if (j.contains("mc_triples")) s.mc_triples = j["mc_triples"].get<int>();
        if (j.contains("tol")) s.tol = j["tol"].get<double>();
        if (j.contains("quad_order")) s.quad.order = j["quad_order"].get<int>();
        if (j.contains("rel_tol")) s.quad.rel_tol = j["rel_tol"].get<double>();
        if (j.contains("polar_order")) s.polar_order = j["polar_order"].get<int>();
        if (j.contains("azimuth_count")) s.azimuth_count = j["azimuth_count"].get<int>();
        if (j.contains("threads")) s.threads = j["threads"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad sweep config: ") + e.what());
    }
    if (s.g_list.empty() || s.h_list.empty()) throw ConfigError("empty g/h lists");
    if (s.h_list.size() == 1 && s.g_list.size() > 1)
        s.h_list.assign(s.g_list.size(), s.h_list[0]);
    if (s.g_list.size() != s.h_list.size())
        throw ConfigError("g and h lists must pair up");
    return s;
}

SweepSpec SweepSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

namespace {

using Cell = std::function<std::vector<InequalityReport>()>;

InequalityReport skipped_cell(const SweepSpec& spec, const std::string& name, int n, double alpha,
                              double lambda, const std::array<double, 3>& pqr,
                              const std::string& kernel, const std::string& reason) {
    InequalityReport rep;
    rep.name = name;
    rep.n = n;
    rep.p = pqr[0];
    rep.q = pqr[1];
    rep.r = pqr[2];
    rep.alpha = alpha;
    rep.lambda = lambda;
    rep.kernel = kernel;
    rep.tolerance = spec.tol;
    rep.seed = spec.seed;
    rep.quad_order = spec.quad.order;
    rep.status = InequalityReport::Status::skipped;
    rep.skip_reason = reason;
    return rep;
}

std::vector<InequalityReport> run_cell_guarded(const Cell& cell,
                                               const InequalityReport& fallback) {
    try {
        return cell();
    } catch (const PreconditionViolation& e) {
        InequalityReport rep = fallback;
        rep.skip_reason = e.what();
        return {rep};
    } catch (const QuadratureFailure& e) {
        InequalityReport rep = fallback;
        rep.skip_reason = std::string("error: ") + e.what();
        return {rep};
    } catch (const NonIntegrable& e) {
        InequalityReport rep = fallback;
        rep.skip_reason = std::string("error: ") + e.what();
        return {rep};
    }
}

}  // namespace

std::vector<InequalityReport> run_sweep(const SweepSpec& spec) {
    std::vector<std::pair<Cell, InequalityReport>> cells;

    auto add_cell = [&](Cell cell, InequalityReport fallback) {
        cells.emplace_back(std::move(cell), std::move(fallback));
    };

    for (int n : spec.n_list) {
        for (const auto& kernel_text : spec.kernel_list) {
            for (const auto& pqr : spec.exponent_list) {
                if (spec.check == "thm1" || spec.check == "lemma23" || spec.check == "sharpness") {
                    for (double alpha : spec.alpha_list) {
                        for (std::size_t gi = 0; gi < spec.g_list.size(); ++gi) {
                            std::string gtext = spec.g_list[gi], htext = spec.h_list[gi];
                            SweepSpec local = spec;
                            InequalityReport fb = skipped_cell(
                                spec, spec.check, n, alpha,
                                std::numeric_limits<double>::quiet_NaN(), pqr, kernel_text, "");
                            if (spec.check == "thm1") {
                                add_cell(
                                    [local, n, alpha, pqr, kernel_text, gtext, htext]() {
                                        AngularKernel kern = AngularKernel::parse(kernel_text);
                                        auto e = ExponentTriple::holder(pqr[0], pqr[1]);
                                        SphereRule rule(n, local.polar_order,
                                                        local.azimuth_count);
                                        auto g = VelocityFunction::parse(n, gtext);
                                        auto h = VelocityFunction::parse(n, htext);
                                        auto rep =
                                            theorem1_check(g, h, e, NuMeasure{n, alpha}, kern,
                                                           rule, local.quad, local.tol);
                                        rep.seed = local.seed;
                                        return std::vector<InequalityReport>{rep};
                                    },
                                    fb);
                            } else if (spec.check == "lemma23") {
                                add_cell(
                                    [local, n, alpha, pqr, kernel_text, gtext, htext]() {
                                        AngularKernel kern = AngularKernel::parse(kernel_text);
                                        auto e = ExponentTriple::holder(pqr[0], pqr[1]);
                                        XiMeasure xi(kern, n);
                                        auto g = RadialProfile::parse(gtext, n, alpha);
                                        auto h = RadialProfile::parse(htext, n, alpha);
                                        auto rep = lemma23_check(g, h, e, xi,
                                                                 SigmaMeasure{n, alpha},
                                                                 local.quad, local.tol);
                                        rep.seed = local.seed;
                                        return std::vector<InequalityReport>{rep};
                                    },
                                    fb);
                            } else {
                                add_cell(
                                    [local, n, alpha, pqr, kernel_text]() {
                                        AngularKernel kern = AngularKernel::parse(kernel_text);
                                        auto e = ExponentTriple::holder(pqr[0], pqr[1]);
                                        XiMeasure xi(kern, n);
                                        auto study =
                                            sharpness_study(e, xi, SigmaMeasure{n, alpha},
                                                            local.eps_list, local.quad);
                                        std::vector<InequalityReport> reps;
                                        for (const auto& row : study.rows) {
                                            InequalityReport rep;
                                            rep.name = "sharpness";
                                            rep.n = n;
                                            rep.p = pqr[0];
                                            rep.q = pqr[1];
                                            rep.r = e.r;
                                            rep.alpha = alpha;
                                            rep.kernel = kernel_text;
                                            rep.lhs = row.norm;
                                            rep.constant = row.beta_eps;
                                            rep.norms.emplace_back(
                                                "two_pow_eps_over_r",
                                                std::pow(2.0, row.eps / e.r));
                                            rep.tolerance = local.tol;
                                            rep.seed = local.seed;
                                            rep.quad_order = local.quad.order;
                                            std::ostringstream prov;
                                            prov << "eps=" << row.eps
                                                 << " sharp=" << study.sharp_constant
                                                 << " ratio=" << row.ratio;
                                            rep.provenance = prov.str();
                                            rep.finalize();
                                            rep.pass = rep.pass && row.sandwich_ok &&
                                                       row.norm >= row.beta_eps * (1 - 1e-7);
                                            reps.push_back(rep);
                                        }
                                        return reps;
                                    },
                                    fb);
                            }
                        }
                        if (spec.check == "sharpness") break;  // g/h lists unused
                    }
                } else if (spec.check == "thm2") {
                    for (double lambda : spec.lambda_list) {
                        for (std::size_t gi = 0; gi < spec.g_list.size(); ++gi) {
                            std::string gtext = spec.g_list[gi], htext = spec.h_list[gi];
                            SweepSpec local = spec;
                            InequalityReport fb = skipped_cell(
                                spec, "theorem2", n, std::numeric_limits<double>::quiet_NaN(),
                                lambda, pqr, kernel_text, "");
                            add_cell(
                                [local, n, lambda, pqr, kernel_text, gtext, htext]() {
                                    AngularKernel kern = AngularKernel::parse(kernel_text);
                                    auto e = ExponentTriple::young(pqr[0], pqr[1], pqr[2]);
                                    CollisionKernel ck(lambda, kern);
                                    SphereRule rule(n, local.polar_order, local.azimuth_count);
                                    auto g = VelocityFunction::parse(n, gtext);
                                    auto h = VelocityFunction::parse(n, htext);
                                    auto rep =
                                        theorem2_check(g, h, e, ck, rule, local.quad, local.tol);
                                    rep.seed = local.seed;
                                    return std::vector<InequalityReport>{rep};
                                },
                                fb);
                        }
                    }
                } else if (spec.check == "lemma22") {
                    int count = std::max(1, spec.mc_triples);
                    for (int t = 0; t < count; ++t) {
                        SweepSpec local = spec;
                        std::uint64_t cell_seed = spec.seed + static_cast<std::uint64_t>(t);
                        InequalityReport fb =
                            skipped_cell(spec, "lemma2.2", n,
                                         std::numeric_limits<double>::quiet_NaN(),
                                         std::numeric_limits<double>::quiet_NaN(), pqr,
                                         kernel_text, "");
                        fb.seed = cell_seed;
                        bool use_random = spec.mc_triples > 0;
                        std::string ftext = spec.f, gtext = spec.g_list[0],
                                    htext = spec.h_list[0];
                        add_cell(
                            [local, n, pqr, kernel_text, cell_seed, use_random, ftext, gtext,
                             htext]() {
                                AngularKernel kern = AngularKernel::parse(kernel_text);
                                SphereRule rule(n, local.polar_order, local.azimuth_count);
                                VelocityFunction f(VelocityFunction::zero(n)),
                                    g(VelocityFunction::zero(n)), h(VelocityFunction::zero(n));
                                if (use_random) {
                                    std::mt19937_64 rng(cell_seed);
                                    f = random_test_function(n, rng);
                                    g = random_test_function(n, rng);
                                    h = random_test_function(n, rng);
                                } else {
                                    f = VelocityFunction::parse(n, ftext);
                                    g = VelocityFunction::parse(n, gtext);
                                    h = VelocityFunction::parse(n, htext);
                                }
                                RotationSampler sampler{local.rotations, cell_seed};
                                auto rep = lemma22_check(f, g, h, pqr[0], pqr[1], pqr[2], kern,
                                                         rule, sampler, local.quad, local.tol);
                                rep.seed = cell_seed;
                                return std::vector<InequalityReport>{rep};
                            },
                            fb);
                    }
                } else {
                    throw ConfigError("unknown check: " + spec.check);
                }
            }
        }
    }

    std::vector<std::vector<InequalityReport>> slots(cells.size());
    int threads = std::max(1, spec.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            slots[i] = run_cell_guarded(cells[i].first, cells[i].second);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) break;
                slots[i] = run_cell_guarded(cells[i].first, cells[i].second);
            }
        };
        std::vector<std::future<void>> pool;
        for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
        for (auto& fut : pool) fut.get();
    }

    std::vector<InequalityReport> out;
    for (auto& slot : slots)
        for (auto& rep : slot) out.push_back(std::move(rep));
    return out;
}

}  // namespace bg
