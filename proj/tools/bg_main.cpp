// Command-line front end: every subcommand is a thin adapter over the library
// operations, with the exit contract 0 = all pass, 1 = failed inequality,
// 2 = usage/config error, 3 = numerical failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bg/bobylev.hpp"
#include "bg/errors.hpp"
#include "bg/gain.hpp"
#include "bg/grid.hpp"
#include "bg/radial.hpp"
#include "bg/report.hpp"
#include "bg/spherical.hpp"
#include "bg/sweep.hpp"

namespace {

bg::Vec parse_vec(const std::string& text, int n) {
    std::istringstream in(text);
    bg::Vec v = bg::Vec::zero(n);
    std::string tok;
    int i = 0;
    while (std::getline(in, tok, ',') && i < n) v[i++] = std::stod(tok);
    if (i != n) throw bg::ConfigError("vector needs " + std::to_string(n) + " components: " + text);
    return v;
}

double parse_exp(const std::string& text) {
    if (text == "inf") return bg::kInf;
    return std::stod(text);
}

void print_report(const bg::InequalityReport& rep) {
    std::cout << rep.name << ": lhs=" << bg::format_double(rep.lhs)
              << " constant=" << bg::format_double(rep.constant)
              << " rhs=" << bg::format_double(rep.rhs)
              << " ratio=" << bg::format_double(rep.ratio)
              << " mc_margin=" << bg::format_double(rep.mc_margin)
              << (rep.pass ? " PASS" : " FAIL") << "\n";
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("BG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boltzmann gain-operator toolkit"};
    app.require_subcommand(1);

    std::string kernel_text = "constant:1";
    int n = 3;
    int quad_order = 32;
    int polar = 24, azim = 32;
    std::uint64_t seed = 1;
    int threads_flag = 0;

    app.add_option("--threads", threads_flag, "worker pool cap (fallback: BG_THREADS)");

    // beta
    auto* cbeta = app.add_subcommand("beta", "beta_b(x,y) with finiteness verdict");
    double bx = 0, by = 0;
    cbeta->add_option("--kernel", kernel_text);
    cbeta->add_option("--n", n);
    cbeta->add_option("--x", bx)->required();
    cbeta->add_option("--y", by)->required();
    cbeta->add_option("--quad-order", quad_order);

    // cutoff
    auto* ccut = app.add_subcommand("cutoff", "angular mass of b over the sphere");
    ccut->add_option("--kernel", kernel_text);
    ccut->add_option("--n", n);
    ccut->add_option("--quad-order", quad_order);

    // op-b
    auto* copb = app.add_subcommand("op-b", "bilinear radial operator B(g,h)(x)");
    std::string gtext = "gauss:1", htext = "gauss:1";
    double opx = 1.0, alpha = 0.0;
    copb->add_option("--kernel", kernel_text);
    copb->add_option("--n", n);
    copb->add_option("--g", gtext);
    copb->add_option("--h", htext);
    copb->add_option("--x", opx)->required();
    copb->add_option("--alpha", alpha);

    // op-p
    auto* copp = app.add_subcommand("op-p", "sphere operator P(g,h)(k)");
    std::string ktext = "1,0,0";
    copp->add_option("--kernel", kernel_text);
    copp->add_option("--n", n);
    copp->add_option("--g", gtext);
    copp->add_option("--h", htext);
    copp->add_option("--k", ktext)->required();
    copp->add_option("--polar", polar);
    copp->add_option("--azimuth", azim);

    // qplus
    auto* cq = app.add_subcommand("qplus", "collision gain term Q+(g,h)(v)");
    std::string method = "direct", vtext = "0,0,0", out_path, out_format = "csv";
    double lambda = 0.0;
    int grid_n = 64;
    double grid_l = 6.0;
    cq->add_option("--method", method)->check(CLI::IsMember({"direct", "carleman", "bobylev"}));
    cq->add_option("--kernel", kernel_text);
    cq->add_option("--n", n);
    cq->add_option("--g", gtext);
    cq->add_option("--h", htext);
    cq->add_option("--v", vtext);
    cq->add_option("--lambda", lambda);
    cq->add_option("--polar", polar);
    cq->add_option("--azimuth", azim);
    cq->add_option("--grid-n", grid_n);
    cq->add_option("--grid-l", grid_l);
    cq->add_option("--out", out_path, "write the bobylev grid here");
    cq->add_option("--out-format", out_format)->check(CLI::IsMember({"csv", "bgf"}));
    cq->add_option("--quad-order", quad_order);

    // norm
    auto* cnorm = app.add_subcommand("norm", "weighted norms");
    std::string space = "nu", ftext = "gaussian:1";
    std::string ptext = "2";
    cnorm->add_option("--space", space)->check(CLI::IsMember({"radial", "nu", "lambda"}));
    cnorm->add_option("--f", ftext);
    cnorm->add_option("--p", ptext);
    cnorm->add_option("--n", n);
    cnorm->add_option("--alpha", alpha);
    cnorm->add_option("--lambda", lambda);
    cnorm->add_option("--quad-order", quad_order);

    // verify
    auto* cver = app.add_subcommand("verify", "certify one inequality");
    std::string which, fptext = "bump:2";
    std::string pt = "2", qt = "2", rt;
    int rotations = 4096;
    double tol = 1e-4;
    cver->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"lemma21", "lemma22", "lemma23", "thm1", "thm2"}));
    cver->add_option("--kernel", kernel_text);
    cver->add_option("--n", n);
    cver->add_option("--g", gtext);
    cver->add_option("--h", htext);
    cver->add_option("--f", fptext);
    cver->add_option("--p", pt);
    cver->add_option("--q", qt);
    cver->add_option("--r", rt);
    cver->add_option("--alpha", alpha);
    cver->add_option("--lambda", lambda);
    cver->add_option("--rotations", rotations);
    cver->add_option("--seed", seed);
    cver->add_option("--tol", tol);
    cver->add_option("--polar", polar);
    cver->add_option("--azimuth", azim);
    cver->add_option("--quad-order", quad_order);

    // sharpness
    auto* csharp = app.add_subcommand("sharpness", "extremizer sweep toward the sharp constant");
    std::string eps_text = "1e-1,3e-2,1e-2,3e-3,1e-3";
    csharp->add_option("--kernel", kernel_text);
    csharp->add_option("--n", n);
    csharp->add_option("--p", pt);
    csharp->add_option("--q", qt);
    csharp->add_option("--alpha", alpha);
    csharp->add_option("--eps", eps_text, "comma-separated epsilon schedule");
    csharp->add_option("--quad-order", quad_order);

    // sweep
    auto* csweep = app.add_subcommand("sweep", "run a JSON-configured sweep");
    std::string config_path, sweep_out = "-", sweep_format = "csv";
    csweep->add_option("--config", config_path)->required();
    csweep->add_option("--out", sweep_out);
    csweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bg::QuadratureSpec quad;
        quad.order = quad_order;

        if (cbeta->parsed() || ccut->parsed()) {
            bg::XiMeasure xi(bg::AngularKernel::parse(kernel_text), n);
            bg::BetaResult res = cbeta->parsed() ? bg::beta_b(bx, by, xi, quad)
                                                 : bg::grad_cutoff(xi, quad);
            if (!res.finite) {
                std::cout << "Divergent\n";
                return 0;
            }
            std::cout << bg::format_double(res.value) << " Finite (error estimate "
                      << bg::format_double(res.error) << ")\n";
            return 0;
        }

        if (copb->parsed()) {
            bg::XiMeasure xi(bg::AngularKernel::parse(kernel_text), n);
            auto g = bg::RadialProfile::parse(gtext, n, alpha);
            auto h = bg::RadialProfile::parse(htext, n, alpha);
            std::cout << bg::format_double(bg::bilinear_B(g, h, opx, xi, quad)) << "\n";
            return 0;
        }

        if (copp->parsed()) {
            auto kern = bg::AngularKernel::parse(kernel_text);
            auto g = bg::VelocityFunction::parse(n, gtext);
            auto h = bg::VelocityFunction::parse(n, htext);
            bg::SphereRule rule(n, polar, azim);
            std::cout << bg::format_double(bg::operator_P(g, h, parse_vec(ktext, n), kern, rule))
                      << "\n";
            return 0;
        }

        if (cq->parsed()) {
            auto kern = bg::AngularKernel::parse(kernel_text);
            bg::CollisionKernel ck(lambda, kern);
            auto g = bg::VelocityFunction::parse(n, gtext);
            auto h = bg::VelocityFunction::parse(n, htext);
            bg::Vec v = parse_vec(vtext, n);
            if (method == "direct") {
                bg::SphereRule rule(n, polar, azim);
                std::cout << bg::format_double(bg::q_plus_direct(g, h, v, ck, rule, quad)) << "\n";
            } else if (method == "carleman") {
                std::cout << bg::format_double(bg::q_plus_carleman(g, h, v, ck, quad)) << "\n";
            } else {
                if (lambda != 0.0)
                    throw bg::PreconditionViolation("bobylev pipeline requires lambda = 0");
                if (gtext != htext)
                    throw bg::ConfigError("bobylev pipeline evaluates Q+(f,f); pass --g only");
                bg::GridFunction grid = bg::GridFunction::sample(g, grid_n, grid_l);
                bg::SphereRule rule(n, polar, azim);
                bg::GridFunction out = bg::q0_plus_bobylev(grid, kern, rule);
                // report the value at the grid point nearest to v
                int idx[3] = {0, 0, 0};
                for (int a = 0; a < n; ++a) {
                    double pos = (v[a] + grid_l) / grid.dv();
                    idx[a] = std::min(grid_n - 1, std::max(0, static_cast<int>(pos + 0.5)));
                }
                double val = n == 2 ? out.values[out.index(idx[0], idx[1])]
                                    : out.values[out.index(idx[0], idx[1], idx[2])];
                std::cout << bg::format_double(val) << "\n";
                if (!out_path.empty()) {
                    if (out_format == "bgf")
                        out.save_bgf(out_path);
                    else
                        out.save_csv(out_path);
                }
            }
            return 0;
        }

        if (cnorm->parsed()) {
            double p = parse_exp(ptext);
            if (space == "radial") {
                auto f = bg::RadialProfile::parse(ftext, n, alpha);
                std::cout << bg::format_double(
                                 bg::lp_norm_radial(f, p, bg::SigmaMeasure{n, alpha}, quad))
                          << "\n";
            } else if (space == "nu") {
                auto f = bg::VelocityFunction::parse(n, ftext);
                std::cout << bg::format_double(
                                 bg::weighted_lp_norm(f, p, bg::NuMeasure{n, alpha}, quad))
                          << "\n";
            } else {
                auto f = bg::VelocityFunction::parse(n, ftext);
                std::cout << bg::format_double(bg::lambda_norm(f, {p, lambda}, quad)) << "\n";
            }
            return 0;
        }

        if (cver->parsed()) {
            auto kern = bg::AngularKernel::parse(kernel_text);
            bg::SphereRule rule(n, polar, azim);
            if (which == "lemma21") {
                auto f = bg::VelocityFunction::parse(n, fptext);
                auto g = bg::VelocityFunction::parse(n, gtext);
                auto h = bg::VelocityFunction::parse(n, htext);
                auto sides = bg::lemma21_pairing(f, g, h, kern, rule, quad);
                double rel = std::abs(sides.lhs - sides.rhs) /
                             std::max(1e-300, std::abs(sides.lhs));
                std::cout << "lemma2.1: lhs=" << bg::format_double(sides.lhs)
                          << " rhs=" << bg::format_double(sides.rhs)
                          << " rel_diff=" << bg::format_double(rel)
                          << (rel <= tol ? " PASS" : " FAIL") << "\n";
                return rel <= tol ? 0 : 1;
            }
            bg::InequalityReport rep;
            if (which == "lemma22") {
                auto f = bg::VelocityFunction::parse(n, fptext);
                auto g = bg::VelocityFunction::parse(n, gtext);
                auto h = bg::VelocityFunction::parse(n, htext);
                double rr = rt.empty() ? 3.0 : parse_exp(rt);
                rep = bg::lemma22_check(f, g, h, parse_exp(pt), parse_exp(qt), rr, kern, rule,
                                        bg::RotationSampler{rotations, seed}, quad, tol);
            } else if (which == "lemma23") {
                auto e = bg::ExponentTriple::holder(parse_exp(pt), parse_exp(qt));
                bg::XiMeasure xi(kern, n);
                auto g = bg::RadialProfile::parse(gtext == "gaussian:1" ? "gauss:1" : gtext, n,
                                                  alpha);
                auto h = bg::RadialProfile::parse(htext == "gaussian:1" ? "gauss:1" : htext, n,
                                                  alpha);
                rep = bg::lemma23_check(g, h, e, xi, bg::SigmaMeasure{n, alpha}, quad, tol);
            } else if (which == "thm1") {
                auto e = bg::ExponentTriple::holder(parse_exp(pt), parse_exp(qt));
                auto g = bg::VelocityFunction::parse(n, gtext);
                auto h = bg::VelocityFunction::parse(n, htext);
                rep = bg::theorem1_check(g, h, e, bg::NuMeasure{n, alpha}, kern, rule, quad, tol);
            } else {
                double rr = rt.empty() ? 1.0 : parse_exp(rt);
                auto e = bg::ExponentTriple::young(parse_exp(pt), parse_exp(qt), rr);
                auto g = bg::VelocityFunction::parse(n, gtext);
                auto h = bg::VelocityFunction::parse(n, htext);
                bg::CollisionKernel ck(lambda, kern);
                rep = bg::theorem2_check(g, h, e, ck, rule, quad, tol);
            }
            rep.seed = seed;
            print_report(rep);
            return rep.pass ? 0 : 1;
        }

        if (csharp->parsed()) {
            auto e = bg::ExponentTriple::holder(parse_exp(pt), parse_exp(qt));
            bg::XiMeasure xi(bg::AngularKernel::parse(kernel_text), n);
            std::vector<double> eps;
            std::istringstream in(eps_text);
            std::string tok;
            while (std::getline(in, tok, ',')) eps.push_back(std::stod(tok));
            auto study = bg::sharpness_study(e, xi, bg::SigmaMeasure{n, alpha}, eps, quad);
            std::cout << "sharp constant " << bg::format_double(study.sharp_constant) << "\n";
            std::cout << "eps,norm,beta_eps,ratio,sandwich\n";
            bool all_ok = true;
            for (const auto& row : study.rows) {
                std::cout << bg::format_double(row.eps) << ',' << bg::format_double(row.norm)
                          << ',' << bg::format_double(row.beta_eps) << ','
                          << bg::format_double(row.ratio) << ','
                          << (row.sandwich_ok ? "ok" : "violated") << "\n";
                all_ok = all_ok && row.sandwich_ok;
            }
            return all_ok ? 0 : 1;
        }

        if (csweep->parsed()) {
            bg::SweepSpec spec = bg::SweepSpec::from_json_file(config_path);
            spec.threads = thread_count(threads_flag);
            auto reports = bg::run_sweep(spec);
            bg::emit(reports,
                     sweep_format == "json" ? bg::ReportFormat::json : bg::ReportFormat::csv,
                     sweep_out);
            bool any_fail = false, any_error = false;
            for (const auto& rep : reports) {
                if (rep.status == bg::InequalityReport::Status::skipped) {
                    if (rep.skip_reason.rfind("error:", 0) == 0) any_error = true;
                    std::cerr << "skipped: " << rep.name << " (" << rep.skip_reason << ")\n";
                } else if (!rep.pass) {
                    any_fail = true;
                }
            }
            if (any_error) return 3;
            return any_fail ? 1 : 0;
        }
    } catch (const bg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const bg::PreconditionViolation& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const bg::QuadratureFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const bg::NonIntegrable& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
