// Command-line front end. Every numeric result comes out of the shared
// library through the C interface; this translation unit only parses flags
// and formats CSV/JSON.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ouc.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 1000003;  // fixed so default runs reproduce

struct OutputTarget {
    std::string path;  // empty = stdout

    int write(const std::string& content, const std::string& manifest) const {
        if (path.empty()) {
            std::cout << content;
            std::cerr << manifest << "\n";
            return 0;
        }
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return 2;
        }
        out << content;
        std::ofstream mout(path + ".manifest.json");
        if (!mout) {
            std::cerr << "error: cannot open manifest file '" << path << ".manifest.json'\n";
            return 2;
        }
        mout << manifest << "\n";
        return 0;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::string manifest_json(const std::string& subcommand,
                          const std::map<std::string, std::string>& parameters,
                          std::uint64_t seed) {
    std::ostringstream out;
    out << "{\"subcommand\":\"" << subcommand << "\",\"version\":\"" << ouc_version()
        << "\",\"timestamp\":\"" << iso_timestamp() << "\",\"seed\":" << seed
        << ",\"parameters\":{";
    bool first = true;
    for (const auto& [key, value] : parameters) {
        if (!first) out << ",";
        first = false;
        out << "\"" << json_escape(key) << "\":\"" << json_escape(value) << "\"";
    }
    out << "}}";
    return out.str();
}

int fail_status(const std::string& what, ouc_status status) {
    std::cerr << "error: " << what << ": " << ouc_status_message(status) << "\n";
    return 2;
}

struct PolyHandle {
    ouc_poly* p = nullptr;
    ~PolyHandle() { ouc_poly_free(p); }
};

struct ExpansionHandle {
    ouc_expansion* e = nullptr;
    ~ExpansionHandle() { ouc_expansion_free(e); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { ouc_string_free(s); }
};

// ----------------------------------------------------------------- hermite

int run_hermite(int m, int n, const OutputTarget& target) {
    PolyHandle poly;
    if (auto st = ouc_poly_hermite(m, n, &poly.p); st != OUC_OK) return fail_status("hermite", st);
    StringHandle json;
    if (auto st = ouc_poly_to_json(poly.p, &json.s); st != OUC_OK) return fail_status("hermite", st);
    return target.write(std::string(json.s) + "\n",
                        manifest_json("hermite",
                                      {{"m", std::to_string(m)}, {"n", std::to_string(n)}}, 0));
}

// --------------------------------------------------------------- eigencheck

int run_eigencheck(int max_degree, const std::vector<double>& thetas, double tol,
                   const OutputTarget& target) {
    std::ostringstream csv;
    csv << "m,n,theta,residual\n";
    bool ok = true;
    for (double theta : thetas) {
        for (int total = 0; total <= max_degree; ++total) {
            for (int m = total; m >= 0; --m) {
                const int n = total - m;
                double residual = 0.0;
                if (auto st = ouc_eigen_residual(m, n, theta, &residual); st != OUC_OK) {
                    return fail_status("eigencheck", st);
                }
                if (residual > tol) ok = false;
                csv << m << "," << n << "," << fmt(theta) << "," << fmt(residual) << "\n";
            }
        }
    }
    std::ostringstream thetas_text;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (i) thetas_text << " ";
        thetas_text << fmt(thetas[i]);
    }
    const int rc = target.write(csv.str(), manifest_json("eigencheck",
                                                         {{"max_degree", std::to_string(max_degree)},
                                                          {"theta", thetas_text.str()},
                                                          {"tol", fmt(tol)}},
                                                         0));
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- semicheck

int run_semicheck(double theta, const std::vector<double>& times, int degree, int dim,
                  const std::string& mode, std::uint64_t seed, long samples, double tol,
                  const OutputTarget& target) {
    PolyHandle poly;
    if (auto st = ouc_poly_random(dim, degree, 3, seed, &poly.p); st != OUC_OK) {
        return fail_status("semicheck", st);
    }
    std::vector<double> x(2 * static_cast<std::size_t>(dim));
    if (auto st = ouc_gaussian_points(dim, 1, seed ^ 0x9E37u, x.data()); st != OUC_OK) {
        return fail_status("semicheck", st);
    }

    std::ostringstream csv;
    csv << "t,theta,value_re,value_im,residual\n";
    bool ok = true;
    for (double t : times) {
        double spectral[2] = {0, 0}, mehler[2] = {0, 0};
        double residual = 0.0;
        if (mode == "both") {
            if (auto st = ouc_semigroup_agreement(poly.p, x.data(), dim, t, theta, spectral,
                                                  mehler, &residual);
                st != OUC_OK) {
                return fail_status("semicheck", st);
            }
            if (residual > tol) ok = false;
            csv << fmt(t) << "," << fmt(theta) << "," << fmt(mehler[0]) << "," << fmt(mehler[1])
                << "," << fmt(residual) << "\n";
        } else {
            double value[2] = {0, 0};
            double se = 0.0;
            if (mode == "spectral") {
                // Spectral values come from the agreement call; the averaging
                // value is discarded.
                double dummy = 0.0;
                if (auto st = ouc_semigroup_agreement(poly.p, x.data(), dim, t, theta, value,
                                                      mehler, &dummy);
                    st != OUC_OK) {
                    return fail_status("semicheck", st);
                }
            } else {
                const ouc_integrator_mode imode =
                    samples > 0 ? OUC_INTEGRATOR_MONTE_CARLO : OUC_INTEGRATOR_EXACT;
                if (auto st = ouc_semigroup_eval(poly.p, x.data(), dim, t, theta, imode, 0,
                                                 samples, seed, value, &se);
                    st != OUC_OK) {
                    return fail_status("semicheck", st);
                }
            }
            csv << fmt(t) << "," << fmt(theta) << "," << fmt(value[0]) << "," << fmt(value[1])
                << ",0\n";
        }
    }
    std::ostringstream times_text;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i) times_text << " ";
        times_text << fmt(times[i]);
    }
    const int rc = target.write(
        csv.str(), manifest_json("semicheck",
                                 {{"theta", fmt(theta)},
                                  {"t", times_text.str()},
                                  {"degree", std::to_string(degree)},
                                  {"dim", std::to_string(dim)},
                                  {"mode", mode},
                                  {"samples", std::to_string(samples)},
                                  {"tol", fmt(tol)}},
                                 seed));
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

// ----------------------------------------------------------------- simulate

int run_simulate(double a, double theta, double sigma2, double z0_re, double z0_im, double t_end,
                 int steps, int paths, std::uint64_t seed, const std::string& scheme,
                 bool summary, const OutputTarget& target) {
    const ouc_scheme sch = scheme == "euler" ? OUC_SCHEME_EULER : OUC_SCHEME_EXACT;
    const std::map<std::string, std::string> params = {
        {"a", fmt(a)},           {"theta", fmt(theta)},   {"sigma2", fmt(sigma2)},
        {"z0_re", fmt(z0_re)},   {"z0_im", fmt(z0_im)},   {"t_end", fmt(t_end)},
        {"steps", std::to_string(steps)}, {"paths", std::to_string(paths)}, {"scheme", scheme},
        {"summary", summary ? "true" : "false"}};

    if (summary) {
        ouc_sim_summary s;
        if (auto st = ouc_simulate_summary(a, theta, sigma2, z0_re, z0_im, t_end, steps, paths,
                                           sch, seed, &s);
            st != OUC_OK) {
            return fail_status("simulate", st);
        }
        std::ostringstream out;
        out << "{\"mean_re\":" << fmt(s.mean_re) << ",\"mean_im\":" << fmt(s.mean_im)
            << ",\"mean_se\":" << fmt(s.mean_se) << ",\"exact_mean_re\":" << fmt(s.exact_mean_re)
            << ",\"exact_mean_im\":" << fmt(s.exact_mean_im)
            << ",\"second_moment\":" << fmt(s.second_moment)
            << ",\"second_moment_se\":" << fmt(s.second_moment_se)
            << ",\"stationary_second_moment\":" << fmt(s.stationary_second_moment)
            << ",\"euler_stable\":" << (s.euler_stable ? "true" : "false") << "}\n";
        return target.write(out.str(), manifest_json("simulate", params, seed));
    }

    std::vector<double> buffer(2 * static_cast<std::size_t>(paths) * (steps + 1));
    if (auto st = ouc_simulate_paths(a, theta, sigma2, z0_re, z0_im, t_end, steps, paths, sch,
                                     seed, buffer.data());
        st != OUC_OK) {
        return fail_status("simulate", st);
    }
    if (sch == OUC_SCHEME_EULER) {
        ouc_sim_summary s;
        if (ouc_simulate_summary(a, theta, sigma2, z0_re, z0_im, t_end, steps, 2, sch, seed, &s) ==
                OUC_OK &&
            !s.euler_stable) {
            std::cerr << "warning: explicit Euler step is unstable at dt = " << fmt(t_end / steps)
                      << " (|1 - alpha dt| >= 1)\n";
        }
    }
    std::ostringstream csv;
    csv << "path_id,step,t,re,im\n";
    const double dt = t_end / steps;
    std::size_t offset = 0;
    for (int k = 0; k < paths; ++k) {
        for (int s = 0; s <= steps; ++s) {
            csv << k << "," << s << "," << fmt(s * dt) << "," << fmt(buffer[offset]) << ","
                << fmt(buffer[offset + 1]) << "\n";
            offset += 2;
        }
    }
    return target.write(csv.str(), manifest_json("simulate", params, seed));
}

// -------------------------------------------------------------------- hyper

int run_hyper(const std::vector<double>& p_grid, const std::vector<double>& t_grid,
              const std::vector<double>& theta_grid, const std::string& variant, int degree,
              int dim, long samples, int cell_polys, std::uint64_t seed,
              const OutputTarget& target) {
    const ouc_q_variant var = variant == "statement" ? OUC_Q_STATEMENT : OUC_Q_PROOF;
    ouc_hyper_row* rows = nullptr;
    std::size_t row_count = 0;
    if (auto st = ouc_hyper_scan(degree, dim, p_grid.data(), p_grid.size(), t_grid.data(),
                                 t_grid.size(), theta_grid.data(), theta_grid.size(), var,
                                 cell_polys, samples, seed, &rows, &row_count);
        st != OUC_OK) {
        return fail_status("hyper", st);
    }
    std::ostringstream csv;
    csv << "p,t,theta,variant,q,lhs,lhs_se,rhs,rhs_se,margin,pass\n";
    bool ok = true;
    for (std::size_t i = 0; i < row_count; ++i) {
        const auto& r = rows[i];
        if (!r.pass) ok = false;
        csv << fmt(r.p) << "," << fmt(r.t) << "," << fmt(r.theta) << ","
            << (r.variant == OUC_Q_PROOF ? "proof" : "statement") << "," << fmt(r.q) << ","
            << fmt(r.lhs) << "," << fmt(r.lhs_se) << "," << fmt(r.rhs) << "," << fmt(r.rhs_se)
            << "," << fmt(r.margin) << "," << (r.pass ? 1 : 0) << "\n";
    }
    ouc_hyper_rows_free(rows);
    const int rc = target.write(
        csv.str(), manifest_json("hyper",
                                 {{"variant", variant},
                                  {"degree", std::to_string(degree)},
                                  {"dim", std::to_string(dim)},
                                  {"samples", std::to_string(samples)},
                                  {"cell_polys", std::to_string(cell_polys)}},
                                 seed));
    if (rc != 0) return rc;
    // Statement-variant findings are reported, not asserted.
    if (var == OUC_Q_PROOF && !ok) return 1;
    return 0;
}

// -------------------------------------------------------------------- chaos

int run_chaos(const std::string& in_file, int hermite_m, int hermite_n, bool random, int degree,
              int dim, std::uint64_t seed, const std::vector<int>& project,
              const OutputTarget& target) {
    PolyHandle poly;
    std::map<std::string, std::string> params;
    if (!in_file.empty()) {
        std::ifstream in(in_file);
        if (!in) {
            std::cerr << "error: cannot read '" << in_file << "'\n";
            return 2;
        }
        std::stringstream text;
        text << in.rdbuf();
        if (auto st = ouc_poly_from_json(text.str().c_str(), &poly.p); st != OUC_OK) {
            return fail_status("chaos", st);
        }
        params["in"] = in_file;
    } else if (random) {
        if (auto st = ouc_poly_random(dim, degree, 3, seed, &poly.p); st != OUC_OK) {
            return fail_status("chaos", st);
        }
        params["random"] = "true";
        params["degree"] = std::to_string(degree);
        params["dim"] = std::to_string(dim);
    } else {
        if (auto st = ouc_poly_hermite(hermite_m, hermite_n, &poly.p); st != OUC_OK) {
            return fail_status("chaos", st);
        }
        params["hermite_m"] = std::to_string(hermite_m);
        params["hermite_n"] = std::to_string(hermite_n);
    }

    if (!project.empty()) {
        if (project.size() != 2) {
            std::cerr << "error: --project needs exactly two integers\n";
            return 2;
        }
        PolyHandle component;
        if (auto st = ouc_project(poly.p, project[0], project[1], &component.p); st != OUC_OK) {
            return fail_status("chaos", st);
        }
        StringHandle json;
        if (auto st = ouc_poly_to_json(component.p, &json.s); st != OUC_OK) {
            return fail_status("chaos", st);
        }
        params["project"] = std::to_string(project[0]) + " " + std::to_string(project[1]);
        return target.write(std::string(json.s) + "\n", manifest_json("chaos", params, seed));
    }

    ExpansionHandle expansion;
    if (auto st = ouc_expand(poly.p, &expansion.e); st != OUC_OK) return fail_status("chaos", st);
    StringHandle json;
    if (auto st = ouc_expansion_to_json(expansion.e, &json.s); st != OUC_OK) {
        return fail_status("chaos", st);
    }
    return target.write(std::string(json.s) + "\n", manifest_json("chaos", params, seed));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonsymmetric Ornstein-Uhlenbeck calculus on complex Gaussian space"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.failure_message(CLI::FailureMessage::help);

    std::string out_path;
    app.add_option("--out", out_path, "write output to this file (manifest goes to <out>.manifest.json)");

    // hermite
    auto* hermite = app.add_subcommand("hermite", "emit one complex Hermite polynomial as JSON");
    int h_m = 0, h_n = 0;
    hermite->add_option("--m", h_m, "holomorphic degree")->required();
    hermite->add_option("--n", h_n, "antiholomorphic degree")->required();

    // eigencheck
    auto* eigen = app.add_subcommand("eigencheck", "eigenvalue residuals of the generator (CSV)");
    int e_max_degree = 6;
    std::vector<double> e_thetas{0.7};
    double e_tol = 1e-12;
    eigen->add_option("--max-degree", e_max_degree, "largest m+n to test");
    eigen->add_option("--theta", e_thetas, "rotation angles")->expected(-1);
    eigen->add_option("--tol", e_tol, "residual tolerance");

    // semicheck
    auto* semi = app.add_subcommand("semicheck", "semigroup values / spectral-vs-averaging residuals (CSV)");
    double s_theta = 0.5;
    std::vector<double> s_times{0.5};
    int s_degree = 4, s_dim = 2;
    std::string s_mode = "both";
    std::uint64_t s_seed = kDefaultSeed;
    long s_samples = 0;
    double s_tol = 1e-10;
    semi->add_option("--theta", s_theta, "rotation angle");
    semi->add_option("--t", s_times, "times")->expected(-1);
    semi->add_option("--degree", s_degree, "random polynomial degree");
    semi->add_option("--dim", s_dim, "number of complex coordinates");
    semi->add_option("--mode", s_mode, "spectral | mehler | both")
        ->check(CLI::IsMember({"spectral", "mehler", "both"}));
    semi->add_option("--seed", s_seed, "random seed");
    semi->add_option("--samples", s_samples, "Monte Carlo samples for mehler mode (0 = exact)");
    semi->add_option("--tol", s_tol, "residual tolerance in both mode");

    // simulate
    auto* sim = app.add_subcommand("simulate", "sample paths of the complex OU equation (CSV)");
    double sim_a = 1.0, sim_theta = 0.5, sim_sigma2 = 1.0, sim_z0re = 1.0, sim_z0im = 0.0,
           sim_tend = 1.0;
    int sim_steps = 16, sim_paths = 1;
    std::uint64_t sim_seed = kDefaultSeed;
    std::string sim_scheme = "exact";
    bool sim_summary = false;
    sim->add_option("--a", sim_a, "drift magnitude");
    sim->add_option("--theta", sim_theta, "drift angle");
    sim->add_option("--sigma2", sim_sigma2, "noise intensity");
    sim->add_option("--z0-re", sim_z0re, "initial point, real part");
    sim->add_option("--z0-im", sim_z0im, "initial point, imaginary part");
    sim->add_option("--t-end", sim_tend, "final time");
    sim->add_option("--steps", sim_steps, "number of steps");
    sim->add_option("--paths", sim_paths, "number of paths");
    sim->add_option("--seed", sim_seed, "random seed");
    sim->add_option("--scheme", sim_scheme, "exact | euler")
        ->check(CLI::IsMember({"exact", "euler"}));
    sim->add_flag("--summary", sim_summary, "emit moment summary JSON instead of paths");

    // hyper
    auto* hyper = app.add_subcommand("hyper", "hypercontractivity margins over a (p,t,theta) grid (CSV)");
    std::vector<double> hy_p{2.0}, hy_t{0.5}, hy_theta{0.5};
    std::string hy_variant = "proof";
    int hy_degree = 3, hy_dim = 2, hy_cell_polys = 20;
    long hy_samples = 100000;
    std::uint64_t hy_seed = kDefaultSeed;
    hyper->add_option("--p", hy_p, "source exponents (> 1)")->expected(-1);
    hyper->add_option("--t", hy_t, "times")->expected(-1);
    hyper->add_option("--theta", hy_theta, "rotation angles")->expected(-1);
    hyper->add_option("--variant", hy_variant, "proof | statement")
        ->check(CLI::IsMember({"proof", "statement"}));
    hyper->add_option("--degree", hy_degree, "random polynomial degree");
    hyper->add_option("--dim", hy_dim, "number of complex coordinates");
    hyper->add_option("--samples", hy_samples, "Monte Carlo samples per norm");
    hyper->add_option("--cell-polys", hy_cell_polys, "random polynomials per cell");
    hyper->add_option("--seed", hy_seed, "random seed");

    // chaos
    auto* chaos = app.add_subcommand("chaos", "chaos expansion / projection of a polynomial (JSON)");
    std::string c_in;
    int c_m = 1, c_n = 1, c_degree = 4, c_dim = 2;
    bool c_random = false;
    std::uint64_t c_seed = kDefaultSeed;
    std::vector<int> c_project;
    chaos->add_option("--in", c_in, "polynomial JSON file");
    chaos->add_option("--hermite-m", c_m, "use the (m,n) Hermite polynomial as input");
    chaos->add_option("--hermite-n", c_n, "use the (m,n) Hermite polynomial as input");
    chaos->add_flag("--random", c_random, "use a seeded random polynomial as input");
    chaos->add_option("--degree", c_degree, "random polynomial degree");
    chaos->add_option("--dim", c_dim, "random polynomial dimension");
    chaos->add_option("--seed", c_seed, "random seed");
    chaos->add_option("--project", c_project, "emit the (m,n) chaos component instead")
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const OutputTarget target{out_path};
    if (hermite->parsed()) return run_hermite(h_m, h_n, target);
    if (eigen->parsed()) return run_eigencheck(e_max_degree, e_thetas, e_tol, target);
    if (semi->parsed()) {
        return run_semicheck(s_theta, s_times, s_degree, s_dim, s_mode, s_seed, s_samples, s_tol,
                             target);
    }
    if (sim->parsed()) {
        return run_simulate(sim_a, sim_theta, sim_sigma2, sim_z0re, sim_z0im, sim_tend, sim_steps,
                            sim_paths, sim_seed, sim_scheme, sim_summary, target);
    }
    if (hyper->parsed()) {
        return run_hyper(hy_p, hy_t, hy_theta, hy_variant, hy_degree, hy_dim, hy_samples,
                         hy_cell_polys, hy_seed, target);
    }
    if (chaos->parsed()) {
        return run_chaos(c_in, c_m, c_n, c_random, c_degree, c_dim, c_seed, c_project, target);
    }
    std::cerr << app.help();
    return 2;
}
