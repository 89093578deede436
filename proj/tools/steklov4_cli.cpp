// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: spectra, verification sweeps, normalized-eigenvalue
// scans, and the first-eigenvalue bound of the third problem.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steklov/annulus_pencil.hpp"
#include "steklov/asymptotics.hpp"
#include "steklov/cylinder.hpp"
#include "steklov/ode_oracle.hpp"
#include "steklov/prng.hpp"
#include "steklov/shape_opt.hpp"
#include "steklov/type3_bound.hpp"

using nlohmann::json;
using namespace steklov;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "table";
    std::string path;
};

std::ostream& open_sink(const OutputOptions& opt, std::ofstream& file) {
    if (opt.path.empty()) return std::cout;
    file.open(opt.path);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.path);
    return file;
}

ProblemKind parse_problem(const std::string& s) {
    if (s == "type1") return ProblemKind::type1;
    if (s == "type2") return ProblemKind::type2;
    throw CLI::ValidationError("--problem must be type1 or type2");
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::pencil: return "pencil";
        case Provenance::closed_form: return "closed_form";
        case Provenance::oracle: return "oracle";
    }
    return "?";
}

std::string family_name(CylinderFamily f) {
    switch (f) {
        case CylinderFamily::poly1: return "poly1";
        case CylinderFamily::poly2: return "poly2";
        case CylinderFamily::even_k: return "even_k";
        case CylinderFamily::odd_k: return "odd_k";
    }
    return "?";
}

struct OutRow {
    std::string value;
    int k;
    std::string branch_or_family;
    long long multiplicity;
    std::string provenance;
};

void emit_rows(const OutputOptions& opt, const std::string& problem, const json& domain,
               const std::vector<OutRow>& rows) {
    std::ofstream file;
    std::ostream& os = open_sink(opt, file);
    if (opt.format == "json") {
        json doc;
        doc["problem"] = problem;
        doc["domain"] = domain;
        doc["precision_digits"] = working_digits();
        doc["entries"] = json::array();
        for (const auto& r : rows)
            doc["entries"].push_back({{"value", r.value},
                                      {"k", r.k},
                                      {"branch_or_family", r.branch_or_family},
                                      {"multiplicity", r.multiplicity},
                                      {"provenance", r.provenance}});
        os << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "value,k,branch_or_family,multiplicity,provenance\n";
        for (const auto& r : rows)
            os << r.value << "," << r.k << "," << r.branch_or_family << "," << r.multiplicity
               << "," << r.provenance << "\n";
    } else {
        os << std::left << std::setw(40) << "value" << std::setw(6) << "k" << std::setw(16)
           << "branch/family" << std::setw(6) << "mult" << "provenance\n";
        for (const auto& r : rows) {
            std::string v = r.value.size() > 38 ? r.value.substr(0, 38) : r.value;
            os << std::left << std::setw(40) << v << std::setw(6) << r.k << std::setw(16)
               << r.branch_or_family << std::setw(6) << r.multiplicity << r.provenance << "\n";
        }
    }
}

CrossSectionSpectrum parse_cross_section(const std::string& text, int count) {
    std::stringstream ss(text);
    std::string kind, mstr, rstr;
    std::getline(ss, kind, ':');
    std::getline(ss, mstr, ':');
    std::getline(ss, rstr, ':');
    if (kind.empty() || mstr.empty())
        throw CLI::ValidationError("--cross-section must look like sphere:2[:r] or torus:1[:r]");
    const int m = std::stoi(mstr);
    const Scalar r = rstr.empty() ? Scalar(1) : Scalar(rstr);
    if (kind == "sphere") return cross_section_spectrum(CrossSectionKind::sphere, m, r, count);
    if (kind == "torus") return cross_section_spectrum(CrossSectionKind::torus, m, r, count);
    throw CLI::ValidationError("unknown cross-section kind: " + kind);
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.emplace_back(item);
    if (out.empty()) throw CLI::ValidationError("empty list");
    return out;
}

// grid "a:b:steps", inclusive endpoints
std::vector<Scalar> parse_grid(const std::string& text) {
    std::stringstream ss(text);
    std::string a, b, n;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    std::getline(ss, n, ':');
    if (a.empty() || b.empty() || n.empty())
        throw CLI::ValidationError("--eps-grid must look like a:b:steps");
    const int steps = std::stoi(n);
    if (steps < 1) throw CLI::ValidationError("grid needs at least one step");
    const Scalar lo(a), hi(b);
    std::vector<Scalar> out;
    for (int i = 0; i < steps; ++i)
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return out;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum_annulus(const std::string& problem, int dim, const std::string& eps, int kmax,
                         int count, bool positive_only, const OutputOptions& out) {
    const ProblemKind kind = parse_problem(problem);
    const AnnulusDomain dom{Dimension(dim), Scalar(eps)};
    const SpectrumResult res = annulus_spectrum(kind, dom, kmax, count, positive_only);
    std::vector<OutRow> rows;
    for (const auto& e : res.entries)
        rows.push_back({e.value.str(), e.k, std::to_string(e.branch), e.multiplicity,
                        provenance_name(e.provenance)});
    emit_rows(out, problem, json{{"type", "annulus"}, {"dim", dim}, {"eps", eps}}, rows);
    if (res.tail_warning)
        std::cerr << "warning: largest value may compete with degree kmax+1; raise --kmax\n";
    return kExitOk;
}

int run_spectrum_ball(const std::string& problem, int dim, const std::string& radius, int kmax,
                      int count, const OutputOptions& out) {
    const ProblemKind kind = parse_problem(problem);
    const SpectrumResult res = ball_spectrum(kind, Dimension(dim), Scalar(radius), kmax, count);
    std::vector<OutRow> rows;
    for (const auto& e : res.entries)
        rows.push_back({e.value.str(), e.k, std::to_string(e.branch), e.multiplicity,
                        provenance_name(e.provenance)});
    emit_rows(out, problem, json{{"type", "ball"}, {"dim", dim}, {"radius", radius}}, rows);
    return kExitOk;
}

int run_spectrum_cylinder(const std::string& problem, const std::string& half_length,
                          const std::string& cross_section, int count, const OutputOptions& out) {
    const ProblemKind kind = parse_problem(problem);
    const int modes = count + 4;
    CylinderDomain dom(Scalar(half_length), parse_cross_section(cross_section, modes));
    CylinderSpectrum res = cylinder_spectrum(kind, dom, count);
    std::vector<OutRow> rows;
    for (const auto& e : res.entries)
        rows.push_back(
            {e.value.str(), e.mode, family_name(e.family), e.multiplicity, "closed_form"});
    emit_rows(out, problem,
              json{{"type", "cylinder"},
                   {"half_length", half_length},
                   {"cross_section", cross_section}},
              rows);
    if (res.truncated_cross_section)
        std::cerr << "warning: cross-section spectrum may be too short for --count\n";
    return kExitOk;
}

// ------------------------------------------------------------------ verify

int run_verify_asymptotics(const std::string& problem, int dim, int k, int branch,
                           const std::string& eps_pair) {
    const ProblemKind kind = parse_problem(problem);
    Scalar e1, e2;
    if (!eps_pair.empty()) {
        auto pair = parse_scalar_list(eps_pair);
        if (pair.size() != 2) throw CLI::ValidationError("--eps-pair needs two values");
        e1 = pair[0];
        e2 = pair[1];
    } else {
        const AsymptoticModel model = (kind == ProblemKind::type1)
                                          ? expansion_type1(Dimension(dim), k)
                                          : expansion_type2(Dimension(dim), k, branch);
        const bool log_case = model.remainder.log_power != 0;
        e1 = log_case ? Scalar("1e-3") : Scalar("1e-2");
        e2 = log_case ? Scalar("1e-4") : Scalar("1e-3");
    }
    const OrderReport rep = verify_order(kind, Dimension(dim), k, e1, e2, branch);
    std::cout << "problem=" << problem << " n=" << dim << " k=" << k << " branch=" << branch
              << "\n";
    std::cout << "eps pair: " << rep.eps1.str(6) << ", " << rep.eps2.str(6) << "\n";
    std::cout << "model errors: " << rep.err1.str(6) << ", " << rep.err2.str(6) << "\n";
    if (rep.exact_case) {
        std::cout << "exact closed form; errors at working precision\n";
    } else {
        std::cout << "fitted order: " << rep.fitted_order.str(8) << " (expected eps^"
                  << rep.expected_power << (rep.expected_log_power != 0 ? " with log factor" : "")
                  << ")\n";
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? kExitOk : kExitFailure;
}

int run_verify_oracle(const std::string& problem, const std::string& dims, const std::string& ks,
                      const std::string& eps_list, int steps, const std::string& tol) {
    std::vector<ProblemKind> kinds;
    if (problem == "both")
        kinds = {ProblemKind::type1, ProblemKind::type2};
    else
        kinds = {parse_problem(problem)};
    const Scalar tolerance(tol);
    bool ok = true;
    ShootingConfig cfg;
    cfg.integration_steps = steps;
    for (const ProblemKind kind : kinds)
        for (const Scalar& dim_s : parse_scalar_list(dims))
            for (const Scalar& k_s : parse_scalar_list(ks))
                for (const Scalar& eps : parse_scalar_list(eps_list)) {
                    const int n = static_cast<int>(dim_s);
                    const int k = static_cast<int>(k_s);
                    const AnnulusDomain dom{Dimension(n), eps};
                    const PencilRoots roots = solve_pencil(extract_pencil(kind, dom, k));
                    for (const auto& root : roots.roots) {
                        if (kind == ProblemKind::type1 && root.value == 0) continue;
                        const Scalar spread =
                            std::max(abs(root.value) / 1000, Scalar("1e-6"));
                        const Scalar lam = oracle_eigenvalue(kind, dom, k, root.value - spread,
                                                             root.value + spread, cfg);
                        const Scalar diff = abs(lam - root.value);
                        const bool pass = diff <= tolerance;
                        ok = ok && pass;
                        std::cout << (pass ? "PASS" : "FAIL") << " "
                                  << (kind == ProblemKind::type1 ? "type1" : "type2") << " n=" << n
                                  << " k=" << k << " eps=" << eps.str(4) << " branch="
                                  << root.branch << " |oracle-pencil|=" << diff.str(4) << "\n";
                    }
                }
    return ok ? kExitOk : kExitFailure;
}

int run_verify_limits(const std::string& problem, const std::string& L_list,
                      const std::string& c_str) {
    std::vector<ProblemKind> kinds;
    if (problem == "both")
        kinds = {ProblemKind::type1, ProblemKind::type2};
    else
        kinds = {parse_problem(problem)};
    const Scalar c(c_str);
    auto Ls = parse_scalar_list(L_list);
    bool ok = true;
    for (const ProblemKind kind : kinds) {
        const Scalar limit = (kind == ProblemKind::type1) ? 2 * pow_int(c, 3) : 2 * c;
        std::cout << (kind == ProblemKind::type1 ? "type1" : "type2") << " limit "
                  << limit.str(8) << "\n";
        Scalar prev_odd(-1), prev_even(-1);
        bool monotone = true;
        for (const Scalar& L : Ls) {
            const Scalar god =
                abs(cylinder_family_value(kind, CylinderFamily::odd_k, L, c) - limit);
            const Scalar gev =
                abs(cylinder_family_value(kind, CylinderFamily::even_k, L, c) - limit);
            std::cout << "  L=" << L.str(6) << " |odd-limit|=" << god.str(6)
                      << " |even-limit|=" << gev.str(6) << "\n";
            if (prev_odd >= 0 && (god >= prev_odd || gev >= prev_even)) monotone = false;
            prev_odd = god;
            prev_even = gev;
        }
        std::cout << (monotone ? "PASS" : "FAIL") << " deviations decrease along L\n";
        ok = ok && monotone;
    }
    return ok ? kExitOk : kExitFailure;
}

int run_verify_inequalities(int dim, const std::string& eps_str, int kmax) {
    const Scalar eps(eps_str);
    bool ok = true;
    for (int k = 1; k <= kmax; ++k) {
        const auto v = compare_annulus_vs_ball(ProblemKind::type1, Dimension(dim), k, eps);
        const bool pass = v.verdict == Verdict::annulus_greater;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " type1 k=" << k
                  << " margin=" << v.margin.str(6) << " (expect annulus > ball)\n";
    }
    if (dim >= 4) {
        for (int k = 0; k <= kmax; ++k) {
            const auto v = compare_annulus_vs_ball(ProblemKind::type2, Dimension(dim), k, eps);
            const bool expect_ball = k <= 1;
            const bool pass =
                expect_ball ? v.verdict == Verdict::ball_greater : v.verdict == Verdict::annulus_greater;
            ok = ok && pass;
            std::cout << (pass ? "PASS" : "FAIL") << " type2 k=" << k
                      << " margin=" << v.margin.str(6) << " (expect "
                      << (expect_ball ? "ball > annulus" : "annulus > ball") << ")\n";
        }
    } else {
        std::cout << "type2 comparisons skipped (meaningful for dim >= 4 only)\n";
    }
    return ok ? kExitOk : kExitFailure;
}

int run_verify_bounds(int dim_max, int samples, std::uint64_t seed) {
    bool ok = true;
    for (int n = 2; n <= dim_max; ++n) {
        const Dimension dim(n);
        for (const char* rs : {"0.5", "1", "2"}) {
            const Scalar r(rs);
            for (const char* ts : {"1", "5"}) {
                const Scalar tau(ts);
                const DomainMeasures ball(dim, ball_volume(dim, r),
                                          sphere_area(dim) * pow_int(r, n - 1), tau, true);
                const Scalar sharp = first_eigenvalue_bound(ball);
                const Scalar expect = ball_first_eigenvalue(dim, r, tau);
                const bool pass = abs(sharp - expect) <= rel_tolerance(20) * expect;
                ok = ok && pass;
                if (!pass)
                    std::cout << "FAIL ball equality n=" << n << " r=" << rs << " tau=" << ts
                              << "\n";
            }
        }
        SplitMix64 rng(seed + static_cast<std::uint64_t>(n));
        int weak_ok = 0;
        for (int i = 0; i < samples; ++i) {
            const Scalar r = rng.uniform(Scalar("0.5"), Scalar(2));
            const Scalar area_factor = 1 + rng.uniform() * 2;
            const Scalar tau = rng.uniform(Scalar("0.1"), Scalar(10));
            const DomainMeasures m(dim, ball_volume(dim, r),
                                   sphere_area(dim) * pow_int(r, n - 1) * area_factor, tau, true);
            if (first_eigenvalue_bound_weak(m) >= first_eigenvalue_bound(m)) ++weak_ok;
        }
        const bool pass = weak_ok == samples;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " n=" << n
                  << ": ball equality and weak >= sharp on " << weak_ok << "/" << samples
                  << " samples\n";
    }
    return ok ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------------- scan

int run_scan(const std::string& problem, int dim, int k, const std::string& grid,
             const std::string& alpha_str, const OutputOptions& out) {
    const ProblemKind kind = parse_problem(problem);
    const Dimension n(dim);
    const auto eps_grid = parse_grid(grid);
    const Scalar alpha(alpha_str);
    const Normalization norm =
        (alpha == 1) ? Normalization::boundary_area : Normalization::mixed;

    const Measures ball{ball_volume(n, Scalar(1)), sphere_area(n)};
    const Scalar ball_ref =
        normalized_eigenvalue(kind, ball_eigenvalue(kind, n, k, Scalar(1)), ball, n, norm, alpha)
            .value;

    std::ofstream file;
    std::ostream& os = open_sink(out, file);
    os << "# normalized eigenvalue scan: problem=" << problem << " n=" << dim << " k=" << k
       << " alpha=" << alpha_str << "\n";
    os << "# columns: eps normalized_value ball_reference\n";
    for (const Scalar& eps : eps_grid) {
        const AnnulusDomain dom(n, eps);
        const PencilRoots roots = solve_pencil(extract_pencil(kind, dom, k));
        if (roots.roots.empty()) continue;
        const Scalar value =
            normalized_eigenvalue(kind, roots.roots.front().value, annulus_measures(dom), n, norm,
                                  alpha)
                .value;
        os << eps.str() << " " << value.str() << " " << ball_ref.str() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------- bound

int run_bound(int dim, const std::string& tau, const std::string& volume, const std::string& area,
              bool assert_hypotheses) {
    const DomainMeasures m(Dimension(dim), Scalar(volume), Scalar(area), Scalar(tau),
                           assert_hypotheses);
    std::cout << "sharp bound: " << first_eigenvalue_bound(m).str() << "\n";
    std::cout << "weak bound:  " << first_eigenvalue_bound_weak(m).str() << "\n";
    std::cout << "hypotheses (star-shaped, mean convex): "
              << (assert_hypotheses ? "asserted by caller" : "unverified") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision fourth-order Steklov spectra on annuli, balls, and cylinders"};
    app.require_subcommand(1);

    unsigned digits = digits_from_env();
    app.add_option("--digits", digits, "working precision in decimal digits (>= 30)");

    // ------------------------------------------------------------ spectrum
    auto* spectrum = app.add_subcommand("spectrum", "compute a spectrum");
    spectrum->require_subcommand(1);
    std::string problem = "type1", format = "table", output_path;
    int dim = 3, kmax = 8, count = 10;
    bool positive_only = false;
    std::string eps = "0.5", radius = "1", half_length = "1", cross_section = "sphere:2";

    auto add_output_opts = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--output", output_path, "write to file instead of stdout");
    };

    auto* sp_annulus = spectrum->add_subcommand("annulus");
    sp_annulus->add_option("--problem", problem)->required();
    sp_annulus->add_option("--dim", dim)->required();
    sp_annulus->add_option("--eps", eps)->required();
    sp_annulus->add_option("--kmax", kmax);
    sp_annulus->add_option("--count", count);
    sp_annulus->add_flag("--positive-only", positive_only);
    add_output_opts(sp_annulus);

    auto* sp_ball = spectrum->add_subcommand("ball");
    sp_ball->add_option("--problem", problem)->required();
    sp_ball->add_option("--dim", dim)->required();
    sp_ball->add_option("--radius", radius);
    sp_ball->add_option("--kmax", kmax);
    sp_ball->add_option("--count", count);
    add_output_opts(sp_ball);

    auto* sp_cyl = spectrum->add_subcommand("cylinder");
    sp_cyl->add_option("--problem", problem)->required();
    sp_cyl->add_option("--half-length", half_length)->required();
    sp_cyl->add_option("--cross-section", cross_section);
    sp_cyl->add_option("--count", count);
    add_output_opts(sp_cyl);

    // -------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->require_subcommand(1);
    int vk = 1, vbranch = 1, vkmax = 4, vsteps = 2048, vdim_max = 6, vsamples = 100;
    std::uint64_t vseed = 1;
    std::string eps_pair, vdims = "3,4", vks = "0,1", veps_list = "0.5", vtol = "1e-20";
    std::string vL = "2,4,8,16", vc = "1", vproblem = "both", veps = "0.05";

    auto* v_asym = verify->add_subcommand("asymptotics");
    v_asym->add_option("--problem", problem)->required();
    v_asym->add_option("--dim", dim)->required();
    v_asym->add_option("--k", vk)->required();
    v_asym->add_option("--branch", vbranch);
    v_asym->add_option("--eps-pair", eps_pair);

    auto* v_oracle = verify->add_subcommand("oracle");
    v_oracle->add_option("--problem", vproblem);
    v_oracle->add_option("--dims", vdims);
    v_oracle->add_option("--ks", vks);
    v_oracle->add_option("--eps-list", veps_list);
    v_oracle->add_option("--steps", vsteps);
    v_oracle->add_option("--tol", vtol);

    auto* v_limits = verify->add_subcommand("limits");
    v_limits->add_option("--problem", vproblem);
    v_limits->add_option("--L", vL)->required();
    v_limits->add_option("--c", vc);

    auto* v_ineq = verify->add_subcommand("inequalities");
    v_ineq->add_option("--dim", dim)->required();
    v_ineq->add_option("--eps", veps);
    v_ineq->add_option("--kmax", vkmax);

    auto* v_bounds = verify->add_subcommand("bounds");
    v_bounds->add_option("--dim-max", vdim_max);
    v_bounds->add_option("--samples", vsamples);
    v_bounds->add_option("--seed", vseed);

    // ---------------------------------------------------------------- scan
    auto* scan = app.add_subcommand("scan", "write gnuplot-ready scan data");
    scan->require_subcommand(1);
    std::string eps_grid, alpha = "1";
    auto* scan_norm = scan->add_subcommand("normalized");
    scan_norm->add_option("--problem", problem)->required();
    scan_norm->add_option("--dim", dim)->required();
    scan_norm->add_option("--k", vk)->required();
    scan_norm->add_option("--eps-grid", eps_grid)->required();
    scan_norm->add_option("--alpha", alpha);
    scan_norm->add_option("--output", output_path);

    // --------------------------------------------------------------- bound
    auto* bound = app.add_subcommand("bound", "evaluate eigenvalue bounds");
    bound->require_subcommand(1);
    std::string tau, volume, area;
    bool assert_hypotheses = false;
    auto* bound3 = bound->add_subcommand("type3");
    bound3->add_option("--dim", dim)->required();
    bound3->add_option("--tau", tau)->required();
    bound3->add_option("--volume", volume)->required();
    bound3->add_option("--area", area)->required();
    bound3->add_flag("--assert-hypotheses", assert_hypotheses);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        set_working_digits(digits);
        const OutputOptions out{format, output_path};
        if (sp_annulus->parsed())
            return run_spectrum_annulus(problem, dim, eps, kmax, count, positive_only, out);
        if (sp_ball->parsed()) return run_spectrum_ball(problem, dim, radius, kmax, count, out);
        if (sp_cyl->parsed())
            return run_spectrum_cylinder(problem, half_length, cross_section, count, out);
        if (v_asym->parsed()) return run_verify_asymptotics(problem, dim, vk, vbranch, eps_pair);
        if (v_oracle->parsed())
            return run_verify_oracle(vproblem, vdims, vks, veps_list, vsteps, vtol);
        if (v_limits->parsed()) return run_verify_limits(vproblem, vL, vc);
        if (v_ineq->parsed()) return run_verify_inequalities(dim, veps, vkmax);
        if (v_bounds->parsed()) return run_verify_bounds(vdim_max, vsamples, vseed);
        if (scan_norm->parsed()) return run_scan(problem, dim, vk, eps_grid, alpha, out);
        if (bound3->parsed()) return run_bound(dim, tau, volume, area, assert_hypotheses);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
