// Command-line surface: validate / solve / verify / gen / render.
//
// Exit codes: 0 ok, 1 invalid input, 2 verification failure, 3 solver
// robustness failure, 64 parse error, 65 bad flags.

#include "isofold/corpus.hpp"
#include "isofold/gen.hpp"
#include "isofold/io.hpp"
#include "isofold/render.hpp"
#include "isofold/solver.hpp"
#include "isofold/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitRobustness = 3;
constexpr int kExitParse = 64;
constexpr int kExitFlags = 65;

int cmd_validate(const std::string& path, double eps_rel)
{
    isofold::BoundaryMapping bm;
    try {
        bm = isofold::load_instance(path);
    } catch (const isofold::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    isofold::Tolerance tol = bm.tolerance();
    if (eps_rel > 0.0) tol.eps_rel = eps_rel;
    if (const auto viol = isofold::validate(bm, tol)) {
        std::cout << isofold::violation_to_json(*viol);
        return kExitInvalid;
    }
    std::cout << "{\"valid\":true}\n";
    return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& out, const std::string& policy,
              const std::string& branch, std::uint64_t seed, bool audit)
{
    isofold::BoundaryMapping bm;
    try {
        bm = isofold::load_instance(path);
    } catch (const isofold::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    isofold::SolveOptions opts;
    if (policy != "auto") opts.policy = isofold::policy_from_string(policy);
    opts.branch = branch == "-" ? -1 : +1;
    opts.seed = seed;
    opts.audit = audit;
    try {
        const auto [mesh, trace] = isofold::solve(bm, opts);
        isofold::save_solution(mesh, trace, out);
        std::cout << "{\"faces\":" << mesh.faces.size() << ",\"routine1\":" << trace.routine1
                  << ",\"routine2\":" << trace.routine2 << "}\n";
        return kExitOk;
    } catch (const isofold::InvalidBoundary& e) {
        std::cout << isofold::violation_to_json(e.violation);
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitRobustness;
    }
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path, int samples,
               double tol, std::uint64_t seed)
{
    isofold::BoundaryMapping bm;
    isofold::SolutionFile sol;
    try {
        bm = isofold::load_instance(instance_path);
        sol = isofold::load_solution(solution_path);
    } catch (const isofold::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    isofold::VerifyOptions opts;
    opts.samples = samples;
    opts.tol_len = tol;
    opts.seed = seed;
    const auto report = isofold::verify(bm, sol.mesh, opts);
    std::cout << isofold::verify_report_to_json(report);
    return report.pass ? kExitOk : kExitVerifyFail;
}

int cmd_gen(const std::string& shape, int folds, int d, std::uint64_t seed,
            const std::string& out)
{
    isofold::BoundaryMapping bm;
    if (shape.rfind("random", 0) == 0) {
        int n = 0;
        if (const auto colon = shape.find(':'); colon != std::string::npos)
            n = std::stoi(shape.substr(colon + 1));
        bm = isofold::random_instance(folds, d, seed, n);
    } else {
        isofold::Polygon base;
        if (shape == "square") {
            base = isofold::unit_square();
        } else if (shape == "lshape") {
            base = isofold::lshape_hexagon();
        } else if (shape.rfind("ngon:", 0) == 0) {
            base = isofold::regular_ngon(std::stoi(shape.substr(5)));
        } else {
            std::cerr << "unknown shape: " << shape << "\n";
            return kExitFlags;
        }
        isofold::Rng rng(seed);
        std::vector<isofold::FoldStep> steps;
        for (int k = 0; k < folds; ++k) {
            isofold::FoldStep st;
            const double r = rng.uniform(0.0, 0.4 * isofold::bbox_diameter(base));
            const double a = rng.uniform(0.0, 6.283185307179586);
            const double da = rng.uniform(0.0, 6.283185307179586);
            st.point = isofold::Point2(r * std::cos(a), r * std::sin(a));
            st.dir = isofold::Point2(std::cos(da), std::sin(da));
            st.side = rng.coin() ? +1 : -1;
            if (d >= 3) {
                st.kind = isofold::FoldStep::Kind::Dihedral;
                st.alpha = rng.uniform(0.3 * 3.141592653589793, 0.7 * 3.141592653589793);
            }
            steps.push_back(st);
        }
        auto res = isofold::generate(base, steps, d);
        for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
        bm = std::move(res.mapping);
    }
    isofold::save_instance(bm, out);
    std::cout << "{\"vertices\":" << bm.size() << ",\"dimension\":" << bm.dimension() << "}\n";
    return kExitOk;
}

int cmd_render(const std::string& solution_path, const std::string& out,
               const std::string& stroke)
{
    isofold::SolutionFile sol;
    try {
        sol = isofold::load_solution(solution_path);
    } catch (const isofold::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    std::string text;
    if (out.size() >= 4 && out.substr(out.size() - 4) == ".obj") {
        try {
            text = isofold::render_obj(sol.mesh);
        } catch (const isofold::RenderError& e) {
            std::cerr << e.what() << "\n";
            return kExitFlags;
        }
    } else {
        text = isofold::render_svg(sol.mesh, stroke == "plain" ? isofold::SvgStroke::Plain
                                                               : isofold::SvgStroke::Parity);
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return kExitFlags;
    }
    f << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"boundary-constrained isometric folding of polygons"};
    app.require_subcommand(1);

    std::string instance, solution, out, shape = "random";
    std::string policy = "auto", branch = "+", stroke = "parity";
    double eps_rel = 0.0, tol = 0.0;
    int samples = 1000, folds = 1, dim = 2;
    std::uint64_t seed = 0;
    bool audit = false;

    auto* validate = app.add_subcommand("validate", "check an instance for validity");
    validate->add_option("instance", instance)->required();
    validate->add_option("--eps", eps_rel, "relative tolerance override");

    auto* solve = app.add_subcommand("solve", "compute an isometric interior mapping");
    solve->add_option("instance", instance)->required();
    solve->add_option("-o,--output", out)->required();
    solve->add_option("--policy", policy)
        ->check(CLI::IsMember({"auto", "bisector", "min-angle", "max-angle", "random"}));
    solve->add_option("--branch", branch, "off-plane side for bend images (+ or -)")
        ->check(CLI::IsMember({"+", "-"}));
    solve->add_option("--seed", seed);
    solve->add_flag("--audit", audit, "validate every partition piece (slow)");

    auto* verify = app.add_subcommand("verify", "check a solution against its instance");
    verify->add_option("instance", instance)->required();
    verify->add_option("solution", solution)->required();
    verify->add_option("--samples", samples);
    verify->add_option("--tol", tol, "length tolerance (default 1e-7 * diameter)");
    verify->add_option("--seed", seed);

    auto* gen = app.add_subcommand("gen", "generate a valid instance by forward folding");
    gen->add_option("--shape", shape, "square | lshape | ngon:K | random | random:K");
    gen->add_option("--folds", folds);
    gen->add_option("--d", dim)->check(CLI::Range(2, 16));
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out)->required();

    auto* render = app.add_subcommand("render", "write an SVG crease pattern or OBJ mesh");
    render->add_option("solution", solution)->required();
    render->add_option("-o,--output", out)->required();
    render->add_option("--stroke", stroke)->check(CLI::IsMember({"parity", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitFlags;
    }

    try {
        if (validate->parsed()) return cmd_validate(instance, eps_rel);
        if (solve->parsed()) return cmd_solve(instance, out, policy, branch, seed, audit);
        if (verify->parsed()) return cmd_verify(instance, solution, samples, tol, seed);
        if (gen->parsed()) return cmd_gen(shape, folds, dim, seed, out);
        if (render->parsed()) return cmd_render(solution, out, stroke);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRobustness;
    }
    return kExitFlags;
}
