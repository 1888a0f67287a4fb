#include "cpart/bounds.hpp"
#include "cpart/constructions.hpp"
#include "cpart/render.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace cpart;

namespace {

enum Exit { ok = 0, invalid = 1, usage = 2, solver = 3 };

void print_report(const ValidationReport& r)
{
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (auto i : v)
            s += (s.empty() ? "" : ",") + std::to_string(i);
        return s.empty() ? std::string("-") : s;
    };
    std::printf("valid              %s\n", r.valid ? "yes" : "no");
    std::printf("coverage_defect    %.3e\n", r.coverage_defect);
    std::printf("max_overlap        %.3e\n", r.max_overlap);
    std::printf("non-convex pieces  %s\n", list(r.convexity_violations).c_str());
    std::printf("outside host       %s\n", list(r.containment_violations).c_str());
    std::printf("collinear vertices %s\n", list(r.collinear_pieces).c_str());
}

int emit(const Partition& p, const std::string& out)
{
    if (out.empty())
        std::cout << to_json(p, 1) << '\n';
    else
        save(p, out);
    return ok;
}

SquareDesign design_of(const std::string& s)
{
    if (s == "twelve")
        return SquareDesign::twelve;
    return SquareDesign::twentyone;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"convex partitions with small aspect ratio"};
    app.require_subcommand(1);

    int max_k = 8;
    auto* table = app.add_subcommand("table", "regular polygon one-piece ratios");
    table->add_option("--max-k", max_k)->check(CLI::Range(3, 100000));

    std::string file;
    bool as_json = false;
    auto* gamma = app.add_subcommand("gamma", "per-piece aspect ratios of a partition file");
    gamma->add_option("FILE", file)->required();
    gamma->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "validate a partition file");
    verify->add_option("FILE", file)->required();

    std::string shape, method = "three-point";
    auto* bounds = app.add_subcommand("bounds", "lower bound solvers");
    bounds->add_option("SHAPE", shape)->required()->check(CLI::IsMember({"square"}));
    bounds->add_option("--method", method)->check(CLI::IsMember({"simple", "three-point", "tangent"}));

    std::string kind, design = "twelve", out;
    double a = 1, b = 1, eps = 0.1, g = 1.51, theta = -1;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "run a construction");
    gen->add_option("KIND", kind)->required()->check(CLI::IsMember({"rect", "tri", "square", "chain"}));
    gen->add_option("--a", a, "rect short side");
    gen->add_option("--b", b, "rect long side");
    gen->add_option("--eps", eps, "rect cell ratio slack");
    gen->add_option("--gamma", g, "target ratio (tri, chain)");
    gen->add_option("--design", design)->check(CLI::IsMember({"twelve", "twentyone"}));
    gen->add_option("--theta", theta, "square: override theta of the tuned design; chain: first angle");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    std::size_t budget = 20000;
    auto* opt = app.add_subcommand("optimize", "tune a square design");
    opt->add_option("--design", design)->required()->check(CLI::IsMember({"twelve", "twentyone"}));
    opt->add_option("--seed", seed);
    opt->add_option("--budget", budget);
    opt->add_option("--out", out);

    bool disks = false, labels = false;
    auto* render = app.add_subcommand("render", "write an svg figure");
    render->add_option("FILE", file)->required();
    render->add_option("--out", out)->required();
    render->add_flag("--disks", disks, "indisks and circumcircles");
    render->add_flag("--labels", labels, "ratio per piece");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*table) {
            std::printf("%4s  %9s  %9s\n", "k", "gamma_1", "gamma_th");
            for (int k = 3; k <= max_k; ++k)
                std::printf("%4d  %9.5f  %9.5f\n", k, gamma_one_regular(k), gamma_theta((k - 2) * 180.0 / k));
            return ok;
        }
        if (*gamma) {
            auto p = load(file);
            auto r = validate(p);
            if (!r.valid) {
                print_report(r);
                return invalid;
            }
            auto gr = partition_gamma(p);
            if (as_json) {
                auto q = p;
                q.metadata["gamma"] = std::to_string(gr.gamma);
                q.metadata["witness"] = std::to_string(gr.witness);
                std::cout << to_json(q, 1) << '\n';
                return ok;
            }
            std::printf("%5s  %11s  %11s  %9s\n", "piece", "R", "r", "gamma");
            for (std::size_t i = 0; i < gr.per_piece.size(); ++i) {
                auto& x = gr.per_piece[i];
                std::printf("%5zu  %11.5f  %11.5f  %9.5f\n", i, x.circumcircle.radius, x.indisk.radius, x.gamma);
            }
            std::printf("gamma %.5f at piece %zu\n", gr.gamma, gr.witness);
            return ok;
        }
        if (*verify) {
            auto r = validate(load(file));
            print_report(r);
            return r.valid ? ok : invalid;
        }
        if (*bounds) {
            BalanceSolution s;
            if (method == "simple")
                s = solve_balance(gamma_corner_A, gamma_bottleneck_simple, 60, 90);
            else if (method == "three-point")
                s = solve_balance(gamma_corner_A, gamma_bottleneck_three_point, 60, 90);
            else
                s = tangent_chain_bound();
            std::printf("theta %.5f  gamma %.5f  residual %.3e\n", s.theta, s.gamma, s.residual);
            return ok;
        }
        if (*gen) {
            if (kind == "rect") {
                if (a > b)
                    std::swap(a, b);
                return emit(partition_rectangle(a, b, eps), out);
            }
            if (kind == "tri")
                return emit(equilateral_partition(g), out);
            if (kind == "square") {
                auto prm = square_design_tuned(design_of(design));
                if (theta > 0)
                    prm.theta = theta;
                return emit(square_design(prm), out);
            }
            auto ch = boundary_chain(g, theta > 0 ? theta : 90.0);
            std::printf("angles");
            for (double x : ch.angles)
                std::printf(" %.2f", x);
            std::printf("\n");
            for (std::size_t i = 0; i < ch.pieces.size(); ++i)
                std::printf("piece %zu  %zu vertices  gamma %.5f\n", i, ch.pieces[i].size(), ch.piece_gamma[i]);
            if (!out.empty()) {
                // a fragment: the pieces do not tile the box
                double x1 = 0, y1 = 0;
                for (auto& p : ch.pieces)
                    for (auto& v : p) {
                        x1 = std::max(x1, v.x);
                        y1 = std::max(y1, v.y);
                    }
                Partition p{ConvexPolygon{{0, 0}, {x1, 0}, {x1, y1}, {0, y1}}, ch.pieces, {{"design", "chain"}}};
                save(p, out);
            }
            return ok;
        }
        if (*opt) {
            auto r = optimize_square_design(design_of(design), seed, budget);
            std::printf("gamma %.5f  evaluations %zu  theta %.5f\n", r.result.best_gamma, r.result.evaluations,
                        r.params.theta);
            auto names = square_design_free_names(r.params.design);
            for (std::size_t i = 0; i < names.size(); ++i)
                std::printf("  %-3s %.8f\n", names[i].c_str(), r.params.free[i]);
            auto p = square_design(r.params);
            p.metadata["seed"] = std::to_string(seed);
            if (!out.empty())
                save(p, out);
            return ok;
        }
        if (*render) {
            RenderOptions o;
            o.show_indisks = o.show_circumcircles = disks;
            o.label_gamma = labels;
            std::ofstream f(out);
            if (!f)
                throw std::runtime_error("cannot write " + out);
            f << render_svg(load(file), o);
            return ok;
        }
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return usage;
    } catch (const InvalidPartition& e) {
        print_report(e.report);
        return invalid;
    } catch (const SolverError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return solver;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return solver;
    }
    return usage;
}
