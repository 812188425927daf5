// Command-line surface: construct the MUB families and run the verification
// battery, emitting machine-readable reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "mubkit/dim8_search.hpp"
#include "mubkit/verify.hpp"

namespace {

using namespace mubkit;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open output path: " + out_path);
    f << text;
}

std::string complex_pair(const Complex& c) {
    return "[" + fmt_g12(c.real()) + ", " + fmt_g12(c.imag()) + "]";
}

std::string bases_to_json(const std::string& command, i64 dim, const CompleteMub& m) {
    std::string out = "{\n";
    out += "  \"command\": \"" + command + "\",\n";
    out += "  \"dimension\": " + fmt_int(dim) + ",\n";
    out += "  \"label\": \"" + m.label + "\",\n";
    out += "  \"bases\": [\n";
    for (std::size_t b = 0; b < m.bases.size(); ++b) {
        out += "    {\"label\": \"" + m.bases[b].label + "\", \"vectors\": [\n";
        for (std::size_t v = 0; v < m.bases[b].vectors.size(); ++v) {
            out += "      [";
            const auto& vec = m.bases[b].vectors[v];
            for (std::size_t k = 0; k < vec.size(); ++k) {
                if (k) out += ", ";
                out += complex_pair(vec[k]);
            }
            out += v + 1 < m.bases[b].vectors.size() ? "],\n" : "]\n";
        }
        out += b + 1 < m.bases.size() ? "    ]},\n" : "    ]}\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string bases_to_csv(const CompleteMub& m) {
    std::string out = "basis,vector,component,re,im\n";
    for (std::size_t b = 0; b < m.bases.size(); ++b) {
        for (std::size_t v = 0; v < m.bases[b].vectors.size(); ++v) {
            for (std::size_t k = 0; k < m.bases[b].vectors[v].size(); ++k) {
                const auto& c = m.bases[b].vectors[v][k];
                out += fmt_int(static_cast<i64>(b)) + "," + fmt_int(static_cast<i64>(v)) + "," +
                       fmt_int(static_cast<i64>(k)) + "," + fmt_g12(c.real()) + "," +
                       fmt_g12(c.imag()) + "\n";
            }
        }
    }
    return out;
}

std::string search_to_json(const Dim8SearchResult& r) {
    std::string out = "{\n";
    out += "  \"command\": \"search dim8-fiducial\",\n";
    out += "  \"roots\": " + fmt_int(r.roots) + ",\n";
    out += "  \"budget\": " + fmt_int(r.budget) + ",\n";
    out += "  \"start_index\": " + fmt_int(r.start_index) + ",\n";
    out += "  \"next_index\": " + fmt_int(r.next_index) + ",\n";
    out += "  \"space_size\": " + fmt_int(r.space_size) + ",\n";
    out += "  \"tested\": " + fmt_int(r.tested) + ",\n";
    out += "  \"found\": " + fmt_int(r.found) + ",\n";
    out += "  \"space_exhausted\": " + std::string(r.space_exhausted ? "true" : "false") + ",\n";
    out += "  \"runtime_seconds\": " + fmt_g12(r.seconds) + "\n";
    out += "}\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-group constructions and verifiers for mutually unbiased bases"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol_eps = 1e-9;
    std::string out_path;
    std::string format = "json";
    i64 max_dim_override = 0;
    app.add_option("--tol", tol_eps, "verification tolerance (default 1e-9)");
    app.add_option("--out", out_path, "write the report to this path instead of stdout");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--max-dim", max_dim_override, "override the enumeration dimension cap");

    i64 dim = 3, x_param = 1, grid = 100, samples = 10000;
    i64 budget = 20000, roots = 16, start_index = 0;
    std::optional<i64> x_given;
    std::string checkpoint_path;
    std::string dims_csv = "2,3,4,5,7";

    // Let global flags (--tol, --out, --format, --max-dim) appear after the
    // subcommand tokens as well.
    auto passthrough = [](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };

    auto* build = passthrough(app.add_subcommand("build", "construct a complete MUB and emit its bases"));
    build->require_subcommand(1);
    auto* build_standard = passthrough(build->add_subcommand("standard", "the standard complete MUB"));
    build_standard->add_option("--dim", dim, "dimension")->required();
    auto* build_alltop = passthrough(build->add_subcommand("alltop", "an orbit complete MUB"));
    build_alltop->add_option("--dim", dim, "dimension")->required();
    build_alltop->add_option("--x", x_param, "fiducial parameter (1..N-1)");

    auto* verify = passthrough(app.add_subcommand("verify", "run a verification suite"));
    verify->require_subcommand(1);
    auto* v_mub = passthrough(verify->add_subcommand("mub", "unbiasedness of all complete MUB families"));
    v_mub->add_option("--dim", dim)->required();
    auto* v_counts = passthrough(verify->add_subcommand("counts", "group and subgroup counting"));
    v_counts->add_option("--dim", dim)->required();
    auto* v_corr = passthrough(verify->add_subcommand("correspondence", "subgroup/basis bijection"));
    v_corr->add_option("--dim", dim)->required();
    auto* v_dist = passthrough(verify->add_subcommand("distances", "distance spectrum and its constants"));
    v_dist->add_option("--dim", dim)->required();
    v_dist->add_option("--samples", samples, "Monte-Carlo sample count");
    auto* v_dep = passthrough(verify->add_subcommand("dependencies", "linear dependency structure"));
    v_dep->add_option("--dim", dim)->required();
    auto* v_dep_x = v_dep->add_option("--x", x_param, "restrict to one fiducial parameter");
    auto* v_orb = passthrough(verify->add_subcommand("orbits", "Clifford orbit partition"));
    v_orb->add_option("--dim", dim)->required();
    auto* v_small = passthrough(verify->add_subcommand("smalldim", "dimension 2/4 orbit families"));
    v_small->add_option("--dim", dim)->required();
    auto* v_sic = passthrough(verify->add_subcommand("sic", "dimension-3 SIC family and relating unitary"));
    v_sic->add_option("--grid", grid, "phi grid points");

    auto* search = passthrough(app.add_subcommand("search", "long-running searches"));
    search->require_subcommand(1);
    auto* s_dim8 = passthrough(search->add_subcommand("dim8-fiducial",
                                          "budgeted scan for dimension-8 root-of-unity fiducials"));
    s_dim8->add_option("--roots", roots, "roots of unity for the components (default 16)");
    s_dim8->add_option("--budget", budget, "candidates to test in this run");
    s_dim8->add_option("--start", start_index, "resume from this candidate index");
    s_dim8->add_option("--checkpoint", checkpoint_path, "write progress checkpoints to this path");

    auto* report = passthrough(app.add_subcommand("report", "aggregate reports"));
    auto* r_all = passthrough(report->add_subcommand("all", "full battery over a dimension list"));
    r_all->add_option("--dims", dims_csv, "comma-separated dimensions (default 2,3,4,5,7)");

    CLI11_PARSE(app, argc, argv);

    try {
        VerifyOptions opt;
        opt.tol = Tolerance(tol_eps);
        opt.mc_samples = samples;
        if (max_dim_override > 0) {
            opt.enumeration_cap = max_dim_override;
            opt.construction_cap = std::max(opt.construction_cap, max_dim_override);
        }

        const auto t0 = std::chrono::steady_clock::now();
        auto finish = [&](Report rep) {
            rep.runtime_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            write_output(format == "csv" ? report_to_csv(rep) : report_to_json(rep), out_path);
            return rep.all_pass() ? 0 : 1;
        };

        if (build_standard->parsed()) {
            const CompleteMub m = (dim == 4) ? standard_mub_dim4() : standard_mub(dim);
            write_output(format == "csv" ? bases_to_csv(m) : bases_to_json("build standard", dim, m),
                         out_path);
            return 0;
        }
        if (build_alltop->parsed()) {
            const CompleteMub m = orbit_complete_mub(x_param, dim);
            write_output(format == "csv" ? bases_to_csv(m) : bases_to_json("build alltop", dim, m),
                         out_path);
            return 0;
        }
        if (v_mub->parsed()) return finish(verify_mub(dim, opt));
        if (v_counts->parsed()) return finish(verify_counts(dim, opt));
        if (v_corr->parsed()) return finish(verify_correspondence(dim, opt));
        if (v_dist->parsed()) return finish(verify_distances(dim, opt));
        if (v_dep->parsed()) {
            if (v_dep_x->count() > 0) x_given = x_param;
            return finish(verify_dependencies(dim, x_given, opt));
        }
        if (v_orb->parsed()) return finish(verify_orbits(dim, opt));
        if (v_small->parsed()) return finish(verify_smalldim(dim, opt));
        if (v_sic->parsed()) return finish(verify_sic(grid, opt));

        if (s_dim8->parsed()) {
            auto progress = [&](const Dim8SearchProgress& p) {
                std::cerr << "tested " << p.tested << "/" << p.budget << " (next index "
                          << p.next_index << ", found " << p.found << ", " << fmt_g12(p.seconds)
                          << "s)\n";
                if (!checkpoint_path.empty()) {
                    std::ofstream ck(checkpoint_path, std::ios::binary);
                    ck << "{\"tested\": " << p.tested << ", \"budget\": " << p.budget
                       << ", \"next_index\": " << p.next_index << ", \"found\": " << p.found
                       << ", \"seconds\": " << fmt_g12(p.seconds) << "}\n";
                }
            };
            const auto res = search_dim8_fiducials(roots, budget, start_index, progress);
            if (!checkpoint_path.empty()) {
                std::ofstream ck(checkpoint_path, std::ios::binary);
                ck << search_to_json(res);
            }
            write_output(search_to_json(res), out_path);
            return 0;
        }

        if (r_all->parsed()) {
            std::vector<i64> dims;
            std::string token;
            for (char c : dims_csv + ",") {
                if (c == ',') {
                    if (!token.empty()) dims.push_back(std::stoll(token));
                    token.clear();
                } else {
                    token += c;
                }
            }
            return finish(report_all(dims, opt));
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
