#include "srgdist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "srgdist/edgelist.hpp"
#include "srgdist/verification.hpp"

namespace srg {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report_text(const VerificationReport& r, std::ostream& out) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.entry;
    if (r.params) out << "  srg=" << r.params->to_string();
    out << "  case=" << r.cover_case;
    if (r.diameter_expected >= 0)
        out << "  diameter=" << r.diameter_measured << "/" << r.diameter_expected;
    if (r.spectrum) out << "\n       spectrum " << r.spectrum->to_string();
    if (r.spectrum)
        out << "\n       matrix=" << yes_no(r.matrix_equal)
            << " annihilator=" << yes_no(r.annihilator)
            << " multiplicities=" << yes_no(r.multiplicities_ok) << " eigvec="
            << (r.eigvec_ok == CheckState::Skipped
                    ? "skipped"
                    : yes_no(r.eigvec_ok == CheckState::Passed));
    for (const auto& w : r.warnings) out << "\n       warning: " << w;
    out << "\n";
}

int cmd_catalog(std::ostream& out) {
    for (const auto& e : catalog()) {
        out << e.name;
        if (e.expected_srg) out << "  srg=" << e.expected_srg->to_string();
        if (!e.notes.empty()) out << "  -- " << e.notes;
        out << "\n";
    }
    return ExitOk;
}

int cmd_show(const std::string& name, std::ostream& out) {
    Graph g = build_by_name(name);
    out << "name: " << name << "\n";
    out << "order: " << g.order() << "\n";
    out << "edges: " << g.edge_count() << "\n";
    auto deg = regular_degree(g);
    out << "regular: " << (deg ? std::to_string(*deg) : std::string("no")) << "\n";
    auto p = is_strongly_regular(g);
    out << "strongly-regular: " << (p ? p->to_string() : std::string("no")) << "\n";
    out << "triangle-free: " << yes_no(is_triangle_free(g)) << "\n";
    out << "irreducible: " << yes_no(is_irreducible(g)) << "\n";
    out << "bipartite: " << yes_no(is_bipartite(g)) << "\n";
    out << "connected: " << yes_no(is_connected(g)) << "\n";
    if (is_connected(g)) out << "diameter: " << diameter(g) << "\n";
    if (p) out << "cover-case: " << to_string(classify_cover_case(g, *p).tag) << "\n";
    return ExitOk;
}

int cmd_cover(const std::string& name, std::ostream& out) {
    export_graph(bipartite_double_cover(build_by_name(name)), out, GraphFormat::EdgeList);
    return ExitOk;
}

int cmd_dspec(const std::string& name, std::ostream& out, std::ostream& err) {
    Graph g = build_by_name(name);
    auto p = is_strongly_regular(g);
    if (!p) {
        err << "dspec: " << name << " is not strongly regular\n";
        return ExitUsage;
    }
    out << "entry: " << name << "\n";
    out << "srg: " << p->to_string() << "\n";
    CoverSpectrum cs;
    try {
        cs = distance_spectrum_cover(*p);
    } catch (const DisconnectedCoverError&) {
        out << "cover disconnected (reducible triangle-free case): no distance spectrum\n";
        return ExitDisconnectedCover;
    }
    CoverCase cse = classify_cover_case(g, *p);
    out << "case: " << to_string(cse.tag) << "\n";
    out << "distance spectrum of cover: " << cs.spectrum.to_string() << "\n";

    IntMatrix bfs = IntMatrix::from_distance(distance_matrix(bipartite_double_cover(g)));
    bool matrix_ok =
        structured_cover_distance_matrix(IntMatrix::adjacency(g), cse.tag) == bfs;
    bool ann = annihilator_check(bfs, cs.spectrum);
    auto solved = multiplicity_solve(bfs, cs.spectrum.distinct_values());
    bool mult_ok = true;
    for (size_t i = 0; i < solved.size(); ++i)
        mult_ok &= solved[i] == cs.spectrum.pairs()[i].mult;
    out << "oracle: matrix " << (matrix_ok ? "PASS" : "FAIL") << ", annihilator "
        << (ann ? "PASS" : "FAIL") << ", multiplicities " << (mult_ok ? "PASS" : "FAIL")
        << "\n";
    for (const auto& w : cs.warnings) out << "warning: " << w << "\n";
    return matrix_ok && ann && mult_ok ? ExitOk : ExitVerificationFailed;
}

int cmd_params(int n, int d, int a, int c, std::ostream& out, std::ostream& err) {
    SrgParams p{n, d, a, c};
    Spectrum base;
    try {
        p.validate();
        base = srg_spectrum(p);
    } catch (const Error& e) {
        err << "params: " << e.what() << "\n";
        return ExitUsage;
    }
    out << "srg: " << p.to_string() << "\n";
    out << "adjacency spectrum: " << base.to_string() << "\n";
    try {
        CoverSpectrum cs = distance_spectrum_cover(p);
        out << "distance spectrum of cover: " << cs.spectrum.to_string() << "\n";
        for (const auto& w : cs.warnings) out << "warning: " << w << "\n";
    } catch (const DisconnectedCoverError&) {
        out << "cover disconnected (reducible triangle-free case): no distance spectrum\n";
        return ExitDisconnectedCover;
    }
    out << "unverified: no construction\n";
    return ExitOk;
}

int cmd_verify(const std::string& name, bool all, std::uint64_t seed, int trials, bool json,
               std::ostream& out) {
    if (all) {
        VerificationSummary summary = run_all();
        summary.reports.push_back(random_diam2_check(seed, trials));
        if (!summary.reports.back().pass) summary.pass = false;
        if (json) {
            out << summary.to_json().dump(2) << "\n";
        } else {
            for (const auto& r : summary.reports) print_report_text(r, out);
            out << (summary.pass ? "all checks passed" : "some checks FAILED") << "\n";
        }
        return summary.pass ? ExitOk : ExitVerificationFailed;
    }
    VerificationReport rep = verify_entry(name);
    if (json)
        out << rep.to_json().dump(2) << "\n";
    else
        print_report_text(rep, out);
    return rep.pass ? ExitOk : ExitVerificationFailed;
}

int cmd_export(const std::string& name, const std::string& format, const std::string& path,
               std::ostream& out) {
    GraphFormat f = format == "json" ? GraphFormat::Json : GraphFormat::EdgeList;
    Graph g = build_by_name(name);
    if (path.empty())
        export_graph(g, out, f);
    else
        export_graph(g, path, f);
    return ExitOk;
}

} // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact distance spectra of bipartite double covers of strongly regular graphs"};
    app.name("srgdist");
    app.require_subcommand(1);

    auto* sc_catalog = app.add_subcommand("catalog", "list the built-in graph catalog");

    std::string name;
    auto* sc_show = app.add_subcommand("show", "print order, degree and predicates");
    sc_show->add_option("name", name, "graph name, e.g. petersen or rook:5")->required();

    auto* sc_cover = app.add_subcommand("cover", "emit the bipartite double cover's edge list");
    sc_cover->add_option("name", name)->required();

    auto* sc_dspec =
        app.add_subcommand("dspec", "closed-form distance spectrum of the cover plus oracle verdict");
    sc_dspec->add_option("name", name)->required();

    int pn = 0, pd = 0, pa = 0, pc = 0;
    auto* sc_params =
        app.add_subcommand("params", "closed forms straight from srg parameters (no graph build)");
    sc_params->add_option("n", pn)->required();
    sc_params->add_option("d", pd)->required();
    sc_params->add_option("a", pa)->required();
    sc_params->add_option("c", pc)->required();

    bool all = false, json = false;
    std::uint64_t seed = 1;
    int trials = 200;
    auto* sc_verify = app.add_subcommand("verify", "run the verification harness");
    sc_verify->add_option("name", name, "catalog entry to verify");
    sc_verify->add_flag("--all", all, "verify the whole catalog plus a random sweep");
    sc_verify->add_option("--seed", seed, "seed for the random sweep (default 1)");
    sc_verify->add_option("--trials", trials, "trials for the random sweep (default 200)");
    sc_verify->add_flag("--json", json, "machine-readable report");

    std::string format = "edgelist", outpath;
    auto* sc_export = app.add_subcommand("export", "write a graph to a file or stdout");
    sc_export->add_option("name", name)->required();
    sc_export->add_option("--format", format, "edgelist or json")
        ->check(CLI::IsMember({"edgelist", "json"}));
    sc_export->add_option("--out", outpath, "output path (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            out << app.help();
            return ExitOk;
        }
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }

    try {
        if (sc_catalog->parsed()) return cmd_catalog(out);
        if (sc_show->parsed()) return cmd_show(name, out);
        if (sc_cover->parsed()) return cmd_cover(name, out);
        if (sc_dspec->parsed()) return cmd_dspec(name, out, err);
        if (sc_params->parsed()) return cmd_params(pn, pd, pa, pc, out, err);
        if (sc_verify->parsed()) {
            if (all != name.empty()) { // exactly one of name / --all
                err << "error: verify needs a catalog name or --all\n";
                return ExitUsage;
            }
            return cmd_verify(name, all, seed, trials, json, out);
        }
        if (sc_export->parsed()) return cmd_export(name, format, outpath, out);
    } catch (const DisconnectedError& e) {
        err << "error: " << e.what() << "\n";
        return ExitDisconnectedCover;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }
    err << "error: no subcommand\n";
    return ExitUsage;
}

} // namespace srg
