#include "render.hpp"

#include "mub/bigraph.hpp"
#include "mub/families.hpp"
#include "mub/fixtures.hpp"
#include "mub/harness.hpp"
#include "mub/recognizer.hpp"
#include "mub/repair.hpp"
#include "mub/representation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::json;

enum Exit { ok = 0, unsat = 1, over_budget = 2, hits = 3, usage = 64 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mub::Bigraph load_graph(const std::string& path) {
    try {
        return mub::parse_bigraph_text(slurp(path));
    } catch (const mub::ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

mub::Representation load_rep(const std::string& path) {
    try {
        return mub::parse_representation_text(slurp(path));
    } catch (const mub::ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

mub::Budget default_budget() {
    mub::Budget b;
    if (const char* s = std::getenv("MUB_BUDGET_NODES"))
        b.max_nodes = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("MUB_BUDGET_SECS"))
        b.max_seconds = std::strtod(s, nullptr);
    return b;
}

// gen ------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int i = 0, j = 0;
    bool primed = false, tilde = false;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    auto tag = mub::tag_from_name(a.family);
    if (!tag)
        throw UsageError("unknown family '" + a.family + "'");
    mub::FamilyId id{*tag, a.i, a.j, a.primed, a.tilde};
    try {
        emit(a.out, "# " + mub::to_string(id) + "\n" + mub::to_text(mub::generate(id)));
    } catch (const mub::UnsupportedConstruction& e) {
        throw UsageError(e.what());
    }
    return ok;
}

// validate -------------------------------------------------------------------

int cmd_validate(const std::string& graph, const std::string& rep_path) {
    auto g = load_graph(graph);
    auto rep = load_rep(rep_path);
    mub::ValidityReport r;
    try {
        r = mub::validate(g, rep);
    } catch (const mub::CoverageError& e) {
        throw UsageError(e.what());
    }
    for (auto& [a, b] : r.missing_edges)
        std::cout << "missing " << a << " " << b << "\n";
    for (auto& [a, b] : r.spurious_edges)
        std::cout << "spurious " << a << " " << b << "\n";
    std::cout << "valid " << (r.valid ? "yes" : "no") << "\n"
              << "mixed-unit " << (mub::is_mixed_unit(rep) ? "yes" : "no") << "\n"
              << "mixed-proper " << (mub::is_mixed_proper(rep) ? "yes" : "no") << "\n"
              << "almost-proper " << (mub::is_almost_proper(rep) ? "yes" : "no") << "\n"
              << "bad-pairs " << mub::list_bad_pairs(rep).size() << "\n";
    return r.valid ? ok : unsat;
}

// recognize ------------------------------------------------------------------

int cmd_recognize(const std::string& graph, const std::string& emit_rep, mub::Budget budget, bool deterministic) {
    auto g = load_graph(graph);
    auto out = mub::recognize_mixed_unit(g, budget, deterministic);
    std::cout << mub::to_string(out.status) << " nodes=" << out.stats.nodes << " seconds=" << out.stats.seconds
              << "\n";
    if (out.witness) {
        if (emit_rep.empty())
            std::cout << mub::to_text(*out.witness);
        else
            emit(emit_rep, mub::to_text(*out.witness));
    }
    switch (out.status) {
    case mub::Status::SAT: return ok;
    case mub::Status::UNSAT: return unsat;
    case mub::Status::BudgetExceeded: return over_budget;
    }
    return unsat;
}

// scan -----------------------------------------------------------------------

int cmd_scan(const std::string& graph, bool all) {
    auto g = load_graph(graph);
    std::size_t found = 0;
    for (auto& entry : mub::forbidden_catalog(g.size())) {
        auto embeddings = mub::induced_subgraph_search(g, entry.graph, all ? 0 : 1);
        for (auto& e : embeddings) {
            ++found;
            std::cout << "hit " << mub::to_string(entry.id) << (e.side_swapped ? " swapped" : "") << " :";
            for (std::size_t p = 0; p < e.mapping.size(); ++p)
                std::cout << " " << entry.graph.label(p) << "=" << g.label(e.mapping[p]);
            std::cout << "\n";
        }
    }
    if (found == 0)
        std::cout << "clean\n";
    return found ? hits : ok;
}

// repair ---------------------------------------------------------------------

int cmd_repair(const std::string& graph, const std::string& rep_path, const std::string& out, bool trace) {
    auto g = load_graph(graph);
    auto rep = load_rep(rep_path);
    mub::RepairResult res;
    try {
        res = mub::repair(g, rep, trace);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (std::size_t k = 0; k < res.trace.size(); ++k) {
        auto& s = res.trace[k];
        std::cerr << "# step " << k << " " << s.action;
        if (!s.pair.inner.empty())
            std::cerr << " (" << s.pair.inner << "," << s.pair.outer << ")" << (s.cross_side ? " cross-side" : "");
        std::cerr << "\n" << mub::to_text(s.rep);
    }
    if (!res.ok()) {
        auto& f = *res.failure;
        std::cerr << "repair failed at iteration " << f.iteration << ": " << f.message;
        if (f.claim)
            std::cerr << " [claim " << f.claim << "]";
        std::cerr << "\n";
        return unsat;
    }
    emit(out, mub::to_text(*res.rep));
    return ok;
}

// render ---------------------------------------------------------------------

int cmd_render(const std::string& rep_path, const std::string& format, int scale, const std::string& out) {
    auto rep = load_rep(rep_path);
    emit(out, format == "svg" ? mubcli::render_svg(rep) : mubcli::render_ascii(rep, scale));
    return ok;
}

// fixtures -------------------------------------------------------------------

void dump_fixture(const mub::FixtureId& id, const std::string& prefix) {
    auto f = mub::fixture(id);
    std::string head = "# " + mub::to_string(id) + "\n";
    if (prefix.empty()) {
        std::cout << head << mub::to_text(f.graph) << "\n" << head << mub::to_text(f.rep);
        return;
    }
    emit(prefix + ".graph", head + mub::to_text(f.graph));
    emit(prefix + ".rep", head + mub::to_text(f.rep));
}

int cmd_fixtures(bool list, const std::string& name, int i, int j, bool alternate, const std::string& prefix,
                 const std::string& all_dir) {
    if (list) {
        for (auto t : mub::all_fixture_tags())
            std::cout << mub::tag_name(t) << " params=" << mub::parameter_count(t)
                      << (mub::has_alternate(t) ? " alternate" : "") << "\n";
        return ok;
    }
    if (!all_dir.empty()) {
        std::filesystem::create_directories(all_dir);
        for (auto t : mub::all_fixture_tags()) {
            int pc = mub::parameter_count(t);
            for (int a = pc ? 1 : 0; a <= (pc ? 3 : 0); ++a)
                for (int b = pc == 2 ? 1 : 0; b <= (pc == 2 ? 3 : 0); ++b)
                    for (bool alt : {false, true}) {
                        if (alt && !mub::has_alternate(t))
                            continue;
                        mub::FixtureId id{t, a, b, alt};
                        std::string stem = std::string(mub::tag_name(t));
                        if (pc)
                            stem += "_" + std::to_string(a);
                        if (pc == 2)
                            stem += "_" + std::to_string(b);
                        if (alt)
                            stem += "_alt";
                        dump_fixture(id, (std::filesystem::path(all_dir) / stem).string());
                    }
        }
        return ok;
    }
    auto tag = mub::fixture_tag_from_name(name);
    if (!tag)
        throw UsageError("unknown fixture '" + name + "' (see --list)");
    if (alternate && !mub::has_alternate(*tag))
        throw UsageError("fixture '" + name + "' has no alternate table");
    try {
        dump_fixture({*tag, i, j, alternate}, prefix);
    } catch (const mub::UnsupportedConstruction& e) {
        throw UsageError(e.what());
    }
    return ok;
}

// enumerate ------------------------------------------------------------------

json summary_json(const mub::SizeSummary& s) {
    return {{"n", s.n},
            {"graphs", s.graphs},
            {"sat", s.sat},
            {"unsat", s.unsat},
            {"budget", s.budget},
            {"non_interval", s.non_interval},
            {"with_hits", s.with_hits},
            {"disagreements", s.disagreements},
            {"repairs", s.repairs},
            {"repairs_with_bad_pairs", s.repairs_with_bad_pairs},
            {"repair_failures", s.repair_failures}};
}

struct EnumArgs {
    std::size_t max_n = 0;
    std::size_t bound = 8;
    std::string report;
    std::string checkpoint;
    bool no_repair = false;
};

int cmd_enumerate(const EnumArgs& a, mub::Budget budget) {
    if (a.max_n < 1 || a.max_n > a.bound)
        throw UsageError("--max-n must be between 1 and " + std::to_string(a.bound));
    json state = {{"sizes", json::object()}, {"issues", json::array()}};
    if (!a.checkpoint.empty() && std::filesystem::exists(a.checkpoint))
        state = json::parse(slurp(a.checkpoint));
    mub::HarnessOptions opt{a.max_n, budget, !a.no_repair};
    for (std::size_t n = 1; n <= a.max_n; ++n) {
        std::string key = std::to_string(n);
        if (state["sizes"].contains(key)) {
            std::cout << "n=" << n << " restored from checkpoint\n";
            continue;
        }
        mub::SizeSummary s;
        s.n = n;
        for (auto& r : mub::run_size(n, opt)) {
            mub::add(s, r);
            std::string kind = r.disagreement                      ? "disagreement"
                               : r.status == mub::Status::BudgetExceeded ? "budget"
                               : (r.repair_attempted && !r.repair_ok) ? "repair-failure"
                                                                      : "";
            if (!kind.empty())
                state["issues"].push_back({{"kind", kind},
                                           {"n", n},
                                           {"graph", r.canonical},
                                           {"status", std::string(mub::to_string(r.status))},
                                           {"interval", r.interval},
                                           {"hits", r.hits},
                                           {"detail", r.repair_failure}});
        }
        state["sizes"][key] = summary_json(s);
        if (!a.checkpoint.empty())
            emit(a.checkpoint, state.dump(2) + "\n");
        std::cout << "n=" << n << " graphs=" << s.graphs << " sat=" << s.sat << " unsat=" << s.unsat
                  << " budget=" << s.budget << " non-interval=" << s.non_interval << " hits=" << s.with_hits
                  << " disagreements=" << s.disagreements << " repairs=" << s.repairs
                  << " repair-failures=" << s.repair_failures << "\n";
    }
    std::size_t dis = 0, bud = 0, rf = 0, total = 0;
    for (auto& [k, s] : state["sizes"].items()) {
        if (std::stoul(k) > a.max_n)
            continue;
        total += s["graphs"].get<std::size_t>();
        dis += s["disagreements"].get<std::size_t>();
        bud += s["budget"].get<std::size_t>();
        rf += s["repair_failures"].get<std::size_t>();
    }
    json report = {{"max_n", a.max_n},        {"graphs", total},       {"disagreements", dis},
                   {"budget_exceeded", bud}, {"repair_failures", rf}, {"sizes", state["sizes"]},
                   {"issues", state["issues"]}};
    if (!a.report.empty())
        emit(a.report, report.dump(2) + "\n");
    std::cout << "total graphs=" << total << " disagreements=" << dis << " budget-exceeded=" << bud
              << " repair-failures=" << rf << "\n";
    if (dis || rf)
        return unsat;
    return bud ? over_budget : ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed unit interval bigraph toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a family member in graph text format");
    g->add_option("family", gen.family, "H1..H3, F1..F13, B0..B2, K, M, H0, L, Mfam, N, Hp, Kfam, P, Q, R, S, T")
        ->required();
    g->add_option("--i", gen.i, "first parameter");
    g->add_option("--j", gen.j, "second parameter");
    g->add_flag("--primed", gen.primed);
    g->add_flag("--tilde", gen.tilde);
    g->add_option("-o,--out", gen.out);

    std::string graph, rep, out, emit_rep, format = "ascii", name, all_dir;
    bool deterministic = false, trace = false, all = false, list = false, alternate = false;
    int fi = 0, fj = 0, scale = 5;
    mub::Budget budget = default_budget();

    auto* v = app.add_subcommand("validate", "Check a representation against a graph");
    v->add_option("--graph", graph)->required();
    v->add_option("--rep", rep)->required();

    auto* rc = app.add_subcommand("recognize", "Search for a mixed unit representation");
    rc->add_option("--graph", graph)->required();
    rc->add_option("--emit-rep", emit_rep);
    rc->add_option("--budget-nodes", budget.max_nodes);
    rc->add_option("--budget-secs", budget.max_seconds);
    rc->add_flag("--deterministic", deterministic);

    auto* sc = app.add_subcommand("scan", "Look for forbidden induced subgraphs");
    sc->add_option("--graph", graph)->required();
    sc->add_flag("--all", all, "report every embedding");

    auto* rp = app.add_subcommand("repair", "Turn a closed representation into a mixed proper one");
    rp->add_option("--graph", graph)->required();
    rp->add_option("--rep", rep)->required();
    rp->add_option("-o,--out", out);
    rp->add_flag("--trace", trace);

    auto* rd = app.add_subcommand("render", "Draw a representation");
    rd->add_option("--rep", rep)->required();
    rd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
    rd->add_option("--scale", scale)->check(CLI::Range(1, 200));
    rd->add_option("-o,--out", out);

    auto* fx = app.add_subcommand("fixtures", "List or write fixture graphs and tables");
    fx->require_subcommand(1);
    auto* fl = fx->add_subcommand("list", "List fixture tags");
    auto* fd = fx->add_subcommand("dump", "Write a fixture graph and its table");
    fd->add_option("--id", name, "fixture tag, see 'fixtures list'");
    fd->add_option("--i", fi);
    fd->add_option("--j", fj);
    fd->add_flag("--alternate", alternate);
    fd->add_option("-o,--out", out, "prefix for <out>.graph and <out>.rep");
    fd->add_option("--all", all_dir, "dump every fixture with parameters up to 3 into a directory");

    EnumArgs en;
    auto* em = app.add_subcommand("enumerate", "Check the characterization on all small connected bigraphs");
    em->add_option("--max-n", en.max_n)->required();
    em->add_option("--safety-bound", en.bound);
    em->add_option("--report", en.report);
    em->add_option("--checkpoint", en.checkpoint);
    em->add_option("--budget-nodes", budget.max_nodes);
    em->add_option("--budget-secs", budget.max_seconds);
    em->add_flag("--no-repair", en.no_repair);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*g)
            return cmd_gen(gen);
        if (*v)
            return cmd_validate(graph, rep);
        if (*rc)
            return cmd_recognize(graph, emit_rep, budget, deterministic);
        if (*sc)
            return cmd_scan(graph, all);
        if (*rp)
            return cmd_repair(graph, rep, out, trace);
        if (*rd)
            return cmd_render(rep, format, scale, out);
        if (*fx) {
            list = fl->parsed();
            if (fd->parsed() && all_dir.empty() && name.empty())
                throw UsageError("fixtures dump: give --id or --all DIR");
            return cmd_fixtures(list, name, fi, fj, alternate, out, all_dir);
        }
        if (*em)
            return cmd_enumerate(en, budget);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
