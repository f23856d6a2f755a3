// nhr: command-line front end for the Ramsey, tiling, absorber and tie tools.

#include "nhr/absorb.hpp"
#include "nhr/cache.hpp"
#include "nhr/constructions.hpp"
#include "nhr/density.hpp"
#include "nhr/embed.hpp"
#include "nhr/error.hpp"
#include "nhr/io.hpp"
#include "nhr/ledger.hpp"
#include "nhr/ramsey.hpp"
#include "nhr/ties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::ordered_json;
using namespace nhr;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t budget = kDefaultNodeBudget;
    double timeout = 0;
    std::string cache;
    std::string format = "text";
    std::string out;

    RamseyOptions ramsey_options() const
    {
        RamseyOptions o;
        o.budget = budget;
        o.threads = threads;
        if (timeout > 0)
            o.deadline = Budget::Clock::now() + std::chrono::duration_cast<Budget::Clock::duration>(
                                                    std::chrono::duration<double>(timeout));
        return o;
    }
    Budget make_budget() const { return Budget(budget, ramsey_options().deadline); }
};

struct Report {
    ordered_json inputs = ordered_json::object();
    ordered_json verdict = ordered_json::object();
    ordered_json witnesses = ordered_json::object();
    /// Schedule-dependent counters, reported next to the timings.
    ordered_json stats = ordered_json::object();
    /// Nonzero when the report is complete but the answer is not (a bracket).
    int exit = 0;
};

Mask parse_vertices(const std::string& text)
{
    Mask m = 0;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        const auto dash = part.find('-');
        try {
            const int lo = std::stoi(part.substr(0, dash));
            const int hi = dash == std::string::npos ? lo : std::stoi(part.substr(dash + 1));
            if (lo < 0 || hi >= kMaxVertices || lo > hi) throw std::out_of_range(part);
            m |= low_bits(hi + 1) & ~low_bits(lo);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad vertex list '" + text + "'");
        }
    }
    return m;
}

ordered_json mask_json(Mask m) { return to_vector(m); }

ordered_json tiling_json(const Tiling& t)
{
    ordered_json copies = ordered_json::array();
    for (const auto& c : t.copies) copies.push_back(c.host_map);
    return {{"copies", copies}, {"leftover", mask_json(t.leftover)}};
}

// Partition in construction layout: R first, then B, then E.
CriticalPartition layout(int n, int r_size, int b_size)
{
    require(r_size >= 0 && b_size >= 0 && r_size + b_size <= n, ErrorKind::Precondition,
            "block sizes exceed the colouring");
    CriticalPartition p;
    p.r = low_bits(r_size);
    p.b = low_bits(r_size + b_size) & ~p.r;
    p.e = low_bits(n) & ~low_bits(r_size + b_size);
    return p;
}

void run_ramsey(const Globals& g, Report& rep, const std::string& red_spec, int red_copies,
                const std::string& blue_spec, int blue_copies, int lo, int hi, const std::string& witness_path,
                bool recompute_verify)
{
    const auto red_h = parse_pattern(red_spec);
    const auto blue_h = parse_pattern(blue_spec.empty() ? red_spec : blue_spec);
    RamseyQuery q{RamseyTarget::of(red_h, red_copies), RamseyTarget::of(blue_h, blue_copies), lo, hi,
                  g.ramsey_options()};
    rep.inputs = {{"red", red_h.name()}, {"red_copies", red_copies}, {"blue", blue_h.name()},
                  {"blue_copies", blue_copies}, {"n_lo", lo}, {"n_hi", hi}};

    std::uint64_t nodes = 0;
    auto compute = [&]() {
        auto res = ramsey_search(q);
        nodes = res.nodes;
        if (!witness_path.empty()) write_text_file(witness_path, write_colouring(res.lower_witness));
        CacheEntry e;
        e.exact = res.exact;
        e.value = res.value;
        e.upper = res.upper;
        e.witness = witness_path;
        return e;
    };
    const std::string key = ramsey_cache_key(q.red, q.blue);
    CacheOutcome outcome;
    if (!g.cache.empty()) {
        ResultCache cache(g.cache);
        outcome = cache_lookup_or_compute(cache, key, compute, recompute_verify);
    } else {
        outcome.entry = compute();
        outcome.entry.key = key;
    }
    const auto& e = outcome.entry;
    rep.verdict = {{"status", e.exact ? "exact" : "bracketed"}, {"value", e.value}};
    if (e.upper) rep.verdict["upper"] = *e.upper;
    rep.verdict["cache_hit"] = outcome.hit;
    if (!e.exact) rep.exit = 4;
    rep.stats["nodes"] = nodes;
    rep.witnesses["lower_witness"] = e.witness;
}

void run_verify(const Globals& g, Report& rep, const std::string& colouring_path, const std::string& pattern,
                int copies, bool critical, int r_size, int b_size, std::optional<int> r_of_h)
{
    const auto col = parse_colouring(read_text_file(colouring_path));
    const auto h = parse_pattern(pattern);
    rep.inputs = {{"colouring", colouring_path}, {"pattern", h.name()}, {"copies", copies}};
    auto budget = g.make_budget();
    if (critical) {
        auto report = verify_critical_structure(col, layout(col.order(), r_size, b_size), h, r_of_h, &budget);
        ordered_json bullets = ordered_json::array();
        for (const auto& b : report.bullets)
            bullets.push_back({{"bullet", b.index}, {"status", to_string(b.status)}, {"detail", b.detail}});
        rep.verdict = {{"holds", report.holds()}, {"bullets", bullets}};
        return;
    }
    const auto target = RamseyTarget::of(h, copies);
    for (Colour c : {Colour::Red, Colour::Blue}) {
        auto res = colouring_avoids(col, target, c, &budget);
        rep.verdict[std::string("avoids_") + to_string(c)] = res.holds;
        if (res.witness) rep.witnesses[to_string(c)] = tiling_json(*res.witness);
    }
}

void run_construct(const Globals& g, Report& rep, const std::string& kind, const std::string& pattern, int n,
                   int ell, bool verify, std::string path)
{
    if (kind == "hk") {
        const auto h = build_Hk(ell);
        if (path.empty()) path = "Hk" + std::to_string(ell) + ".graph";
        write_text_file(path, write_graph(h.graph()));
        rep.inputs = {{"kind", kind}, {"ell", ell}};
        rep.verdict = {{"k", h.k()}, {"max_degree", h.max_degree()}, {"alpha", h.alpha()},
                       {"edges", h.edge_count()}};
        rep.witnesses["graph"] = path;
        return;
    }
    Construction c;
    PatternGraph h;
    if (kind == "lower-bound") {
        h = parse_pattern(pattern);
        c = lower_bound_colouring(h, n);
    } else if (kind == "prop1") {
        h = build_Hk(ell);
        c = prop1_colouring(ell, n);
    } else {
        throw Error(ErrorKind::Parse, "unknown construction '" + kind + "'");
    }
    if (path.empty()) path = kind + ".col";
    write_text_file(path, write_colouring(c.colouring));
    const ordered_json spec = {{"schema", 1},        {"kind", c.spec.kind},     {"pattern", c.spec.pattern},
                               {"n", c.spec.n},      {"ell", c.spec.ell},       {"r_size", c.spec.r_size},
                               {"b_size", c.spec.b_size}, {"e_size", c.spec.e_size}};
    write_text_file(path + ".json", spec.dump(2) + "\n");
    rep.inputs = {{"kind", kind}, {"pattern", h.name()}, {"n", n}, {"ell", ell}};
    rep.verdict = {{"order", c.colouring.order()},
                   {"r_size", c.spec.r_size},
                   {"b_size", c.spec.b_size},
                   {"e_size", c.spec.e_size}};
    rep.witnesses = {{"colouring", path}, {"spec", path + ".json"}};
    if (verify) {
        auto budget = g.make_budget();
        const int copies = kind == "prop1" ? 1 : n;
        bool clean = true;
        for (Colour col : {Colour::Red, Colour::Blue}) {
            const bool avoids = !find_disjoint_mono(c.colouring, h, copies, col, &budget);
            rep.verdict[std::string("avoids_") + to_string(col)] = avoids;
            clean = clean && avoids;
        }
        const std::string name = kind == "prop1" ? "H_" + std::to_string(h.k()) : h.name();
        const std::string target = (copies > 1 ? std::to_string(copies) : std::string()) + name;
        rep.verdict["verification"] = clean ? "no monochromatic " + target : "monochromatic " + target + " found";
    }
}

void run_tie(const Globals& g, Report& rep, const std::string& colouring_path, const std::string& pattern,
             const std::string& check, int r_size, int b_size, const std::string& mode)
{
    const auto col = parse_colouring(read_text_file(colouring_path));
    const auto h = parse_pattern(pattern);
    rep.inputs = {{"colouring", colouring_path}, {"pattern", h.name()}};
    if (!check.empty()) {
        auto res = is_tie(col, parse_vertices(check), h);
        rep.verdict = {{"tie", res.accepted()}, {"reason", res.reason}};
        if (res.tie)
            rep.witnesses = {{"red_copy", res.tie->red_copy.host_map}, {"blue_copy", res.tie->blue_copy.host_map}};
        return;
    }
    const auto part = layout(col.order(), r_size, b_size);
    auto budget = g.make_budget();
    try {
        auto t = find_tie(col, part.r, part.b, h, mode == "guided" ? TieMode::Guided : TieMode::Direct, -1, &budget);
        rep.verdict = {{"found", true}, {"vertices", mask_json(t.vertices)}};
        rep.witnesses = {{"red_copy", t.red_copy.host_map}, {"blue_copy", t.blue_copy.host_map}};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoneFound) throw;
        rep.verdict = {{"found", false}};
    }
}

void run_absorber(const Globals& g, Report& rep, const std::string& kind, const std::string& pattern, int ell,
                  int cap, bool complete, const std::string& graph_path, const std::string& a_list,
                  const std::string& u_list, int r, const std::string& g_pattern, int u_size)
{
    rep.inputs = {{"kind", kind}};
    if (kind == "template") {
        auto t = build_template(ell, cap, g.seed, complete ? TemplateMode::Complete : TemplateMode::Random);
        auto check = verify_template(t);
        rep.inputs.update({{"ell", ell}, {"cap", cap}, {"mode", complete ? "complete" : "random"}});
        rep.verdict = {{"valid", check.valid}, {"subsets_checked", check.subsets_checked},
                       {"max_degree", t.graph.max_degree()}, {"edges", t.graph.edge_count()}};
        rep.witnesses["graph"] = write_graph(t.graph);
        return;
    }
    const auto h = parse_pattern(pattern);
    rep.inputs["pattern"] = h.name();
    if (kind == "switcher") {
        auto s = build_switcher(h);
        rep.verdict = {{"verified", true}, {"order", s.graph.order()}};
        rep.witnesses = {{"without_u", tiling_json(s.without_u)}, {"without_v", tiling_json(s.without_v)}};
    } else if (kind == "local") {
        auto la = build_local_absorber(h, h.k());
        rep.verdict = {{"verified", true}, {"order", la.graph.order()}, {"external", mask_json(la.external)}};
        rep.witnesses = {{"core", tiling_json(la.core_tiling)}, {"core_plus_x", tiling_json(la.full_tiling)},
                         {"graph", write_graph(la.graph)}};
    } else if (kind == "verify") {
        const auto host = parse_graph(read_text_file(graph_path));
        auto budget = g.make_budget();
        auto v = verify_absorber(host, parse_vertices(a_list), parse_vertices(u_list), r, h, kAbsorberSubsetLimit,
                                 &budget);
        rep.inputs.update({{"graph", graph_path}, {"a", a_list}, {"u", u_list}, {"r", r}});
        rep.verdict = {{"holds", v.holds()}, {"subsets_checked", v.subsets_checked}};
        if (v.failing) rep.verdict["failing_subset"] = mask_json(*v.failing);
    } else if (kind == "assemble") {
        const auto col = parse_colouring(read_text_file(graph_path));
        AbsorberScale scale;
        scale.u_size = u_size;
        scale.r = r;
        scale.seed = g.seed;
        auto res = assemble_general_absorber(col, parse_pattern(g_pattern), h, scale);
        rep.inputs.update({{"colouring", graph_path}, {"g", g_pattern}, {"u_size", u_size}, {"r", r}});
        rep.verdict = {{"verified", true},
                       {"order", popcount(res.certificate.a)},
                       {"subsets", res.certificate.log.size()},
                       {"attempts", res.attempts_used},
                       {"trace", res.trace}};
        rep.witnesses = {{"a", mask_json(res.certificate.a)}, {"u", mask_json(res.certificate.u)},
                         {"witnesses_stored", res.certificate.witnesses_stored}};
    } else {
        throw Error(ErrorKind::Parse, "unknown absorber kind '" + kind + "'");
    }
}

void run_embed(const Globals& g, Report& rep, const std::string& graph_path, const std::string& pattern, bool greedy)
{
    const auto host = parse_graph(read_text_file(graph_path));
    const auto h = parse_pattern(pattern);
    rep.inputs = {{"graph", graph_path}, {"pattern", h.name()}, {"greedy", greedy}};
    if (greedy) {
        auto e = greedy_embed(host, h);
        rep.verdict = {{"found", true}};
        rep.witnesses["map"] = e.host_map;
        return;
    }
    auto budget = g.make_budget();
    MatchOptions opt;
    opt.budget = &budget;
    auto m = find_copy(host, h.graph(), opt);
    rep.verdict = {{"found", m.has_value()}};
    rep.stats["nodes"] = budget.used();
    if (m) rep.witnesses["map"] = *m;
}

void run_density(const Globals& g, Report& rep, const std::string& graph_path, const std::string& eps,
                 const std::string& gamma, bool bi, bool sampled, std::uint64_t samples, const std::string& drc)
{
    const auto host = parse_graph(read_text_file(graph_path));
    rep.inputs = {{"graph", graph_path}};
    if (!drc.empty()) {
        int t = 0, r = 0, m = 0, a = 0;
        char c1 = 0, c2 = 0, c3 = 0;
        std::istringstream in(drc);
        if (!(in >> t >> c1 >> r >> c2 >> m >> c3 >> a) || c1 != ',' || c2 != ',' || c3 != ',')
            throw Error(ErrorKind::Parse, "--drc expects t,r,m,a");
        auto u = dependent_random_choice(host, t, r, m, a, g.seed);
        rep.inputs["drc"] = drc;
        rep.verdict = {{"lhs", to_string(drc_lhs(host, t, r, m))}, {"size", popcount(u)}};
        rep.witnesses["u"] = mask_json(u);
        return;
    }
    const auto e = parse_rational(eps);
    const auto y = parse_rational(gamma);
    const auto mode = sampled ? DensityMode::Sampled : DensityMode::Exact;
    auto v = bi ? is_bi_dense(host, e, y, mode, g.seed, samples) : is_dense(host, e, y, mode, g.seed, samples);
    rep.inputs.update({{"eps", to_string(e)}, {"gamma", to_string(y)}, {"bi", bi}, {"mode", sampled ? "sampled" : "exact"}});
    rep.verdict = {{"holds", v.holds}};
    if (sampled) rep.verdict.update({{"samples", v.samples}, {"seed", v.seed}});
    if (v.witness) rep.witnesses = {{"x", mask_json(v.witness->first)}, {"y", mask_json(v.witness->second)}};
}

void run_params(Report& rep, unsigned delta, const std::string& k)
{
    const auto ledger = param_ledger(delta, BigInt(k));
    rep.inputs = {{"delta", delta}, {"k", k}};
    for (const auto& [name, value] : ledger.fields()) rep.verdict[name] = value;
}

void print_text(std::ostream& os, const std::string& prefix, const ordered_json& j)
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) print_text(os, prefix + key + ".", value);
        else os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Timeout:
    case ErrorKind::BudgetExhausted: return 4;
    case ErrorKind::Defect:
    case ErrorKind::InternalExhaustion:
    case ErrorKind::ConstructionFailed: return 1;
    default: return 3;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ramsey numbers of disjoint copies: search, constructions, absorbers and ties"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--budget", g.budget, "Search node budget");
    app.add_option("--timeout", g.timeout, "Wall-clock limit in seconds");
    app.add_option("--cache", g.cache, "Result cache (JSON lines)");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", g.out, "Write the report here instead of stdout");

    std::string pattern = "K3", blue_pattern, colouring, graph, check, mode = "direct", kind, witness, file;
    std::string eps = "1/4", gamma = "1/2", drc, a_list, u_list, g_pattern = "K3", k_text = "10";
    int copies = 1, blue_copies = 0, lo = 0, hi = 14, n = 1, ell = 4, r_size = 0, b_size = 0, cap = 6, r = 1;
    int u_size = 6;
    unsigned delta = 2;
    std::optional<int> r_of_h;
    bool recompute = false, critical = false, verify = false, complete = false, greedy = false, bi = false,
         sampled = false;
    std::uint64_t samples = kDefaultSamples;

    auto* ramsey = app.add_subcommand("ramsey", "Exact Ramsey number of nH (or r(G, mH))");
    ramsey->add_option("--pattern", pattern, "Red pattern");
    ramsey->add_option("--copies", copies, "Disjoint red copies")->check(CLI::PositiveNumber);
    ramsey->add_option("--blue-pattern", blue_pattern, "Blue pattern (default: the red one)");
    ramsey->add_option("--blue-copies", blue_copies, "Disjoint blue copies (default: --copies)");
    ramsey->add_option("--lo", lo, "Smallest order tried");
    ramsey->add_option("--hi", hi, "Largest order tried");
    ramsey->add_option("--witness", witness, "Lower witness file")->default_val("ramsey-witness.col");
    ramsey->add_flag("--recompute-verify", recompute, "Recompute cached exact values and compare");

    auto* verify_cmd = app.add_subcommand("verify", "Check a colouring against targets or critical structure");
    verify_cmd->add_option("--colouring", colouring, "Colouring file")->required();
    verify_cmd->add_option("--pattern", pattern, "Pattern");
    verify_cmd->add_option("--copies", copies, "Disjoint copies")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--critical", critical, "Check the R/B/E critical structure");
    verify_cmd->add_option("--r-size", r_size, "|R|; R is the first block");
    verify_cmd->add_option("--b-size", b_size, "|B|; B follows R, E is the rest");
    verify_cmd->add_option("--rh", r_of_h, "Known r(H)");

    auto* construct = app.add_subcommand("construct", "Build a lower-bound, prop1 or H_k construction");
    construct->add_option("kind", kind, "lower-bound | prop1 | hk")->required()->check(
        CLI::IsMember({"lower-bound", "prop1", "hk"}));
    construct->add_option("--pattern", pattern, "Pattern (lower-bound)");
    construct->add_option("--n", n, "Copies");
    construct->add_option("--ell", ell, "l for H_k and prop1");
    construct->add_option("--file", file, "Output file");
    construct->add_flag("--verify", verify, "Search both colours for the target");

    auto* tie = app.add_subcommand("tie", "Find or check an H-tie");
    tie->add_option("--colouring", colouring, "Colouring file")->required();
    tie->add_option("--pattern", pattern, "Pattern");
    tie->add_option("--check", check, "Vertex list to check");
    tie->add_option("--r-size", r_size, "|R|; R is the first block");
    tie->add_option("--b-size", b_size, "|B|; B follows R");
    tie->add_option("--mode", mode, "direct | guided")->check(CLI::IsMember({"direct", "guided"}));

    auto* absorber = app.add_subcommand("absorber", "Build or verify switchers, local absorbers, templates, absorbers");
    absorber->add_option("kind", kind, "switcher | local | template | verify | assemble")->required();
    absorber->add_option("--pattern", pattern, "Pattern H");
    absorber->add_option("--g", g_pattern, "Pattern G (assemble)");
    absorber->add_option("--ell", ell, "Template l");
    absorber->add_option("--cap", cap, "Template degree cap");
    absorber->add_flag("--complete", complete, "Complete bipartite template");
    absorber->add_option("--graph", graph, "Host graph (verify) or colouring (assemble)");
    absorber->add_option("--a", a_list, "Absorber vertices, e.g. 0-5,9");
    absorber->add_option("--u", u_list, "Reservoir vertices");
    absorber->add_option("--r", r, "Absorption radius");
    absorber->add_option("--u-size", u_size, "Reservoir size (assemble)");

    auto* embed = app.add_subcommand("embed", "Find a copy of a pattern in a graph");
    embed->add_option("--graph", graph, "Host graph file")->required();
    embed->add_option("--pattern", pattern, "Pattern");
    embed->add_flag("--greedy", greedy, "Greedy common-neighbourhood embedding");

    auto* density = app.add_subcommand("density", "Density checks and dependent random choice");
    density->add_option("--graph", graph, "Graph file")->required();
    density->add_option("--eps", eps, "epsilon (exact rational)");
    density->add_option("--gamma", gamma, "gamma (exact rational)");
    density->add_flag("--bi", bi, "Bi-density");
    density->add_flag("--sampled", sampled, "Sampled (one-sided) check");
    density->add_option("--samples", samples, "Samples in sampled mode");
    density->add_option("--drc", drc, "Dependent random choice t,r,m,a");

    auto* params = app.add_subcommand("params", "Exact constant ledger");
    params->add_option("--delta", delta, "Maximum degree")->check(CLI::PositiveNumber);
    params->add_option("--k", k_text, "Order k (decimal)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto started = std::chrono::steady_clock::now();
    Report rep;
    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "ramsey")
            run_ramsey(g, rep, pattern, copies, blue_pattern, blue_copies ? blue_copies : copies, lo, hi, witness,
                       recompute);
        else if (command == "verify")
            run_verify(g, rep, colouring, pattern, copies, critical, r_size, b_size, r_of_h);
        else if (command == "construct")
            run_construct(g, rep, kind, pattern, n, ell, verify, file);
        else if (command == "tie")
            run_tie(g, rep, colouring, pattern, check, r_size, b_size, mode);
        else if (command == "absorber")
            run_absorber(g, rep, kind, pattern, ell, cap, complete, graph, a_list, u_list, r, g_pattern, u_size);
        else if (command == "embed")
            run_embed(g, rep, graph, pattern, greedy);
        else if (command == "density")
            run_density(g, rep, graph, eps, gamma, bi, sampled, samples, drc);
        else if (command == "params")
            run_params(rep, delta, k_text);
    } catch (const Error& e) {
        std::cerr << "nhr " << command << ": " << e.what();
        if (e.detail()) std::cerr << " [" << *e.detail() << "]";
        std::cerr << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "nhr " << command << ": internal error: " << e.what() << '\n';
        return 1;
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    ordered_json doc = {{"schema", 1},          {"command", command},        {"inputs", rep.inputs},
                        {"seed", g.seed},       {"verdict", rep.verdict},    {"witnesses", rep.witnesses},
                        {"timings", {{"seconds", seconds}}}};
    for (const auto& [key, value] : rep.stats.items()) doc["timings"][key] = value;
    std::ostringstream body;
    if (g.format == "json") body << doc.dump(2) << '\n';
    else print_text(body, "", doc);
    try {
        if (g.out.empty()) std::cout << body.str();
        else write_text_file(g.out, body.str());
    } catch (const Error& e) {
        std::cerr << "nhr: " << e.what() << '\n';
        return 3;
    }
    return rep.exit;
}
