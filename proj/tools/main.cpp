// greycover: command-line front end for white-grey tree path covers.
//
// Subcommands: validate, stats, cost, cover, balanced, pair, oracle,
// fuzz, bench, gen.  Tree input comes from a file argument or stdin
// ("-"); --batch reads one tree per line.  --format selects a terse
// text summary (default) or a single JSON report object per run.
//
// Exit codes: 0 success, 1 validation or parse error, 2 property
// violation (oracle --check mismatch, fuzz counterexample), 3 oracle
// size limit exceeded.

#include "greycover/balance.hpp"
#include "greycover/cover.hpp"
#include "greycover/model.hpp"
#include "greycover/oracle.hpp"
#include "greycover/treetext.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using ojson = nlohmann::ordered_json;
using namespace greycover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitViolation = 2;
constexpr int kExitTooLarge = 3;

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", (unsigned long long)h);
    return buf;
}

std::string read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Batch mode: one tree per non-empty line.  Single mode: the whole input.
std::vector<std::pair<int, std::string>> gather_inputs(const std::string& raw, bool batch) {
    std::vector<std::pair<int, std::string>> out;
    if (!batch) {
        out.emplace_back(0, raw);
        return out;
    }
    std::istringstream ss(raw);
    std::string line;
    int no = 0;
    while (std::getline(ss, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(no, line);
    }
    return out;
}

const char* kind_name(TreeErrorKind k) {
    switch (k) {
        case TreeErrorKind::NotATree: return "NotATree";
        case TreeErrorKind::RootColored: return "RootColored";
        case TreeErrorKind::UncoloredNonBranching: return "UncoloredNonBranching";
        case TreeErrorKind::GreyNotRootChild: return "GreyNotRootChild";
        case TreeErrorKind::WhiteLeafAtRoot: return "WhiteLeafAtRoot";
        case TreeErrorKind::NonRootLeafNotWhite: return "NonRootLeafNotWhite";
    }
    return "Unknown";
}

ojson path_to_json(const Path& p) {
    ojson j;
    j["vertices"] = p.vertices;
    j["kind"] = to_string(p.kind);
    j["cost"] = p.cost;
    return j;
}

// Parses and reports failures into `out`; returns the tree on success.
std::optional<WhiteGreyTree> need_tree(const std::string& text, ojson& out) {
    auto po = parse_tree(text);
    if (po.tree) return po.tree;
    ojson errs = ojson::array();
    for (auto& e : po.parse_errors) errs.push_back(e);
    for (auto& v : po.violations)
        errs.push_back(std::string(kind_name(v.kind)) + ": " + describe(v));
    out["errors"] = errs;
    return std::nullopt;
}

std::optional<UnrootedTree> need_unrooted(const std::string& text, ojson& out) {
    std::string err;
    auto u = parse_unrooted(text, &err);
    if (!u) out["errors"] = ojson::array({err});
    return u;
}

// ---- per-command handlers: fill a JSON result, return an exit code ----

int cmd_validate(const std::string& text, ojson& out) {
    auto po = parse_tree(text);
    if (!po.parse_errors.empty()) {
        out["valid"] = false;
        out["errors"] = po.parse_errors;
        return kExitInvalid;
    }
    if (!po.violations.empty()) {
        out["valid"] = false;
        ojson vs = ojson::array();
        for (auto& v : po.violations) {
            ojson j;
            j["kind"] = kind_name(v.kind);
            j["vertex"] = v.vertex;
            j["message"] = describe(v);
            vs.push_back(j);
        }
        out["violations"] = vs;
        return kExitInvalid;
    }
    out["valid"] = true;
    out["vertices"] = po.tree->size();
    return kExitOk;
}

int cmd_stats(const std::string& text, ojson& out) {
    auto t = need_tree(text, out);
    if (!t) return kExitInvalid;
    auto s = stats(*t);
    out["vertices"] = t->size();
    out["white_leaves"] = s.white_leaves;
    out["grey_leaves"] = s.grey_leaves;
    out["colored"] = s.colored;
    return kExitOk;
}

int cmd_cost(const std::string& text, ojson& out) {
    auto t = need_tree(text, out);
    if (!t) return kExitInvalid;
    auto r = cost(*t);
    auto b = bounds(*t);
    out["total"] = r.total;
    out["case"] = to_string(r.analysis.case_tag);
    out["f"] = r.analysis.free_paths;
    out["cost_tw"] = r.cost_tw;
    out["lower"] = b.first;
    out["upper"] = b.second;
    return kExitOk;
}

int cmd_cover(const std::string& text, ojson& out) {
    auto t = need_tree(text, out);
    if (!t) return kExitInvalid;
    auto built = build_cover(*t);
    ojson paths = ojson::array();
    for (auto& p : built.cover.paths) paths.push_back(path_to_json(p));
    out["paths"] = paths;
    out["total"] = built.report.total;
    out["mixed"] = mixed_paths(*t, built.cover).size();
    return kExitOk;
}

int cmd_balanced(const std::string& text, ojson& out) {
    auto u = need_unrooted(text, out);
    if (!u) return kExitInvalid;
    out["leaves"] = leaf_count(*u);
    out["balanced"] = all_balanced_linear(*u);
    try {
        out["linear_pick"] = find_balanced_linear(*u);
    } catch (const NoEvenLeavesError& e) {
        out["linear_pick"] = nullptr;
        out["errors"] = ojson::array({std::string(e.what())});
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_pair(const std::string& text, bool through, VertexId via, ojson& out) {
    auto u = need_unrooted(text, out);
    if (!u) return kExitInvalid;
    try {
        Pairing p;
        if (through) {
            if (via < 0 || via >= u->size()) {
                out["errors"] = ojson::array({"--via vertex out of range"});
                return kExitInvalid;
            }
            p = pair_through(*u, via);
            out["mode"] = "through";
            out["via"] = via;
        } else {
            p = antipodal_pairing(*u);
            out["mode"] = "antipodal";
        }
        out["hub"] = p.hub;
        ojson pairs = ojson::array();
        for (auto [a, b] : p.pairs) pairs.push_back(ojson::array({a, b}));
        out["pairs"] = pairs;
        return kExitOk;
    } catch (const NoEvenLeavesError& e) {
        out["errors"] = ojson::array({std::string(e.what())});
        return kExitInvalid;
    } catch (const NotBalancedError& e) {
        out["errors"] = ojson::array({std::string(e.what())});
        return kExitInvalid;
    }
}

int cmd_oracle(const std::string& text, bool check, int max_colored, ojson& out) {
    auto t = need_tree(text, out);
    if (!t) return kExitInvalid;
    OracleLimit limit;
    limit.max_colored = max_colored;
    ExactCost ex;
    try {
        ex = exact_cost(*t, limit);
    } catch (const TooLargeError& e) {
        out["errors"] = ojson::array({std::string(e.what())});
        return kExitTooLarge;
    }
    out["exact"] = ex.cost;
    ojson witness = ojson::array();
    for (auto& p : ex.witness.paths) witness.push_back(path_to_json(p));
    out["witness"] = witness;
    if (check) {
        auto r = cost(*t);
        out["formula"] = r.total;
        out["match"] = (r.total == ex.cost);
        if (r.total != ex.cost) return kExitViolation;
    }
    return kExitOk;
}

// ---- fuzz: the full property suite on seeded random inputs ----

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t x = seed * 0x9e3779b97f4a7c15ull + trial * 0xbf58476d1ce4e5b9ull + 1;
    x ^= x >> 30;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 27;
    return x;
}

bool pairing_sound(const UnrootedTree& u, const Pairing& p, std::string& why) {
    auto lv = leaves_of(u);
    std::set<VertexId> seen;
    std::set<std::pair<VertexId, VertexId>> edges;
    for (auto [a, b] : p.pairs) {
        if (!u.is_leaf(a) || !u.is_leaf(b)) { why = "pair endpoint is not a leaf"; return false; }
        if (!seen.insert(a).second || !seen.insert(b).second) { why = "leaf used twice"; return false; }
        auto path = tree_path(u, a, b);
        bool hub = false;
        for (size_t i = 0; i < path.size(); ++i) {
            if (path[i] == p.hub) hub = true;
            if (i) edges.insert({std::min(path[i - 1], path[i]), std::max(path[i - 1], path[i])});
        }
        if (!hub) { why = "pair path misses the hub"; return false; }
    }
    if (seen.size() != lv.size()) { why = "pairs are not a perfect matching"; return false; }
    if ((int)edges.size() != u.size() - 1) { why = "pair paths do not cover every edge"; return false; }
    return true;
}

struct TrialFailure {
    std::string property;
    std::string counterexample;
};

// Returns true on success; fills `fail` otherwise.
bool run_trial(std::uint64_t seed, int trial, int max_colored, TrialFailure& fail) {
    std::uint64_t s = mix_seed(seed, (std::uint64_t)trial);
    GenParams gp;
    gp.seed = s;
    gp.max_vertices = 4 + trial % 20;
    auto t = random_tree(gp);
    std::string text = serialize_tree(t);
    fail.counterexample = text;

    auto back = parse_tree(text);
    if (!back.tree || serialize_tree(*back.tree) != text) {
        fail.property = "serialize/parse round trip";
        return false;
    }

    auto r = cost(t);
    auto b = bounds(t);
    if (r.total < b.first) {
        fail.property = "cost below lower bound";
        return false;
    }
    bool bound_exempt = r.analysis.case_tag == CaseTag::Danger_OddNoShort
                        && r.analysis.stats.grey_leaves == 0 && r.total == b.second + 1;
    if (r.total > b.second && !bound_exempt) {
        fail.property = "cost above upper bound";
        return false;
    }

    if (r.analysis.stats.colored <= max_colored) {
        auto ex = exact_cost(t);
        if (ex.cost != r.total) {
            fail.property = "formula disagrees with exact oracle";
            return false;
        }
        auto wc = validate_cover(t, ex.witness);
        if (!wc.valid || wc.total != ex.cost) {
            fail.property = "oracle witness does not validate";
            return false;
        }
    }

    auto built = build_cover(t);
    auto cc = validate_cover(t, built.cover);
    if (!cc.valid || cc.total != r.total) {
        fail.property = "constructed cover invalid or off-cost";
        return false;
    }
    if (mixed_paths(t, built.cover).size() > 2) {
        fail.property = "more than 2 mixed paths";
        return false;
    }
    auto traced = trace_cover(t, derive_white_subtree(t), built.cover);
    int traced_cost = 0;
    for (auto& p : traced.paths) traced_cost += p.cost;
    if (traced_cost != r.cost_tw) {
        fail.property = "trace cost differs from white-subtree cost";
        return false;
    }

    {
        WhiteGreyTree t2 = t;
        VertexId fresh = t2.size();
        t2.parent.push_back(t2.root);
        t2.children.push_back({});
        t2.children[t2.root].push_back(fresh);
        t2.color.push_back(Color::Grey);
        if (!check_rules(t2).empty()) {
            fail.property = "adding a grey leaf broke validity";
            return false;
        }
        int diff = cost(t2).total - r.total;
        if (diff < 0 || diff > 1) {
            fail.property = "grey-leaf monotonicity (cost diff not in {0,1})";
            return false;
        }
    }

    auto u = random_unrooted(mix_seed(s, 0x5eed), 2 + 2 * (trial % 12));
    fail.counterexample = serialize_unrooted(u);
    if (all_balanced(u) != all_balanced_linear(u)) {
        fail.property = "linear balanced scan disagrees with definition";
        return false;
    }
    auto w = find_balanced_walk(u, (VertexId)(s % (std::uint64_t)u.size()));
    std::vector<char> seen(u.size(), 0);
    for (auto v : w.visited) {
        if (seen[v]) {
            fail.property = "balanced walk revisits a vertex";
            return false;
        }
        seen[v] = 1;
    }
    if (!is_balanced(u, w.result)) {
        fail.property = "balanced walk ends at an unbalanced vertex";
        return false;
    }
    std::string why;
    auto pt = pair_through(u, find_balanced_linear(u));
    if (!pairing_sound(u, pt, why)) {
        fail.property = "pair_through: " + why;
        return false;
    }
    auto ap = antipodal_pairing(u);
    if (!pairing_sound(u, ap, why)) {
        fail.property = "antipodal_pairing: " + why;
        return false;
    }
    return true;
}

int cmd_fuzz(std::uint64_t seed, int trials, int max_colored, ojson& out) {
    out["seed"] = seed;
    out["trials"] = trials;
    for (int i = 0; i < trials; ++i) {
        TrialFailure fail;
        bool ok;
        try {
            ok = run_trial(seed, i, max_colored, fail);
        } catch (const std::exception& e) {
            ok = false;
            fail.property = std::string("unexpected exception: ") + e.what();
        }
        if (!ok) {
            out["passed"] = i;
            ojson f;
            f["trial"] = i;
            f["property"] = fail.property;
            f["counterexample"] = fail.counterexample;
            out["failure"] = f;
            return kExitViolation;
        }
    }
    out["passed"] = trials;
    out["failure"] = nullptr;
    return kExitOk;
}

int cmd_bench(int leaves, std::uint64_t seed, ojson& out) {
    auto u = random_unrooted(seed, leaves);
    auto t0 = std::chrono::steady_clock::now();
    VertexId pick;
    try {
        pick = find_balanced_linear(u);
    } catch (const NoEvenLeavesError& e) {
        out["errors"] = ojson::array({std::string(e.what())});
        return kExitInvalid;
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out["leaves"] = leaves;
    out["vertices"] = u.size();
    out["pick"] = pick;
    // Timing is inherently nondeterministic, so it goes to stderr only.
    std::fprintf(stderr, "elapsed_ms=%.3f\n", ms);
    return kExitOk;
}

int cmd_gen(const GenParams& base, int count, bool unrooted, int leaves, ojson& out) {
    ojson trees = ojson::array();
    for (int k = 0; k < count; ++k) {
        if (unrooted) {
            auto u = random_unrooted(base.seed + (std::uint64_t)k, leaves);
            trees.push_back(serialize_unrooted(u));
        } else {
            GenParams gp = base;
            gp.seed = base.seed + (std::uint64_t)k;
            trees.push_back(serialize_tree(random_tree(gp)));
        }
    }
    out["trees"] = trees;
    return kExitOk;
}

// ---- text renderers (read back the JSON results) ----

void print_errors(const ojson& r) {
    if (r.contains("errors"))
        for (auto& e : r["errors"]) std::printf("error: %s\n", e.get<std::string>().c_str());
}

void print_paths(const ojson& arr) {
    int i = 0;
    for (auto& pj : arr) {
        Path p;
        p.vertices = pj["vertices"].get<std::vector<VertexId>>();
        p.cost = pj["cost"].get<int>();
        std::string kind = pj["kind"].get<std::string>();
        std::string ids;
        for (size_t k = 0; k < p.vertices.size(); ++k) {
            if (k) ids += ' ';
            ids += std::to_string(p.vertices[k]);
        }
        std::printf("path %d: %s  kind=%s cost=%d\n", ++i, ids.c_str(), kind.c_str(), p.cost);
    }
}

void render_text(const std::string& command, const ojson& r) {
    print_errors(r);
    if (command == "validate") {
        if (r.contains("violations"))
            for (auto& v : r["violations"])
                std::printf("violation: %s\n", v["message"].get<std::string>().c_str());
        if (r.contains("valid") && r["valid"].get<bool>())
            std::printf("valid vertices=%d\n", r["vertices"].get<int>());
        else if (r.contains("valid"))
            std::printf("invalid\n");
    } else if (command == "stats") {
        if (!r.contains("vertices")) return;
        std::printf("vertices=%d white_leaves=%d grey_leaves=%d colored=%d\n",
                    r["vertices"].get<int>(), r["white_leaves"].get<int>(),
                    r["grey_leaves"].get<int>(), r["colored"].get<int>());
    } else if (command == "cost") {
        if (!r.contains("total")) return;
        std::printf("total=%d case=%s f=%d cost_tw=%d bounds=[%d,%d]\n",
                    r["total"].get<int>(), r["case"].get<std::string>().c_str(),
                    r["f"].get<int>(), r["cost_tw"].get<int>(),
                    r["lower"].get<int>(), r["upper"].get<int>());
    } else if (command == "cover") {
        if (!r.contains("paths")) return;
        print_paths(r["paths"]);
        std::printf("total=%d mixed=%d\n", r["total"].get<int>(), r["mixed"].get<int>());
    } else if (command == "balanced") {
        if (!r.contains("balanced")) return;
        std::string ids;
        for (auto& v : r["balanced"]) {
            if (!ids.empty()) ids += ' ';
            ids += std::to_string(v.get<int>());
        }
        std::printf("leaves=%d balanced=[%s]\n", r["leaves"].get<int>(), ids.c_str());
        if (r.contains("linear_pick") && !r["linear_pick"].is_null())
            std::printf("linear_pick=%d\n", r["linear_pick"].get<int>());
    } else if (command == "pair") {
        if (!r.contains("pairs")) return;
        std::string ps;
        for (auto& pr : r["pairs"]) {
            if (!ps.empty()) ps += ' ';
            ps += "(" + std::to_string(pr[0].get<int>()) + "," + std::to_string(pr[1].get<int>()) + ")";
        }
        std::printf("mode=%s hub=%d\n", r["mode"].get<std::string>().c_str(), r["hub"].get<int>());
        std::printf("pairs: %s\n", ps.c_str());
    } else if (command == "oracle") {
        if (!r.contains("exact")) return;
        std::printf("exact=%d\n", r["exact"].get<int>());
        print_paths(r["witness"]);
        if (r.contains("match"))
            std::printf("formula=%d match=%s\n", r["formula"].get<int>(),
                        r["match"].get<bool>() ? "yes" : "no");
    } else if (command == "fuzz") {
        if (r["failure"].is_null()) {
            std::printf("fuzz: %d/%d trials passed seed=%llu\n", r["passed"].get<int>(),
                        r["trials"].get<int>(), (unsigned long long)r["seed"].get<std::uint64_t>());
        } else {
            auto& f = r["failure"];
            std::printf("fuzz: trial %d failed: %s\n", f["trial"].get<int>(),
                        f["property"].get<std::string>().c_str());
            std::printf("counterexample: %s\n", f["counterexample"].get<std::string>().c_str());
        }
    } else if (command == "bench") {
        if (!r.contains("pick")) return;
        std::printf("leaves=%d vertices=%d pick=%d\n", r["leaves"].get<int>(),
                    r["vertices"].get<int>(), r["pick"].get<int>());
    } else if (command == "gen") {
        for (auto& t : r["trees"]) std::printf("%s\n", t.get<std::string>().c_str());
    }
}

// Runs a tree-input command over every gathered input and emits the report.
int run_over_inputs(const std::string& command, const std::string& file, bool batch,
                    bool json, const std::function<int(const std::string&, ojson&)>& handler) {
    std::string raw = read_source(file);
    auto inputs = gather_inputs(raw, batch);
    ojson results = ojson::array();
    int exit_code = kExitOk;
    for (auto& [line_no, text] : inputs) {
        ojson r;
        if (batch) r["line"] = line_no;
        int code = handler(text, r);
        exit_code = std::max(exit_code, code);
        results.push_back(std::move(r));
    }
    if (json) {
        ojson report;
        report["command"] = command;
        report["input_digest"] = fnv1a(raw);
        report["results"] = results;
        report["exit_code"] = exit_code;
        std::printf("%s\n", report.dump().c_str());
    } else {
        for (auto& r : results) {
            if (batch) std::printf("# line %d\n", r["line"].get<int>());
            render_text(command, r);
        }
    }
    return exit_code;
}

// Emits the report for a command that takes no tree input.
int emit_report(const std::string& command, bool json, int exit_code, const ojson& result) {
    if (json) {
        ojson report;
        report["command"] = command;
        report["input_digest"] = nullptr;
        report["results"] = ojson::array({result});
        report["exit_code"] = exit_code;
        std::printf("%s\n", report.dump().c_str());
    } else {
        render_text(command, result);
    }
    return exit_code;
}

std::uint64_t env_seed_default() {
    if (const char* s = std::getenv("GREYCOVER_SEED")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-cost colored path covers of white-grey trees"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand too
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file;
    bool batch = false;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", file, "input file ('-' or absent reads stdin)");
        sub->add_flag("--batch", batch, "read one tree per line");
    };

    auto* validate = app.add_subcommand("validate", "check structural rules");
    add_input(validate);
    auto* stats_cmd = app.add_subcommand("stats", "leaf and color counts");
    add_input(stats_cmd);
    auto* cost_cmd = app.add_subcommand("cost", "closed-form minimum cover cost");
    add_input(cost_cmd);
    auto* cover_cmd = app.add_subcommand("cover", "construct an optimal cover");
    add_input(cover_cmd);

    auto* balanced_cmd = app.add_subcommand("balanced", "balanced vertices of an unrooted tree");
    add_input(balanced_cmd);
    auto* pair_cmd = app.add_subcommand("pair", "leaf pairing through a hub");
    add_input(pair_cmd);
    bool antipodal = false;
    VertexId via = -1;
    pair_cmd->add_flag("--antipodal", antipodal, "antipodal pairing (default)");
    auto* via_opt = pair_cmd->add_option("--via", via, "pair greedily through this vertex");
    via_opt->excludes("--antipodal");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force cost");
    add_input(oracle_cmd);
    bool check = false;
    int max_colored = 16;
    oracle_cmd->add_flag("--check", check, "compare against the closed form");
    oracle_cmd->add_option("--max-colored", max_colored, "oracle size limit (default 16)");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized property suite");
    std::uint64_t fuzz_seed = env_seed_default();
    int trials = 100;
    int fuzz_max_colored = 16;
    fuzz_cmd->add_option("--seed", fuzz_seed, "base seed (default $GREYCOVER_SEED or 1)");
    fuzz_cmd->add_option("--trials", trials, "number of trials (default 100)");
    fuzz_cmd->add_option("--max-colored", fuzz_max_colored,
                         "skip the exact oracle above this many colored vertices");

    auto* bench_cmd = app.add_subcommand("bench", "time the linear balanced-vertex finder");
    int bench_leaves = 100000;
    std::uint64_t bench_seed = 1;
    bench_cmd->add_option("--leaves", bench_leaves, "leaf count (default 100000)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "generator seed");

    auto* gen_cmd = app.add_subcommand("gen", "generate random trees");
    GenParams gp;
    gp.seed = 1;
    int count = 1;
    bool gen_unrooted = false;
    int gen_leaves = 8;
    gen_cmd->add_option("--seed", gp.seed, "generator seed");
    gen_cmd->add_option("--count", count, "how many trees")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-vertices", gp.max_vertices, "size cap for rooted trees");
    gen_cmd->add_option("--grey-prob", gp.grey_leaf_probability, "grey-leaf probability");
    gen_cmd->add_option("--chain-prob", gp.chain_probability, "chain extension probability");
    gen_cmd->add_flag("--unrooted", gen_unrooted, "generate an unrooted tree instead");
    gen_cmd->add_option("--leaves", gen_leaves, "leaf count for --unrooted")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);
    bool as_json = format == "json";

    try {
        if (validate->parsed())
            return run_over_inputs("validate", file, batch, as_json, cmd_validate);
        if (stats_cmd->parsed())
            return run_over_inputs("stats", file, batch, as_json, cmd_stats);
        if (cost_cmd->parsed())
            return run_over_inputs("cost", file, batch, as_json, cmd_cost);
        if (cover_cmd->parsed())
            return run_over_inputs("cover", file, batch, as_json, cmd_cover);
        if (balanced_cmd->parsed())
            return run_over_inputs("balanced", file, batch, as_json, cmd_balanced);
        if (pair_cmd->parsed()) {
            bool through = via_opt->count() > 0;
            return run_over_inputs("pair", file, batch, as_json,
                                   [&](const std::string& text, ojson& out) {
                                       return cmd_pair(text, through, via, out);
                                   });
        }
        if (oracle_cmd->parsed())
            return run_over_inputs("oracle", file, batch, as_json,
                                   [&](const std::string& text, ojson& out) {
                                       return cmd_oracle(text, check, max_colored, out);
                                   });
        if (fuzz_cmd->parsed()) {
            ojson r;
            int code = cmd_fuzz(fuzz_seed, trials, fuzz_max_colored, r);
            return emit_report("fuzz", as_json, code, r);
        }
        if (bench_cmd->parsed()) {
            ojson r;
            int code = cmd_bench(bench_leaves, bench_seed, r);
            return emit_report("bench", as_json, code, r);
        }
        if (gen_cmd->parsed()) {
            ojson r;
            int code = cmd_gen(gp, count, gen_unrooted, gen_leaves, r);
            return emit_report("gen", as_json, code, r);
        }
    } catch (const TooLargeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitTooLarge;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
    return kExitOk;
}
