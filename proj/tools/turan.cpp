// Command-line front end: constructions, formulas, matching, containment,
// census and verification campaigns over graph6 files.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "turan/census.hpp"
#include "turan/graph6.hpp"
#include "turan/matching.hpp"

using namespace turan;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

uint64_t default_budget() {
    if (const char* env = std::getenv("TURAN_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return kDefaultBudget;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Graphs arrive as graph6 or as a "u v" edge list; sniff by line shape.
Graph load_graph(const std::string& path) {
    std::string text = read_all(path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.find(' ') != std::string::npos || line.find('\t') != std::string::npos || line[0] == '#')
            return parse_edge_list(text);
        return graph6_decode(line);
    }
    throw std::invalid_argument("no graph in " + path);
}

// Family specifiers: aux:k=K, ahs:k=K, g6:STR[,STR...], file:PATH.
ForbiddenFamily parse_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family spec needs a prefix: " + spec);
    std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (head == "aux" || head == "ahs") {
        if (rest.rfind("k=", 0) != 0) throw std::invalid_argument("family spec: expected k=K");
        int k = std::stoi(rest.substr(2));
        return head == "aux" ? aux_family(k) : ahs_family(k);
    }
    ForbiddenFamily fam;
    fam.name = spec;
    if (head == "g6") {
        std::istringstream in(rest);
        std::string item;
        while (std::getline(in, item, ',')) fam.patterns.push_back(graph6_decode(item));
    } else if (head == "file") {
        fam.patterns = graph6_read_file(rest);
    } else {
        throw std::invalid_argument("unknown family spec prefix: " + head);
    }
    if (fam.patterns.empty()) throw std::invalid_argument("family spec has no patterns");
    for (const Graph& g : fam.patterns)
        if (g.edge_count() == 0) throw std::invalid_argument("family patterns need at least one edge");
    return fam;
}

std::string join_ints(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

int exit_code_for(const std::vector<VerifyCheck>& checks) {
    bool fail = false, unknown = false;
    for (const auto& c : checks) {
        fail |= c.status == CheckStatus::Fail;
        unknown |= c.status == CheckStatus::Unknown;
    }
    return fail ? kExitFail : unknown ? kExitUnknown : kExitPass;
}

struct CampaignConfig {
    std::vector<std::string> trees;
    std::vector<int> p_values;
    std::vector<int> n_values;
    std::vector<std::string> modes;
    uint64_t budget = default_budget();
    double time_budget = 0;
    int jobs = 1;
    std::string out = "campaign_report.txt";
};

CampaignConfig parse_campaign_config(const std::string& path) {
    CampaignConfig cfg;
    std::istringstream in(read_all(path));
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("campaign config: expected key=value: " + line);
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "tree")
            cfg.trees.push_back(value);
        else if (key == "p")
            cfg.p_values.push_back(std::stoi(value));
        else if (key == "n")
            cfg.n_values.push_back(std::stoi(value));
        else if (key == "mode")
            cfg.modes.push_back(value);
        else if (key == "budget")
            cfg.budget = std::stoull(value);
        else if (key == "time-budget")
            cfg.time_budget = std::stod(value);
        else if (key == "jobs")
            cfg.jobs = std::stoi(value);
        else if (key == "out")
            cfg.out = value;
        else
            throw std::invalid_argument("campaign config: unknown key " + key);
    }
    if (cfg.trees.empty()) throw std::invalid_argument("campaign config: no trees listed");
    if (cfg.p_values.empty()) cfg.p_values.push_back(3);
    if (cfg.n_values.empty()) throw std::invalid_argument("campaign config: no n values listed");
    if (cfg.modes.empty()) cfg.modes.push_back("free");
    if (cfg.jobs < 1) throw std::invalid_argument("campaign config: jobs must be positive");
    return cfg;
}

VerifyMode parse_mode(const std::string& mode) {
    if (mode == "free") return VerifyMode::Free;
    if (mode == "perturb") return VerifyMode::Perturb;
    if (mode == "exhaustive") return VerifyMode::Exhaustive;
    throw std::invalid_argument("unknown mode " + mode);
}

int run_campaign(const CampaignConfig& cfg) {
    struct Item {
        std::string tree_path, mode;
        int p, n;
    };
    std::vector<Item> items;
    for (const auto& tree : cfg.trees)
        for (const auto& mode : cfg.modes)
            for (int p : cfg.p_values)
                for (int n : cfg.n_values) items.push_back({tree, mode, p, n});

    auto run_item = [&](const Item& item) {
        std::string prefix =
            "tree=" + item.tree_path + " mode=" + item.mode + " ";
        std::vector<std::string> lines;
        try {
            Tree t = analyze_tree(load_graph(item.tree_path));
            auto checks = verify_theorem(t, item.p, item.n, item.n, parse_mode(item.mode), cfg.budget,
                                         cfg.time_budget);
            for (const auto& c : checks)
                lines.push_back(prefix + c.id + " status=" + to_string(c.status) + " detail=[" + c.detail + "]");
        } catch (const std::exception& e) {
            lines.push_back(prefix + "p=" + std::to_string(item.p) + " n=" + std::to_string(item.n) +
                            " status=INFO detail=[skipped: " + e.what() + "]");
        }
        return lines;
    };

    std::vector<std::vector<std::string>> results(items.size());
    if (cfg.jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = run_item(items[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                results[i] = run_item(items[i]);
        };
        std::vector<std::future<void>> pool;
        for (int j = 0; j < cfg.jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    std::vector<std::string> report;
    for (const auto& lines : results) report.insert(report.end(), lines.begin(), lines.end());
    std::sort(report.begin(), report.end());

    std::ofstream out(cfg.out);
    if (!out) throw std::invalid_argument("cannot write " + cfg.out);
    for (const auto& line : report) out << line << "\n";

    int fails = 0, unknowns = 0;
    for (const auto& line : report) {
        if (line.find("status=FAIL") != std::string::npos) ++fails;
        if (line.find("status=UNKNOWN") != std::string::npos) ++unknowns;
    }
    std::cout << "report=" << cfg.out << " checks=" << report.size() << " fails=" << fails
              << " unknowns=" << unknowns << "\n";
    return fails ? kExitFail : unknowns ? kExitUnknown : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal constructions, census and verification for tree edge blow-ups"};
    app.require_subcommand(1);
    uint64_t budget = default_budget();

    // construct
    std::string construct_spec;
    bool construct_edges = false, construct_min_n = false;
    int payload_class = 1;
    auto* cmd_construct = app.add_subcommand("construct", "materialize a construction spec as graph6");
    cmd_construct->add_option("spec", construct_spec, "e.g. \"H1 n=20 p=3 a=2 k=2\"")->required();
    cmd_construct->add_flag("--edges", construct_edges, "print the edge count instead of graph6");
    cmd_construct->add_flag("--min-n", construct_min_n, "print the minimal feasible n and exit");
    cmd_construct->add_option("--payload-class", payload_class, "class hosting the payload (1 = largest)");

    // blowup
    std::string blowup_in;
    int blowup_q = 0;
    auto* cmd_blowup = app.add_subcommand("blowup", "edge blow-up of a graph by cliques of size q");
    cmd_blowup->add_option("--in", blowup_in, "graph file (graph6 or edge list; - for stdin)")->required();
    cmd_blowup->add_option("--q", blowup_q, "clique size (>= 2)")->required();

    // formula
    std::string formula_action, formula_name;
    std::vector<long long> formula_args;
    auto* cmd_formula = app.add_subcommand("formula", "evaluate a closed-form edge-count function");
    cmd_formula->add_option("action", formula_action, "eval")->required();
    cmd_formula->add_option("name", formula_name, "g1|g2|g|gd|turan|ch|f")->required();
    cmd_formula->add_option("args", formula_args, "integer arguments");

    // dispatch
    std::string dispatch_tree;
    int dispatch_p = 0, dispatch_n = 0;
    bool dispatch_swap = false;
    auto* cmd_dispatch = app.add_subcommand("dispatch", "extremal case, value and constructions for a tree");
    cmd_dispatch->add_option("--tree", dispatch_tree, "tree file")->required();
    cmd_dispatch->add_option("--p", dispatch_p, "blow-up parameter p (>= 3)")->required();
    cmd_dispatch->add_option("--n", dispatch_n, "host order n")->required();
    cmd_dispatch->add_flag("--swap", dispatch_swap, "swap equal-size color classes");

    // matching
    std::string matching_in;
    auto* cmd_matching = app.add_subcommand("matching", "maximum matching");
    cmd_matching->add_option("--in", matching_in, "graph file")->required();

    // gallai-edmonds
    std::string ge_in;
    auto* cmd_ge = app.add_subcommand("gallai-edmonds", "Gallai-Edmonds decomposition");
    cmd_ge->add_option("--in", ge_in, "graph file")->required();

    // contains
    std::string contains_host, contains_pattern;
    bool contains_symmetry = false;
    auto* cmd_contains = app.add_subcommand("contains", "subgraph containment search");
    cmd_contains->add_option("--host", contains_host)->required();
    cmd_contains->add_option("--pattern", contains_pattern)->required();
    cmd_contains->add_option("--budget", budget, "node budget");
    cmd_contains->add_flag("--symmetry", contains_symmetry, "prune by host automorphism orbits");

    // census
    std::string census_family, census_mode = "exhaustive";
    int census_max_n = 0;
    int census_delta_cap = -1, census_nu_cap = -1;
    uint64_t census_nodes = UINT64_MAX;
    double census_time = 0;
    auto* cmd_census = app.add_subcommand("census", "max edges and extremal graphs of a free family");
    cmd_census->add_option("--family", census_family, "aux:k=K | ahs:k=K | g6:... | file:PATH")->required();
    cmd_census->add_option("--max-n", census_max_n, "max vertices")->required();
    cmd_census->add_option("--mode", census_mode, "exhaustive (all extremal) | bound (best only)");
    cmd_census->add_option("--delta-cap", census_delta_cap, "extra max-degree cap");
    cmd_census->add_option("--nu-cap", census_nu_cap, "extra matching-number cap");
    cmd_census->add_option("--node-budget", census_nodes, "generation node budget");
    cmd_census->add_option("--time-budget", census_time, "generation time budget in seconds");

    // verify
    std::string verify_tree, verify_mode = "free";
    int verify_p = 0, verify_n_from = 0, verify_n_to = 0;
    auto* cmd_verify = app.add_subcommand("verify", "check constructions against the dispatch value");
    cmd_verify->add_option("--tree", verify_tree)->required();
    cmd_verify->add_option("--p", verify_p)->required();
    cmd_verify->add_option("--n-from", verify_n_from)->required();
    cmd_verify->add_option("--n-to", verify_n_to)->required();
    cmd_verify->add_option("--mode", verify_mode, "free|perturb|exhaustive");
    cmd_verify->add_option("--budget", budget, "containment node budget");

    // split-family
    std::string split_in, split_restrict;
    size_t split_cap = 100000;
    auto* cmd_split = app.add_subcommand("split-family", "splitting family of a forest, deduped");
    cmd_split->add_option("--in", split_in, "forest file")->required();
    cmd_split->add_option("--cap", split_cap, "family size cap");
    cmd_split->add_option("--restrict", split_restrict, "comma-separated vertices to split");

    // analyze-tree
    std::string analyze_in;
    bool analyze_swap = false;
    auto* cmd_analyze = app.add_subcommand("analyze-tree", "bipartition and dispatch parameters");
    cmd_analyze->add_option("--in", analyze_in, "tree file")->required();
    cmd_analyze->add_flag("--swap", analyze_swap, "swap equal-size color classes");

    // campaign
    std::string campaign_config, campaign_out;
    auto* cmd_campaign = app.add_subcommand("campaign", "run a config-driven verification matrix");
    cmd_campaign->add_option("--config", campaign_config)->required();
    cmd_campaign->add_option("--out", campaign_out, "report path (overrides config)");

    // edges
    std::string edges_in = "-";
    auto* cmd_edges = app.add_subcommand("edges", "edge count of each input graph");
    cmd_edges->add_option("--in", edges_in, "graph6 lines (- for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_construct) {
            ConstructionSpec spec = ConstructionSpec::parse(construct_spec);
            if (construct_min_n) {
                std::cout << min_feasible_n(spec) << "\n";
                return kExitPass;
            }
            Graph g = build_construction(spec, payload_class);
            std::cout << (construct_edges ? std::to_string(g.edge_count()) : graph6_encode(g)) << "\n";
            return kExitPass;
        }
        if (*cmd_blowup) {
            std::cout << graph6_encode(edge_blowup(load_graph(blowup_in), blowup_q)) << "\n";
            return kExitPass;
        }
        if (*cmd_formula) {
            if (formula_action != "eval") throw std::invalid_argument("formula: unknown action " + formula_action);
            const auto& a = formula_args;
            auto need = [&](size_t count) {
                if (a.size() != count)
                    throw std::invalid_argument("formula " + formula_name + ": expected " +
                                                std::to_string(count) + " arguments");
            };
            long long value;
            if (formula_name == "g1") {
                need(1);
                value = g1(a[0]);
            } else if (formula_name == "g2") {
                need(1);
                value = g2(a[0]);
            } else if (formula_name == "g") {
                need(3);
                value = g_base(a[0], a[1], a[2]);
            } else if (formula_name == "gd") {
                need(4);
                value = g_reg(a[0], a[1], a[2], a[3]);
            } else if (formula_name == "turan") {
                need(2);
                value = turan_edge_count(a[0], a[1]);
            } else if (formula_name == "ch") {
                need(2);
                value = chvatal_hanson(a[0], a[1]);
            } else if (formula_name == "f") {
                need(2);
                value = component_edge_bound(a[0], a[1]);
            } else {
                throw std::invalid_argument("formula: unknown name " + formula_name);
            }
            std::cout << value << "\n";
            return kExitPass;
        }
        if (*cmd_dispatch) {
            Tree t = analyze_tree(load_graph(dispatch_tree), dispatch_swap);
            TheoremCase c = dispatch(extract_params(t), dispatch_n, dispatch_p);
            std::cout << "case=" << to_string(c.tag) << "\n" << "value=" << c.value << "\n";
            for (const auto& spec : c.extremal) std::cout << "extremal=" << spec.to_text() << "\n";
            return kExitPass;
        }
        if (*cmd_matching) {
            MatchingWitness w = max_matching(load_graph(matching_in));
            std::cout << "nu=" << w.size << "\n";
            std::string edges;
            for (size_t i = 0; i < w.edges.size(); ++i)
                edges += (i ? "," : "") + std::to_string(w.edges[i].first) + "-" +
                         std::to_string(w.edges[i].second);
            std::cout << "matching=" << edges << "\n";
            return kExitPass;
        }
        if (*cmd_ge) {
            GallaiEdmondsRecord rec = gallai_edmonds(load_graph(ge_in));
            std::cout << "nu=" << rec.nu << "\n" << "S=" << join_ints(rec.S) << "\n";
            auto print_comps = [](const char* label, const std::vector<std::vector<int>>& comps) {
                std::cout << label << "=";
                for (size_t i = 0; i < comps.size(); ++i) std::cout << (i ? "|" : "") << join_ints(comps[i]);
                std::cout << "\n";
            };
            print_comps("odd", rec.odd_components);
            print_comps("even", rec.even_components);
            return kExitPass;
        }
        if (*cmd_contains) {
            FindResult r = find_subgraph(load_graph(contains_host), load_graph(contains_pattern), budget,
                                         contains_symmetry);
            if (r.outcome == FindOutcome::Found) {
                std::string map;
                for (size_t i = 0; i < r.embedding->map.size(); ++i)
                    map += (i ? "," : "") + std::to_string(i) + ":" + std::to_string(r.embedding->map[i]);
                std::cout << "map=" << map << "\n";
                return kExitPass;
            }
            std::cout << (r.outcome == FindOutcome::NotFound ? "not-found" : "unknown")
                      << " nodes=" << r.nodes << "\n";
            return r.outcome == FindOutcome::NotFound ? kExitFail : kExitUnknown;
        }
        if (*cmd_census) {
            CensusQuery q;
            q.family = parse_family(census_family);
            q.max_vertices = census_max_n;
            if (census_delta_cap >= 0) q.delta_cap = census_delta_cap;
            if (census_nu_cap >= 0) q.nu_cap = census_nu_cap;
            q.node_budget = census_nodes;
            q.time_budget_seconds = census_time;
            if (census_mode == "exhaustive")
                q.mode = CensusMode::AllExtremal;
            else if (census_mode == "bound")
                q.mode = CensusMode::MaxEdges;
            else
                throw std::invalid_argument("census: unknown mode " + census_mode);
            CensusResult r = max_edges_free(q);
            std::cout << "best=" << r.best_edges << "\n"
                      << "count=" << r.extremal.size() << "\n"
                      << "nodes=" << r.nodes_explored << "\n"
                      << "status=" << (r.complete ? "exhaustive" : "partial") << "\n";
            for (const Graph& g : r.extremal) std::cout << "extremal=" << graph6_encode(g) << "\n";
            return r.complete ? kExitPass : kExitUnknown;
        }
        if (*cmd_verify) {
            Tree t = analyze_tree(load_graph(verify_tree));
            auto checks = verify_theorem(t, verify_p, verify_n_from, verify_n_to, parse_mode(verify_mode), budget);
            for (const auto& c : checks)
                std::cout << to_string(c.status) << " " << c.id << " " << c.detail << "\n";
            return exit_code_for(checks);
        }
        if (*cmd_split) {
            Graph g = load_graph(split_in);
            std::vector<int> restrict_to;
            std::optional<std::vector<int>> restriction;
            if (!split_restrict.empty()) {
                std::istringstream in(split_restrict);
                std::string item;
                while (std::getline(in, item, ',')) restrict_to.push_back(std::stoi(item));
                restriction = restrict_to;
            }
            auto family = splitting_family(g, restriction ? &*restriction : nullptr, split_cap);
            for (const Graph& member : family) std::cout << graph6_encode(member) << "\n";
            return kExitPass;
        }
        if (*cmd_analyze) {
            Tree t = analyze_tree(load_graph(analyze_in), analyze_swap);
            TreeParams params = extract_params(t);
            std::cout << "a=" << params.a << " k=" << params.k << " A0=" << params.a0.size()
                      << " B0=" << params.b0.size() << " b="
                      << (params.b ? std::to_string(*params.b) : std::string("none")) << "\n";
            return kExitPass;
        }
        if (*cmd_campaign) {
            CampaignConfig cfg = parse_campaign_config(campaign_config);
            if (!campaign_out.empty()) cfg.out = campaign_out;
            return run_campaign(cfg);
        }
        if (*cmd_edges) {
            std::string text = read_all(edges_in);
            std::istringstream in(text);
            std::string line;
            bool any = false;
            while (std::getline(in, line)) {
                if (line.empty() || line == "\r") continue;
                std::cout << graph6_decode(line).edge_count() << "\n";
                any = true;
            }
            if (!any) throw std::invalid_argument("edges: no input graphs");
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    }
    return kExitUsage;
}
