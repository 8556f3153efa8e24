#include "bdc/config.hpp"
#include "bdc/poissonmap.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bdc;
using nlohmann::json;

namespace {

struct Options {
    std::string config, out, suite = "all", format, order = "rows-cols", point;
    std::uint64_t seed = 0;
    int trials = 0;
};

// Raised when a verification ran but did not pass.
struct Failed {
    std::string text;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InvalidInput("cannot write " + o.out);
    f << text;
}

Config load(const Options& o) {
    if (o.config.empty()) throw InvalidInput("--config is required");
    Config c = load_config(o.config);
    if (o.seed) c.plan.master_seed = o.seed;
    if (o.trials) c.plan.trials = o.trials;
    return c;
}

SlotOrder parse_order(const std::string& s) {
    if (s == "rows-cols") return SlotOrder::RowsCols;
    if (s == "cols-rows") return SlotOrder::ColsRows;
    throw InvalidInput("--order must be rows-cols or cols-rows");
}

MatQ point_or_sample(const Options& o, const Config& c) {
    if (o.point.empty()) return sample_generic(c.pair, c.plan, 0);
    std::ifstream in(o.point);
    if (!in) throw InvalidInput("cannot open point " + o.point);
    std::stringstream ss;
    ss << in.rdbuf();
    MatQ u = parse_matrix_json(ss.str());
    if (u.rows() != c.pair.n() || u.cols() != c.pair.n()) throw InvalidInput("point has the wrong size");
    return u;
}

json runs_json(const RunPartition& r) {
    json a = json::array();
    for (const Interval& iv : r.runs) a.push_back({iv.lo, iv.hi});
    return a;
}

json all_runs(const BDPair& p) {
    json j;
    const std::pair<const char*, Side> sides[] = {{"x_rows", Side::RowsOfX},
                                                  {"x_cols", Side::ColsOfX},
                                                  {"y_rows", Side::RowsOfY},
                                                  {"y_cols", Side::ColsOfY}};
    for (auto [name, side] : sides) {
        RunPartition r = runs(p, side);
        j[name] = runs_json(r);
        j[std::string(name) + "_dual"] = runs_json(dual_runs(r));
    }
    return j;
}

json path_list(const std::vector<AlternatingPath>& ps) {
    json a = json::array();
    for (const auto& path : ps) a.push_back(path_string(path));
    return a;
}

int cmd_validate(const Options& o) {
    Config c = load(o);
    PathDecomposition d = decompose(build_graph(c.pair), c.pair);
    emit(o, json{{"valid", true},
                 {"config", config_to_json(c)},
                 {"runs", all_runs(c.pair)},
                 {"aperiodic", d.aperiodic()},
                 {"cycles", path_list(d.cycles)}}
                .dump(2));
    return 0;
}

int cmd_runs(const Options& o) {
    emit(o, all_runs(load(o).pair).dump(2));
    return 0;
}

int cmd_graph(const Options& o) {
    Config c = load(o);
    BDGraph g = build_graph(c.pair);
    if (o.format.empty() || o.format == "dot") {
        emit(o, to_dot(g));
        return 0;
    }
    if (o.format != "json") throw InvalidInput("--format must be dot or json");
    json edges = json::array();
    for (const Edge& e : g.edges) {
        const char* kind = e.kind == EdgeKind::Horizontal   ? "horizontal"
                           : e.kind == EdgeKind::Loop         ? "loop"
                           : e.kind == EdgeKind::InclinedDown ? "down"
                                                              : "up";
        edges.push_back({{"kind", kind}, {"from", vertex_name(e.src)}, {"to", vertex_name(e.dst)}});
    }
    emit(o, json{{"n", g.n}, {"edges", edges}}.dump(2));
    return 0;
}

int cmd_paths(const Options& o) {
    Config c = load(o);
    PathDecomposition d = decompose(build_graph(c.pair), c.pair);
    std::string text = json{{"paths", path_list(d.paths)}, {"cycles", path_list(d.cycles)}}.dump(2);
    if (!d.aperiodic()) throw Failed{text};
    emit(o, text);
    return 0;
}

int cmd_seed(const Options& o) {
    Config c = load(o);
    Seed seed(c.pair);
    MatQ u = point_or_sample(o, c);
    auto values = seed.eval_all<Rat>(u);
    json fns = json::array();
    for (const auto& [ij, f] : seed.functions()) {
        json e = {{"i", ij.first}, {"j", ij.second}, {"frozen", f.frozen}, {"degree", f.degree()}};
        json sub = json::array();
        for (Point q : f.subordinates.points()) sub.push_back({q.first, q.second});
        e["subordinates"] = sub;
        if (f.host) {
            auto sym = f.host->symbolic();
            json m = json::array();
            for (int r = f.anchor; r <= f.host->size(); ++r) {
                json row = json::array();
                for (int col = f.anchor; col <= f.host->size(); ++col) row.push_back(sym[r - 1][col - 1]);
                m.push_back(row);
            }
            e["matrix"] = m;
        } else {
            e["matrix"] = "det";
        }
        e["value"] = values.at(ij).str();
        fns.push_back(e);
    }
    json paths = json::array();
    for (const auto& path : seed.decomposition().paths) {
        auto [l, ld] = glued_matrices(c.pair, path);
        paths.push_back({{"path", path_string(path)}, {"L", l.symbolic()}, {"Ldag", ld.symbolic()}});
    }
    emit(o, json{{"config", config_to_json(c)}, {"point", matrix_json(u)}, {"paths", paths}, {"functions", fns}}
                .dump(2));
    return 0;
}

int cmd_quiver(const Options& o) {
    Config c = load(o);
    Quiver q = exotic_quiver(c.pair);
    if (o.format.empty() || o.format == "json") emit(o, quiver_to_json(q));
    else if (o.format == "dot") emit(o, quiver_to_dot(q));
    else throw InvalidInput("--format must be dot or json");
    return 0;
}

int cmd_bracket(const Options& o) {
    Config c = load(o);
    Seed seed(c.pair);
    MatQ om = omega_matrix(seed, bracket_for(c, BracketKind::Exotic, parse_order(o.order)), point_or_sample(o, c));
    const int n = c.pair.n();
    std::ostringstream os;
    os << "# {log f_ij, log f_kl}, rows (i,j), columns (k,l), row-major\n";
    os << "ij";
    for (int k = 0; k < n * n; ++k) os << ",(" << k / n + 1 << ";" << k % n + 1 << ")";
    os << "\n";
    for (int a = 0; a < n * n; ++a) {
        os << "(" << a / n + 1 << ";" << a % n + 1 << ")";
        for (int b = 0; b < n * n; ++b) os << "," << om(a, b).str();
        os << "\n";
    }
    emit(o, os.str());
    return 0;
}

int cmd_hmap(const Options& o) {
    Config c = load(o);
    MatQ u = point_or_sample(o, c);
    auto h = h_maps<Rat>(c.pair, u);
    emit(o, json{{"U", matrix_json(u)}, {"Hr", matrix_json(h.hr)}, {"Hc", matrix_json(h.hc)}, {"h", matrix_json(h.h)}}
                .dump(2));
    return 0;
}

int cmd_verify(const Options& o) {
    Config c = load(o);
    json out = json::array();
    bool ok = true;
    for (const CheckReport& r : run_suite(o.suite, c.pair, c.plan)) {
        ok = ok && r.pass;
        out.push_back(to_json(r));
    }
    if (!ok) throw Failed{out.dump(2)};
    emit(o, out.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exotic cluster structures on SL_n from pairs of Belavin-Drinfeld triples"};
    Options o;
    app.add_option("--config", o.config, "JSON config with n and the row/column triples");
    app.add_option("--out", o.out, "Output file (default stdout)");
    app.add_option("--seed", o.seed, "Master seed for sampling");
    app.add_option("--trials", o.trials, "Number of random points per identity");
    app.add_option("--suite", o.suite, "verify: suite name or all");
    app.add_option("--format", o.format, "dot or json");
    app.add_option("--order", o.order, "Bracket slot order: rows-cols or cols-rows");
    app.add_option("--point", o.point, "Matrix JSON file to evaluate at");
    app.require_subcommand(1);

    struct Command {
        std::string name, help;
        int (*fn)(const Options&);
    };
    const std::vector<Command> commands = {
        {"validate", "Check the configured pair and report aperiodicity", cmd_validate},
        {"runs", "Row and column runs with their duals", cmd_runs},
        {"graph", "BD graph as DOT or JSON", cmd_graph},
        {"paths", "Maximal alternating paths and cycles", cmd_paths},
        {"seed", "Seed functions, blocks and subordinate exits", cmd_seed},
        {"quiver", "Exotic quiver as JSON or DOT", cmd_quiver},
        {"bracket", "Log-bracket matrix of the seed functions (CSV)", cmd_bracket},
        {"hmap", "H^r, H^c and h(U) at a point", cmd_hmap},
        {"verify", "Run a verification suite", cmd_verify}};
    for (const auto& c : commands) app.add_subcommand(c.name, c.help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        for (const auto& c : commands)
            if (c.name == name) return c.fn(o);
    } catch (const Failed& f) {
        emit(o, f.text);
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonGeneric& e) {
        std::cerr << "non-generic: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimit& e) {
        std::cerr << "non-generic: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
