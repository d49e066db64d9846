#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kohnert/closure.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/export.hpp"
#include "kohnert/io.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/verify.hpp"

namespace {

using namespace kohnert;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeedFlags {
    std::string alpha;
    std::string perm;
    std::string grid_file;
    std::string json_file;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--alpha", alpha, "weak composition, e.g. 1,1,3,2");
        auto* p = cmd->add_option("--perm", perm, "permutation in one-line form, e.g. [4,2,5,3,1]");
        auto* g = cmd->add_option("--grid", grid_file, "grid text file ('-' for stdin)");
        auto* j = cmd->add_option("--json", json_file, "diagram JSON file ('-' for stdin)");
        a->excludes(p)->excludes(g)->excludes(j);
        p->excludes(g)->excludes(j);
        g->excludes(j);
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Diagram load_seed(const SeedFlags& flags, const CLI::App& cmd) {
    if (cmd.count("--alpha")) return key_diagram(parse_composition(flags.alpha));
    if (cmd.count("--perm")) return rothe_diagram(parse_permutation(flags.perm));
    if (cmd.count("--grid")) return parse_grid(read_input(flags.grid_file));
    if (cmd.count("--json")) {
        const std::string text = read_input(flags.json_file);
        try {
            return diagram_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(1, 1, e.what());
        }
    }
    throw UsageError("one of --alpha, --perm, --grid, --json is required");
}

MoveSet parse_moves(const std::string& name) {
    if (name == "kohnert") return MoveSet::KohnertOnly;
    if (name == "ghost") return MoveSet::GhostOnly;
    return MoveSet::Both;
}

std::size_t node_cap_from_env() {
    if (const char* env = std::getenv("KOHNERT_NODE_CAP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError("KOHNERT_NODE_CAP must be a positive integer");
    }
    return default_node_cap;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kohnert diagrams with ghost cells: closures, posets, polynomials"};
    app.require_subcommand(1);

    std::optional<std::size_t> cap_flag;
    app.add_option("--node-cap", cap_flag, "abort closures larger than this many diagrams")
        ->check(CLI::PositiveNumber);

    // show
    auto* show = app.add_subcommand("show", "print a diagram as grid text and JSON");
    SeedFlags show_seed;
    show_seed.attach(show);

    // closure
    auto* closure = app.add_subcommand("closure", "emit the move closure as JSON");
    SeedFlags closure_seed;
    closure_seed.attach(closure);
    std::string closure_moves = "ghost";
    std::string closure_out;
    closure->add_option("--moves", closure_moves, "move set")->check(CLI::IsMember({"kohnert", "ghost", "both"}));
    closure->add_option("--out", closure_out, "output file");

    // poset
    auto* poset = app.add_subcommand("poset", "check properties of the ghost Kohnert poset");
    SeedFlags poset_seed;
    poset_seed.attach(poset);
    std::vector<std::string> checks{"all"};
    bool strict_bounded = false;
    poset->add_option("--check", checks, "bounded, ranked, jsl, lattice, all")
        ->delimiter(',')
        ->check(CLI::IsMember({"bounded", "ranked", "jsl", "lattice", "all"}));
    poset->add_flag("--strict-bounded", strict_bounded, "exit 1 when the poset is not bounded");

    // hasse
    auto* hasse = app.add_subcommand("hasse", "write the Hasse diagram");
    SeedFlags hasse_seed;
    hasse_seed.attach(hasse);
    bool hasse_dot = false;
    bool hasse_json = false;
    std::string hasse_moves = "ghost";
    std::string hasse_out;
    auto* dot_flag = hasse->add_flag("--dot", hasse_dot, "Graphviz DOT (default)");
    hasse->add_flag("--covers", hasse_json, "cover pairs as JSON")->excludes(dot_flag);
    hasse->add_option("--moves", hasse_moves, "move set")->check(CLI::IsMember({"kohnert", "ghost", "both"}));
    hasse->add_option("--out", hasse_out, "output file");

    // poly
    auto* poly = app.add_subcommand("poly", "print a closure polynomial");
    SeedFlags poly_seed;
    poly_seed.attach(poly);
    std::string family;
    std::string poly_format = "text";
    std::vector<long long> point;
    poly->add_option("--family", family, "key, lascoux, kohnert, ghost")
        ->required()
        ->check(CLI::IsMember({"key", "lascoux", "kohnert", "ghost"}));
    poly->add_option("--format", poly_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    poly->add_option("--at", point, "evaluate at x1,x2,...")->delimiter(',');

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "check every seed in a box");
    ScanOptions scan_opts;
    bool no_timing = false;
    std::string scan_out;
    scan_cmd->add_option("--rows", scan_opts.rows, "box height")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--cols", scan_opts.cols, "box width")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--cells", scan_opts.max_cells, "maximum cells per seed")->required()->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--threads", scan_opts.threads, "worker threads (0 = all cores)");
    scan_cmd->add_flag("--no-timing", no_timing, "omit elapsed_ms for byte-stable output");
    scan_cmd->add_option("--out", scan_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const std::size_t node_cap = cap_flag ? *cap_flag : node_cap_from_env();

        if (*show) {
            const Diagram d = load_seed(show_seed, *show);
            const std::string grid = render_grid(d);
            std::cout << grid << (grid.empty() ? "" : "\n") << to_json(d).dump() << "\n";
            return exit_ok;
        }

        if (*closure) {
            const Diagram d = load_seed(closure_seed, *closure);
            const ClosureGraph g = generate(d, parse_moves(closure_moves), node_cap);
            write_output(to_json(g).dump() + "\n", closure_out);
            return exit_ok;
        }

        if (*poset) {
            const Diagram d = load_seed(poset_seed, *poset);
            const TheoremReport report = check_seed(d, node_cap);
            nlohmann::json out = to_json(report);
            const bool all = std::find(checks.begin(), checks.end(), "all") != checks.end();
            auto wanted = [&](const char* name) {
                return all || std::find(checks.begin(), checks.end(), name) != checks.end();
            };
            if (!wanted("bounded")) out.erase("bounded");
            if (!wanted("ranked")) out.erase("ranked");
            if (!wanted("jsl")) out.erase("join_semilattice");
            if (!wanted("lattice")) out.erase("lattice");
            std::cout << out.dump(2) << "\n";
            if (!report.violations.empty()) {
                std::cerr << report.violations.size() << " violation(s)\n";
                return exit_failed;
            }
            if (strict_bounded && !report.bounded) {
                std::cerr << "poset is not bounded (" << report.minimal_elements << " minimal elements)\n";
                return exit_failed;
            }
            return exit_ok;
        }

        if (*hasse) {
            const Diagram d = load_seed(hasse_seed, *hasse);
            const ClosureGraph g = generate(d, parse_moves(hasse_moves), node_cap);
            const Poset p = poset_from_closure(g);
            write_output(hasse_json ? covers_to_json(p).dump() + "\n" : to_dot(g, p), hasse_out);
            return exit_ok;
        }

        if (*poly) {
            SparsePolynomial p;
            if (family == "key" || family == "lascoux") {
                if (!poly->count("--alpha")) throw UsageError("--family " + family + " needs --alpha");
                const WeakComposition alpha = parse_composition(poly_seed.alpha);
                p = family == "key" ? key_polynomial(alpha, node_cap) : lascoux_polynomial(alpha, node_cap);
            } else {
                const Diagram d = load_seed(poly_seed, *poly);
                p = family == "kohnert" ? kohnert_polynomial(d, node_cap) : ghost_polynomial(d, node_cap);
            }
            if (poly->count("--at")) {
                std::cout << evaluate(p, point).str() << "\n";
            } else if (poly_format == "json") {
                std::cout << to_json(p).dump() << "\n";
            } else {
                std::cout << render(p) << "\n";
            }
            return exit_ok;
        }

        if (*scan_cmd) {
            scan_opts.node_cap = node_cap;
            const ScanSummary summary = scan(scan_opts);
            write_output(to_json(summary, !no_timing).dump(2) + "\n", scan_out);
            if (!summary.violations.empty()) {
                std::cerr << summary.violations.size() << " violation(s)\n";
            }
            if (!summary.cap_exceeded.empty()) {
                std::cerr << summary.cap_exceeded.size() << " seed(s) exceeded the node cap\n";
            }
            return summary.ok() ? exit_ok : exit_failed;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
