#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kohnert/closure.hpp"
#include "kohnert/io.hpp"
#include "kohnert/moves.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/structure.hpp"

namespace kohnert {

// Names of the checked properties, as they appear in reports.
namespace theorem {
inline constexpr const char* ranked = "ranked_by_max_ghosts";
inline constexpr const char* covers = "covers_are_single_ghost_moves";
inline constexpr const char* join_semilattice = "join_semilattice";
inline constexpr const char* lattice_iff_bounded = "lattice_iff_bounded";
inline constexpr const char* bounded_increasing = "bounded_implies_increasing_free_cells";
inline constexpr const char* free_cell_phrasings = "free_cell_phrasings_agree";
inline constexpr const char* seed_is_top = "seed_is_unique_maximum";
inline constexpr const char* co_covered_meet = "co_covered_meet_or_no_lower_bound";
inline constexpr const char* diamond_meet = "diamond_bottom_is_meet";
inline constexpr const char* diamond_moves = "diamond_moves_commute";
inline constexpr const char* crossing_meet = "crossing_covers_have_meet";
} // namespace theorem

struct Violation {
    Diagram seed;
    std::string theorem;
    std::string detail;

    auto operator<=>(const Violation& other) const {
        return std::tie(seed, theorem, detail) <=> std::tie(other.seed, other.theorem, other.detail);
    }
    bool operator==(const Violation&) const = default;
};

struct TheoremReport {
    Diagram seed;
    std::size_t nodes = 0;
    std::size_t covers = 0;
    std::size_t max_ghosts = 0;
    std::size_t minimal_elements = 0;
    bool ranked = false;
    bool bounded = false;
    bool join_semilattice = false;
    bool lattice = false;
    std::vector<int> free_cell_columns;
    bool strictly_increasing = false;
    std::vector<Violation> violations;
};

namespace detail {

inline std::string describe(const Diagram& d) {
    std::string grid = render_grid(d);
    std::replace(grid.begin(), grid.end(), '\n', '/');
    return grid.empty() ? "<empty>" : grid;
}

// At most one free cell per column, and reading columns left to right the
// free cells' rows strictly decrease.
inline bool free_cells_descend_left_to_right(const Diagram& d) {
    std::vector<Position> cells = free_cells(d);
    std::sort(cells.begin(), cells.end(), [](Position a, Position b) { return a.col < b.col; });
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i - 1].col == cells[i].col || cells[i - 1].row <= cells[i].row) return false;
    }
    return true;
}

} // namespace detail

/// Builds the ghost Kohnert poset of a ghost-free seed and checks every
/// structural property this library asserts about it. Violations name the
/// property and carry the offending elements as grid text.
inline TheoremReport check_seed(const Diagram& seed, std::size_t node_cap = default_node_cap) {
    if (seed.ghost_count() != 0) throw GhostSeedError("theorem checks require a seed without ghost cells");

    const ClosureGraph g = generate(seed, MoveSet::GhostOnly, node_cap);
    const Poset p = poset_from_closure(g);
    const auto& nodes = g.nodes();

    TheoremReport report;
    report.seed = seed;
    report.nodes = g.size();
    report.covers = p.covers().size();
    report.max_ghosts = g.max_ghosts();
    report.minimal_elements = minimal_elements(p).size();

    auto fail = [&](const char* name, std::string detail) {
        report.violations.push_back({seed, name, std::move(detail)});
    };
    auto show = [&](Element x) { return detail::describe(nodes[x]); };

    // Ranked, with rank = max ghosts - ghosts.
    RankAssignment rho(g.size());
    for (Element x = 0; x < g.size(); ++x) {
        rho[x] = static_cast<int>(g.max_ghosts()) - static_cast<int>(nodes[x].ghost_count());
    }
    report.ranked = check_ranked(p).has_value();
    if (!is_rank_function(p, rho)) {
        std::string where;
        for (auto [u, l] : p.covers()) {
            if (rho[u] != rho[l] + 1) {
                where = show(u) + " covers " + show(l);
                break;
            }
        }
        fail(theorem::ranked, where.empty() ? "order not strictly monotone in rank" : where);
    }
    if (!report.ranked) fail(theorem::ranked, "no rank function exists");

    // Covers are exactly the single ghost moves.
    std::map<std::pair<Element, Element>, int> edge_row;
    for (const Edge& e : g.edges()) edge_row.emplace(std::make_pair(e.source, e.target), e.row);
    {
        std::vector<CoverPair> edge_pairs;
        for (const auto& [pair, row] : edge_row) edge_pairs.push_back(pair);
        if (edge_pairs != p.covers()) {
            std::string where = "cover relation differs from move edges";
            for (const auto& pair : edge_pairs) {
                if (!p.covered_by(pair.second, pair.first)) {
                    where = "move " + show(pair.first) + " -> " + show(pair.second) + " is not a cover";
                    break;
                }
            }
            fail(theorem::covers, where);
        }
    }

    report.join_semilattice = true;
    for (Element x = 0; x < g.size() && report.join_semilattice; ++x) {
        for (Element y = x + 1; y < g.size(); ++y) {
            if (!join(p, x, y)) {
                report.join_semilattice = false;
                fail(theorem::join_semilattice, "no join of " + show(x) + " and " + show(y));
                break;
            }
        }
    }

    report.bounded = is_bounded(p);
    report.lattice = is_lattice(p);
    if (report.bounded != report.lattice) {
        fail(theorem::lattice_iff_bounded,
             std::string("bounded=") + (report.bounded ? "true" : "false") +
                 " lattice=" + (report.lattice ? "true" : "false"));
    }

    const FreeCellSequence fcs = free_cell_sequence(seed);
    report.free_cell_columns = fcs.columns();
    report.strictly_increasing = fcs.strictly_increasing();
    if (report.bounded && !report.strictly_increasing) {
        fail(theorem::bounded_increasing, "bounded poset with non-increasing free cell sequence");
    }
    if (report.strictly_increasing != detail::free_cells_descend_left_to_right(seed)) {
        fail(theorem::free_cell_phrasings, "column sequence and per-column description disagree");
    }

    const auto tops = maximal_elements(p);
    if (tops.size() != 1 || tops.front() != 0) fail(theorem::seed_is_top, "maximal elements differ from {seed}");

    // Pairs covered by a common element, and diamonds below them.
    for (Element top = 0; top < g.size(); ++top) {
        const auto& children = p.lower_covers(top);
        for (std::size_t i = 0; i < children.size(); ++i) {
            for (std::size_t j = i + 1; j < children.size(); ++j) {
                const Element a = children[i];
                const Element b = children[j];
                const auto [status, m] = p.meet_status(a, b);
                if (status == BoundStatus::NoExtremum) {
                    fail(theorem::co_covered_meet, show(a) + " and " + show(b) + " under " + show(top));
                }

                const auto edge_a = edge_row.find({top, a});
                const auto edge_b = edge_row.find({top, b});
                if (edge_a == edge_row.end() || edge_b == edge_row.end()) continue;
                const int row_a = edge_a->second;
                const int row_b = edge_b->second;
                const auto step_a = std::get<Displace>(row_action(nodes[top], row_a));
                const auto step_b = std::get<Displace>(row_action(nodes[top], row_b));
                const bool crossing = (row_a > row_b && step_a.from.col < step_b.from.col) ||
                                      (row_b > row_a && step_b.from.col < step_a.from.col);
                if (crossing && status != BoundStatus::Exists) {
                    fail(theorem::crossing_meet, show(a) + " and " + show(b) + " under " + show(top));
                }

                for (Element bottom : p.lower_covers(a)) {
                    if (!p.covered_by(bottom, b)) continue;
                    if (m != bottom) {
                        fail(theorem::diamond_meet, show(bottom) + " below " + show(a) + " and " + show(b));
                    }
                    const RowAction via_a = row_action(nodes[a], row_b);
                    const RowAction via_b = row_action(nodes[b], row_a);
                    if (via_a != RowAction{step_b} || via_b != RowAction{step_a} ||
                        ghost_move(nodes[a], row_b) != nodes[bottom] || ghost_move(nodes[b], row_a) != nodes[bottom]) {
                        fail(theorem::diamond_moves, show(bottom) + " below " + show(a) + " and " + show(b));
                    }
                }
            }
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

// Minimal elements of the ghost Kohnert poset, in canonical diagram order.
inline std::vector<Diagram> minimal_elements_witness(const Diagram& seed, std::size_t node_cap = default_node_cap) {
    if (seed.ghost_count() != 0) throw GhostSeedError("minimal element witnesses require a ghost-free seed");
    const ClosureGraph g = generate(seed, MoveSet::GhostOnly, node_cap);
    const Poset p = poset_from_closure(g);
    std::vector<Diagram> out;
    for (Element x : minimal_elements(p)) out.push_back(g.nodes()[x]);
    std::sort(out.begin(), out.end());
    return out;
}

struct ScanOptions {
    int rows = 4;
    int cols = 4;
    int max_cells = 5;
    std::size_t node_cap = default_node_cap;
    unsigned threads = 0; // 0: hardware concurrency
};

struct ScanSummary {
    std::size_t seeds = 0;
    std::size_t bounded = 0;
    std::size_t increasing_not_bounded = 0;
    std::size_t max_nodes = 0;
    std::vector<Diagram> cap_exceeded;
    std::vector<Violation> violations;
    std::vector<Diagram> sufficiency_failures;
    long long elapsed_ms = 0;

    bool ok() const noexcept { return violations.empty() && cap_exceeded.empty(); }
};

/// Runs check_seed on every ghost-free diagram with at most `max_cells`
/// cells in the box. Seeds are spread across threads; the merged summary
/// does not depend on the thread count.
inline ScanSummary scan(const ScanOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<Diagram> seeds;
    for (int k = 0; k <= opts.max_cells; ++k) {
        for_each_diagram(opts.rows, opts.cols, k, [&](const Diagram& d) { seeds.push_back(d); });
    }

    struct Outcome {
        std::optional<TheoremReport> report;
        bool capped = false;
    };
    std::vector<Outcome> outcomes(seeds.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) {
            try {
                outcomes[i].report = check_seed(seeds[i], opts.node_cap);
            } catch (const CapExceeded&) {
                outcomes[i].capped = true;
            }
        }
    };
    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, seeds.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    ScanSummary summary;
    summary.seeds = seeds.size();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (outcomes[i].capped) {
            summary.cap_exceeded.push_back(seeds[i]);
            continue;
        }
        const TheoremReport& r = *outcomes[i].report;
        summary.max_nodes = std::max(summary.max_nodes, r.nodes);
        if (r.bounded) ++summary.bounded;
        if (!r.bounded && r.strictly_increasing) {
            ++summary.increasing_not_bounded;
            summary.sufficiency_failures.push_back(seeds[i]);
        }
        summary.violations.insert(summary.violations.end(), r.violations.begin(), r.violations.end());
    }
    std::sort(summary.violations.begin(), summary.violations.end());
    std::sort(summary.cap_exceeded.begin(), summary.cap_exceeded.end());
    std::sort(summary.sufficiency_failures.begin(), summary.sufficiency_failures.end());
    summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    return summary;
}

inline nlohmann::json to_json(const Violation& v) {
    return {{"seed", render_grid(v.seed)}, {"theorem", v.theorem}, {"detail", v.detail}};
}

inline nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : r.violations) violations.push_back(to_json(v));
    return {{"seed", to_json(r.seed)},
            {"nodes", r.nodes},
            {"covers", r.covers},
            {"max_ghosts", r.max_ghosts},
            {"minimal_elements", r.minimal_elements},
            {"ranked", r.ranked},
            {"bounded", r.bounded},
            {"join_semilattice", r.join_semilattice},
            {"lattice", r.lattice},
            {"free_cell_columns", r.free_cell_columns},
            {"strictly_increasing", r.strictly_increasing},
            {"violations", std::move(violations)}};
}

// Leave out elapsed_ms to get output that is byte-stable across runs.
inline nlohmann::json to_json(const ScanSummary& s, bool with_timing = true) {
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : s.violations) violations.push_back(to_json(v));
    nlohmann::json capped = nlohmann::json::array();
    for (const Diagram& d : s.cap_exceeded) capped.push_back(render_grid(d));
    nlohmann::json out = {{"seeds", s.seeds},
                          {"violations", std::move(violations)},
                          {"bounded", s.bounded},
                          {"increasing_not_bounded", s.increasing_not_bounded},
                          {"cap_exceeded", std::move(capped)},
                          {"max_nodes", s.max_nodes}};
    if (with_timing) out["elapsed_ms"] = s.elapsed_ms;
    return out;
}

} // namespace kohnert
