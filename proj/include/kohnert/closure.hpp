#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/io.hpp"
#include "kohnert/moves.hpp"

namespace kohnert {

enum class MoveSet { KohnertOnly, GhostOnly, Both };

inline constexpr std::size_t default_node_cap = 1'000'000;

struct Edge {
    std::size_t source = 0;
    int row = 0;
    MoveKind kind = MoveKind::Ghost;
    std::size_t target = 0;

    bool operator==(const Edge&) const = default;
};

/// All diagrams reachable from a seed under one move set, with the moves
/// between them. Node 0 is the seed; nodes appear in breadth-first discovery
/// order, rows scanned bottom to top and a Kohnert move tried before a ghost
/// move at the same row. Edges are sorted by (source, row, kind).
class ClosureGraph {
public:
    ClosureGraph(MoveSet moves, std::vector<Diagram> nodes, std::vector<Edge> edges)
        : moves_(moves), nodes_(std::move(nodes)), edges_(std::move(edges)) {
        for (const Diagram& d : nodes_) max_ghosts_ = std::max(max_ghosts_, d.ghost_count());
    }

    MoveSet moves() const noexcept { return moves_; }
    const Diagram& seed() const { return nodes_.front(); }
    const std::vector<Diagram>& nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t max_ghosts() const noexcept { return max_ghosts_; }

    // Linear scan; intended for tests and tooling.
    std::optional<std::size_t> find(const Diagram& d) const {
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i] == d) return i;
        }
        return std::nullopt;
    }

private:
    MoveSet moves_;
    std::vector<Diagram> nodes_;
    std::vector<Edge> edges_;
    std::size_t max_ghosts_ = 0;
};

namespace detail {

// Two 64-bit occupancy masks over a fixed box of at most 64 positions.
struct BoxKey {
    std::uint64_t plain = 0;
    std::uint64_t ghost = 0;

    bool operator==(const BoxKey&) const = default;
};

struct BoxKeyHash {
    std::size_t operator()(const BoxKey& k) const noexcept {
        std::uint64_t h = k.plain * 0x9e3779b97f4a7c15ULL;
        h ^= (k.ghost + 0x632be59bd9b4e019ULL) * 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

inline BoxKey pack(const Diagram& d, int cols) {
    BoxKey key;
    for (const Cell& c : d.cells()) {
        const std::uint64_t bit = std::uint64_t{1} << ((c.pos.row - 1) * cols + (c.pos.col - 1));
        (c.kind == CellKind::Ghost ? key.ghost : key.plain) |= bit;
    }
    return key;
}

template <class Key, class Hash, class KeyOf>
ClosureGraph explore(const Diagram& seed, MoveSet moves, std::size_t node_cap, KeyOf key_of) {
    if (node_cap == 0) throw CapExceeded(node_cap);
    std::vector<Diagram> nodes{seed};
    std::vector<Edge> edges;
    std::unordered_map<Key, std::size_t, Hash> index;
    index.emplace(key_of(seed), 0);

    const bool kohnert = moves != MoveSet::GhostOnly;
    const bool ghost = moves != MoveSet::KohnertOnly;

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const int rows = nodes[i].max_row();
        for (int r = 2; r <= rows; ++r) {
            const RowAction action = row_action(nodes[i], r);
            const auto* step = std::get_if<Displace>(&action);
            if (step == nullptr) continue;
            for (MoveKind kind : {MoveKind::Kohnert, MoveKind::Ghost}) {
                if ((kind == MoveKind::Kohnert && !kohnert) || (kind == MoveKind::Ghost && !ghost)) continue;
                Diagram next = apply(nodes[i], *step, kind);
                auto [it, inserted] = index.try_emplace(key_of(next), nodes.size());
                if (inserted) {
                    if (nodes.size() >= node_cap) throw CapExceeded(node_cap);
                    nodes.push_back(std::move(next));
                }
                edges.push_back({i, r, kind, it->second});
            }
        }
    }
    return ClosureGraph(moves, std::move(nodes), std::move(edges));
}

} // namespace detail

/// Closure of `seed` under the chosen moves. Throws CapExceeded instead of
/// returning a partial graph when more than `node_cap` diagrams appear.
inline ClosureGraph generate(const Diagram& seed, MoveSet moves, std::size_t node_cap = default_node_cap) {
    // Moves only lower cells and leave ghosts where cells were, so every
    // node stays inside the seed's bounding box.
    const int cols = seed.max_col();
    if (static_cast<long long>(seed.max_row()) * cols <= 64) {
        return detail::explore<detail::BoxKey, detail::BoxKeyHash>(
            seed, moves, node_cap, [cols](const Diagram& d) { return detail::pack(d, cols); });
    }
    return detail::explore<Diagram, std::hash<Diagram>>(seed, moves, node_cap,
                                                        [](const Diagram& d) { return d; });
}

inline std::size_t max_ghosts(const Diagram& d, std::size_t node_cap = default_node_cap) {
    return generate(d, MoveSet::GhostOnly, node_cap).max_ghosts();
}

/// Calls `fn` on every ghost-free diagram with exactly `num_cells` cells in
/// the rows x cols box. Positions are numbered row-major from the bottom-left
/// corner and subsets are visited in lexicographic order of those numbers.
inline void for_each_diagram(int rows, int cols, int num_cells, const std::function<void(const Diagram&)>& fn) {
    const int total = rows * cols;
    if (num_cells < 0 || num_cells > total) return;
    std::vector<int> pick(static_cast<std::size_t>(num_cells));
    for (int i = 0; i < num_cells; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<Cell> cells;
        cells.reserve(pick.size());
        for (int idx : pick) cells.push_back({{idx / cols + 1, idx % cols + 1}, CellKind::Plain});
        fn(Diagram(std::move(cells)));

        int i = num_cells - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - num_cells + i) --i;
        if (i < 0) return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < num_cells; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

inline std::vector<Diagram> enumerate_diagrams(int rows, int cols, int num_cells) {
    std::vector<Diagram> out;
    for_each_diagram(rows, cols, num_cells, [&](const Diagram& d) { out.push_back(d); });
    return out;
}

inline nlohmann::json to_json(const ClosureGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Diagram& d : g.nodes()) nodes.push_back(to_json(d));
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.source, e.row, std::string(1, move_letter(e.kind)), e.target});
    }
    return {{"seed", to_json(g.seed())}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)},
            {"max_ghosts", g.max_ghosts()}};
}

} // namespace kohnert
