#pragma once

#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/moves.hpp"

namespace kohnert {

// Cells that a ghost move at their own row actually displaces.
inline std::vector<Position> free_cells(const Diagram& d) {
    std::vector<Position> out;
    for (int r = 1; r <= d.max_row(); ++r) {
        const RowAction a = row_action(d, r);
        if (const auto* step = std::get_if<Displace>(&a)) out.push_back(step->from);
    }
    return out;
}

// Ghosts, plus plain cells left in place by the ghost move at their row.
inline std::vector<Position> blocked_cells(const Diagram& d) {
    std::vector<Position> out;
    for (int r = 1; r <= d.max_row(); ++r) {
        const RowAction a = row_action(d, r);
        const auto* step = std::get_if<Displace>(&a);
        for (const Cell& c : d.row(r)) {
            if (step == nullptr || c.pos != step->from) out.push_back(c.pos);
        }
    }
    return out;
}

struct FreeCellSequence {
    // Rows strictly decreasing.
    std::vector<Position> entries;

    std::vector<int> columns() const {
        std::vector<int> out;
        out.reserve(entries.size());
        for (Position p : entries) out.push_back(p.col);
        return out;
    }

    bool strictly_increasing() const noexcept {
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i - 1].col >= entries[i].col) return false;
        }
        return true;
    }
};

// Only defined for ghost-free diagrams; throws GhostSeedError otherwise.
inline FreeCellSequence free_cell_sequence(const Diagram& d) {
    if (d.ghost_count() != 0) {
        throw GhostSeedError("free cell sequence is only defined for diagrams without ghost cells");
    }
    FreeCellSequence seq;
    for (int r = d.max_row(); r >= 1; --r) {
        const RowAction a = row_action(d, r);
        if (const auto* step = std::get_if<Displace>(&a)) seq.entries.push_back(step->from);
    }
    return seq;
}

} // namespace kohnert
