#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "kohnert/diagram.hpp"

namespace kohnert {

enum class TrivialReason { EmptyRow, RightmostIsGhost, NoEmptyBelow, GhostBlocks };

enum class MoveKind { Kohnert, Ghost };

constexpr std::string_view to_string(TrivialReason r) noexcept {
    switch (r) {
    case TrivialReason::EmptyRow: return "EmptyRow";
    case TrivialReason::RightmostIsGhost: return "RightmostIsGhost";
    case TrivialReason::NoEmptyBelow: return "NoEmptyBelow";
    case TrivialReason::GhostBlocks: return "GhostBlocks";
    }
    return "?";
}

constexpr char move_letter(MoveKind k) noexcept { return k == MoveKind::Kohnert ? 'K' : 'G'; }

struct Trivial {
    TrivialReason reason;
    bool operator==(const Trivial&) const = default;
};

// Same column, target strictly below source.
struct Displace {
    Position from;
    Position to;
    bool operator==(const Displace&) const = default;
};

using RowAction = std::variant<Trivial, Displace>;

inline bool is_trivial(const RowAction& a) noexcept { return std::holds_alternative<Trivial>(a); }

/// What a move at row `r` does to `d`, shared by Kohnert and ghost moves.
///
/// A position is empty when it holds neither a plain nor a ghost cell. The
/// rightmost cell of row `r` drops to the highest empty position below it in
/// its column, unless that cell is a ghost, there is no empty position below,
/// or a ghost sits between it and that empty position.
inline RowAction row_action(const Diagram& d, int r) {
    auto row = d.row(r);
    if (row.empty()) return Trivial{TrivialReason::EmptyRow};
    const Cell& last = row.back();
    if (last.kind == CellKind::Ghost) return Trivial{TrivialReason::RightmostIsGhost};

    const int c = last.pos.col;
    bool ghost_between = false;
    for (int below = r - 1; below >= 1; --below) {
        const auto kind = d.at({below, c});
        if (!kind) {
            if (ghost_between) return Trivial{TrivialReason::GhostBlocks};
            return Displace{last.pos, {below, c}};
        }
        if (*kind == CellKind::Ghost) ghost_between = true;
    }
    return Trivial{TrivialReason::NoEmptyBelow};
}

namespace detail {

inline Diagram apply(const Diagram& d, const Displace& step, MoveKind kind) {
    std::vector<Cell> cells;
    cells.reserve(d.size() + 1);
    for (const Cell& c : d.cells()) {
        if (c.pos != step.from) cells.push_back(c);
    }
    cells.push_back({step.to, CellKind::Plain});
    if (kind == MoveKind::Ghost) cells.push_back({step.from, CellKind::Ghost});
    return Diagram(std::move(cells));
}

} // namespace detail

// Returns `d` itself when the move is trivial.
inline Diagram apply_move(const Diagram& d, int r, MoveKind kind) {
    const RowAction action = row_action(d, r);
    if (const auto* step = std::get_if<Displace>(&action)) return detail::apply(d, *step, kind);
    return d;
}

inline Diagram ghost_move(const Diagram& d, int r) { return apply_move(d, r, MoveKind::Ghost); }

inline Diagram kohnert_move(const Diagram& d, int r) { return apply_move(d, r, MoveKind::Kohnert); }

} // namespace kohnert
