#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kohnert/errors.hpp"

namespace kohnert {

// 1-based; row 1 is the bottom row, column 1 the leftmost.
struct Position {
    int row = 1;
    int col = 1;

    auto operator<=>(const Position&) const = default;
};

enum class CellKind : std::uint8_t { Plain, Ghost };

struct Cell {
    Position pos;
    CellKind kind = CellKind::Plain;

    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(Position p) {
    return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

/// A finite set of cells, each plain or ghost, at most one per position.
///
/// Cells are stored sorted by (row, col), so two diagrams are equal exactly
/// when their cell sequences are equal. The ordering operator compares those
/// sequences lexicographically and is the canonical order used wherever a
/// deterministic listing of diagrams is needed.
class Diagram {
public:
    Diagram() = default;

    // Sorts and validates; throws OverlapError or PositionError.
    explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            const Position p = cells_[i].pos;
            if (p.row < 1 || p.col < 1) {
                throw PositionError("cell " + to_string(p) + " is outside the positive quadrant");
            }
            if (i > 0 && cells_[i - 1].pos == p) {
                throw OverlapError("position " + to_string(p) + " holds more than one cell");
            }
            max_row_ = std::max(max_row_, p.row);
            max_col_ = std::max(max_col_, p.col);
            if (cells_[i].kind == CellKind::Ghost) ++ghosts_;
        }
    }

    std::span<const Cell> cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    // Bounding box; (0, 0) for the empty diagram.
    int max_row() const noexcept { return max_row_; }
    int max_col() const noexcept { return max_col_; }

    std::optional<CellKind> at(Position p) const noexcept {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), p,
                                   [](const Cell& c, Position q) { return c.pos < q; });
        if (it == cells_.end() || it->pos != p) {
            return std::nullopt;
        }
        return it->kind;
    }

    bool occupied(Position p) const noexcept { return at(p).has_value(); }
    bool has_plain(Position p) const noexcept { return at(p) == CellKind::Plain; }
    bool has_ghost(Position p) const noexcept { return at(p) == CellKind::Ghost; }

    // Cells of one row, left to right.
    std::span<const Cell> row(int r) const noexcept {
        auto lo = std::lower_bound(cells_.begin(), cells_.end(), r,
                                   [](const Cell& c, int q) { return c.pos.row < q; });
        auto hi = std::lower_bound(lo, cells_.end(), r + 1,
                                   [](const Cell& c, int q) { return c.pos.row < q; });
        return {lo, hi};
    }

    std::size_t ghost_count() const noexcept { return ghosts_; }

    std::size_t plain_count() const noexcept { return cells_.size() - ghost_count(); }

    bool operator==(const Diagram& other) const noexcept { return cells_ == other.cells_; }
    std::strong_ordering operator<=>(const Diagram& other) const noexcept {
        return cells_ <=> other.cells_;
    }

private:
    std::vector<Cell> cells_;
    int max_row_ = 0;
    int max_col_ = 0;
    std::size_t ghosts_ = 0;
};

inline Diagram from_cells(std::span<const Position> plain, std::span<const Position> ghost) {
    std::vector<Cell> cells;
    cells.reserve(plain.size() + ghost.size());
    for (Position p : plain) cells.push_back({p, CellKind::Plain});
    for (Position p : ghost) cells.push_back({p, CellKind::Ghost});
    return Diagram(std::move(cells));
}

inline Diagram from_cells(std::initializer_list<Position> plain,
                          std::initializer_list<Position> ghost = {}) {
    return from_cells(std::span<const Position>(plain.begin(), plain.size()),
                      std::span<const Position>(ghost.begin(), ghost.size()));
}

struct WeakComposition {
    std::vector<int> parts;

    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> p) : parts(std::move(p)) {
        for (int v : parts) {
            if (v < 0) throw std::invalid_argument("weak composition parts must be non-negative");
        }
    }

    int size() const noexcept {
        int total = 0;
        for (int v : parts) total += v;
        return total;
    }

    bool operator==(const WeakComposition&) const = default;
};

class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
        std::vector<int> sorted = one_line_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != static_cast<int>(i) + 1) {
                throw std::invalid_argument("not a permutation of 1..n");
            }
        }
        inverse_.resize(one_line_.size());
        for (std::size_t i = 0; i < one_line_.size(); ++i) {
            inverse_[one_line_[i] - 1] = static_cast<int>(i) + 1;
        }
    }

    int n() const noexcept { return static_cast<int>(one_line_.size()); }
    int operator()(int i) const { return one_line_.at(i - 1); }
    int inverse(int j) const { return inverse_.at(j - 1); }
    const std::vector<int>& one_line() const noexcept { return one_line_; }

private:
    std::vector<int> one_line_;
    std::vector<int> inverse_;
};

// Left-justified rows: row i holds columns 1..parts[i-1].
inline Diagram key_diagram(const WeakComposition& alpha) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
        for (int j = 1; j <= alpha.parts[i]; ++j) {
            cells.push_back({{static_cast<int>(i) + 1, j}, CellKind::Plain});
        }
    }
    return Diagram(std::move(cells));
}

// Inversion diagram {(i, j) : w(i) > j and w^-1(j) > i}.
inline Diagram rothe_diagram(const Permutation& w) {
    std::vector<Cell> cells;
    for (int i = 1; i <= w.n(); ++i) {
        for (int j = 1; j < w(i); ++j) {
            if (w.inverse(j) > i) cells.push_back({{i, j}, CellKind::Plain});
        }
    }
    return Diagram(std::move(cells));
}

inline std::vector<Position> ghost_set(const Diagram& d) {
    std::vector<Position> out;
    for (const Cell& c : d.cells()) {
        if (c.kind == CellKind::Ghost) out.push_back(c.pos);
    }
    return out;
}

inline std::vector<Position> plain_set(const Diagram& d) {
    std::vector<Position> out;
    for (const Cell& c : d.cells()) {
        if (c.kind == CellKind::Plain) out.push_back(c.pos);
    }
    return out;
}

// Plain cells with nothing of either kind to their right.
inline std::vector<Position> rightmost_cells(const Diagram& d) {
    std::vector<Position> out;
    for (int r = 1; r <= d.max_row(); ++r) {
        auto row = d.row(r);
        if (!row.empty() && row.back().kind == CellKind::Plain) out.push_back(row.back().pos);
    }
    return out;
}

} // namespace kohnert

template <>
struct std::hash<kohnert::Diagram> {
    std::size_t operator()(const kohnert::Diagram& d) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const kohnert::Cell& c : d.cells()) {
            const std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.pos.row)) << 33) ^
                                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.pos.col)) << 1) ^
                                    static_cast<std::uint64_t>(c.kind);
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
