#pragma once

#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"

// Small hand-checked diagrams and their expected moves and posets,
// transcribed cell by cell.
namespace fixtures {

using kohnert::Diagram;
using kohnert::from_cells;

// D(1,1,3,2)
inline Diagram key_1132() { return from_cells({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}}); }

// Kohnert move at row 3 of key_1132.
inline Diagram key_1132_kohnert_row3() {
    return from_cells({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {2, 3}, {4, 1}, {4, 2}});
}

// Kohnert move at row 4 of key_1132.
inline Diagram key_1132_kohnert_row4() {
    return from_cells({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {2, 2}});
}

inline Diagram key_1132_ghost_row3() {
    return from_cells({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {2, 3}, {4, 1}, {4, 2}}, {{3, 3}});
}

inline Diagram key_1132_ghost_row4() {
    return from_cells({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {2, 2}}, {{4, 2}});
}

// Rothe diagram of [4,2,5,3,1].
inline Diagram rothe_42531() { return from_cells({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 3}, {4, 1}}); }

// Eight plain cells; its ghost Kohnert poset has eight elements.
inline Diagram d1() { return from_cells({{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}); }

// Fixed by every ghost move.
inline Diagram t_fixed() { return from_cells({{1, 3}, {2, 3}, {3, 1}, {3, 2}}, {{2, 2}, {4, 1}}); }

inline Diagram d1_ghost_row2() {
    return from_cells({{1, 1}, {1, 3}, {1, 4}, {2, 2}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}, {{2, 3}});
}

inline Diagram d1_ghost_row3() {
    return from_cells({{1, 1}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}}, {{3, 4}});
}

inline Diagram d1_ghost_row4() {
    return from_cells({{1, 1}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4}}, {{4, 1}});
}

/// The Hasse diagram of P_G(d1) as drawn: nodes numbered 1..8 bottom to top,
/// and its edges as (upper, lower) in that numbering.
inline std::vector<Diagram> d1_hasse_nodes() {
    return {
        from_cells({{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 4}, {3, 1}, {3, 2}}, {{2, 3}, {3, 4}, {4, 1}}),
        from_cells({{1, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 4}, {3, 1}, {3, 2}, {4, 1}}, {{2, 3}, {3, 4}}),
        from_cells({{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 4}}, {{2, 3}, {4, 1}}),
        from_cells({{1, 1}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}}, {{3, 4}, {4, 1}}),
        from_cells({{1, 1}, {1, 3}, {1, 4}, {2, 2}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}, {{2, 3}}),
        from_cells({{1, 1}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}}, {{3, 4}}),
        from_cells({{1, 1}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4}}, {{4, 1}}),
        from_cells({{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}),
    };
}

inline std::vector<std::pair<int, int>> d1_hasse_edges() {
    return {{2, 1}, {3, 1}, {5, 2}, {5, 3}, {6, 4}, {7, 3}, {7, 4}, {8, 5}, {8, 6}, {8, 7}};
}

// Strictly increasing free cell sequence (2,3), yet two minimal elements.
inline Diagram not_bounded_seed() { return from_cells({{4, 2}, {3, 2}, {3, 3}}); }

inline std::vector<Diagram> not_bounded_minimal() {
    return {
        from_cells({{3, 2}, {2, 2}, {1, 3}}, {{4, 2}, {3, 3}, {2, 3}}),
        from_cells({{3, 2}, {1, 2}, {1, 3}}, {{4, 2}, {2, 2}, {3, 3}, {2, 3}}),
    };
}

// Free cell sequences (1,2,2), (1,2,1), (1,2,3).
inline Diagram fcs_122() { return from_cells({{5, 1}, {4, 1}, {4, 2}, {2, 2}}); }
inline Diagram fcs_121() { return from_cells({{4, 1}, {3, 2}, {2, 1}, {1, 2}}); }
inline Diagram fcs_123() { return from_cells({{4, 1}, {3, 2}, {2, 3}, {1, 4}}); }

} // namespace fixtures
