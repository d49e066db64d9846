#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kohnert/diagram.hpp"

namespace kohnert {

/// Grid text: one line per row, top row first, so the last line is row 1.
/// Character j of a line is column j: '.' empty, 'O' plain, 'X' ghost.
/// Short lines are padded with '.', and a single trailing newline is ignored.
inline Diagram parse_grid(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::vector<Cell> cells;
    const int height = static_cast<int>(lines.size());
    for (int k = 0; k < height; ++k) {
        const int r = height - k;
        for (std::size_t j = 0; j < lines[k].size(); ++j) {
            const char ch = lines[k][j];
            const Position p{r, static_cast<int>(j) + 1};
            if (ch == 'O') {
                cells.push_back({p, CellKind::Plain});
            } else if (ch == 'X') {
                cells.push_back({p, CellKind::Ghost});
            } else if (ch != '.') {
                throw ParseError(static_cast<std::size_t>(k) + 1, j + 1,
                                 std::string("unexpected character '") + ch + "'");
            }
        }
    }
    return Diagram(std::move(cells));
}

// Full-width lines joined by '\n', no trailing newline; "" for the empty diagram.
inline std::string render_grid(const Diagram& d) {
    std::string out;
    for (int r = d.max_row(); r >= 1; --r) {
        std::string line(static_cast<std::size_t>(d.max_col()), '.');
        for (const Cell& c : d.row(r)) {
            line[static_cast<std::size_t>(c.pos.col - 1)] = c.kind == CellKind::Ghost ? 'X' : 'O';
        }
        out += line;
        if (r > 1) out += '\n';
    }
    return out;
}

inline nlohmann::json to_json(const Diagram& d) {
    nlohmann::json plain = nlohmann::json::array();
    nlohmann::json ghosts = nlohmann::json::array();
    for (const Cell& c : d.cells()) {
        (c.kind == CellKind::Ghost ? ghosts : plain).push_back({c.pos.row, c.pos.col});
    }
    return {{"cells", std::move(plain)}, {"ghosts", std::move(ghosts)}};
}

inline Diagram diagram_from_json(const nlohmann::json& j) {
    auto read = [&](const char* key) {
        std::vector<Position> out;
        if (!j.contains(key)) return out;
        for (const auto& pair : j.at(key)) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError(1, 1, std::string("entries of \"") + key + "\" must be [row, col] pairs");
            }
            out.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        return out;
    };
    if (!j.is_object()) throw ParseError(1, 1, "diagram JSON must be an object");
    const auto plain = read("cells");
    const auto ghosts = read("ghosts");
    return from_cells(plain, ghosts);
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
    std::vector<int> out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::size_t begin = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == begin || (pos == begin + 1 && text[begin] == '-')) {
            throw ParseError(1, pos + 1, "expected an integer in " + std::string(what));
        }
        out.push_back(std::stoi(std::string(text.substr(begin, pos - begin))));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError(1, pos + 1, "expected ',' in " + std::string(what));
        ++pos;
    }
    return out;
}

} // namespace detail

// "1,1,3,2"; the empty string is the empty composition.
inline WeakComposition parse_composition(std::string_view text) {
    auto parts = detail::parse_int_list(text, "composition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw ParseError(1, 1, "composition parts must be non-negative");
    }
    return WeakComposition(std::move(parts));
}

// "[4,2,5,3,1]"
inline Permutation parse_permutation(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\n");
    const auto last = text.find_last_not_of(" \t\n");
    if (first == std::string_view::npos || text[first] != '[' || text[last] != ']') {
        throw ParseError(1, 1, "permutation must be written as [w1,...,wn]");
    }
    try {
        return Permutation(detail::parse_int_list(text.substr(first + 1, last - first - 1), "permutation"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
}

} // namespace kohnert
