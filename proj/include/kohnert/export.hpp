#pragma once

#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "kohnert/closure.hpp"
#include "kohnert/io.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

namespace detail {

inline std::string dot_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '\n') {
            out += "\\n";
        } else if (ch == '"' || ch == '\\') {
            out += '\\';
            out += ch;
        } else {
            out += ch;
        }
    }
    return out;
}

} // namespace detail

/// Hasse diagram in Graphviz DOT. One node per closure element labeled with
/// its grid text, edges drawn from the larger element to the smaller, and
/// elements of equal rank grouped with rank=same when the poset is ranked.
inline std::string to_dot(const ClosureGraph& g, const Poset& p) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    out << "  node [shape=box, fontname=\"Courier\"];\n";
    for (Element x = 0; x < g.size(); ++x) {
        std::string label = render_grid(g.nodes()[x]);
        if (label.empty()) label = "(empty)";
        out << "  n" << x << " [label=\"" << detail::dot_escape(label + "\n") << "\"];\n";
    }
    if (const auto rank = check_ranked(p)) {
        std::map<int, std::vector<Element>, std::greater<>> levels;
        for (Element x = 0; x < p.size(); ++x) levels[(*rank)[x]].push_back(x);
        for (const auto& [r, members] : levels) {
            out << "  subgraph rank_" << r << " { rank=same;";
            for (Element x : members) out << " n" << x << ";";
            out << " }\n";
        }
    }
    for (auto [u, l] : p.covers()) out << "  n" << u << " -> n" << l << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json covers_to_json(const Poset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [u, l] : p.covers()) covers.push_back({u, l});
    return {{"elements", p.size()}, {"covers", std::move(covers)}};
}

} // namespace kohnert
