#pragma once

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kohnert/closure.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/polynomial.hpp"
#include "oracle.hpp"

namespace support {

// Library polynomial as the oracle's exponent map, padded to n variables.
inline oracle::Poly as_poly(const kohnert::SparsePolynomial& p, int n) {
    oracle::Poly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v = 1; v <= m.arity(); ++v) e.at(static_cast<std::size_t>(v - 1)) = m.exponent(v);
        out[e] = static_cast<long long>(c);
    }
    return out;
}

inline std::set<oracle::Cells> node_set(const kohnert::ClosureGraph& g) {
    std::set<oracle::Cells> out;
    for (const auto& d : g.nodes()) out.insert(oracle::from(d));
    return out;
}

// Ghost-free diagram with `cells` distinct positions in a rows x cols box.
inline kohnert::Diagram random_seed(std::mt19937& rng, int rows, int cols, int cells) {
    std::vector<kohnert::Position> all;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) all.push_back({r, c});
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(cells));
    return kohnert::from_cells(all, {});
}

// Every weak composition with at most `parts` parts summing to at most `total`.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == parts) return;
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded.
inline RunResult run(const std::string& cmd) {
    RunResult res;
    FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int raw = ::pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

} // namespace support
