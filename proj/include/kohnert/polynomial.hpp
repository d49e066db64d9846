#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "kohnert/closure.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"

namespace kohnert {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector; entry i is the power of x_{i+1}. Trailing zeros are
/// trimmed, so the empty vector is the constant monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
        for (int e : exp_) {
            if (e < 0) throw std::invalid_argument("negative exponent");
        }
        trim();
    }

    const std::vector<int>& exponents() const noexcept { return exp_; }
    int exponent(int var) const noexcept {
        return var >= 1 && var <= static_cast<int>(exp_.size()) ? exp_[static_cast<std::size_t>(var - 1)] : 0;
    }
    // Highest variable index present, 0 for the constant.
    int arity() const noexcept { return static_cast<int>(exp_.size()); }

    int degree() const noexcept {
        int d = 0;
        for (int e : exp_) d += e;
        return d;
    }

    bool operator==(const Monomial&) const = default;

private:
    void trim() {
        while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
    }

    std::vector<int> exp_;
};

// Lower total degree first; within a degree, lexicographically larger
// exponent vectors first (x1^2 before x1*x2 before x2^2).
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const int n = std::max(a.arity(), b.arity());
        for (int v = 1; v <= n; ++v) {
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
        }
        return false;
    }
};

class SparsePolynomial {
public:
    using Terms = std::map<Monomial, Integer, GradedOrder>;

    SparsePolynomial() = default;

    void add(const Monomial& m, const Integer& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& other) {
        for (const auto& [m, c] : other.terms_) add(m, c);
        return *this;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    int arity() const noexcept {
        int n = 0;
        for (const auto& [m, c] : terms_) n = std::max(n, m.arity());
        return n;
    }

    bool operator==(const SparsePolynomial& other) const { return terms_ == other.terms_; }

private:
    Terms terms_;
};

inline SparsePolynomial homogeneous_part(const SparsePolynomial& p, int degree) {
    SparsePolynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == degree) out.add(m, c);
    }
    return out;
}

inline SparsePolynomial lowest_degree_part(const SparsePolynomial& p) {
    if (p.is_zero()) return p;
    return homogeneous_part(p, p.terms().begin()->first.degree());
}

inline std::string render(const Monomial& m) {
    std::string out;
    for (int v = 1; v <= m.arity(); ++v) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// e.g. "x1 + x2 - x1*x2", "2*x1^2", "0".
inline std::string render(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.arity() == 0) {
            out += magnitude.str();
        } else if (magnitude == 1) {
            out += render(m);
        } else {
            out += magnitude.str() + "*" + render(m);
        }
    }
    return out;
}

/// Reads the text form produced by render.
inline SparsePolynomial parse_polynomial(std::string_view text) {
    SparsePolynomial p;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(1, pos + 1, what); };
    auto read_uint = [&]() -> std::string {
        const std::size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == begin) throw fail("expected digits");
        return std::string(text.substr(begin, pos - begin));
    };

    skip_space();
    if (text.substr(pos) == "0") return p;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    while (true) {
        skip_space();
        Integer coef = 1;
        std::vector<int> exps;
        bool have_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = Integer(read_uint());
            have_factor = true;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                have_factor = false;
            }
        }
        while (!have_factor || (pos < text.size() && text[pos] == '*')) {
            if (have_factor) ++pos;
            if (pos >= text.size() || text[pos] != 'x') throw fail("expected variable");
            ++pos;
            const int var = std::stoi(read_uint());
            if (var < 1) throw fail("variables are numbered from 1");
            int e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = std::stoi(read_uint());
            }
            if (static_cast<int>(exps.size()) < var) exps.resize(static_cast<std::size_t>(var), 0);
            exps[static_cast<std::size_t>(var - 1)] += e;
            have_factor = true;
        }
        p.add(Monomial(std::move(exps)), negative ? Integer(-coef) : coef);
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') throw fail("expected '+' or '-'");
        negative = text[pos] == '-';
        ++pos;
    }
    return p;
}

inline Integer evaluate(const SparsePolynomial& p, std::span<const long long> point) {
    if (static_cast<int>(point.size()) < p.arity()) {
        throw ArityError("polynomial uses x" + std::to_string(p.arity()) + " but only " +
                         std::to_string(point.size()) + " values were given");
    }
    Integer total = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer term = c;
        for (int v = 1; v <= m.arity(); ++v) {
            term *= boost::multiprecision::pow(Integer(point[static_cast<std::size_t>(v - 1)]),
                                               static_cast<unsigned>(m.exponent(v)));
        }
        total += term;
    }
    return total;
}

inline Integer evaluate(const SparsePolynomial& p, std::initializer_list<long long> point) {
    return evaluate(p, std::span<const long long>(point.begin(), point.size()));
}

inline nlohmann::json to_json(const SparsePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json coef;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
            coef = c.convert_to<long long>();
        } else {
            coef = c.str();
        }
        terms.push_back({{"exp", m.exponents()}, {"coef", std::move(coef)}});
    }
    return {{"terms", std::move(terms)}};
}

// x_r to the number of plain cells in row r.
inline Monomial wt(const Diagram& d) {
    std::vector<int> exps(static_cast<std::size_t>(d.max_row()), 0);
    for (const Cell& c : d.cells()) {
        if (c.kind == CellKind::Plain) ++exps[static_cast<std::size_t>(c.pos.row - 1)];
    }
    return Monomial(std::move(exps));
}

struct SignedMonomial {
    int sign = 1;
    Monomial monomial;

    bool operator==(const SignedMonomial&) const = default;
};

// Counts ghosts as well as plain cells; sign is (-1)^(number of ghosts).
inline SignedMonomial wt_plus(const Diagram& d) {
    std::vector<int> exps(static_cast<std::size_t>(d.max_row()), 0);
    for (const Cell& c : d.cells()) ++exps[static_cast<std::size_t>(c.pos.row - 1)];
    return {d.ghost_count() % 2 == 0 ? 1 : -1, Monomial(std::move(exps))};
}

inline SparsePolynomial weight_sum(const ClosureGraph& g) {
    SparsePolynomial p;
    for (const Diagram& d : g.nodes()) p.add(wt(d), 1);
    return p;
}

inline SparsePolynomial signed_weight_sum(const ClosureGraph& g) {
    SparsePolynomial p;
    for (const Diagram& d : g.nodes()) {
        const SignedMonomial w = wt_plus(d);
        p.add(w.monomial, w.sign);
    }
    return p;
}

inline SparsePolynomial kohnert_polynomial(const Diagram& d, std::size_t node_cap = default_node_cap) {
    return weight_sum(generate(d, MoveSet::KohnertOnly, node_cap));
}

inline SparsePolynomial ghost_polynomial(const Diagram& d, std::size_t node_cap = default_node_cap) {
    return signed_weight_sum(generate(d, MoveSet::GhostOnly, node_cap));
}

inline SparsePolynomial key_polynomial(const WeakComposition& alpha, std::size_t node_cap = default_node_cap) {
    return kohnert_polynomial(key_diagram(alpha), node_cap);
}

inline SparsePolynomial lascoux_polynomial(const WeakComposition& alpha, std::size_t node_cap = default_node_cap) {
    return signed_weight_sum(generate(key_diagram(alpha), MoveSet::Both, node_cap));
}

} // namespace kohnert
