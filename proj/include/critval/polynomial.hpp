/**
 * @brief Sparse multivariate polynomials over ExactRational.
 *
 * A Monomial is a sorted exponent list (no zero exponents; empty = 1).
 * A Polynomial maps monomials to nonzero coefficients; the map order is
 * the canonical term order: total degree descending, ties broken
 * lexicographically on the exponent vector under the fixed VariableId
 * order.  Equality is equality of the term maps, so two polynomials are
 * equal iff they are the same object structurally.
 *
 * All values are immutable after construction; every operation is a pure
 * function returning a fresh value.
 */
#pragma once

#include "critval/rational.hpp"
#include "critval/variable.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace critval {

struct UnboundVariable : std::runtime_error {
    explicit UnboundVariable(const std::string& msg) : std::runtime_error(msg) {}
};
struct BoundContainsVariable : std::runtime_error {
    explicit BoundContainsVariable(const std::string& msg) : std::runtime_error(msg) {}
};

class Monomial {
public:
    using Entry = std::pair<VariableId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries) : exps_(std::move(entries)) {
        std::sort(exps_.begin(), exps_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::erase_if(exps_, [](const Entry& e) { return e.second == 0; });
    }
    static Monomial var(VariableId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.exps_.push_back({v, e});
        return m;
    }

    bool is_one() const { return exps_.empty(); }
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }
    std::uint32_t exponent(VariableId v) const {
        for (const auto& [u, e] : exps_)
            if (u == v) return e;
        return 0;
    }
    bool contains(VariableId v) const { return exponent(v) > 0; }
    const std::vector<Entry>& entries() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() && b != o.exps_.end()) {
            if (a->first < b->first) r.exps_.push_back(*a++);
            else if (b->first < a->first) r.exps_.push_back(*b++);
            else { r.exps_.push_back({a->first, a->second + b->second}); ++a; ++b; }
        }
        r.exps_.insert(r.exps_.end(), a, exps_.end());
        r.exps_.insert(r.exps_.end(), b, o.exps_.end());
        return r;
    }

    /// this / o, or nullopt when some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        auto a = exps_.begin();
        for (const auto& [v, e] : o.exps_) {
            while (a != exps_.end() && a->first < v) r.exps_.push_back(*a++);
            if (a == exps_.end() || a->first != v || a->second < e) return std::nullopt;
            if (a->second > e) r.exps_.push_back({v, a->second - e});
            ++a;
        }
        r.exps_.insert(r.exps_.end(), a, exps_.end());
        return r;
    }

    /// Monomial with variable v removed entirely.
    Monomial without(VariableId v) const {
        Monomial r;
        for (const auto& e : exps_)
            if (e.first != v) r.exps_.push_back(e);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<Entry> exps_;
};

/// Canonical term order: higher degree first, then grlex on exponents.
struct MonomialCanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        auto ia = a.entries().begin(), ea = a.entries().end();
        auto ib = b.entries().begin(), eb = b.entries().end();
        while (ia != ea && ib != eb) {
            if (ia->first != ib->first) {
                // the one holding the earlier variable has a positive
                // exponent there, the other has zero
                return ia->first < ib->first;
            }
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia; ++ib;
        }
        return ia != ea;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, ExactRational, MonomialCanonicalLess>;

    Polynomial() = default;
    Polynomial(const ExactRational& c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    Polynomial(long c) : Polynomial(ExactRational(c)) {}
    static Polynomial variable(VariableId v) {
        Polynomial p;
        p.terms_.emplace(Monomial::var(v), ExactRational(1));
        return p;
    }
    static Polynomial term(Monomial m, ExactRational c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; 0 for the zero polynomial.
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    std::uint64_t degree_in(VariableId v) const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max<std::uint64_t>(d, m.exponent(v));
        return d;
    }
    bool contains(VariableId v) const {
        for (const auto& [m, c] : terms_)
            if (m.contains(v)) return true;
        return false;
    }
    std::vector<VariableId> variables() const {
        std::vector<VariableId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    ExactRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ExactRational(0) : it->second;
    }
    /// Constant term; the whole value when the polynomial is constant.
    ExactRational constant_term() const { return coefficient(Monomial{}); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    void add_term(const Monomial& m, const ExactRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const ExactRational& c) {
        Polynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    friend Polynomial operator*(const ExactRational& c, const Polynomial& a) { return a * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

/// p^e with the empty-product convention p^0 = 1 (including 0^0 = 1).
inline Polynomial pow(const Polynomial& p, std::uint64_t e) {
    Polynomial r(1);
    Polynomial base = p;
    for (std::uint64_t k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        if (k > 1) base *= base;
    }
    return r;
}

inline Polynomial derivative(const Polynomial& p, VariableId v) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial lowered = *m.divide(Monomial::var(v));
        r.add_term(lowered, c * ExactRational(static_cast<long>(e)));
    }
    return r;
}

/// The unique antiderivative in v with zero constant term in v.
inline Polynomial antiderivative(const Polynomial& p, VariableId v) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exponent(v);
        r.add_term(m * Monomial::var(v), c / ExactRational(static_cast<long>(e) + 1));
    }
    return r;
}

inline Polynomial substitute(const Polynomial& p, VariableId v, const Polynomial& repl) {
    Polynomial r;
    std::vector<Polynomial> powers{Polynomial(1)};  // powers[e] = repl^e
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exponent(v);
        while (powers.size() <= e) powers.push_back(powers.back() * repl);
        r += Polynomial::term(m.without(v), c) * powers[e];
    }
    return r;
}

inline Polynomial definite_integral(const Polynomial& p, VariableId v,
                                    const Polynomial& lower, const Polynomial& upper) {
    if (lower.contains(v) || upper.contains(v))
        throw BoundContainsVariable("definite_integral: bound mentions " + var_name(v));
    Polynomial f = antiderivative(p, v);
    return substitute(f, v, upper) - substitute(f, v, lower);
}

inline ExactRational evaluate(const Polynomial& p,
                              const std::map<VariableId, ExactRational>& point) {
    std::string missing;
    for (VariableId v : p.variables()) {
        if (!point.count(v)) missing += (missing.empty() ? "" : ", ") + var_name(v);
    }
    if (!missing.empty())
        throw UnboundVariable("evaluate: unbound variables: " + missing);
    ExactRational sum(0);
    for (const auto& [m, c] : p.terms()) {
        ExactRational t = c;
        for (const auto& [v, e] : m.entries()) t *= point.at(v).pow(e);
        sum += t;
    }
    return sum;
}

/// Exact quotient p/d, or nullopt when d does not divide p.
inline std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) return std::nullopt;
    Polynomial rem = p;
    Polynomial quot;
    const auto& dlead = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        auto m = rlead.first.divide(dlead.first);
        if (!m) return std::nullopt;
        Polynomial t = Polynomial::term(*m, rlead.second / dlead.second);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

}  // namespace critval
