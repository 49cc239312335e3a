#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "residua/monomial.hpp"
#include "residua/rational.hpp"
#include "residua/varset.hpp"

namespace residua {

// Sparse multivariate polynomial over Q. Zero coefficients are never stored;
// the zero polynomial has an empty term map. Immutable in spirit: operations
// return new values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarSet vars) { return Polynomial(std::move(vars)); }

    static Polynomial constant(VarSet vars, Rational c) {
        Polynomial p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_.size()), std::move(c));
        return p;
    }

    static Polynomial variable(VarSet vars, std::size_t i) {
        if (i >= vars.size()) throw std::out_of_range("Polynomial::variable: index");
        std::vector<unsigned> e(vars.size(), 0);
        e[i] = 1;
        return monomial_term(std::move(vars), Monomial(std::move(e)), Rational(1));
    }

    static Polynomial monomial_term(VarSet vars, Monomial m, Rational c) {
        if (m.nvars() != vars.size()) throw std::invalid_argument("Polynomial: monomial arity");
        Polynomial p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Max total degree; -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.total_degree()));
        return d;
    }

    Rational constant_term() const { return coeff(Monomial(vars_.size())); }

    // Coefficient of x_i in the degree-one part.
    Rational linear_coeff(std::size_t i) const {
        std::vector<unsigned> e(vars_.size(), 0);
        e[i] = 1;
        return coeff(Monomial(std::move(e)));
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { p *= c; return p; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { p *= c; return p; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(vars_, Rational(1));
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    // Exact formal partial derivative.
    Polynomial partial(std::size_t i) const {
        if (i >= vars_.size()) throw std::out_of_range("partial: variable index");
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            std::vector<unsigned> ne = m.exponents();
            ne[i] = e - 1;
            r.add_term(Monomial(std::move(ne)), c * Rational(static_cast<long>(e)));
        }
        return r;
    }

    // Rename variables into a (possibly larger) VarSet. `mapping[i]` is the
    // target index of source variable i; must be injective.
    Polynomial substitute_vars(VarSet target, const std::vector<std::size_t>& mapping) const {
        if (mapping.size() != vars_.size())
            throw std::invalid_argument("substitute_vars: mapping size mismatch");
        std::vector<bool> seen(target.size(), false);
        for (std::size_t t : mapping) {
            if (t >= target.size()) throw std::invalid_argument("substitute_vars: target index out of range");
            if (seen[t]) throw std::invalid_argument("substitute_vars: mapping not injective");
            seen[t] = true;
        }
        Polynomial r(std::move(target));
        for (const auto& [m, c] : terms_) {
            std::vector<unsigned> e(r.vars_.size(), 0);
            for (std::size_t i = 0; i < mapping.size(); ++i) e[mapping[i]] = m.exponent(i);
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::invalid_argument("leading_term: zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    Monomial leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }

    // View as a univariate polynomial in x_i: exponent of x_i -> coefficient
    // polynomial with the x_i exponent stripped to zero.
    std::map<unsigned, Polynomial> decompose_by(std::size_t i) const {
        std::map<unsigned, Polynomial> parts;
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exponent(i);
            std::vector<unsigned> ne = m.exponents();
            ne[i] = 0;
            auto [it, inserted] = parts.try_emplace(e, vars_);
            it->second.add_term(Monomial(std::move(ne)), c);
        }
        return parts;
    }

    // Deterministic rendering: terms descending under degrevlex. parse of the
    // output reproduces the term map exactly.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        MonomialOrder drl = MonomialOrder::degrevlex();
        std::sort(order.begin(), order.end(),
                  [&](const auto* a, const auto* b) { return drl.greater(a->first, b->first); });

        std::ostringstream os;
        bool first = true;
        for (const auto* t : order) {
            const Rational& c = t->second;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            os << term_body(t->first, abs(c));
        }
        return os.str();
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

private:
    void check_vars(const Polynomial& o) const {
        if (!(vars_ == o.vars_)) throw std::invalid_argument("Polynomial: variable set mismatch");
    }

    std::string term_body(const Monomial& m, const Rational& c) const {
        std::ostringstream os;
        bool coeff_written = false;
        if (m.is_unit() || !c.is_one()) {
            os << c.str();
            coeff_written = true;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (coeff_written || os.tellp() > 0) os << "*";
            os << vars_.name(i);
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    VarSet vars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// Exact determinant of a square polynomial matrix by cofactor expansion.
// Rows are expanded sparsest-first (total term count), minors memoized on
// the active column mask. Guarded at dimension 8.
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    if (n > 8) throw std::invalid_argument("poly_det: dimension guard exceeded (max 8)");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det: matrix not square");
    const VarSet& vars = m[0][0].vars();

    std::vector<std::size_t> row_order(n);
    for (std::size_t i = 0; i < n; ++i) row_order[i] = i;
    std::vector<std::size_t> weight(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) weight[i] += m[i][j].term_count();
    std::sort(row_order.begin(), row_order.end(),
              [&](std::size_t a, std::size_t b) { return weight[a] != weight[b] ? weight[a] < weight[b] : a < b; });

    std::map<unsigned, Polynomial> memo;
    auto rec = [&](auto&& self, unsigned col_mask, std::size_t depth) -> Polynomial {
        if (depth == n) return Polynomial::constant(vars, Rational(1));
        auto hit = memo.find(col_mask);
        if (hit != memo.end()) return hit->second;
        const std::size_t row = row_order[depth];
        Polynomial acc(vars);
        int parity = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (col_mask & (1u << j)) continue;
            if (!m[row][j].is_zero()) {
                Polynomial sub = self(self, col_mask | (1u << j), depth + 1);
                Polynomial contrib = m[row][j] * sub;
                if (parity < 0) contrib = -contrib;
                acc += contrib;
            }
            parity = -parity;
        }
        memo.emplace(col_mask, acc);
        return acc;
    };
    return rec(rec, 0u, 0);
}

// Exact quotient of h by (x_i - x_j), via synthetic division in x_i with
// polynomial coefficients. The remainder must vanish; a nonzero remainder is
// an internal error in the caller's divisibility claim.
inline Polynomial divide_exact_linear(const Polynomial& h, std::size_t xi, std::size_t yj) {
    const VarSet& vars = h.vars();
    if (xi >= vars.size() || yj >= vars.size() || xi == yj)
        throw std::invalid_argument("divide_exact_linear: bad variable indices");
    if (h.is_zero()) return h;

    std::map<unsigned, Polynomial> parts = h.decompose_by(xi);
    const unsigned deg = parts.rbegin()->first;
    const Polynomial y = Polynomial::variable(vars, yj);
    const Polynomial none(vars);

    auto part = [&](unsigned k) -> const Polynomial& {
        auto it = parts.find(k);
        return it == parts.end() ? none : it->second;
    };

    // h = q*(x_i - x_j) + r: q_{k-1} = c_k + y*q_k downward, r = c_0 + y*q_0.
    std::vector<Polynomial> q(deg, none);
    Polynomial carry = part(deg);
    for (unsigned k = deg; k >= 1; --k) {
        q[k - 1] = carry;
        carry = part(k - 1) + y * carry;
    }
    if (!carry.is_zero()) throw std::logic_error("divide_exact_linear: nonzero remainder");

    Polynomial result(vars);
    for (unsigned k = 0; k < deg; ++k) {
        for (const auto& [m, c] : q[k].terms()) {
            std::vector<unsigned> e = m.exponents();
            e[xi] += k;
            result.add_term(Monomial(std::move(e)), c);
        }
    }
    return result;
}

}  // namespace residua
