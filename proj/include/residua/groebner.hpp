#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "residua/errors.hpp"
#include "residua/polynomial.hpp"

namespace residua {

struct GroebnerOptions {
    unsigned long max_pair_degree = 60;  // abort if an S-pair lcm exceeds this degree
    std::size_t max_pairs = 200000;      // runaway-input guard
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [lm_f, lc_f] = f.leading_term(order);
    auto [lm_g, lc_g] = g.leading_term(order);
    Monomial l = lm_f.lcm(lm_g);
    Polynomial a = Polynomial::monomial_term(f.vars(), l / lm_f, Rational(1) / lc_f) * f;
    Polynomial b = Polynomial::monomial_term(g.vars(), l / lm_g, Rational(1) / lc_g) * g;
    return a - b;
}

// Reduced Gröbner basis: generators are monic and inter-reduced. Original
// ideal generators are retained for audit.
class GroebnerBasis {
public:
    GroebnerBasis(VarSet vars, MonomialOrder order, std::vector<Polynomial> generators,
                  std::vector<Polynomial> original)
        : vars_(std::move(vars)),
          order_(order),
          gens_(std::move(generators)),
          original_(std::move(original)) {
        lts_.reserve(gens_.size());
        for (const Polynomial& g : gens_) lts_.push_back(g.leading_monomial(order_));
    }

    const VarSet& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& original_generators() const { return original_; }
    const std::vector<Monomial>& leading_monomials() const { return lts_; }

    // Unique remainder with no term divisible by any leading term.
    Polynomial normal_form(Polynomial p) const {
        Polynomial r(vars_);
        while (!p.is_zero()) {
            auto [m, c] = p.leading_term(order_);
            std::optional<std::size_t> reducer;
            for (std::size_t k = 0; k < lts_.size(); ++k) {
                if (lts_[k].divides(m)) {
                    reducer = k;
                    break;
                }
            }
            if (reducer) {
                const Polynomial& g = gens_[*reducer];
                Rational lc = g.coeff(lts_[*reducer]);
                p -= Polynomial::monomial_term(vars_, m / lts_[*reducer], c / lc) * g;
            } else {
                p.add_term(m, -c);
                r.add_term(m, c);
            }
        }
        return r;
    }

private:
    VarSet vars_;
    MonomialOrder order_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> original_;
    std::vector<Monomial> lts_;
};

namespace detail {

inline Polynomial make_monic(Polynomial p, const MonomialOrder& order) {
    Rational lc = p.leading_term(order).second;
    p *= Rational(1) / lc;
    return p;
}

inline Polynomial reduce_against(Polynomial p, const std::vector<Polynomial>& gens,
                                 const std::vector<Monomial>& lts, const MonomialOrder& order,
                                 const VarSet& vars) {
    Polynomial r(vars);
    while (!p.is_zero()) {
        auto [m, c] = p.leading_term(order);
        std::optional<std::size_t> reducer;
        for (std::size_t k = 0; k < lts.size(); ++k) {
            if (lts[k].divides(m)) {
                reducer = k;
                break;
            }
        }
        if (reducer) {
            const Polynomial& g = gens[*reducer];
            Rational lc = g.coeff(lts[*reducer]);
            p -= Polynomial::monomial_term(vars, m / lts[*reducer], c / lc) * g;
        } else {
            p.add_term(m, -c);
            r.add_term(m, c);
        }
    }
    return r;
}

}  // namespace detail

// Buchberger's algorithm with the coprime-leading-term and chain criteria
// and normal (smallest lcm first) pair selection.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                                const GroebnerOptions& options = {}) {
    if (generators.empty()) throw std::invalid_argument("buchberger: no generators");
    const VarSet vars = generators[0].vars();

    std::vector<Polynomial> basis;
    std::vector<Monomial> lts;
    auto push = [&](Polynomial p) {
        p = detail::make_monic(std::move(p), order);
        lts.push_back(p.leading_monomial(order));
        basis.push_back(std::move(p));
    };
    for (const Polynomial& g : generators) {
        if (!(g.vars() == vars)) throw std::invalid_argument("buchberger: mixed variable sets");
        if (!g.is_zero()) push(g);
    }

    // Pending S-pairs keyed by (lcm degree, lcm, i, j): normal selection.
    struct PairKey {
        unsigned long degree;
        Monomial lcm;
        std::size_t i, j;
    };
    auto key_less = [order](const PairKey& a, const PairKey& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (int c = order.compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(key_less)> pending(key_less);
    std::set<std::pair<std::size_t, std::size_t>> pending_index;

    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = lts[i].lcm(lts[j]);
            pending.insert({l.total_degree(), l, i, j});
            pending_index.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    std::size_t processed = 0;
    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_index.erase({pk.i, pk.j});

        if (pk.degree > options.max_pair_degree)
            throw budget_error("buchberger: pair degree " + std::to_string(pk.degree) +
                               " exceeds bound " + std::to_string(options.max_pair_degree));
        if (++processed > options.max_pairs)
            throw budget_error("buchberger: pair budget exceeded");

        if (lts[pk.i].coprime(lts[pk.j])) continue;

        // Chain criterion: some other leading term divides the lcm and both
        // connecting pairs are already handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!lts[k].divides(pk.lcm)) continue;
            auto ik = std::minmax(pk.i, k);
            auto jk = std::minmax(pk.j, k);
            if (!pending_index.count({ik.first, ik.second}) &&
                !pending_index.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[pk.i], basis[pk.j], order);
        Polynomial r = detail::reduce_against(std::move(s), basis, lts, order, vars);
        if (r.is_zero()) continue;
        push(std::move(r));
        add_pairs_for(basis.size() - 1);
    }

    // Minimize: drop generators whose leading term another one divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lts[j].divides(lts[i]) && !(lts[i] == lts[j] && j > i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    std::vector<Monomial> minimal_lts;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (keep[i]) {
            minimal.push_back(basis[i]);
            minimal_lts.push_back(lts[i]);
        }
    }

    // Tail-reduce each generator against the others.
    std::vector<Polynomial> reduced(minimal.size(), Polynomial(vars));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<Monomial> other_lts;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            other_lts.push_back(minimal_lts[j]);
        }
        reduced[i] = detail::make_monic(
            detail::reduce_against(minimal[i], others, other_lts, order, vars), order);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return GroebnerBasis(vars, order, std::move(reduced), generators);
}

// First variable with no pure power among the leading terms, if any.
inline std::optional<std::string> unbounded_variable(const GroebnerBasis& gb) {
    const std::size_t n = gb.vars().size();
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const Monomial& lt : gb.leading_monomials()) {
            bool pure = true;
            for (std::size_t k = 0; k < n && pure; ++k)
                if (k != v && lt.exponent(k) > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return gb.vars().name(v);
    }
    return std::nullopt;
}

// True iff every variable has a pure power among the leading terms.
inline bool is_zero_dimensional(const GroebnerBasis& gb) {
    return !unbounded_variable(gb).has_value();
}

// Standard monomials (not divisible by any leading term), sorted by total
// degree and, within a degree, descending under the basis order.
struct Staircase {
    std::vector<Monomial> monomials;
};

inline Staircase staircase(const GroebnerBasis& gb) {
    const std::size_t n = gb.vars().size();
    std::vector<unsigned> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::optional<unsigned> best;
        for (const Monomial& lt : gb.leading_monomials()) {
            bool pure = true;
            for (std::size_t k = 0; k < n && pure; ++k)
                if (k != v && lt.exponent(k) > 0) pure = false;
            if (pure && (!best || lt.exponent(v) < *best)) best = lt.exponent(v);
        }
        if (!best) throw not_zero_dimensional_error(gb.vars().name(v));
        bound[v] = *best;
    }

    std::vector<Monomial> out;
    std::vector<unsigned> current(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            Monomial m{std::vector<unsigned>(current)};
            for (const Monomial& lt : gb.leading_monomials())
                if (lt.divides(m)) return;
            out.push_back(std::move(m));
            return;
        }
        for (unsigned e = 0; e < bound[v]; ++e) {
            current[v] = e;
            self(self, v + 1);
        }
        current[v] = 0;
    };
    rec(rec, 0);

    const MonomialOrder& order = gb.order();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return order.greater(a, b);
    });
    return Staircase{std::move(out)};
}

}  // namespace residua
