#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "residua/errors.hpp"
#include "residua/groebner.hpp"
#include "residua/linalg.hpp"
#include "residua/polynomial.hpp"

namespace residua {

// The local algebra of an isolated singularity: Jacobian ideal Gröbner
// basis, monomial basis of the quotient, Milnor number, and the Hessian
// class spanning the socle.
struct MilnorData {
    MilnorData(Polynomial f_, GroebnerBasis gb, std::vector<Monomial> basis_, Polynomial hess,
               std::size_t fiber_dim)
        : f(std::move(f_)),
          jacobian_gb(std::move(gb)),
          basis(std::move(basis_)),
          mu(basis.size()),
          hessian_class(std::move(hess)),
          n(fiber_dim) {
        for (std::size_t i = 0; i < basis.size(); ++i) index_.emplace(basis[i], i);
    }

    Polynomial f;
    GroebnerBasis jacobian_gb;
    std::vector<Monomial> basis;  // e_1 = 1, e_2, ..., e_mu
    std::size_t mu = 0;
    Polynomial hessian_class;
    std::size_t n = 0;  // fiber dimension = #vars - 1

    std::size_t basis_index(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw internal_error("MilnorData: monomial outside the basis");
        return it->second;
    }
    bool in_basis(const Monomial& m) const { return index_.count(m) > 0; }

private:
    std::map<Monomial, std::size_t> index_;
};

// Determinant of the matrix of second partials, exact.
inline Polynomial hessian(const Polynomial& f) {
    const std::size_t n = f.vars().size();
    std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n, Polynomial(f.vars())));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial fi = f.partial(i);
        for (std::size_t j = 0; j < n; ++j) h[i][j] = fi.partial(j);
    }
    return poly_det(h);
}

// Each variable must be nilpotent in the quotient, which pins the Jacobian
// scheme to the origin. Exponent mu suffices: nilpotency order is bounded by
// the algebra dimension.
inline bool check_local(const GroebnerBasis& jacobian_gb, std::size_t mu) {
    const std::size_t nvars = jacobian_gb.vars().size();
    for (std::size_t i = 0; i < nvars; ++i) {
        std::vector<unsigned> e(nvars, 0);
        e[i] = static_cast<unsigned>(mu);
        Polynomial p = Polynomial::monomial_term(jacobian_gb.vars(), Monomial(std::move(e)), Rational(1));
        if (!jacobian_gb.normal_form(p).is_zero()) return false;
    }
    return true;
}

inline MilnorData analyze_milnor(const Polynomial& f, const MonomialOrder& order = MonomialOrder::degrevlex(),
                                 const GroebnerOptions& options = {}) {
    const VarSet& vars = f.vars();
    if (!f.constant_term().is_zero())
        throw non_critical_error("f has a nonzero constant term; the germ must vanish at the origin");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!f.linear_coeff(i).is_zero())
            throw non_critical_error("the linear part of f is nonzero (in '" + vars.name(i) +
                                     "'); the origin is not a critical point");
    }
    if (f.is_zero()) throw non_isolated_error("f = 0 has no isolated singularity");

    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < vars.size(); ++i) partials.push_back(f.partial(i));
    GroebnerBasis gb = buchberger(partials, order, options);

    if (auto var = unbounded_variable(gb)) {
        throw non_isolated_error("the Jacobian ideal is not zero-dimensional (variable '" + *var +
                                 "' is unbounded); the singular locus has positive dimension");
    }

    Staircase sc = staircase(gb);
    if (sc.monomials.empty())
        throw internal_error("analyze_milnor: empty staircase for a proper Jacobian ideal");

    const std::size_t mu = sc.monomials.size();
    if (!check_local(gb, mu))
        throw non_local_error(
            "the Jacobian scheme has points away from the origin; re-center the germ or choose "
            "another polynomial representative");

    Polynomial hess_nf = gb.normal_form(hessian(f));
    if (hess_nf.is_zero())
        throw internal_error("analyze_milnor: Hessian class vanished for an isolated singularity");

    return MilnorData(f, std::move(gb), std::move(sc.monomials), std::move(hess_nf), vars.size() - 1);
}

// Rational weights of a quasi-homogeneous germ: 0 < w_i < 1 and every
// support monomial has weighted degree exactly 1.
struct WeightSystem {
    std::vector<Rational> weights;
};

enum class WeightFailure { inconsistent, underdetermined, out_of_range };

inline std::string to_string(WeightFailure f) {
    switch (f) {
        case WeightFailure::inconsistent: return "inconsistent (not quasi-homogeneous)";
        case WeightFailure::underdetermined: return "underdetermined (weights ambiguous)";
        case WeightFailure::out_of_range: return "out-of-range weights";
    }
    return "";
}

struct WeightDetection {
    std::optional<WeightSystem> weights;
    WeightFailure reason = WeightFailure::inconsistent;  // valid when !weights
};

inline WeightDetection detect_weights(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("detect_weights: zero polynomial");
    const std::size_t nvars = f.vars().size();

    Matrix a(f.term_count(), nvars);
    std::vector<Rational> rhs(f.term_count(), Rational(1));
    std::size_t row = 0;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < nvars; ++i) a.at(row, i) = Rational(static_cast<long>(m.exponent(i)));
        ++row;
    }

    LinearSolution sol = solve_linear(a, rhs);
    if (!sol.consistent) return {std::nullopt, WeightFailure::inconsistent};
    if (!sol.kernel.empty()) return {std::nullopt, WeightFailure::underdetermined};
    for (const Rational& w : sol.particular)
        if (!(w > Rational(0) && w < Rational(1))) return {std::nullopt, WeightFailure::out_of_range};

    // Euler identity f = sum w_i x_i df/dx_i is forced by the weight
    // equations; violation means the solver itself broke.
    Polynomial euler(f.vars());
    for (std::size_t i = 0; i < nvars; ++i)
        euler += Polynomial::variable(f.vars(), i) * f.partial(i) * sol.particular[i];
    if (!(euler == f)) throw internal_error("detect_weights: Euler identity failed on a solved system");

    return {WeightSystem{std::move(sol.particular)}, WeightFailure::inconsistent};
}

}  // namespace residua
