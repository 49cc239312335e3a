#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "residua/rational.hpp"

namespace residua {

// Eigenvalue sign counts of a symmetric matrix.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
    std::size_t dimension() const { return positive + negative + zero; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Dense symmetric rational matrix; writes keep both mirror entries in step.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static SymMatrix from_matrix(const Matrix& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: not square");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i + 1; j < m.cols(); ++j)
                if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("SymMatrix: not symmetric");
        SymMatrix s(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) s.data_[i * s.dim_ + j] = m.at(i, j);
        return s;
    }

    std::size_t dimension() const { return dim_; }

    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, const Rational& v) {
        data_[i * dim_ + j] = v;
        data_[j * dim_ + i] = v;
    }

    Matrix to_matrix() const {
        Matrix m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = at(i, j);
        return m;
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

inline mpz_class row_denominator_lcm(const Matrix& m, std::size_t i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_class d = m.at(i, j).denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

// Monic characteristic polynomial det(tI - A) of an integer matrix,
// division-free (Berkowitz). Returns coefficients c[0..n], c[0] = 1,
// p(t) = sum c[k] t^{n-k}.
inline std::vector<mpz_class> berkowitz_charpoly(const std::vector<mpz_class>& a, std::size_t n) {
    if (n == 0) return {mpz_class(1)};
    std::vector<mpz_class> v{mpz_class(1), -a[0]};
    for (std::size_t r = 1; r < n; ++r) {
        // First column of the Toeplitz transition matrix:
        // [1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C]
        std::vector<mpz_class> f(r + 2);
        f[0] = 1;
        f[1] = -a[r * n + r];
        std::vector<mpz_class> w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = a[i * n + r];
        for (std::size_t k = 2; k <= r + 1; ++k) {
            mpz_class dot(0);
            for (std::size_t i = 0; i < r; ++i) dot += a[r * n + i] * w[i];
            f[k] = -dot;
            if (k <= r) {
                std::vector<mpz_class> nw(r);
                for (std::size_t i = 0; i < r; ++i) {
                    mpz_class acc(0);
                    for (std::size_t j = 0; j < r; ++j) acc += a[i * n + j] * w[j];
                    nw[i] = std::move(acc);
                }
                w = std::move(nw);
            }
        }
        std::vector<mpz_class> nv(r + 2);
        for (std::size_t i = 0; i <= r + 1; ++i) {
            mpz_class acc(0);
            for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += f[i - j] * v[j];
            nv[i] = std::move(acc);
        }
        v = std::move(nv);
    }
    return v;
}

}  // namespace detail

// Exact determinant via fraction-free (Bareiss) elimination: denominators
// are cleared row by row, all interior divisions are exact integer ones.
inline Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<mpz_class> a(n * n);
    mpz_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = detail::row_denominator_lcm(m, i);
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = m.at(i, j);
            a[i * n + j] = e.numerator() * (l / e.denominator());
        }
    }

    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    mpq_class d(sign > 0 ? a[n * n - 1] : mpz_class(-a[n * n - 1]), scale);
    return Rational(std::move(d));
}

inline Rational det(const SymMatrix& m) { return det(m.to_matrix()); }

// Exact inertia by symmetric elimination with diagonal pivoting. When every
// remaining diagonal entry is zero, a nonzero off-diagonal entry spans a
// hyperbolic plane: consume the 2x2 block, contributing (+1, -1).
// Denominators are cleared up front by the congruence D m D, D positive
// diagonal, which leaves the inertia unchanged.
inline Inertia inertia_ldlt(const SymMatrix& m) {
    const std::size_t n = m.dimension();
    Inertia res;
    if (n == 0) return res;

    Matrix full = m.to_matrix();
    std::vector<mpz_class> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = detail::row_denominator_lcm(full, i);
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m.at(i, j) * Rational(mpz_class(l[i] * l[j]));

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    while (!active.empty()) {
        std::optional<std::size_t> diag_pos;
        for (std::size_t k = 0; k < active.size(); ++k) {
            std::size_t i = active[k];
            if (!a[i * n + i].is_zero()) {
                diag_pos = k;
                break;
            }
        }

        if (diag_pos) {
            const std::size_t i = active[*diag_pos];
            const Rational piv = a[i * n + i];
            (piv.sign() > 0 ? res.positive : res.negative) += 1;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(*diag_pos));
            for (std::size_t u : active)
                for (std::size_t v : active)
                    a[u * n + v] -= a[u * n + i] * a[i * n + v] / piv;
            continue;
        }

        std::optional<std::pair<std::size_t, std::size_t>> off;
        for (std::size_t p = 0; p < active.size() && !off; ++p)
            for (std::size_t q = p + 1; q < active.size(); ++q) {
                if (!a[active[p] * n + active[q]].is_zero()) {
                    off = {p, q};
                    break;
                }
            }
        if (!off) {
            res.zero += active.size();
            break;
        }

        const std::size_t i = active[off->first];
        const std::size_t j = active[off->second];
        const Rational b = a[i * n + j];
        res.positive += 1;
        res.negative += 1;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(off->second));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(off->first));
        // Schur complement w.r.t. the block [[0,b],[b,0]].
        for (std::size_t u : active)
            for (std::size_t v : active)
                a[u * n + v] -= (a[u * n + i] * a[j * n + v] + a[u * n + j] * a[i * n + v]) / b;
    }
    return res;
}

// Independent inertia route: exact characteristic polynomial of the
// congruence-scaled integer matrix, then Descartes' rule on p(t) and p(-t).
// All eigenvalues of a symmetric matrix are real, so the sign-variation
// counts are exact; the zero count is the t-adic valuation.
inline Inertia inertia_charpoly(const SymMatrix& m) {
    const std::size_t n = m.dimension();
    Inertia res;
    if (n == 0) return res;

    Matrix full = m.to_matrix();
    std::vector<mpz_class> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = detail::row_denominator_lcm(full, i);
    std::vector<mpz_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational e = m.at(i, j) * Rational(mpz_class(l[i] * l[j]));
            if (e.denominator() != 1) throw std::logic_error("inertia_charpoly: clearing failed");
            a[i * n + j] = e.numerator();
        }

    std::vector<mpz_class> c = detail::berkowitz_charpoly(a, n);

    std::size_t zeros = 0;
    while (zeros < n && c[n - zeros] == 0) ++zeros;
    res.zero = zeros;

    const std::size_t deg = n - zeros;  // q(t) = sum_{k<=deg} c[k] t^{deg-k}, q(0) != 0
    auto variations = [&](bool negate_odd) {
        std::size_t count = 0;
        int last = 0;
        for (std::size_t k = 0; k <= deg; ++k) {
            int s = sgn(c[k]);
            if (s == 0) continue;
            if (negate_odd && ((deg - k) % 2 == 1)) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    res.positive = variations(false);
    res.negative = variations(true);
    if (res.dimension() != n) throw std::logic_error("inertia_charpoly: sign counts inconsistent");
    return res;
}

// One exact solution plus a kernel basis when the system is consistent;
// inconsistency is a value, not a failure.
struct LinearSolution {
    bool consistent = false;
    std::vector<Rational> particular;            // empty when inconsistent
    std::vector<std::vector<Rational>> kernel;   // basis of the homogeneous solutions
};

inline LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    Matrix w(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n) = b[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && w.at(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != rank)
            for (std::size_t j = 0; j <= n; ++j) std::swap(w.at(piv, j), w.at(rank, j));
        const Rational inv = Rational(1) / w.at(rank, col);
        for (std::size_t j = col; j <= n; ++j) w.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || w.at(i, col).is_zero()) continue;
            const Rational f = w.at(i, col);
            for (std::size_t j = col; j <= n; ++j) w.at(i, j) -= f * w.at(rank, j);
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    LinearSolution sol;
    for (std::size_t i = rank; i < m; ++i)
        if (!w.at(i, n).is_zero()) return sol;  // 0 = nonzero row
    sol.consistent = true;

    sol.particular.assign(n, Rational(0));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol.particular[pivot_cols[k]] = w.at(k, n);

    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<Rational> v(n, Rational(0));
        v[col] = Rational(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -w.at(k, col);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace residua
