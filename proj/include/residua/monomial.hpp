#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace residua {

// Exponent vector. Componentwise comparison defines divisibility; total
// degree is the exponent sum. operator< is a plain lexicographic compare
// used only as a canonical container key, not a monomial order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}

    std::size_t nvars() const { return e_.size(); }
    unsigned exponent(std::size_t i) const { return e_.at(i); }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned long total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0ul);
    }

    bool is_unit() const {
        return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
    }

    bool divides(const Monomial& m) const {
        check_arity(m);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        check_arity(m);
        std::vector<unsigned> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + m.e_[i];
        return Monomial(std::move(r));
    }

    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        check_arity(m);
        std::vector<unsigned> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (m.e_[i] > e_[i]) throw std::invalid_argument("Monomial: inexact quotient");
            r[i] = e_[i] - m.e_[i];
        }
        return Monomial(std::move(r));
    }

    Monomial lcm(const Monomial& m) const {
        check_arity(m);
        std::vector<unsigned> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], m.e_[i]);
        return Monomial(std::move(r));
    }

    bool coprime(const Monomial& m) const {
        check_arity(m);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && m.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    void check_arity(const Monomial& m) const {
        if (e_.size() != m.e_.size()) throw std::invalid_argument("Monomial: arity mismatch");
    }

    std::vector<unsigned> e_;
};

enum class OrderKind { degrevlex, lex, block_drl };

// Total multiplicative monomial order with 1 minimal. block_drl compares the
// leading variable block degrevlex first (block split at `split`), then the
// trailing block.
class MonomialOrder {
public:
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::degrevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
    static MonomialOrder block(std::size_t split) { return MonomialOrder(OrderKind::block_drl, split); }

    OrderKind kind() const { return kind_; }
    std::size_t block_split() const { return split_; }

    // +1 when a > b, -1 when a < b, 0 on equality.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::degrevlex:
                return degrevlex_range(a, b, 0, a.nvars());
            case OrderKind::lex: {
                for (std::size_t i = 0; i < a.nvars(); ++i) {
                    if (a.exponent(i) != b.exponent(i))
                        return a.exponent(i) > b.exponent(i) ? 1 : -1;
                }
                return 0;
            }
            case OrderKind::block_drl: {
                if (int c = degrevlex_range(a, b, 0, split_)) return c;
                return degrevlex_range(a, b, split_, a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string name() const {
        switch (kind_) {
            case OrderKind::degrevlex: return "degrevlex";
            case OrderKind::lex: return "lex";
            case OrderKind::block_drl: return "block";
        }
        return "";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind kind, std::size_t split) : kind_(kind), split_(split) {}

    static int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        unsigned long da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) < b.exponent(i) ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_;
    std::size_t split_;
};

}  // namespace residua
