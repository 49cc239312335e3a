#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace residua {

// Exact rational number. Always stored in lowest terms with positive
// denominator (GMP canonical form). No floating point anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" or "p/q", optional leading '-'.
    static Rational parse(const std::string& text) {
        if (!looks_like_rational(text))
            throw std::invalid_argument("Rational::parse: malformed literal '" + text + "'");
        mpq_class v(text);
        if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    // Fractional part in [0, 1).
    Rational fractional_part() const {
        mpq_class f = v_ - mpq_class(floor());
        return Rational(std::move(f));
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

private:
    static bool looks_like_rational(const std::string& s) {
        std::size_t i = 0;
        auto digits = [&](std::size_t& k) {
            std::size_t start = k;
            while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
            return k > start;
        };
        if (i < s.size() && s[i] == '-') ++i;
        if (!digits(i)) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        if (!digits(i)) return false;
        return i == s.size();
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace residua
