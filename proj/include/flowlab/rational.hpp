#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flowlab {

// Exact rational arithmetic backed by GMP. Values are always kept in lowest
// terms with a positive denominator, so equality and ordering are exact no
// matter how large the numbers get (demands of 2^(pq) and packets of 1/(iP)
// both round-trip without loss).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, `cap >= 1` should read naturally
    Rational(const mpz_class& n) : q_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Accepts "p", "-p" or "p/q" with q > 0. Anything else yields nullopt.
    static std::optional<Rational> parse(std::string_view text);

    static Rational pow2(unsigned long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
        return Rational(p);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    // Largest integer <= value.
    Rational floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return Rational(f);
    }

    // "p" when integral, "p/q" otherwise. Never decimal.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    double approx() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text)) return std::nullopt;
        return Rational(mpz_class(std::string(text), 10));
    }
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = text.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds) || ds.front() == '-') return std::nullopt;
    mpz_class den(std::string(ds), 10);
    if (den == 0) return std::nullopt;
    return Rational(mpz_class(std::string(ns), 10), den);
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace flowlab
