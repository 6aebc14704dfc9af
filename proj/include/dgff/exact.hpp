#pragma once

#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

namespace dgff {

using Rational = mpq_class;

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// reduce the fraction, and GMP arithmetic assumes canonical operands).
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Gaussian rational: re + i*im with arbitrary-precision rational parts.
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    Gaussian conj() const { return {re, -im}; }

    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }

    // Multiplicative inverse; caller must ensure nonzero.
    Gaussian inverse() const;

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// An exact complex scalar of the form sum_k c_k * pi^k with Gaussian
/// rational coefficients c_k and integer exponents k (possibly negative).
/// Stored normalized: no zero coefficients.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long n) { if (n != 0) terms_[0] = Gaussian(n); }
    ExactScalar(const Rational& q) { if (q != 0) terms_[0] = Gaussian(q); }
    ExactScalar(const Gaussian& g) { if (!g.is_zero()) terms_[0] = g; }

    static ExactScalar i() { return ExactScalar(Gaussian(0, 1)); }
    static ExactScalar pi_pow(int k, const Gaussian& coeff = Gaussian(1)) {
        ExactScalar s;
        if (!coeff.is_zero()) s.terms_[k] = coeff;
        return s;
    }
    static ExactScalar pi() { return pi_pow(1); }

    bool is_zero() const { return terms_.empty(); }
    // True when the scalar is a plain Gaussian rational (no pi dependence).
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Gaussian rational_part() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Gaussian() : it->second;
    }

    const std::map<int, Gaussian>& terms() const { return terms_; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
    bool operator<(const ExactScalar& o) const;  // arbitrary total order for map keys

    ExactScalar conj() const;

    /// Inverse of a single-term scalar c*pi^k. Throws on anything else.
    ExactScalar inverse_monomial() const;

    std::complex<double> to_float() const;

    std::string to_string() const;
    std::string to_json() const;
    static ExactScalar from_json(const std::string& text);

private:
    std::map<int, Gaussian> terms_;
    void insert_term(int k, const Gaussian& g) {
        if (g.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, g);
        if (!fresh) {
            it->second = it->second + g;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

inline ExactScalar operator*(long n, const ExactScalar& s) { return ExactScalar(n) * s; }

Rational rational_from_string(const std::string& s);

}  // namespace dgff
