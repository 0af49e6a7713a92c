#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "k3refine/tau_polynomial.hpp"

namespace k3refine {

/// Reduced fraction of two Laurent polynomials in tau. Canonical form:
/// numerator and denominator share no polynomial factor, the denominator is
/// an ordinary polynomial with constant term != 0, integer coefficients,
/// content 1 and positive leading coefficient. Canonical form makes equality
/// componentwise and the serialized output reproducible bit for bit.
class TauRational {
public:
    TauRational() : num_(), den_(1) {}
    TauRational(TauPolynomial p) : num_(std::move(p)), den_(1) {}
    TauRational(int c) : num_(c), den_(1) {}
    TauRational(TauPolynomial num, TauPolynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        canonicalize();
    }

    const TauPolynomial& num() const { return num_; }
    const TauPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the fraction reduced to denominator 1.
    bool is_polynomial() const { return den_.is_one(); }

    friend TauRational operator+(const TauRational& a, const TauRational& b) {
        return TauRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend TauRational operator-(const TauRational& a, const TauRational& b) {
        return TauRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend TauRational operator*(const TauRational& a, const TauRational& b) {
        return TauRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend TauRational operator/(const TauRational& a, const TauRational& b) {
        if (b.is_zero()) throw std::domain_error("zero denominator");
        return TauRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    TauRational operator-() const {
        TauRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    TauRational& operator+=(const TauRational& o) { return *this = *this + o; }
    TauRational& operator-=(const TauRational& o) { return *this = *this - o; }
    TauRational& operator*=(const TauRational& o) { return *this = *this * o; }
    TauRational& operator/=(const TauRational& o) { return *this = *this / o; }

    /// tau -> tau^k on numerator and denominator.
    TauRational substitute_power(int k) const {
        return TauRational(num_.substitute_power(k), den_.substitute_power(k));
    }

    /// tau -> tau^(-1), re-canonicalized.
    TauRational invert_variable() const {
        return TauRational(num_.invert_variable(), den_.invert_variable());
    }

    bool is_palindromic() const { return invert_variable() == *this; }

    /// Value at tau = 1, or nullopt when the denominator vanishes there.
    std::optional<Rational> evaluate_at_one() const {
        Rational d = den_.evaluate_at_one();
        if (d == 0) return std::nullopt;
        return num_.evaluate_at_one() / d;
    }

    bool operator==(const TauRational&) const = default;

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = TauPolynomial(1);
            return;
        }
        TauPolynomial g = polynomial_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
        // Push the denominator's monomial factor and scale into the numerator.
        int shift = den_.min_exponent();
        auto dense = detail::to_dense(den_);
        Rational scale = detail::make_primitive(dense.coeffs);
        dense.shift = 0;
        den_ = detail::from_dense(dense);
        num_ = num_.scaled_shift(-shift, Rational(1) / scale);
    }

    TauPolynomial num_;
    TauPolynomial den_;
};

}  // namespace k3refine
