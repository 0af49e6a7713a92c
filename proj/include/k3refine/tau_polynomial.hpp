#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "k3refine/rational.hpp"

namespace k3refine {

/// Sparse Laurent polynomial in tau = t^(1/2) with rational coefficients.
/// A power t^k is stored as tau-exponent 2k, so half-integer powers of t
/// never need fractional exponents. Zero coefficients are never stored.
/// Values are immutable in spirit: every operation returns a new value.
class TauPolynomial {
public:
    using TermMap = std::map<int, Rational>;

    TauPolynomial() = default;
    TauPolynomial(int c) { set(0, Rational(c)); }
    TauPolynomial(Rational c) { set(0, std::move(c)); }

    static TauPolynomial monomial(int exponent, Rational coeff) {
        TauPolynomial p;
        p.set(exponent, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    /// True when every coefficient is an integer.
    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    const TermMap& terms() const { return terms_; }

    /// Lowest/highest stored exponent; zero polynomial has no support.
    int min_exponent() const { return require_nonzero(), terms_.begin()->first; }
    int max_exponent() const { return require_nonzero(), terms_.rbegin()->first; }

    Rational coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TauPolynomial& operator+=(const TauPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TauPolynomial& operator-=(const TauPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend TauPolynomial operator+(TauPolynomial a, const TauPolynomial& b) { return a += b; }
    friend TauPolynomial operator-(TauPolynomial a, const TauPolynomial& b) { return a -= b; }
    TauPolynomial operator-() const {
        TauPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend TauPolynomial operator*(const TauPolynomial& a, const TauPolynomial& b) {
        TauPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    TauPolynomial& operator*=(const TauPolynomial& o) { return *this = *this * o; }

    TauPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }
    friend TauPolynomial operator*(TauPolynomial a, const Rational& s) { return a *= s; }
    friend TauPolynomial operator*(const Rational& s, TauPolynomial a) { return a *= s; }

    /// Multiplies by the monomial coeff * tau^exponent.
    TauPolynomial scaled_shift(int exponent, const Rational& coeff) const {
        TauPolynomial r;
        if (coeff == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + exponent, c * coeff);
        return r;
    }

    /// tau -> tau^k (so t -> t^k). Ring homomorphism; requires k >= 1.
    TauPolynomial substitute_power(int k) const {
        if (k < 1) throw std::domain_error("substitute_power requires k >= 1");
        TauPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
        return r;
    }

    /// tau -> tau^(-1). Involutive ring automorphism.
    TauPolynomial invert_variable() const {
        TauPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    /// Fixed by tau -> tau^(-1)?  (The zero polynomial is.)
    bool is_palindromic() const {
        for (const auto& [e, c] : terms_)
            if (coefficient(-e) != c) return false;
        return true;
    }

    /// Value at tau = 1: the sum of all coefficients.
    Rational evaluate_at_one() const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const TauPolynomial&) const = default;

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no exponent range");
    }
    void set(int e, Rational c) {
        if (c != 0) terms_.insert_or_assign(e, std::move(c));
    }
    void add_term(int e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

/// Quantum integer [n]_t = tau^(n-1) + tau^(n-3) + ... + tau^(1-n).
/// [0]_t is the zero polynomial, [n]_t(1) = n.
inline TauPolynomial quantum_integer(int n) {
    if (n < 0) throw std::domain_error("quantum_integer requires n >= 0");
    TauPolynomial p;
    for (int e = 1 - n; e <= n - 1; e += 2) p += TauPolynomial::monomial(e, 1);
    return p;
}

namespace detail {

/// Ordinary-polynomial view of a Laurent polynomial: p = tau^shift * sum coeffs[i] tau^i
/// with coeffs.front() != 0 unless p is zero.
struct DensePoly {
    int shift = 0;
    std::vector<Rational> coeffs;  // coeffs[i] is the tau^i coefficient

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline DensePoly to_dense(const TauPolynomial& p) {
    DensePoly d;
    if (p.is_zero()) return d;
    d.shift = p.min_exponent();
    d.coeffs.assign(p.max_exponent() - d.shift + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) d.coeffs[e - d.shift] = c;
    return d;
}

inline TauPolynomial from_dense(const DensePoly& d) {
    TauPolynomial p;
    for (int i = 0; i < static_cast<int>(d.coeffs.size()); ++i)
        if (d.coeffs[i] != 0) p += TauPolynomial::monomial(d.shift + i, d.coeffs[i]);
    return p;
}

inline void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Euclidean division a = q*b + r over the rationals (dense, shift ignored).
inline std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q;
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (a[i] == 0) continue;
        Rational f = a[i] / lead;
        q[i - (b.size() - 1)] = f;
        for (size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= f * b[j];
    }
    trim(a);
    return {q, a};
}

/// Rescales to integer coefficients with content 1 and positive leading
/// coefficient; returns the factor c with input = c * output.
inline Rational make_primitive(std::vector<Rational>& v) {
    if (v.empty()) return Rational(1);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : v) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) return Rational(1);
    Rational factor(num_gcd, den_lcm);
    if (v.back() < 0) factor = -factor;
    for (auto& c : v) c /= factor;
    return factor;
}

}  // namespace detail

/// Exact quotient a/b as a Laurent polynomial, or nullopt when b does not
/// divide a. Throws on b = 0.
inline std::optional<TauPolynomial> exact_divide(const TauPolynomial& a, const TauPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("zero denominator");
    if (a.is_zero()) return TauPolynomial();
    auto da = detail::to_dense(a);
    auto db = detail::to_dense(b);
    auto [q, r] = detail::divmod(da.coeffs, db.coeffs);
    if (!r.empty()) return std::nullopt;
    detail::DensePoly dq{da.shift - db.shift, std::move(q)};
    return detail::from_dense(dq);
}

/// Monic-free gcd of two Laurent polynomials: an ordinary polynomial with
/// nonzero constant term, integer coefficients, content 1 and positive
/// leading coefficient. Monomial factors count as units, so gcd(tau^k, p)
/// ignores shifts. gcd(0, 0) = 0.
inline TauPolynomial polynomial_gcd(const TauPolynomial& a, const TauPolynomial& b) {
    std::vector<Rational> u = detail::to_dense(a).coeffs;
    std::vector<Rational> v = detail::to_dense(b).coeffs;
    while (!v.empty()) {
        auto [q, r] = detail::divmod(std::move(u), v);
        u = std::move(v);
        v = std::move(r);
        detail::make_primitive(v);
    }
    detail::make_primitive(u);
    detail::DensePoly d{0, std::move(u)};
    return detail::from_dense(d);
}

}  // namespace k3refine
