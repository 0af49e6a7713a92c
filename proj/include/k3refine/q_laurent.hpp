#pragma once

#include <map>
#include <utility>

#include "k3refine/tau_polynomial.hpp"

namespace k3refine {

/// Sparse Laurent polynomial in q whose coefficients are Laurent polynomials
/// in tau. Zero coefficients are never stored.
class QLaurent {
public:
    using TermMap = std::map<int, TauPolynomial>;

    QLaurent() = default;
    QLaurent(TauPolynomial c) { set(0, std::move(c)); }
    QLaurent(int c) { set(0, TauPolynomial(c)); }

    static QLaurent monomial(int q_exponent, TauPolynomial coeff) {
        QLaurent r;
        r.set(q_exponent, std::move(coeff));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int min_exponent() const { return require_nonzero(), terms_.begin()->first; }
    int max_exponent() const { return require_nonzero(), terms_.rbegin()->first; }

    TauPolynomial coefficient(int q_exponent) const {
        auto it = terms_.find(q_exponent);
        return it == terms_.end() ? TauPolynomial() : it->second;
    }

    QLaurent& operator+=(const QLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QLaurent& operator-=(const QLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    QLaurent operator-() const {
        QLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    QLaurent& operator*=(const TauPolynomial& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }
    friend QLaurent operator*(QLaurent a, const TauPolynomial& s) { return a *= s; }
    friend QLaurent operator*(const TauPolynomial& s, QLaurent a) { return a *= s; }

    /// q -> q^(-1).
    QLaurent invert_q() const {
        QLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    bool is_q_palindromic() const {
        for (const auto& [e, c] : terms_)
            if (coefficient(-e) != c) return false;
        return true;
    }

    /// tau -> tau^(-1) applied to every coefficient.
    QLaurent invert_tau() const {
        QLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.invert_variable());
        return r;
    }

    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_integral()) return false;
        return true;
    }

    bool operator==(const QLaurent&) const = default;

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no exponent range");
    }
    void set(int e, TauPolynomial c) {
        if (!c.is_zero()) terms_.insert_or_assign(e, std::move(c));
    }
    void add_term(int e, const TauPolynomial& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace k3refine
