#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "k3refine/q_laurent.hpp"

namespace k3refine {

/// The symmetric kernel q^(-1) + [2]_t + q relating the stable-pairs and
/// BPS generating functions.
inline QLaurent pairs_kernel() {
    QLaurent k = QLaurent::monomial(-1, TauPolynomial(1));
    k += QLaurent(quantum_integer(2));
    k += QLaurent::monomial(+1, TauPolynomial(1));
    return k;
}

/// Solves (q^(-1) + [2]_t + q) * sum_chi P_chi q^chi = C for the window
/// chi_min .. chi_max by the forward recurrence
///   P_chi = C_(chi-1) - [2]_t P_(chi-1) - P_(chi-2),
/// with P_chi = 0 below chi_min. chi_min must be the lowest chi with a
/// potentially nonzero coefficient: lowest q-exponent of C plus 1.
inline std::map<int, TauPolynomial> divide_by_kernel(const QLaurent& c, int chi_min,
                                                     int chi_max) {
    const TauPolynomial two = quantum_integer(2);
    std::map<int, TauPolynomial> p;
    auto at = [&](int chi) -> TauPolynomial {
        auto it = p.find(chi);
        return it == p.end() ? TauPolynomial() : it->second;
    };
    for (int chi = chi_min; chi <= chi_max; ++chi)
        p[chi] = c.coefficient(chi - 1) - two * at(chi - 1) - at(chi - 2);
    return p;
}

namespace detail {

template <typename Ring>
void add_term(std::map<int, Ring>& m, int e, const Ring& v) {
    if (v == Ring{}) return;
    auto [it, inserted] = m.try_emplace(e, v);
    if (!inserted) {
        it->second = it->second + v;
        if (it->second == Ring{}) m.erase(it);
    }
}

template <typename Ring>
std::map<int, Ring> kernel_multiply(const std::map<int, Ring>& a, const Ring& center) {
    // multiply by x^(-1) + center + x
    std::map<int, Ring> r;
    for (const auto& [e, v] : a) {
        add_term(r, e - 1, v);
        add_term(r, e, v * center);
        add_term(r, e + 1, v);
    }
    return r;
}

}  // namespace detail

/// Power (x^(-1) + center + x)^g as an exponent -> coefficient map.
template <typename Ring>
std::map<int, Ring> symmetric_kernel_power(const Ring& center, int g) {
    std::map<int, Ring> r;
    r.emplace(0, Ring{1});
    for (int i = 0; i < g; ++i) r = detail::kernel_multiply(r, center);
    return r;
}

/// Writes a palindromic Laurent polynomial C (exponent -> coefficient over
/// any commutative ring) as sum_g coeff[g] * (x^(-1) + center + x)^g by
/// stripping the top degree: coeff[h] is the x^h coefficient, subtract
/// coeff[h] * (x^(-1) + center + x)^h, recurse on the remainder. The
/// reconstruction from the returned coefficients is exact.
template <typename Ring>
std::vector<Ring> extract_kernel_basis(std::map<int, Ring> c, const Ring& center) {
    for (auto& [e, v] : c)
        if (v == Ring{}) throw std::invalid_argument("stored zero coefficient");
    for (const auto& [e, v] : c) {
        auto mirror = c.find(-e);
        if (mirror == c.end() || !(mirror->second == v))
            throw std::domain_error("basis extraction requires palindromic input");
    }
    int degree = c.empty() ? 0 : c.rbegin()->first;
    std::vector<Ring> out(degree + 1, Ring{});
    for (int g = degree; g >= 1; --g) {
        auto it = c.find(g);
        if (it == c.end()) continue;
        Ring top = it->second;
        out[g] = top;
        for (const auto& [e, v] : symmetric_kernel_power(center, g))
            detail::add_term(c, e, Ring{} - top * v);
    }
    // all that survives is the degree 0 coefficient
    for (const auto& [e, v] : c)
        if (e != 0) throw std::logic_error("basis extraction left a nonzero high term");
    if (!c.empty()) out[0] = c.begin()->second;
    return out;
}

/// QLaurent view as an exponent map for the refined extraction.
inline std::map<int, TauPolynomial> q_exponent_map(const QLaurent& c) {
    return {c.terms().begin(), c.terms().end()};
}

}  // namespace k3refine
