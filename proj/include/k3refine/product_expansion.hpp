#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "k3refine/u_series.hpp"

namespace k3refine {

/// One factor (1 - sign * tau^tau_shift * q^q_shift * u^u_power)^(-multiplicity)
/// of an infinite product. u_power >= 1 keeps every factor equal to 1 + O(u).
struct ProductFactor {
    int sign;          // +1 or -1
    int tau_shift;     // power of tau inside the factor
    int q_shift;       // power of q inside the factor
    int u_power;       // power of u inside the factor, >= 1
    int multiplicity;  // exponent of the factor, >= 1
};

/// Binomial expansion of a single factor, truncated at u^order:
/// (1 - z)^(-k) = sum_j C(k+j-1, j) z^j with z = sign * tau^a q^b u^n.
/// Every u-coefficient is a single monomial, so multiplying a running
/// product by a factor series stays cheap.
inline USeries factor_series(const ProductFactor& f, int order) {
    if (f.u_power < 1) throw std::domain_error("non-unital factor");
    if (f.multiplicity < 1) throw std::domain_error("factor multiplicity must be positive");
    USeries s(order);
    for (int j = 0; f.u_power * j <= order; ++j) {
        Rational c(binomial(Int(f.multiplicity) + j - 1, j));
        if (f.sign < 0 && j % 2 == 1) c = -c;
        s.set_coefficient(
            f.u_power * j,
            QLaurent::monomial(f.q_shift * j, TauPolynomial::monomial(f.tau_shift * j, c)));
    }
    return s;
}

/// Product of the given factors truncated at u^order. Factors with
/// u_power > order are identically 1 mod u^(order+1) and must be omitted
/// by the caller; the result is then exact, not approximate.
inline USeries expand_product(std::span<const ProductFactor> factors, int order) {
    USeries p = USeries::one(order);
    for (const ProductFactor& f : factors) p *= factor_series(f, order);
    return p;
}

/// Knob for the self-test: corrupt one factor of one product family to
/// confirm the identity checks catch it. Normal callers pass none.
enum class MutationSite {
    none,
    hilb_factor,       // misprint one multiplicity in the Hilbert genus product
    pairs_factor,      // misprint one tau shift in the stable pairs product
    instanton_factor,  // misprint one multiplicity in the instanton product
};

namespace detail {

/// Factor families (1-x^n)^{-20} (1-t x^n)^{-2} (1-1/t x^n)^{-2} for n <= order.
/// This single product carries both the Hilbert scheme genera and the
/// genus 0 instanton series, so each use gets its own mutation site.
inline std::vector<ProductFactor> k3_genus_factors(int order, bool mutate) {
    std::vector<ProductFactor> fs;
    for (int n = 1; n <= order; ++n) {
        int plain = (mutate && n == 1) ? 19 : 20;
        fs.push_back({+1, 0, 0, n, plain});
        fs.push_back({+1, 2, 0, n, 2});
        fs.push_back({+1, -2, 0, n, 2});
    }
    return fs;
}

}  // namespace detail

/// Factors of the Hilbert-scheme genus product: the q^d coefficient equals
/// t^(-d) chi_{-t}(Hilb^d S). The u variable of the expansion plays the
/// role of q here.
inline std::vector<ProductFactor> hilb_genus_factors(int order,
                                                     MutationSite site = MutationSite::none) {
    return detail::k3_genus_factors(order, site == MutationSite::hilb_factor);
}

/// Factors of the genus 0 instanton series: the u^h coefficient equals
/// n^h_0(t).
inline std::vector<ProductFactor> instanton_factors(int order,
                                                    MutationSite site = MutationSite::none) {
    return detail::k3_genus_factors(order, site == MutationSite::instanton_factor);
}

/// Factors of the refined stable-pairs product: seven families per n,
///   1 / [ (1 + q u^n / tau)(1 + tau u^n / q)(1 + tau q u^n)(1 + u^n / (tau q))
///         (1 - u^n)^18 (1 - t u^n)(1 - u^n / t) ].
inline std::vector<ProductFactor> stable_pairs_factors(int order,
                                                       MutationSite site = MutationSite::none) {
    std::vector<ProductFactor> fs;
    for (int n = 1; n <= order; ++n) {
        int third = (site == MutationSite::pairs_factor && n == 1) ? -1 : +1;
        fs.push_back({-1, -1, +1, n, 1});
        fs.push_back({-1, +1, -1, n, 1});
        fs.push_back({-1, third, +1, n, 1});
        fs.push_back({-1, -1, -1, n, 1});
        fs.push_back({+1, 0, 0, n, 18});
        fs.push_back({+1, 2, 0, n, 1});
        fs.push_back({+1, -2, 0, n, 1});
    }
    return fs;
}

/// Factors (1 - u^n)^{-24}: the u^d coefficient is the Euler number of
/// Hilb^d S. Used as an independent route to the t = 1 specialization.
inline std::vector<ProductFactor> euler_number_factors(int order) {
    std::vector<ProductFactor> fs;
    for (int n = 1; n <= order; ++n) fs.push_back({+1, 0, 0, n, 24});
    return fs;
}

}  // namespace k3refine
