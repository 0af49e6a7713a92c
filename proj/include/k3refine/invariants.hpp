#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3refine/kernel.hpp"
#include "k3refine/product_expansion.hpp"
#include "k3refine/tau_rational.hpp"

namespace k3refine {

// ---------------------------------------------------------------------------
// Hilbert scheme genera
// ---------------------------------------------------------------------------

/// chi_{-t}(Hilb^d S) for d = 0 .. d_max. Entry d is a polynomial in t of
/// degree 2d (tau-exponents 0 .. 4d, even only) whose t^d-centered version
/// is palindromic. Entry 0 is 1.
struct HilbGenusTable {
    std::vector<TauPolynomial> entries;

    int d_max() const { return static_cast<int>(entries.size()) - 1; }
    const TauPolynomial& entry(int d) const {
        if (d < 0 || d > d_max()) throw std::out_of_range("Hilbert table index out of range");
        return entries[static_cast<size_t>(d)];
    }
    /// t^(-d) chi_{-t}(Hilb^d): the centered, palindromic form.
    TauPolynomial centered(int d) const { return entry(d).scaled_shift(-2 * d, 1); }
};

inline HilbGenusTable hilb_chi_series(int d_max, MutationSite site = MutationSite::none) {
    if (d_max < 0) throw std::domain_error("d_max must be nonnegative");
    auto factors = hilb_genus_factors(d_max, site);
    USeries p = expand_product(factors, d_max);
    HilbGenusTable table;
    table.entries.reserve(static_cast<size_t>(d_max) + 1);
    for (int d = 0; d <= d_max; ++d) {
        const QLaurent& c = p.coefficient(d);
        if (!(c == QLaurent(c.coefficient(0))))
            throw std::logic_error("genus product picked up a q power");
        table.entries.push_back(c.coefficient(0).scaled_shift(2 * d, 1));
    }
    return table;
}

/// Euler numbers e(Hilb^d) = chi_{-t}(Hilb^d) at t = 1.
inline std::vector<Int> euler_hilb(const HilbGenusTable& table) {
    std::vector<Int> e;
    e.reserve(table.entries.size());
    for (const auto& entry : table.entries) {
        Rational v = entry.evaluate_at_one();
        if (!is_integer(v)) throw std::logic_error("Euler specialization not an integer");
        e.push_back(numerator(v));
    }
    return e;
}
inline std::vector<Int> euler_hilb(int d_max) { return euler_hilb(hilb_chi_series(d_max)); }

// ---------------------------------------------------------------------------
// Stable pairs
// ---------------------------------------------------------------------------

/// The refined stable-pairs product expanded to u-order h_max. The u^h
/// coefficient is a palindromic Laurent polynomial in q of degree <= h with
/// tau-palindromic coefficients of tau-degree <= 2h; violation of that
/// structure means a corrupted expansion and throws.
inline USeries stable_pairs_product(int h_max, MutationSite site = MutationSite::none) {
    if (h_max < 0) throw std::domain_error("h_max must be nonnegative");
    USeries p = expand_product(stable_pairs_factors(h_max, site), h_max);
    for (int h = 0; h <= h_max; ++h) {
        const QLaurent& c = p.coefficient(h);
        if (c.is_zero()) throw std::logic_error("stable pairs expansion lost a coefficient");
        if (c.max_exponent() > h || !c.is_q_palindromic())
            throw std::logic_error("stable pairs expansion violates q-palindromic structure");
        for (const auto& [qe, coeff] : c.terms())
            if (!coeff.is_palindromic() || coeff.max_exponent() > 2 * h)
                throw std::logic_error("stable pairs expansion violates tau-palindromic structure");
    }
    return p;
}

/// The genus 0 instanton series expanded to u-order h_max: the u^h
/// coefficient equals n^h_0(t).
inline USeries instanton_product(int h_max, MutationSite site = MutationSite::none) {
    if (h_max < 0) throw std::domain_error("h_max must be nonnegative");
    return expand_product(instanton_factors(h_max, site), h_max);
}

/// Refined primitive stable-pair invariants P^h_chi(t) for one genus h,
/// on the window 1-h <= chi <= chi_max. Entries below 1-h are zero.
struct PairsTable {
    int genus = 0;
    int chi_max = 0;
    std::map<int, TauPolynomial> entries;

    TauPolynomial entry(int chi) const {
        if (chi < 1 - genus) return TauPolynomial();
        if (chi > chi_max) throw std::out_of_range("chi beyond computed pairs window");
        auto it = entries.find(chi);
        return it == entries.end() ? TauPolynomial() : it->second;
    }
};

inline PairsTable pairs_primitive(const USeries& pairs_series, int h, int chi_max) {
    if (h < 0 || h > pairs_series.order())
        throw std::out_of_range("genus beyond expanded pairs order");
    if (chi_max < 1 - h) throw std::domain_error("chi_max below the pairs window");
    PairsTable table;
    table.genus = h;
    table.chi_max = chi_max;
    table.entries = divide_by_kernel(pairs_series.coefficient(h), 1 - h, chi_max);
    return table;
}
inline PairsTable pairs_primitive(int h, int chi_max) {
    return pairs_primitive(stable_pairs_product(h), h, chi_max);
}

// ---------------------------------------------------------------------------
// Refined BPS invariants
// ---------------------------------------------------------------------------

/// Refined BPS polynomials n^h_g(t) for 0 <= g <= h <= h_max, obtained by
/// kernel-basis extraction from the stable-pairs product. n^h_g = 0 for
/// g > h.
struct BpsTable {
    int h_max = -1;
    std::vector<std::vector<TauPolynomial>> entries;  // entries[h][g]

    TauPolynomial at(int h, int g) const {
        if (h < 0 || h > h_max) throw std::out_of_range("genus beyond BPS table");
        const auto& row = entries[static_cast<size_t>(h)];
        if (g < 0 || g >= static_cast<int>(row.size())) return TauPolynomial();
        return row[static_cast<size_t>(g)];
    }
};

inline BpsTable bps_refined(const USeries& pairs_series) {
    BpsTable table;
    table.h_max = pairs_series.order();
    table.entries.reserve(static_cast<size_t>(table.h_max) + 1);
    const TauPolynomial center = quantum_integer(2);
    for (int h = 0; h <= table.h_max; ++h)
        table.entries.push_back(
            extract_kernel_basis(q_exponent_map(pairs_series.coefficient(h)), center));
    return table;
}
inline BpsTable bps_refined(int h_max) { return bps_refined(stable_pairs_product(h_max)); }

// ---------------------------------------------------------------------------
// Vafa-Witten invariants
// ---------------------------------------------------------------------------

/// The refined instanton contribution n^h_0(t), cross-checked three ways:
/// kernel-basis extraction of the stable-pairs product, the u^h coefficient
/// of the instanton product, and t^(-h) chi_{-t}(Hilb^h).
inline TauPolynomial vw_instanton(const BpsTable& bps, const USeries& instanton_series,
                                  const HilbGenusTable& hilb, int h) {
    TauPolynomial n0 = bps.at(h, 0);
    if (!(instanton_series.coefficient(h) == QLaurent(n0)) || !(hilb.centered(h) == n0))
        throw std::logic_error("instanton cross-check failed");
    return n0;
}
inline TauPolynomial vw_instanton(int h) {
    return vw_instanton(bps_refined(h), instanton_product(h), hilb_chi_series(h), h);
}

/// Parameters of a full Vafa-Witten evaluation: d = Hilbert index of the
/// class (square 2 - 2d) and m = its divisibility. Valid when m^2 | d - 1,
/// which makes every divisor index d_r = 1 + (d-1)/r^2 a whole number.
struct VWParams {
    int points;        // d >= 1
    int divisibility;  // m >= 1
};

inline std::vector<int> divisors_of(int m) {
    std::vector<int> ds;
    for (int r = 1; r <= m; ++r)
        if (m % r == 0) ds.push_back(r);
    return ds;
}

inline void validate(const VWParams& p) {
    if (p.points < 1 || p.divisibility < 1)
        throw std::domain_error("points and divisibility must be positive");
    for (int r : divisors_of(p.divisibility))
        if ((p.points - 1) % (r * r) != 0)
            throw std::domain_error("divisibility incompatible with square: divisor " +
                                    std::to_string(r) + " fails " + std::to_string(r * r) +
                                    " | " + std::to_string(p.points - 1));
}

inline int hilb_index(const VWParams& p, int r) { return 1 + (p.points - 1) / (r * r); }

/// Full refined Vafa-Witten invariant: the divisor sum
///   sum_{r | m} t^(-r d_r) chi_{-t^r}(Hilb^{d_r} S) / [r]_t^2
/// with d_r = 1 + (d-1)/r^2. A rational function in tau, fixed by
/// tau -> tau^(-1) and polynomial exactly when the divisor sum reduces.
inline TauRational vw_full(const HilbGenusTable& hilb, const VWParams& p) {
    validate(p);
    TauRational total;
    for (int r : divisors_of(p.divisibility)) {
        int dr = hilb_index(p, r);
        TauPolynomial genus = hilb.entry(dr).substitute_power(r).scaled_shift(-2 * r * dr, 1);
        TauPolynomial qr = quantum_integer(r);
        total += TauRational(genus, qr * qr);
    }
    return total;
}
inline TauRational vw_full(const VWParams& p) {
    validate(p);
    return vw_full(hilb_chi_series(hilb_index(p, 1)), p);
}

/// Multiple cover formula for sheaves: t -> t^d on the base invariant,
/// divided by [d]_t^2.
inline TauRational mcf_sheaf(const TauRational& base, int d) {
    if (d < 1) throw std::domain_error("cover degree must be positive");
    TauPolynomial qd = quantum_integer(d);
    return base.substitute_power(d) / TauRational(qd * qd);
}

// ---------------------------------------------------------------------------
// Stable pairs in arbitrary divisibility, wall crossing
// ---------------------------------------------------------------------------

inline void validate_pairs_divisibility(int h, int m) {
    if (m < 1) throw std::domain_error("divisibility must be positive");
    for (int d : divisors_of(m))
        if ((h - 1) % (d * d) != 0)
            throw std::domain_error("divisibility incompatible with square: divisor " +
                                    std::to_string(d) + " fails " + std::to_string(d * d) +
                                    " | " + std::to_string(h - 1));
}

inline int floor_div(int a, int b) {
    int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

/// Primitive pairs tables for every genus h_d = 1 + (h-1)/d^2, d | m, keyed
/// by genus, each wide enough for chi up to chi_max.
inline std::map<int, PairsTable> pairs_full_tables(int h, int m, int chi_max) {
    validate_pairs_divisibility(h, m);
    std::map<int, PairsTable> tables;
    for (int d : divisors_of(m)) {
        int hd = 1 + (h - 1) / (d * d);
        int need = std::max(1 - hd, floor_div(chi_max, d));
        if (!tables.count(hd)) tables.emplace(hd, pairs_primitive(hd, need));
    }
    return tables;
}

/// Stable pair invariant of a class with square 2h - 2 and divisibility m:
///   P_{beta,chi}(t) = sum_{d | (m, chi)} (-1)^(chi - chi/d) / [d]_t
///                       * P^{h_d}_{chi/d}(t^d).
inline TauRational pairs_full(const std::map<int, PairsTable>& primitive, int h, int m,
                              int chi) {
    validate_pairs_divisibility(h, m);
    TauRational total;
    for (int d : divisors_of(m)) {
        if (chi % d != 0) continue;
        int hd = 1 + (h - 1) / (d * d);
        TauPolynomial p = primitive.at(hd).entry(chi / d);
        if (p.is_zero()) continue;
        TauPolynomial term = p.substitute_power(d);
        if ((chi - chi / d) % 2 != 0) term = -term;
        total += TauRational(term, quantum_integer(d));
    }
    return total;
}
inline TauRational pairs_full(int h, int m, int chi) {
    return pairs_full(pairs_full_tables(h, m, chi), h, m, chi);
}

/// Wall-crossing residual P^h_chi - P^h_(-chi) - (-1)^(chi-1) [chi]_t n^h_0.
/// Identically zero; kept as a checkable oracle.
inline TauRational wall_crossing_residual(const PairsTable& pairs, const TauPolynomial& n0,
                                          int chi) {
    if (chi < 1) throw std::domain_error("wall crossing residual requires chi >= 1");
    TauPolynomial rhs = quantum_integer(chi) * n0;
    if (chi % 2 == 0) rhs = -rhs;
    return TauRational(pairs.entry(chi) - pairs.entry(-chi) - rhs);
}
inline TauRational wall_crossing_residual(int h, int chi) {
    USeries series = stable_pairs_product(h);
    return wall_crossing_residual(pairs_primitive(series, h, chi),
                                  bps_refined(series).at(h, 0), chi);
}

// ---------------------------------------------------------------------------
// Numerical Gopakumar-Vafa invariants
// ---------------------------------------------------------------------------

/// Integer Gopakumar-Vafa table extracted from the refined n^h_0(t) in the
/// basis (-1)^g (t^(-1) + center + t)^g. The center is resolved at h = 1:
/// the scalar center -2 is adopted when it yields integer scalars there,
/// falling back to -[2]_t otherwise, and the choice is recorded.
struct GvNumericTable {
    int h_max = -1;
    std::vector<std::vector<Int>> entries;  // entries[h][g]
    std::string center;                     // "-2" or "-[2]_t"

    Int at(int h, int g) const {
        if (h < 0 || h > h_max) throw std::out_of_range("genus beyond GV table");
        const auto& row = entries[static_cast<size_t>(h)];
        if (g < 0 || g >= static_cast<int>(row.size())) return 0;
        return row[static_cast<size_t>(g)];
    }
};

namespace detail {

/// n^h_0 viewed as a Laurent polynomial in x = t with constant
/// TauPolynomial coefficients. Odd tau-exponents have no integer t-power
/// and fail the integrality contract.
inline std::map<int, TauPolynomial> t_exponent_map(const TauPolynomial& p) {
    std::map<int, TauPolynomial> m;
    for (const auto& [e, c] : p.terms()) {
        if (e % 2 != 0) throw std::domain_error("KKV integrality violated");
        m.emplace(e / 2, TauPolynomial(c));
    }
    return m;
}

inline bool gv_extract_row(const TauPolynomial& n0, const TauPolynomial& center, int h,
                           std::vector<Int>& row) {
    auto coeffs = extract_kernel_basis(t_exponent_map(n0), center);
    row.assign(static_cast<size_t>(h) + 1, Int(0));
    for (size_t g = 0; g < coeffs.size(); ++g) {
        const TauPolynomial& c = coeffs[g];
        if (c.is_zero()) continue;
        if (!c.is_constant() || !is_integer(c.coefficient(0))) return false;
        Int v = numerator(c.coefficient(0));
        row[g] = (g % 2 == 0) ? v : -v;
    }
    return true;
}

}  // namespace detail

inline GvNumericTable gv_numeric(const BpsTable& bps) {
    GvNumericTable table;
    table.h_max = bps.h_max;
    const TauPolynomial scalar_center(-2);
    const TauPolynomial quantum_center = -quantum_integer(2);
    // Resolve the basis center on the first genus with a nontrivial basis.
    TauPolynomial center = scalar_center;
    table.center = "-2";
    if (table.h_max >= 1) {
        std::vector<Int> probe;
        if (!detail::gv_extract_row(bps.at(1, 0), scalar_center, 1, probe)) {
            if (!detail::gv_extract_row(bps.at(1, 0), quantum_center, 1, probe))
                throw std::domain_error("KKV integrality violated");
            center = quantum_center;
            table.center = "-[2]_t";
        }
    }
    table.entries.reserve(static_cast<size_t>(table.h_max) + 1);
    for (int h = 0; h <= table.h_max; ++h) {
        std::vector<Int> row;
        if (!detail::gv_extract_row(bps.at(h, 0), center, h, row))
            throw std::domain_error("KKV integrality violated");
        table.entries.push_back(std::move(row));
    }
    return table;
}
inline GvNumericTable gv_numeric(int h_max) { return gv_numeric(bps_refined(h_max)); }

}  // namespace k3refine
