#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3refine {

/// Arbitrary-precision integer and rational scalars. Rationals are kept in
/// lowest terms with positive denominator (guaranteed by the backend).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q". Throws std::domain_error on a zero denominator.
inline Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    Int p(std::string(s.substr(0, slash)));
    Int q(std::string(s.substr(slash + 1)));
    if (q == 0) throw std::domain_error("zero denominator");
    return Rational(p, q);
}

inline Int binomial(const Int& n, int k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace k3refine
