#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "k3refine/q_laurent.hpp"

namespace k3refine {

/// Power series in u truncated at a fixed order N, with QLaurent
/// coefficients for u^0 .. u^N. Arithmetic on two series truncates to the
/// smaller order and the result records that order.
class USeries {
public:
    explicit USeries(int order) : coeffs_(check_order(order) + 1) {}

    static USeries one(int order) {
        USeries s(order);
        s.coeffs_[0] = QLaurent(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const QLaurent& coefficient(int m) const {
        if (m < 0 || m > order()) throw std::out_of_range("u-order out of range");
        return coeffs_[m];
    }
    void set_coefficient(int m, QLaurent c) {
        if (m < 0 || m > order()) throw std::out_of_range("u-order out of range");
        coeffs_[m] = std::move(c);
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        USeries r(std::min(a.order(), b.order()));
        for (int m = 0; m <= r.order(); ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
        return r;
    }

    friend USeries operator*(const USeries& a, const USeries& b) {
        USeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    USeries& operator*=(const USeries& o) { return *this = *this * o; }

    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (!c.is_integral()) return false;
        return true;
    }

    bool operator==(const USeries&) const = default;

private:
    static int check_order(int order) {
        if (order < 0) throw std::domain_error("series order must be nonnegative");
        return order;
    }

    std::vector<QLaurent> coeffs_;
};

}  // namespace k3refine
