#pragma once

#include <gmpxx.h>

#include <vector>

#include "para/errors.hpp"

namespace para {

/// Truncated formal power series: a polynomial in t modulo t^{N+1},
/// with coefficients in any exact commutative ring (big integers,
/// rationals, sparse polynomials, ...).  Binary operations require both
/// operands to share the truncation order.
template <typename Ring>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(size_t(order) + 1) {
        if (order < 0) throw DomainError("negative series order");
    }
    TruncatedSeries(int order, std::vector<Ring> coeffs) : TruncatedSeries(order) {
        for (size_t k = 0; k < c_.size() && k < coeffs.size(); ++k) c_[k] = coeffs[k];
    }

    static TruncatedSeries constant(const Ring &x, int order) {
        TruncatedSeries s(order);
        s.c_[0] = x;
        return s;
    }

    int order() const { return int(c_.size()) - 1; }
    const Ring &coeff(int k) const { return c_.at(size_t(k)); }
    Ring &coeff(int k) { return c_.at(size_t(k)); }
    const std::vector<Ring> &coeffs() const { return c_; }

    TruncatedSeries operator+(const TruncatedSeries &o) const {
        check(o);
        TruncatedSeries r(order());
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }

    TruncatedSeries operator-(const TruncatedSeries &o) const {
        check(o);
        TruncatedSeries r(order());
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }

    TruncatedSeries operator*(const TruncatedSeries &o) const {
        check(o);
        TruncatedSeries r(order());
        for (size_t a = 0; a < c_.size(); ++a) {
            if (c_[a] == Ring()) continue;
            for (size_t b = 0; a + b < c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
        }
        return r;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries r = constant(Ring(1), order());
        TruncatedSeries b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse via the geometric series; requires the
    /// constant term to be 1 or -1 (exact inversion in the coefficient
    /// ring is then never needed).
    TruncatedSeries geometric_inverse() const {
        const Ring one(1);
        if (!(c_[0] == one || c_[0] + one == Ring()))
            throw DomainError("geometric inverse needs constant term +-1");
        // Write s = u(1 + h) with u = +-1; then s^{-1} = u(1 - h + h^2 - ...).
        TruncatedSeries h = *this;
        bool negated = !(c_[0] == one);
        if (negated)
            for (auto &x : h.c_) x = Ring() - x;
        h.c_[0] = Ring();
        TruncatedSeries r = constant(one, order());
        TruncatedSeries term = constant(one, order());
        for (int k = 1; k <= order(); ++k) {
            term = term * h;
            if (k % 2)
                r = r - term;
            else
                r = r + term;
        }
        if (negated)
            for (auto &x : r.c_) x = Ring() - x;
        return r;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
        return a.c_ == b.c_;
    }

private:
    void check(const TruncatedSeries &o) const {
        if (c_.size() != o.c_.size()) throw DomainError("series order mismatch");
    }
    std::vector<Ring> c_;
};

/// (1 + j t)^e truncated at t^N, with exact integer coefficients; for
/// e < 0 the inverse is expanded by the geometric series and then raised
/// to |e|.
TruncatedSeries<mpz_class> series_expand_power(long j, long e, int N);

}  // namespace para
