#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace para {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational
/// components.  Backed by GMP rationals, so both parts are always in
/// lowest terms with a positive denominator.  All arithmetic is exact;
/// there is no floating point anywhere in the toolkit.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT: implicit by design
    GaussianRational(long num, long den);
    GaussianRational(mpq_class re, mpq_class im);
    explicit GaussianRational(mpq_class re) : re_(std::move(re)) {}

    /// The imaginary unit.
    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conjugate() const { return {re_, mpq_class(-im_)}; }

    /// Squared modulus re^2 + im^2, an exact nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    /// Multiplicative inverse; throws DomainError on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) {
        return !(a == b);
    }

    /// Canonical text form: "a/b" for real values, "c/di" for purely
    /// imaginary ones, "a/b+c/di" / "a/b-c/di" in general; unit
    /// denominators are omitted ("3", "-2i", "1/2-3i", "0").
    std::string str() const;

    /// Parse the canonical text form.  Also accepts "i", "+i", "-i".
    /// Throws SchemaError on malformed input.
    static GaussianRational parse(const std::string &s);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussianRational operator+(GaussianRational a, const GaussianRational &b);
GaussianRational operator-(GaussianRational a, const GaussianRational &b);
GaussianRational operator*(GaussianRational a, const GaussianRational &b);
GaussianRational operator/(GaussianRational a, const GaussianRational &b);

std::ostream &operator<<(std::ostream &os, const GaussianRational &x);

/// Canonical text form of an exact rational ("num/den" or "num").
std::string rational_str(const mpq_class &q);

}  // namespace para
