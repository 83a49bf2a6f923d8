#pragma once

#include <map>
#include <string>
#include <vector>

#include "para/matrix.hpp"
#include "para/rational.hpp"

namespace para {

/// Multivariate polynomial over Q(i), stored sparsely as a map from
/// exponent vectors to nonzero coefficients.  All polynomials in one
/// expression must agree on the number of variables.  Terms are kept in
/// lexicographic exponent order internally; printing and serialization
/// use graded-lexicographic descending order (total degree first), which
/// is the canonical report order.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(const GaussianRational &c, int nvars);
    /// The monomial x_i (0-based index).
    static SparsePoly variable(int i, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return int(terms_.size()); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    const GaussianRational &coeff(const std::vector<unsigned> &exps) const;
    void add_term(const std::vector<unsigned> &exps, const GaussianRational &c);

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly &o) const;
    SparsePoly operator-(const SparsePoly &o) const;
    SparsePoly operator*(const SparsePoly &o) const;
    SparsePoly scaled(const GaussianRational &c) const;
    SparsePoly pow(unsigned e) const;

    friend bool operator==(const SparsePoly &a, const SparsePoly &b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    GaussianRational eval(const Vec &point) const;
    /// Partial derivative with respect to x_i.
    SparsePoly derivative(int i) const;
    /// All partial derivatives evaluated at a point.
    Vec gradient_at(const Vec &point) const;

    /// Terms in canonical order (graded-lex descending): pairs of
    /// (exponent vector, coefficient).
    std::vector<std::pair<std::vector<unsigned>, GaussianRational>> canonical_terms() const;

    /// Human-readable form, e.g. "2*x0^2*x1 - 1/2*x2 + 3i".
    std::string str() const;

private:
    int nvars_ = 0;
    std::map<std::vector<unsigned>, GaussianRational> terms_;
};

}  // namespace para
