#pragma once

#include <optional>
#include <vector>

#include "para/rational.hpp"

namespace para {

using Vec = std::vector<GaussianRational>;

struct Echelon;

bool is_zero_vec(const Vec &v);
Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec scale(const GaussianRational &c, const Vec &v);

/// Dense matrix over Q(i) with fully exact arithmetic.
///
/// Echelon reduction is deterministic: pivots are chosen leftmost column
/// first, and within a column the first row (top to bottom) holding a
/// nonzero entry wins.  Every derived object — rank, kernel basis, image
/// basis, canonical solutions — is therefore reproducible bit for bit,
/// which the report goldens rely on.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational &at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const GaussianRational &at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_skew() const;  // square, a(i,j) == -a(j,i), zero diagonal

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix &o) const;
    ExactMatrix operator+(const ExactMatrix &o) const;
    ExactMatrix operator-(const ExactMatrix &o) const;
    ExactMatrix scaled(const GaussianRational &c) const;
    Vec apply(const Vec &x) const;

    friend bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Reduced row echelon form with the deterministic pivot rule.
    Echelon rref() const;

    /// Exact rank (forward elimination only; same pivot rule).
    int rank() const;

    /// rank() + kernel_basis().size() == cols(), always.
    /// Canonical basis of the right kernel: the unique basis whose row
    /// matrix is itself in reduced row echelon form.  Empty when the
    /// kernel is zero.
    std::vector<Vec> kernel_basis() const;

    /// Canonical basis of the column space, as vectors in the target:
    /// the reduced row echelon basis of the row space of the transpose.
    std::vector<Vec> image_basis() const;

    /// Echelon-canonical particular solution of A x = b (free variables
    /// set to zero), or nullopt exactly when rank([A|b]) > rank(A).
    std::optional<Vec> solve(const Vec &b) const;

    /// Determinant (square only) by exact Gaussian elimination.
    GaussianRational det() const;

    /// Pfaffian of a skew matrix, by skew-symmetric elimination with
    /// exact division.  Normalized so that the block-diagonal matrix of
    /// 2x2 blocks [[0,1],[-1,0]] has value +1; odd size gives 0.
    /// Squares to the determinant.  Throws DomainError if not skew.
    GaussianRational pfaffian() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Result of reduced row echelon elimination.
struct Echelon {
    ExactMatrix mat;              // reduced row echelon form
    std::vector<int> pivot_cols;  // ascending
    int rank = 0;
};

/// Builds the matrix with the given rows (all the same length).
ExactMatrix matrix_from_rows(const std::vector<Vec> &rows, int cols_if_empty = 0);

namespace detail {
/// Rank of the matrix reduced mod a fixed word-size prime p with
/// i mapped to a square root of -1 mod p.  A nonzero minor mod p is a
/// nonzero exact minor, so the result is a certified LOWER bound on the
/// exact rank.  Returns nullopt when some denominator is divisible by p
/// (then no conclusion is drawn and callers fall back to exact work).
std::optional<int> rank_lower_bound_mod_p(const ExactMatrix &m);
}  // namespace detail

}  // namespace para
