#include "para/matrix.hpp"

#include <cstdint>

#include "para/errors.hpp"

namespace para {

bool is_zero_vec(const Vec &v) {
    for (const auto &x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw DomainError("vector size mismatch");
    Vec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

Vec operator-(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw DomainError("vector size mismatch");
    Vec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

Vec scale(const GaussianRational &c, const Vec &v) {
    Vec r(v.size());
    for (size_t k = 0; k < v.size(); ++k) r[k] = c * v[k];
    return r;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto &x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (!(at(i, j) + at(j, i)).is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product size mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational &a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const GaussianRational &b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum size mismatch");
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix diff size mismatch");
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational &c) const {
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = c * data_[k];
    return r;
}

Vec ExactMatrix::apply(const Vec &x) const {
    if (int(x.size()) != cols_) throw DomainError("matrix apply size mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) r[i] += at(i, j) * x[j];
    return r;
}

Echelon ExactMatrix::rref() const {
    Echelon e{*this, {}, 0};
    ExactMatrix &m = e.mat;
    int pr = 0;  // next pivot row
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        int hit = -1;
        for (int r = pr; r < rows_; ++r)
            if (!m.at(r, c).is_zero()) {
                hit = r;
                break;
            }
        if (hit < 0) continue;
        if (hit != pr)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(hit, j), m.at(pr, j));
        GaussianRational inv = m.at(pr, c).inverse();
        for (int j = c; j < cols_; ++j) m.at(pr, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pr || m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c);
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(pr, j);
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.rank = pr;
    return e;
}

int ExactMatrix::rank() const {
    ExactMatrix m = *this;
    int pr = 0;
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        int hit = -1;
        for (int r = pr; r < rows_; ++r)
            if (!m.at(r, c).is_zero()) {
                hit = r;
                break;
            }
        if (hit < 0) continue;
        if (hit != pr)
            for (int j = c; j < cols_; ++j) std::swap(m.at(hit, j), m.at(pr, j));
        GaussianRational inv = m.at(pr, c).inverse();
        for (int r = pr + 1; r < rows_; ++r) {
            if (m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c) * inv;
            m.at(r, c) = 0;
            for (int j = c + 1; j < cols_; ++j)
                if (!m.at(pr, j).is_zero()) m.at(r, j) -= f * m.at(pr, j);
        }
        ++pr;
    }
    return pr;
}

std::vector<Vec> ExactMatrix::kernel_basis() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> raw;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols_);
        x[f] = 1;
        for (int r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = -e.mat.at(r, f);
        raw.push_back(std::move(x));
    }
    if (raw.empty()) return raw;
    // Canonical form: the reduced echelon basis of the kernel space.
    Echelon k = matrix_from_rows(raw, cols_).rref();
    std::vector<Vec> basis(raw.size(), Vec(cols_));
    for (size_t r = 0; r < raw.size(); ++r)
        for (int c = 0; c < cols_; ++c) basis[r][c] = k.mat.at(int(r), c);
    return basis;
}

std::vector<Vec> ExactMatrix::image_basis() const {
    Echelon e = transpose().rref();
    std::vector<Vec> basis;
    for (int r = 0; r < e.rank; ++r) {
        Vec v(rows_);
        for (int c = 0; c < rows_; ++c) v[c] = e.mat.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> ExactMatrix::solve(const Vec &b) const {
    if (int(b.size()) != rows_) throw DomainError("solve: rhs size mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    Echelon e = aug.rref();
    for (int c : e.pivot_cols)
        if (c == cols_) return std::nullopt;  // inconsistent system
    Vec x(cols_);
    for (int r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = e.mat.at(r, cols_);
    return x;
}

GaussianRational ExactMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    ExactMatrix m = *this;
    GaussianRational result = 1;
    for (int c = 0; c < cols_; ++c) {
        int hit = -1;
        for (int r = c; r < rows_; ++r)
            if (!m.at(r, c).is_zero()) {
                hit = r;
                break;
            }
        if (hit < 0) return 0;
        if (hit != c) {
            for (int j = c; j < cols_; ++j) std::swap(m.at(hit, j), m.at(c, j));
            result = -result;
        }
        result *= m.at(c, c);
        GaussianRational inv = m.at(c, c).inverse();
        for (int r = c + 1; r < rows_; ++r) {
            if (m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c) * inv;
            for (int j = c + 1; j < cols_; ++j)
                if (!m.at(c, j).is_zero()) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return result;
}

GaussianRational ExactMatrix::pfaffian() const {
    if (!is_skew()) throw DomainError("pfaffian of a non-skew matrix");
    int n = rows_;
    if (n % 2 != 0) return 0;
    ExactMatrix m = *this;
    GaussianRational result = 1;
    for (int k = 0; k + 1 < n; k += 2) {
        // Choose the pivot entry in row k, columns k+1..n-1.
        int hit = -1;
        for (int j = k + 1; j < n; ++j)
            if (!m.at(k, j).is_zero()) {
                hit = j;
                break;
            }
        if (hit < 0) return 0;  // row k vanishes on the remaining block
        if (hit != k + 1) {
            // Swap row/column hit <-> k+1: a congruence by a transposition,
            // which flips the sign.
            for (int j = 0; j < n; ++j) std::swap(m.at(hit, j), m.at(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(m.at(i, hit), m.at(i, k + 1));
            result = -result;
        }
        GaussianRational pivot = m.at(k, k + 1);
        result *= pivot;
        GaussianRational inv = pivot.inverse();
        // Clear the rest of row k by unit-determinant congruences
        // (row j -= c * row k+1 together with col j -= c * col k+1);
        // the value then factors as pivot times the trailing block.
        for (int j = k + 2; j < n; ++j) {
            if (m.at(k, j).is_zero()) continue;
            GaussianRational c = m.at(k, j) * inv;
            for (int t = 0; t < n; ++t) m.at(j, t) -= c * m.at(k + 1, t);
            for (int t = 0; t < n; ++t) m.at(t, j) -= c * m.at(t, k + 1);
        }
    }
    return result;
}

ExactMatrix matrix_from_rows(const std::vector<Vec> &rows, int cols_if_empty) {
    if (rows.empty()) return ExactMatrix(0, cols_if_empty);
    ExactMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw DomainError("ragged rows");
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = rows[r][c];
    }
    return m;
}

namespace detail {

namespace {

constexpr std::uint64_t kP = 998244353;  // prime, 1 mod 4

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return (unsigned __int128)(a)*b % kP;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1;
    }
    return r;
}

// 3 generates the multiplicative group mod kP, so this is a square root
// of -1.  Computed once.
std::uint64_t imag_unit_mod_p() {
    static const std::uint64_t iu = powmod(3, (kP - 1) / 4);
    return iu;
}

// Reduces an exact rational mod p; nullopt when the denominator is
// divisible by p (no conclusion possible).
std::optional<std::uint64_t> rational_mod_p(const mpq_class &q) {
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), kP);
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kP);
    if (den == 0) return std::nullopt;
    return mulmod(num, powmod(den, kP - 2));
}

}  // namespace

std::optional<int> rank_lower_bound_mod_p(const ExactMatrix &m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const GaussianRational &x = m.at(i, j);
            auto re = rational_mod_p(x.re());
            auto im = rational_mod_p(x.im());
            if (!re || !im) return std::nullopt;
            a[i][j] = (*re + mulmod(*im, imag_unit_mod_p())) % kP;
        }
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int hit = -1;
        for (int r = pr; r < rows; ++r)
            if (a[r][c]) {
                hit = r;
                break;
            }
        if (hit < 0) continue;
        std::swap(a[hit], a[pr]);
        std::uint64_t inv = powmod(a[pr][c], kP - 2);
        for (int r = pr + 1; r < rows; ++r) {
            if (!a[r][c]) continue;
            std::uint64_t f = mulmod(a[r][c], inv);
            a[r][c] = 0;
            for (int j = c + 1; j < cols; ++j)
                if (a[pr][j]) a[r][j] = (a[r][j] + kP - mulmod(f, a[pr][j])) % kP;
        }
        ++pr;
    }
    return pr;
}

}  // namespace detail

}  // namespace para
