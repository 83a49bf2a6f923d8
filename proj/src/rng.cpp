#include "para/rng.hpp"

#include "para/errors.hpp"

namespace para {

long SampleStream::int_in(long lo, long hi) {
    if (hi < lo) throw DomainError("int_in: empty range");
    // Explicit modular mapping: the tiny bias (span never exceeds a few
    // hundred here) is an acceptable trade for bit-identical output on
    // every platform.
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

mpq_class SampleStream::rational(long max_num, long max_den) {
    const long num = int_in(-max_num, max_num);
    const long den = int_in(1, max_den);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

GaussianRational SampleStream::value(bool real_only, long max_num, long max_den) {
    mpq_class re = rational(max_num, max_den);
    if (real_only) return GaussianRational(re, mpq_class(0));
    mpq_class im = rational(max_num, max_den);
    return GaussianRational(re, im);
}

GaussianRational SampleStream::small_int_value(long bound) {
    return GaussianRational(mpq_class(int_in(-bound, bound)), mpq_class(int_in(-bound, bound)));
}

Vec SampleStream::vector(int n, bool real_only) {
    Vec v;
    v.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v.push_back(value(real_only));
    return v;
}

Vec SampleStream::nonzero_int_vector(int n, long bound) {
    if (n <= 0) throw DomainError("nonzero_int_vector: dimension must be positive");
    for (;;) {
        Vec v;
        v.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v.push_back(small_int_value(bound));
        if (!is_zero_vec(v)) return v;
    }
}

ExactMatrix SampleStream::matrix(int rows, int cols, bool real_only) {
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = value(real_only);
    return m;
}

ExactMatrix SampleStream::skew_matrix(int n, bool real_only) {
    ExactMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c) {
            GaussianRational x = value(real_only);
            m.at(r, c) = x;
            m.at(c, r) = -x;
        }
    }
    return m;
}

ExactMatrix SampleStream::invertible_matrix(int n, long bound) {
    for (;;) {
        ExactMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = small_int_value(bound);
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace para
