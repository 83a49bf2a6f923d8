#pragma once

#include <cstdint>
#include <random>

#include "para/matrix.hpp"

namespace para {

/// Deterministic source of sample data for randomized checks.  Fully
/// determined by its 64-bit seed: the generator is std::mt19937_64 and
/// every drawn value is mapped with explicit integer arithmetic (never
/// std::uniform_int_distribution, whose output is implementation
/// defined), so reports and goldens derived from a seed are stable
/// across platforms and compilers.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi], inclusive.
    long int_in(long lo, long hi);

    /// Exact rational num/den with num in [-max_num, max_num] and den in
    /// [1, max_den].
    mpq_class rational(long max_num = 4, long max_den = 3);

    /// Element of Q(i); with `real_only` the imaginary part is zero.
    GaussianRational value(bool real_only = false, long max_num = 4, long max_den = 3);

    /// Gaussian-integer value: re, im in [-bound, bound].  Cheap entries
    /// for rank-heavy sampling.
    GaussianRational small_int_value(long bound = 3);

    Vec vector(int n, bool real_only = false);
    /// A vector of small Gaussian integers, guaranteed nonzero.
    Vec nonzero_int_vector(int n, long bound = 3);

    ExactMatrix matrix(int rows, int cols, bool real_only = false);
    /// Random skew matrix (zero diagonal, a(j,i) = -a(i,j)).
    ExactMatrix skew_matrix(int n, bool real_only = false);
    /// Random invertible matrix with small integer entries (resampled
    /// until the determinant is nonzero; exact check).
    ExactMatrix invertible_matrix(int n, long bound = 2);

private:
    std::mt19937_64 gen_;
};

}  // namespace para
