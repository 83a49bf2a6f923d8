#include "para/series.hpp"

namespace para {

TruncatedSeries<mpz_class> series_expand_power(long j, long e, int N) {
    TruncatedSeries<mpz_class> base(N);
    base.coeff(0) = 1;
    if (N >= 1) base.coeff(1) = j;
    if (e >= 0) return base.pow(unsigned(e));
    return base.geometric_inverse().pow(unsigned(-e));
}

}  // namespace para
