#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "para/json_io.hpp"

namespace para {

/// Column of Hodge numbers h^{0,0}..h^{0,n} of an n-dimensional variety.
/// Invariants: n >= 1, h.size() == n+1, h[0] == 1, all entries >= 0.
/// By convention q = h[1] and p_g = h[n].
struct HodgeVector {
    int n = 0;
    std::vector<long> h;
};

/// Validating constructor; throws DomainError when an invariant fails.
HodgeVector make_hodge_vector(int n, std::vector<long> h);

struct ChiGap {
    long long chi = 0;  ///< Euler characteristic of the canonical bundle.
    long long gap = 0;  ///< p_g - (chi + q - 1).
};

/// chi(K) = (-1)^n * sum_j (-1)^j h^{0,j}, and the defect of the
/// inequality p_g >= chi + q - 1.
ChiGap chi_and_gap(const HodgeVector& hv);

/// Alternating-step sum h^{0,n-1} + h^{0,n-3} + ... ending at h^{0,0} or
/// h^{0,1} depending on parity.
long long h_of_x(const HodgeVector& hv);

/// Exact coefficient of t^n in prod_{j=1}^n (1+jt)^{(-1)^{j+1} h^{0,n-j}}.
/// Never reads h^{0,n}.
mpz_class s_n_coefficient(const HodgeVector& hv);

/// True iff C(top, bottom) is odd, decided by binary carries
/// (no carry in bottom + (top-bottom) iff odd).
bool binomial_is_odd(unsigned long long top, unsigned long long bottom);

enum class ExorbitantVerdict { Main, Exorbitant, OutOfHypotheses };
std::string to_string(ExorbitantVerdict v);

/// Output of the parity test that decides between the generic linear
/// system sitting inside the main component or being exorbitant.
struct ParityFragment {
    long long h_of_x = 0;
    mpz_class s_n;
    bool binom_odd = false;
    bool parity_ok = false;
    ExorbitantVerdict verdict = ExorbitantVerdict::Main;
};

/// Computes s_n and the binomial parity of C(h(X), n); the two parities
/// must agree — a mismatch is an internal error (AxiomViolation), since
/// the identity is part of the theory this library implements.
/// Verdict: Main when the parity is odd, Exorbitant when even.
ParityFragment parity_criterion(const HodgeVector& hv);

/// Lower bounds for p_g - (chi + q - t) coming from the two regimes of
/// the dimension count, plus the induced lower bounds on the gap.
/// Exactly one branch is populated.
struct DimensionBounds {
    std::optional<long long> bound_a;      ///< (n-2)(q-n) + 2t - 3 when q >= n+t-1
    std::optional<long long> bound_b;      ///< n(q-n) + 1 when q < n+t-1
    std::optional<long long> gap_bound_a;  ///< (n-2)(q-n)
    std::optional<long long> gap_bound_b;  ///< (n-1)(q-n) - n + 2
};

/// Requires n >= 3, q >= n+1, t >= 2; throws DomainError otherwise.
DimensionBounds dimension_count_bounds(int n, int q, int t);

/// The inequality q-2 >= (n-1)(q-n) restated as a cap on q.
struct QCapCheck {
    bool holds = false;  ///< q <= n+1
    long long lhs = 0;   ///< q - 2
    long long rhs = 0;   ///< (n-1)(q-n)
};

/// Requires n >= 3.
QCapCheck q_cap_check(int n, int q);

struct DoubleCoverInvariants {
    long long chi = 0;
    long long q = 0;
    long long pg = 0;
    long long gap = 0;
};

/// Invariants of a double cover of Y branched so the adjoint bundle
/// K_Y + H has no higher cohomology: chi(K) adds h^0(K_Y+H), the
/// irregularity adds h^1(-H), p_g adds h^0(K_Y+H).
DoubleCoverInvariants double_cover_invariants(long long chiY, long long qY, long long pgY,
                                              long long h0_adjoint, long long h1_negative);

struct ProductInvariants {
    int dim = 0;
    long long q = 0;
    long long pg = 0;
    long long gap = 0;
};

/// Product of an n-fold Y with p_g = 1, chi(K_Y) = 0, q(Y) = n and a
/// genus-2 curve. Y data that does not match throws DomainError.
ProductInvariants product_with_genus2_curve(int n, long long pgY, long long chiY, long long qY);

struct CompleteIntersectionInvariants {
    int q = 0;
    HodgeVector hv;
    long long chi = 0;
    long long gap = 0;
};

/// Hodge column of an n-fold cut out inside a product with an abelian
/// variety of dimension q = n+1: binomial coefficients C(q,i) up to
/// level n-2, a bump of pgY at level n-1. The computed gap must equal
/// pgY; a mismatch throws AxiomViolation.
CompleteIntersectionInvariants complete_intersection_invariants(int n, long long pgY);

enum class IrreducibleClass { Curve, SurfaceOddQ, ThreefoldPlusBoundary, ReducibleCertificate };
std::string to_string(IrreducibleClass c);

/// Which varieties can carry an irreducible paracanonical system:
/// curves; surfaces with odd q; n-folds with q = n+1 and vanishing gap.
/// Anything else certifies reducibility under the standing hypotheses.
/// Requires n >= 1 and q >= n+1.
IrreducibleClass classify_irreducible_system(int n, long long q, long long gap);

struct LedgerFlags {
    bool no_agt_fibration = false;
    bool isolated_zero = false;
};

struct LedgerVerdict {
    int n = 0;
    long long q = 0;
    long long chi = 0;
    long long gap = 0;
    bool ineq_i = false;             ///< gap >= 0
    bool eq_case = false;            ///< gap == 0
    bool q_equals_n_plus_1 = false;
    long long h_of_x = 0;
    mpz_class s_n;
    bool parity_ok = false;
    ExorbitantVerdict exorbitant_verdict = ExorbitantVerdict::OutOfHypotheses;
    bool chi_ge_q_minus_n = false;   ///< arithmetic consistency flag on inputs
    LedgerFlags flags;
};

/// Full numerical verdict. The geometric hypotheses are never inferred:
/// they enter as caller-supplied flags and are echoed back. The parity
/// verdict is reported as OutOfHypotheses unless both flags are set and,
/// for n >= 3, q = n+1.
LedgerVerdict build_verdict(const HodgeVector& hv, const LedgerFlags& flags);

struct LedgerInput {
    HodgeVector hv;
    LedgerFlags flags;
};

/// Input document {"n": int, "h": [ints], "flags": {...}}. The flags
/// object and schema_version are optional; invariant violations are
/// reported as SchemaError since they make the document invalid.
LedgerInput ledger_input_from_json(const json& doc);
json ledger_input_to_json(const LedgerInput& input);
json verdict_to_json(const LedgerVerdict& v);

/// Exhaustively tests s_n = C(h(X), n) mod 2 over every Hodge vector
/// with dimension <= max_n and entries <= max_entry; returns the number
/// of counterexamples (expected: 0).
long parity_sweep(int max_n, long max_entry);

}  // namespace para
