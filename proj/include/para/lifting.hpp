#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "para/json_io.hpp"
#include "para/matrix.hpp"

namespace para {

/// Finite linear-algebra model of the section spaces attached to a
/// divisor: for each order n there is a space S_n of global sections, a
/// quotient space Q_n of leading restrictions, and cohomology spaces
/// H1_n (plus one H2 slot at order 1).  All maps are exact matrices.
///
/// Index conventions: s_dim, q_dim, r, d, mult_s are 1-based (entry 0
/// unused); h1_dim is 0-based (h1_dim[0] is the space containing the
/// deformation direction v).  Shapes:
///   r[n]:      q_dim[n] x s_dim[n]      (restriction S_n -> Q_n)
///   d[n]:      h1_dim[n-1] x q_dim[n]   (connecting Q_n -> H1_{n-1})
///   mult_s[n]: h1_dim[n] x h1_dim[n-1]  (multiplication by the base section)
///   cup_v_s:   h1_dim[1] x s_dim[1]     (cup with v on sections)
///   cup_v_h:   h2_dim x h1_dim[1]       (cup with v on H1)
///   mul[{a,b}]: q_dim[a+b] x (q_dim[a]*q_dim[b]), column i*q_dim[b]+j
/// base_s lives in S_1 with r_1(base_s) = 0; v lives in H1_0.
struct SectionAlgebraModel {
    int n_max = 0;
    std::vector<int> s_dim;
    std::vector<int> q_dim;
    std::vector<int> h1_dim;
    int h2_dim = 0;
    std::vector<ExactMatrix> r;
    std::vector<ExactMatrix> d;
    std::vector<ExactMatrix> mult_s;
    ExactMatrix cup_v_s;
    ExactMatrix cup_v_h;
    std::map<std::pair<int, int>, ExactMatrix> mul;
    Vec base_s;
    Vec v;
};

/// Product Q_a x Q_b -> Q_{a+b} through the stored bilinear tensor.
Vec mul_apply(const SectionAlgebraModel& m, int a, int b, const Vec& x, const Vec& y);

/// Checks every structural axiom by exact rank computations:
///   - shapes conform and every product map with a+b <= n_max exists
///     (DomainError otherwise);
///   - r_1(base_s) = 0;
///   - exactness at each Q_n: ker d_n = im r_n;
///   - exactness at H1_0: im d_1 = ker mult_s_1;
///   - 1-transversality: im cup_v_s = ker cup_v_h;
///   - products are commutative and associative on basis vectors;
///   - product compatibility: d_2(r_1(xi) * sigma) = cup_v_s(xi) for the
///     canonical sigma with d_1(sigma) = v, and d_2(r_1(xi) * r_1(eta)) = 0.
/// Throws AxiomViolation naming the failed axiom and a witness.
void validate_model(const SectionAlgebraModel& m);

/// Canonical solution of d_1(sigma) = v, or nullopt exactly when
/// mult_s_1(v) != 0 (no first-order deformation in direction v).
std::optional<Vec> solve_sigma(const SectionAlgebraModel& m);

struct SecondOrderResult {
    Vec sigma_corrected;  ///< sigma - r_1(xi); kills the order-2 class
    Vec xi;               ///< solution of cup_v_s(2 xi) = d_2(sigma^2)
    Vec tau2;             ///< solution of r_2(tau2) = -sigma_corrected^2 / 2
    Vec ob2;              ///< d_2(sigma^2) before correction
};

/// Order-2 step.  Asserts that the uncorrectable part cup_v_h(ob2)
/// vanishes (AxiomViolation otherwise) and that the corrected square has
/// zero class.  Throws ObstructionError(2) when the correction equation
/// cup_v_s(2 xi) = ob2 has no solution.
SecondOrderResult second_order_step(const SectionAlgebraModel& m, const Vec& sigma);

/// Rolling state of a lift: the corrected sigma, its powers sigma^k in
/// Q_k, and the solved classes p_k = r_k(tau_k).
struct LiftState {
    Vec sigma;
    std::vector<Vec> sigma_pow;  ///< index k >= 1
    std::vector<Vec> p;          ///< index k >= 2
};

/// Order-n step for n >= 3: forms q_n = sigma * p_{n-1} + sigma^n / n,
/// checks d_n(q_n) = 0 (ObstructionError(n) otherwise), and solves
/// r_n(tau_n) = -q_n.  Returns tau_n and extends the state.
Vec higher_order_step(const SectionAlgebraModel& m, LiftState& state, int n);

struct LiftTraceEntry {
    int order = 0;
    Vec q_class;      ///< the class the step had to kill
    Vec obstruction;  ///< cup_v_h(ob2) at order 2, d_n(q_n) at order n
    Vec solution;     ///< tau_n
    Vec xi;           ///< order 2 only; empty elsewhere
};

struct LiftResult {
    Vec sigma;                         ///< corrected sigma actually used
    std::vector<Vec> taus;             ///< 1-based; entries 0,1 unused
    int order_achieved = 0;
    std::string normalization;
    std::vector<LiftTraceEntry> trace;
};

/// Full lift to order N <= n_max.  Throws NoFirstOrderDeformation when
/// solve_sigma fails, and propagates ObstructionError with the failing
/// order.  Deterministic: identical model and N give identical results.
LiftResult lift_full(const SectionAlgebraModel& m, int N);

/// Same, starting from a caller-chosen sigma with d_1(sigma) = v
/// (DomainError otherwise).  Used to exercise gauge freedom.
LiftResult lift_full_from_sigma(const SectionAlgebraModel& m, const Vec& sigma, int N);

struct VerifyOutcome {
    bool pass = false;
    int mismatch_order = -1;  ///< first failing order; -1 when pass
};

/// Independent re-check of a lift: recomputes d_1(sigma) = v and, for
/// every order, the vanishing of the combination
///   r_2(tau_2) + sigma^2/2            (order 2)
///   r_n(tau_n) + sigma*r_{n-1}(tau_{n-1}) + sigma^n/n   (order n >= 3)
/// from scratch, reusing nothing from the solver.
VerifyOutcome verify_lift(const SectionAlgebraModel& m, const LiftResult& result);

/// Weierstrass model of an elliptic curve with one marked point: S_n is
/// spanned by the pole-order filtration {1, p, p', p^2, p p', p^3, ...},
/// Q_n is the one-dimensional top Laurent tail, the connecting map at
/// order 1 is the identity, and all higher cohomology vanishes.
SectionAlgebraModel build_elliptic_model(int n_max = 8);

/// Two-dimensional commutative algebra with basis {x_n, y_n} per order,
/// x central (x*y = y) and y*y = x + 2y.  Has nonzero H1_1, a genuinely
/// nonzero order-2 class, and a nontrivial correction; lifts to n_max.
SectionAlgebraModel build_synthetic_model(int n_max = 8);

/// Synthetic model with the cup map on sections zeroed out: the order-2
/// correction equation becomes unsolvable.  Fails validation
/// (1-transversality) and lift_full raises ObstructionError(2).
SectionAlgebraModel build_obstructed_order2_model(int n_max = 8);

/// Exterior-algebra model rigged so orders 1 and 2 pass but the order-3
/// class has nonzero connecting image.  Fails validation
/// (1-transversality) and lift_full raises ObstructionError(3).
SectionAlgebraModel build_obstructed_order3_model(int n_max = 8);

/// Valid model whose direction v has mult_s_1(v) != 0: solve_sigma
/// returns nullopt and lift_full raises NoFirstOrderDeformation.
SectionAlgebraModel build_no_first_order_model(int n_max = 8);

/// Model violating exactness at H1_0 (d_1 = 0 while mult_s_1 = 0 too,
/// so ker mult_s_1 strictly contains im d_1).  validate_model throws.
SectionAlgebraModel build_bad_exactness_model(int n_max = 8);

json lift_model_to_json(const SectionAlgebraModel& m);
SectionAlgebraModel lift_model_from_json(const json& doc);
json lift_result_to_json(const LiftResult& r);

}  // namespace para
