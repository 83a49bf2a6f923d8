#pragma once

#include <optional>
#include <string>
#include <vector>

#include "para/json_io.hpp"
#include "para/matrix.hpp"

namespace para {

/// Graded module M^0..M^n over a q-dimensional direction space V, with a
/// bilinear action V x M^k -> M^{k+1} whose square vanishes: for every
/// direction v the maps (v cup -) form a cochain complex.  The geometric
/// constructors produce exterior-algebra models; arbitrary validated
/// tensor data is accepted as well, so every downstream engine is
/// model-agnostic.
///
/// The level-k action tensor is stored as a d_{k+1} x (q * d_k) matrix;
/// column i * d_k + j holds the image of (e_i, basis_j).  Wedge bases are
/// ordered lexicographically on index sets, which pins every matrix down
/// bit for bit.
struct CupModule {
    std::string kind = "explicit_tensors";
    int q = 0;      // dim V
    int shift = 0;  // exterior-power offset (koszul kind)
    int chi = 0;    // section-space parameter (ample_divisor_canonical kind)
    std::vector<int> graded_dims;      // d_0..d_n
    std::vector<ExactMatrix> action;   // A_0..A_{n-1}
    std::optional<Vec> top_trace;      // functional on M^n (when defined)

    /// Top level n.
    int levels() const { return int(graded_dims.size()) - 1; }
    /// dim M^k, zero outside [0, n].
    int dim(int k) const;

    /// Matrix of (v cup -): M^k -> M^{k+1}; k == n yields the zero map
    /// into the zero space.
    ExactMatrix action_of(const Vec& v, int k) const;
    /// Apply (v cup -) to x in M^k.
    Vec act(const Vec& v, int k, const Vec& x) const;
};

/// Exterior-power tower M^k = Λ^{k+shift} V, k = 0..q, with the wedge
/// action; powers beyond q are zero spaces.
CupModule build_koszul(int q, int shift);

/// Canonical-section model with n = q-1: M^0 = W ⊕ Λ^1 V (dim W = chi-1,
/// acted on by zero), M^k = Λ^{k+1} V for k >= 1, wedge action, and the
/// top trace reading the Λ^q coefficient.  dim M^0 = chi + q - 1.
CupModule build_ample_divisor_canonical(int q, int chi);

/// Concrete failure of the square-zero law: applying (v cup -) twice to
/// basis vector `basis_index` of M^k gives a nonzero element of M^{k+2}.
struct CupSquareWitness {
    Vec v;
    int k = 0;
    int basis_index = 0;
};

/// Checks the square-zero law on a spanning set of directions (all e_a,
/// then all e_a + e_b), which suffices by bilinearity.  Returns nullopt
/// on pass, otherwise a witness that re-checks directly.
std::optional<CupSquareWitness> validate_cup_square_zero(const CupModule& m);

/// Same check, raising AxiomViolation with the witness coordinates.
void require_cup_square_zero(const CupModule& m);

/// Skew bilinear form on V induced by a degree-zero element s:
/// entry (i, j) = top_trace(e_j cup (e_i cup s)).  Requires n = 2 and a
/// top trace; the result is asserted to be exactly skew.
ExactMatrix serre_pairing(const CupModule& m, const Vec& s);

json model_to_json(const CupModule& m);
/// Parses and re-validates (shape checks raise SchemaError, square-zero
/// failures raise AxiomViolation).
CupModule model_from_json(const json& doc);

/// All m-element subsets of {0..q-1}, each sorted ascending, listed in
/// lexicographic order; empty list when m < 0 or m > q.
std::vector<std::vector<int>> lex_subsets(int q, int m);

/// Exact binomial coefficient (0 outside the triangle).
long binomial(int n, int k);

}  // namespace para
