#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "para/cup_model.hpp"
#include "para/json_io.hpp"
#include "para/poly.hpp"

namespace para {

/// Linear family of skew forms c_s = sum_i x_i A_i on a q-dimensional
/// space, indexed by coefficient vectors x in the generator basis.
struct SkewFamily {
    int q = 0;
    std::vector<ExactMatrix> generators;  // each q x q, exactly skew
    std::string source = "explicit";
};

/// Family induced by a surface-graded module with a trace: one generator
/// per basis vector of M^0 (the pairing is linear in s, so this captures
/// the whole family).
SkewFamily skew_family_from_model(const CupModule& m);

/// The member at coefficient vector s.
ExactMatrix family_at(const SkewFamily& f, const Vec& s);

json skew_family_to_json(const SkewFamily& f);
/// Shape problems raise SchemaError; non-skew generators raise
/// AxiomViolation.
SkewFamily skew_family_from_json(const json& doc);

/// Matrix with polynomial entries (used for the symbolic Pfaffian).
using PolyMatrix = std::vector<std::vector<SparsePoly>>;

/// Pfaffian of a skew polynomial matrix by memoized cofactor expansion
/// over index subsets.  Exact but exponential: sizes above 8 are
/// rejected (numeric matrices use the elimination Pfaffian instead).
SparsePoly symbolic_pfaffian(const PolyMatrix& m);

/// Description of the degeneracy locus of a skew family.
struct SigmaDescription {
    int q = 0;
    int generator_count = 0;
    /// Pf(sum x_i A_i) as a polynomial in the coefficients; identically
    /// zero when q is odd.
    SparsePoly pf_poly;
    /// Total degree of pf_poly (q/2 whenever it is nonzero); -1 when the
    /// polynomial vanishes identically.
    int degree = -1;
    /// True when every member of the family is degenerate: always for
    /// odd q, and for even q exactly when pf_poly == 0.
    bool all_degenerate = false;
    /// Ranks of sampled members (seeded, in sample order).
    std::vector<int> rank_strata;
    int sample_count = 0;
    std::uint64_t seed = 0;
};

SigmaDescription sigma_polynomial(const SkewFamily& f, int sample_count = 16,
                                  std::uint64_t seed = 0);
json sigma_to_json(const SigmaDescription& d);

/// Exact rank of the member at s; skew forms have even rank.
int rank_of_cup_s(const SkewFamily& f, const Vec& s);

enum class SmoothVerdict { Smooth, Singular, NotOnSigma };
std::string to_string(SmoothVerdict v);

/// Classifies s against the degeneracy hypersurface: evaluates pf_poly
/// and its gradient at s.  Off the hypersurface: NotOnSigma.  On it:
/// Smooth iff the gradient is nonzero.  The verdict is cross-checked
/// against the rank criterion (gradient nonzero <=> rank exactly q-2);
/// a family for which the two disagree at s raises AxiomViolation,
/// surfacing that the family fails the smoothness hypotheses instead of
/// silently accepting either answer.
SmoothVerdict smooth_point_test(const SkewFamily& f, const Vec& s);

/// Coefficient of lambda^{q-2} mu^2 in det(lambda a + mu b), computed by
/// exact interpolation of det(a + x b).  Both matrices must be skew of
/// the same even size.
GaussianRational pencil_coefficient(const ExactMatrix& a, const ExactMatrix& b);

/// Vanishing order of the binary form Pf(lambda a + mu b) at the point
/// [1 : 0], i.e. the index of the first nonzero coefficient of
/// Pf(a + x b).  Raises DomainError when the form vanishes identically.
int pencil_root_multiplicity(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace para
