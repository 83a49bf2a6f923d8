#pragma once

#include <cstdint>
#include <vector>

#include "para/cup_model.hpp"
#include "para/json_io.hpp"

namespace para {

/// The cochain complex 0 -> M^0 -> M^1 -> ... -> M^n -> 0 cut out of a
/// module by a fixed direction v, with its exact cohomology dimensions.
struct DerivativeComplex {
    Vec direction;
    std::vector<ExactMatrix> maps;     // maps[k]: M^k -> M^{k+1}, k = 0..n (last into 0)
    std::vector<int> cohomology_dims;  // slots 0..n
};

/// Assembles the complex for direction v, asserting that consecutive
/// maps compose to zero, and computes every cohomology dimension by
/// exact elimination.
DerivativeComplex derivative_complex(const CupModule& m, const Vec& v);

/// True iff the cohomology of the v-complex vanishes at slot k, i.e.
/// ker(M^k -> M^{k+1}) = im(M^{k-1} -> M^k).  Fast path: the two ranks
/// are first bounded below by a single modular elimination; if the
/// bounds already sum to dim M^k the slot is certified exact (the sum
/// can never exceed dim M^k because the square-zero law puts the image
/// inside the kernel).  Otherwise the exact ranks decide.
bool is_k_transversal(const CupModule& m, const Vec& v, int k);

/// Same test; exists so reports can phrase the result as the direction
/// being non-tangent to the degeneracy locus at the origin.
bool tangency_excluded(const CupModule& m, const Vec& v, int k);

/// Seeded sampling certificate: true iff every sampled nonzero integer
/// direction is k-transversal for every k in [1, n].  A sampling
/// certificate, not a proof.
bool isolated_point_test(const CupModule& m, int sample_count, std::uint64_t seed);

/// Sampled dimension count for the incidence set {([v],[s]) : v cup s = 0}
/// over the locus of transversal directions.
struct IncidenceReport {
    int q = 0;
    int p_g = 0;  // dim M^0
    int sample_count = 0;
    std::uint64_t seed = 0;
    /// Fraction of sampled nonzero v transversal at every slot k >= 1.
    mpq_class transversal_fraction;
    /// Per-slot fractions, k = 0..n.
    std::vector<mpq_class> per_k;
    /// False when the generic fiber over [v] is empty (cup with v is
    /// injective on M^0); dim_I_main is meaningless then.
    bool has_incidence = false;
    int dim_I_main = -1;  // (q-1) + (generic projective fiber dim)
    /// Generic kernel dimension of the induced skew form over sampled s
    /// (surface-graded models with a trace only); -1 when unavailable.
    int generic_kernel_dim = -1;
    /// (p_g - 1) - (dim_I_main - (t - 1)); -1 when ingredients missing.
    int sigma_codim_estimate = -1;
};

IncidenceReport incidence_report(const CupModule& m, int sample_count, std::uint64_t seed);
json incidence_report_to_json(const IncidenceReport& r);

/// True iff the forms wedge to zero, i.e. are linearly dependent.
/// Requires 1 <= count <= dim.
bool wedge_degenerate(const std::vector<Vec>& forms);

/// True iff g maps ker(f) into im(f) (exact membership tests).
/// Matrices must share their shape.
bool tangency_check(const ExactMatrix& f, const ExactMatrix& g);

}  // namespace para
