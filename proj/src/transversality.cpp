#include "para/transversality.hpp"

#include <algorithm>

#include "para/errors.hpp"
#include "para/rng.hpp"

namespace para {

DerivativeComplex derivative_complex(const CupModule& m, const Vec& v) {
    if (int(v.size()) != m.q) throw DomainError("derivative_complex: direction has wrong dimension");
    const int n = m.levels();
    DerivativeComplex dc;
    dc.direction = v;
    for (int k = 0; k <= n; ++k) dc.maps.push_back(m.action_of(v, k));
    for (int k = 0; k + 1 <= n; ++k)
        if (!(dc.maps[size_t(k + 1)] * dc.maps[size_t(k)]).is_zero())
            throw AxiomViolation("derivative complex",
                                 "maps fail to compose to zero at level " + std::to_string(k));
    std::vector<int> ranks;
    for (const auto& a : dc.maps) ranks.push_back(a.rank());
    for (int k = 0; k <= n; ++k) {
        const int rank_in = k > 0 ? ranks[size_t(k - 1)] : 0;
        dc.cohomology_dims.push_back(m.dim(k) - ranks[size_t(k)] - rank_in);
    }
    return dc;
}

bool is_k_transversal(const CupModule& m, const Vec& v, int k) {
    if (int(v.size()) != m.q) throw DomainError("is_k_transversal: direction has wrong dimension");
    if (k < 0 || k > m.levels()) throw DomainError("is_k_transversal: slot out of range");
    const int dk = m.dim(k);
    if (dk == 0) return true;
    ExactMatrix out = m.action_of(v, k);
    ExactMatrix in = k > 0 ? m.action_of(v, k - 1) : ExactMatrix(dk, 0);

    // Certified squeeze: modular ranks bound the exact ranks from below,
    // and rank(in) + rank(out) <= dk holds unconditionally (square-zero
    // law), so hitting dk from below certifies exactness with no exact
    // elimination at all.
    auto lo = detail::rank_lower_bound_mod_p(out);
    auto li = detail::rank_lower_bound_mod_p(in);
    if (lo && li && *lo + *li == dk) return true;
    return out.rank() + in.rank() == dk;
}

bool tangency_excluded(const CupModule& m, const Vec& v, int k) {
    return is_k_transversal(m, v, k);
}

bool isolated_point_test(const CupModule& m, int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw DomainError("isolated_point_test: need at least one sample");
    SampleStream rng(seed);
    for (int trial = 0; trial < sample_count; ++trial) {
        Vec v = rng.nonzero_int_vector(m.q);
        for (int k = 1; k <= m.levels(); ++k)
            if (!is_k_transversal(m, v, k)) return false;
    }
    return true;
}

IncidenceReport incidence_report(const CupModule& m, int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw DomainError("incidence_report: need at least one sample");
    const int n = m.levels();
    IncidenceReport r;
    r.q = m.q;
    r.p_g = m.dim(0);
    r.sample_count = sample_count;
    r.seed = seed;

    SampleStream rng(seed);
    std::vector<long> slot_pass(size_t(n) + 1, 0);
    long all_pass = 0;
    int generic_fiber_kernel = -1;  // min over fully transversal samples

    for (int trial = 0; trial < sample_count; ++trial) {
        Vec v = rng.nonzero_int_vector(m.q);
        bool all = true;
        for (int k = 0; k <= n; ++k) {
            const bool t = is_k_transversal(m, v, k);
            slot_pass[size_t(k)] += t ? 1 : 0;
            if (k >= 1 && !t) all = false;
        }
        if (all) {
            ++all_pass;
            const int ker0 = m.dim(0) - m.action_of(v, 0).rank();
            if (generic_fiber_kernel < 0 || ker0 < generic_fiber_kernel)
                generic_fiber_kernel = ker0;
        }
    }

    r.transversal_fraction = mpq_class(all_pass, sample_count);
    r.transversal_fraction.canonicalize();
    for (int k = 0; k <= n; ++k) {
        mpq_class f(slot_pass[size_t(k)], sample_count);
        f.canonicalize();
        r.per_k.push_back(f);
    }

    if (generic_fiber_kernel > 0) {
        r.has_incidence = true;
        r.dim_I_main = (m.q - 1) + (generic_fiber_kernel - 1);
    }

    if (n == 2 && m.top_trace) {
        int min_t = -1;
        for (int trial = 0; trial < sample_count; ++trial) {
            Vec s = rng.nonzero_int_vector(m.dim(0));
            ExactMatrix c = serre_pairing(m, s);
            const int t = m.q - c.rank();
            if (min_t < 0 || t < min_t) min_t = t;
        }
        r.generic_kernel_dim = min_t;
        if (r.has_incidence && min_t >= 1)
            r.sigma_codim_estimate = (r.p_g - 1) - (r.dim_I_main - (min_t - 1));
    }
    return r;
}

json incidence_report_to_json(const IncidenceReport& r) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["q"] = r.q;
    doc["p_g"] = r.p_g;
    doc["sample_count"] = r.sample_count;
    doc["seed"] = r.seed;
    doc["transversal_fraction"] = rational_str(r.transversal_fraction);
    json per = json::array();
    for (const auto& f : r.per_k) per.push_back(rational_str(f));
    doc["per_k"] = std::move(per);
    doc["dim_I_main"] = r.has_incidence ? json(r.dim_I_main) : json("no incidence");
    doc["generic_kernel_dim"] =
        r.generic_kernel_dim >= 0 ? json(r.generic_kernel_dim) : json(nullptr);
    doc["sigma_codim_estimate"] =
        r.sigma_codim_estimate >= 0 ? json(r.sigma_codim_estimate) : json(nullptr);
    return doc;
}

bool wedge_degenerate(const std::vector<Vec>& forms) {
    if (forms.empty()) throw DomainError("wedge_degenerate: need at least one form");
    const size_t dim = forms.front().size();
    for (const auto& f : forms)
        if (f.size() != dim) throw DomainError("wedge_degenerate: forms of mixed dimension");
    if (forms.size() > dim) throw DomainError("wedge_degenerate: more forms than the dimension");
    ExactMatrix m = matrix_from_rows(forms, int(dim));
    return m.rank() < int(forms.size());
}

bool tangency_check(const ExactMatrix& f, const ExactMatrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw DomainError("tangency_check: matrices must share their shape");
    for (const Vec& u : f.kernel_basis())
        if (!f.solve(g.apply(u)).has_value()) return false;
    return true;
}

}  // namespace para
