#include "para/pfaffian_strata.hpp"

#include <map>

#include "para/errors.hpp"
#include "para/rng.hpp"

namespace para {

SkewFamily skew_family_from_model(const CupModule& m) {
    SkewFamily f;
    f.q = m.q;
    f.source = "serre_pairing";
    const int p_g = m.dim(0);
    for (int j = 0; j < p_g; ++j) {
        Vec s(static_cast<size_t>(p_g));
        s[size_t(j)] = GaussianRational(1);
        f.generators.push_back(serre_pairing(m, s));
    }
    return f;
}

ExactMatrix family_at(const SkewFamily& f, const Vec& s) {
    if (s.size() != f.generators.size())
        throw DomainError("family_at: coefficient vector has wrong length");
    ExactMatrix m(f.q, f.q);
    for (size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero()) m = m + f.generators[i].scaled(s[i]);
    return m;
}

json skew_family_to_json(const SkewFamily& f) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["q"] = f.q;
    doc["source"] = f.source;
    json gens = json::array();
    for (const auto& g : f.generators) gens.push_back(matrix_to_json(g));
    doc["generators"] = std::move(gens);
    return doc;
}

SkewFamily skew_family_from_json(const json& doc) {
    const std::string what = "skew family";
    require_schema_version(doc, what);
    SkewFamily f;
    f.q = require_int(doc, "q", what);
    if (f.q < 1) throw SchemaError(what + ": q must be positive");
    f.source = doc.contains("source") && doc["source"].is_string()
                   ? doc["source"].get<std::string>()
                   : "explicit";
    const json& gens = require_field(doc, "generators", what);
    if (!gens.is_array() || gens.empty())
        throw SchemaError(what + ": expected a nonempty array of generators");
    for (const auto& g : gens) {
        ExactMatrix m = matrix_from_json(g, what, f.q);
        if (m.rows() != f.q || m.cols() != f.q)
            throw SchemaError(what + ": generator is not q x q");
        if (!m.is_skew())
            throw AxiomViolation("skew family", "generator " +
                                                    std::to_string(f.generators.size()) +
                                                    " is not skew-symmetric");
        f.generators.push_back(std::move(m));
    }
    return f;
}

SparsePoly symbolic_pfaffian(const PolyMatrix& m) {
    const int n = int(m.size());
    for (const auto& row : m)
        if (int(row.size()) != n) throw DomainError("symbolic_pfaffian: matrix is not square");
    if (n == 0) throw DomainError("symbolic_pfaffian: empty matrix");
    const int nvars = m[0][0].nvars();
    for (int i = 0; i < n; ++i) {
        if (!m[size_t(i)][size_t(i)].is_zero())
            throw DomainError("symbolic_pfaffian: nonzero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (!(m[size_t(i)][size_t(j)] + m[size_t(j)][size_t(i)]).is_zero())
                throw DomainError("symbolic_pfaffian: matrix is not skew");
    }
    if (n % 2 != 0) return SparsePoly(nvars);
    if (n > 8) throw DomainError("symbolic_pfaffian: cofactor expansion limited to size 8");

    std::map<unsigned, SparsePoly> memo;
    // Pf over the sub-matrix indexed by the set bits of `mask`, by
    // expansion along the lowest live index.
    auto rec = [&](auto&& self, unsigned mask) -> SparsePoly {
        if (mask == 0) return SparsePoly::constant(GaussianRational(1), nvars);
        auto hit = memo.find(mask);
        if (hit != memo.end()) return hit->second;
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                first = i;
                break;
            }
        SparsePoly total(nvars);
        bool positive = true;
        for (int j = first + 1; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const unsigned rest = mask & ~(1u << first) & ~(1u << j);
            SparsePoly term = m[size_t(first)][size_t(j)] * self(self, rest);
            total = positive ? total + term : total - term;
            positive = !positive;
        }
        memo.emplace(mask, total);
        return total;
    };
    const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
    return rec(rec, full);
}

SigmaDescription sigma_polynomial(const SkewFamily& f, int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw DomainError("sigma_polynomial: need at least one sample");
    SigmaDescription d;
    d.q = f.q;
    d.generator_count = int(f.generators.size());
    d.sample_count = sample_count;
    d.seed = seed;

    if (f.q % 2 != 0) {
        d.pf_poly = SparsePoly(d.generator_count);
        d.all_degenerate = true;  // odd skew forms are always degenerate
    } else {
        PolyMatrix entries(size_t(f.q), std::vector<SparsePoly>(size_t(f.q),
                                                                SparsePoly(d.generator_count)));
        for (int g = 0; g < d.generator_count; ++g) {
            std::vector<unsigned> exps(static_cast<size_t>(d.generator_count), 0);
            exps[size_t(g)] = 1;
            for (int i = 0; i < f.q; ++i)
                for (int j = 0; j < f.q; ++j) {
                    const GaussianRational& c = f.generators[size_t(g)].at(i, j);
                    if (!c.is_zero()) entries[size_t(i)][size_t(j)].add_term(exps, c);
                }
        }
        d.pf_poly = symbolic_pfaffian(entries);
        d.all_degenerate = d.pf_poly.is_zero();
        if (!d.pf_poly.is_zero()) {
            d.degree = d.pf_poly.degree();
            if (d.degree != f.q / 2 || !d.pf_poly.is_homogeneous())
                throw AxiomViolation("sigma polynomial degree",
                                     "nonzero Pfaffian of a linear family must be homogeneous "
                                     "of degree q/2");
        }
    }

    SampleStream rng(seed);
    for (int trial = 0; trial < sample_count; ++trial) {
        Vec s = rng.nonzero_int_vector(d.generator_count);
        d.rank_strata.push_back(rank_of_cup_s(f, s));
    }
    return d;
}

json sigma_to_json(const SigmaDescription& d) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["q"] = d.q;
    doc["generator_count"] = d.generator_count;
    doc["all_degenerate"] = d.all_degenerate;
    doc["degree"] = d.degree >= 0 ? json(d.degree) : json(nullptr);
    doc["pf_poly"] = d.pf_poly.str();
    doc["rank_strata"] = int_vector_to_json(d.rank_strata);
    doc["sample_count"] = d.sample_count;
    doc["seed"] = d.seed;
    return doc;
}

int rank_of_cup_s(const SkewFamily& f, const Vec& s) {
    const ExactMatrix m = family_at(f, s);
    const int r = m.rank();
    if (r % 2 != 0)
        throw AxiomViolation("skew rank parity", "a skew form reported an odd rank");
    return r;
}

std::string to_string(SmoothVerdict v) {
    switch (v) {
        case SmoothVerdict::Smooth: return "smooth";
        case SmoothVerdict::Singular: return "singular";
        case SmoothVerdict::NotOnSigma: return "not_on_sigma";
    }
    return "unknown";
}

SmoothVerdict smooth_point_test(const SkewFamily& f, const Vec& s) {
    if (f.q % 2 != 0)
        throw DomainError("smooth_point_test: odd q degenerates everywhere; no hypersurface");
    SigmaDescription d = sigma_polynomial(f, 1, 0);
    if (d.pf_poly.is_zero())
        throw DomainError("smooth_point_test: the family's Pfaffian vanishes identically");

    const GaussianRational value = d.pf_poly.eval(s);
    const bool gradient_nonzero = !is_zero_vec(d.pf_poly.gradient_at(s));
    const int rank = rank_of_cup_s(f, s);

    if (!value.is_zero()) return SmoothVerdict::NotOnSigma;

    // Cross-check: on the hypersurface, a nonzero gradient must mean
    // corank exactly 2 and vice versa.  Families violating this escape
    // the smoothness hypotheses and are reported, not classified.
    if (gradient_nonzero != (rank == f.q - 2))
        throw AxiomViolation("smooth point cross-check",
                             "gradient and rank criteria disagree (rank " + std::to_string(rank) +
                                 ", gradient " + (gradient_nonzero ? "nonzero" : "zero") + ")");
    return gradient_nonzero ? SmoothVerdict::Smooth : SmoothVerdict::Singular;
}

namespace {

/// Exact coefficients of a polynomial of degree <= d from its values at
/// x = 0..d (Vandermonde solve; deterministic).
std::vector<GaussianRational> interpolate(const std::vector<GaussianRational>& values) {
    const int d = int(values.size()) - 1;
    ExactMatrix v(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        GaussianRational p(1);
        for (int j = 0; j <= d; ++j) {
            v.at(i, j) = p;
            p *= GaussianRational(i);
        }
    }
    auto coeffs = v.solve(values);
    if (!coeffs) throw DomainError("interpolation failed");  // unreachable: Vandermonde is regular
    return *coeffs;
}

void require_skew_pair(const ExactMatrix& a, const ExactMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError(std::string(who) + ": size mismatch");
    if (a.rows() != a.cols() || a.rows() % 2 != 0)
        throw DomainError(std::string(who) + ": matrices must be square of even size");
    if (!a.is_skew() || !b.is_skew()) throw DomainError(std::string(who) + ": matrices must be skew");
}

}  // namespace

GaussianRational pencil_coefficient(const ExactMatrix& a, const ExactMatrix& b) {
    require_skew_pair(a, b, "pencil_coefficient");
    const int n = a.rows();
    std::vector<GaussianRational> values;
    for (int x = 0; x <= n; ++x) values.push_back((a + b.scaled(GaussianRational(x))).det());
    return interpolate(values)[2];
}

int pencil_root_multiplicity(const ExactMatrix& a, const ExactMatrix& b) {
    require_skew_pair(a, b, "pencil_root_multiplicity");
    const int half = a.rows() / 2;
    std::vector<GaussianRational> values;
    for (int x = 0; x <= half; ++x)
        values.push_back((a + b.scaled(GaussianRational(x))).pfaffian());
    auto coeffs = interpolate(values);
    for (int k = 0; k <= half; ++k)
        if (!coeffs[size_t(k)].is_zero()) return k;
    throw DomainError("pencil_root_multiplicity: the pencil's Pfaffian vanishes identically");
}

}  // namespace para
