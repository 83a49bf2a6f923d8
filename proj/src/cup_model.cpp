#include "para/cup_model.hpp"

#include <algorithm>

#include "para/errors.hpp"

namespace para {

long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_si();
}

std::vector<std::vector<int>> lex_subsets(int q, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > q) return out;
    std::vector<int> pick(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pick[size_t(i)] = i;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    for (;;) {
        out.push_back(pick);
        int i = m - 1;
        while (i >= 0 && pick[size_t(i)] == q - m + i) --i;
        if (i < 0) break;
        ++pick[size_t(i)];
        for (int j = i + 1; j < m; ++j) pick[size_t(j)] = pick[size_t(j - 1)] + 1;
    }
    return out;
}

namespace {

int subset_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& s) {
    auto it = std::lower_bound(basis.begin(), basis.end(), s);
    return int(it - basis.begin());
}

/// Tensor of the wedge action V x Λ^m -> Λ^{m+1} in lex subset bases.
ExactMatrix wedge_tensor(int q, int m) {
    const auto dom = lex_subsets(q, m);
    const auto cod = lex_subsets(q, m + 1);
    const int d = int(dom.size());
    ExactMatrix a(int(cod.size()), q * d);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < d; ++j) {
            const auto& s = dom[size_t(j)];
            if (std::binary_search(s.begin(), s.end(), i)) continue;
            std::vector<int> u = s;
            u.insert(std::lower_bound(u.begin(), u.end(), i), i);
            const int below = int(std::lower_bound(s.begin(), s.end(), i) - s.begin());
            a.at(subset_index(cod, u), i * d + j) = (below % 2 == 0) ? 1 : -1;
        }
    }
    return a;
}

Vec basis_direction(int q, int i) {
    Vec v(static_cast<size_t>(q));
    v[size_t(i)] = GaussianRational(1);
    return v;
}

}  // namespace

int CupModule::dim(int k) const {
    if (k < 0 || k > levels()) return 0;
    return graded_dims[size_t(k)];
}

ExactMatrix CupModule::action_of(const Vec& v, int k) const {
    if (int(v.size()) != q) throw DomainError("action_of: direction has wrong dimension");
    if (k < 0 || k > levels()) throw DomainError("action_of: level out of range");
    const int dk = dim(k);
    const int dk1 = dim(k + 1);
    ExactMatrix out(dk1, dk);
    if (k == levels()) return out;  // map into the zero space
    const ExactMatrix& a = action[size_t(k)];
    for (int r = 0; r < dk1; ++r)
        for (int j = 0; j < dk; ++j) {
            GaussianRational acc(0);
            for (int i = 0; i < q; ++i) {
                const GaussianRational& t = a.at(r, i * dk + j);
                if (!t.is_zero()) acc += v[size_t(i)] * t;
            }
            out.at(r, j) = acc;
        }
    return out;
}

Vec CupModule::act(const Vec& v, int k, const Vec& x) const {
    if (int(x.size()) != dim(k)) throw DomainError("act: element has wrong dimension");
    return action_of(v, k).apply(x);
}

CupModule build_koszul(int q, int shift) {
    if (q < 1) throw DomainError("build_koszul: q must be at least 1");
    if (shift < 0 || shift > q) throw DomainError("build_koszul: shift out of range");
    CupModule m;
    m.kind = "koszul";
    m.q = q;
    m.shift = shift;
    const int n = q;
    for (int k = 0; k <= n; ++k) m.graded_dims.push_back(int(binomial(q, k + shift)));
    for (int k = 0; k < n; ++k) m.action.push_back(wedge_tensor(q, k + shift));
    if (shift == 0) m.top_trace = Vec{GaussianRational(1)};
    return m;
}

CupModule build_ample_divisor_canonical(int q, int chi) {
    if (q < 2) throw DomainError("build_ample_divisor_canonical: q must be at least 2");
    if (chi < 1) throw DomainError("build_ample_divisor_canonical: chi must be at least 1");
    CupModule m;
    m.kind = "ample_divisor_canonical";
    m.q = q;
    m.chi = chi;
    const int n = q - 1;
    m.graded_dims.push_back((chi - 1) + q);
    for (int k = 1; k <= n; ++k) m.graded_dims.push_back(int(binomial(q, k + 1)));

    // Level 0: the chi-1 leading coordinates are acted on by zero; the
    // trailing q coordinates wedge as Λ^1.
    {
        const int d0 = m.graded_dims[0];
        const int d1 = m.graded_dims[1];
        const ExactMatrix pure = wedge_tensor(q, 1);
        ExactMatrix a0(d1, q * d0);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                for (int r = 0; r < d1; ++r) {
                    const GaussianRational& t = pure.at(r, i * q + j);
                    if (!t.is_zero()) a0.at(r, i * d0 + (chi - 1) + j) = t;
                }
        m.action.push_back(std::move(a0));
    }
    for (int k = 1; k < n; ++k) m.action.push_back(wedge_tensor(q, k + 1));
    m.top_trace = Vec{GaussianRational(1)};
    return m;
}

std::optional<CupSquareWitness> validate_cup_square_zero(const CupModule& m) {
    const int n = m.levels();
    auto composite = [&](int a, int b, int k) {
        return m.action_of(basis_direction(m.q, a), k + 1) *
               m.action_of(basis_direction(m.q, b), k);
    };
    auto witness_from = [&](const ExactMatrix& sq, const Vec& v, int k)
        -> std::optional<CupSquareWitness> {
        for (int j = 0; j < sq.cols(); ++j)
            for (int r = 0; r < sq.rows(); ++r)
                if (!sq.at(r, j).is_zero()) return CupSquareWitness{v, k, j};
        return std::nullopt;
    };

    for (int k = 0; k + 1 < n; ++k) {
        // Diagonal directions first: with these clean, a mixed-pair
        // failure re-checks directly under v = e_a + e_b.
        for (int a = 0; a < m.q; ++a) {
            auto w = witness_from(composite(a, a, k), basis_direction(m.q, a), k);
            if (w) return w;
        }
        for (int a = 0; a < m.q; ++a)
            for (int b = a + 1; b < m.q; ++b) {
                ExactMatrix sym = composite(a, b, k) + composite(b, a, k);
                Vec v = basis_direction(m.q, a) + basis_direction(m.q, b);
                auto w = witness_from(sym, v, k);
                if (w) return w;
            }
    }
    return std::nullopt;
}

void require_cup_square_zero(const CupModule& m) {
    auto w = validate_cup_square_zero(m);
    if (!w) return;
    std::string dir = "(";
    for (size_t i = 0; i < w->v.size(); ++i) {
        if (i) dir += ",";
        dir += w->v[i].str();
    }
    dir += ")";
    throw AxiomViolation("cup square-zero",
                         "fails at level " + std::to_string(w->k) + ", basis index " +
                             std::to_string(w->basis_index) + ", direction " + dir);
}

ExactMatrix serre_pairing(const CupModule& m, const Vec& s) {
    if (m.levels() != 2) throw DomainError("serre_pairing: model must be graded over levels 0..2");
    if (!m.top_trace) throw DomainError("serre_pairing: model carries no top trace");
    if (int(s.size()) != m.dim(0)) throw DomainError("serre_pairing: element has wrong dimension");
    const Vec& tt = *m.top_trace;

    std::vector<Vec> first;  // e_i cup s
    first.reserve(size_t(m.q));
    for (int i = 0; i < m.q; ++i) first.push_back(m.act(basis_direction(m.q, i), 0, s));

    ExactMatrix c(m.q, m.q);
    for (int i = 0; i < m.q; ++i)
        for (int j = 0; j < m.q; ++j) {
            Vec top = m.act(basis_direction(m.q, j), 1, first[size_t(i)]);
            GaussianRational acc(0);
            for (size_t t = 0; t < top.size(); ++t) acc += tt[t] * top[t];
            c.at(i, j) = acc;
        }
    if (!(c + c.transpose()).is_zero())
        throw AxiomViolation("serre pairing skewness", "the model's action is inconsistent");
    return c;
}

json model_to_json(const CupModule& m) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = m.kind;
    doc["q"] = m.q;
    doc["chi"] = m.chi;
    doc["shift"] = m.shift;
    doc["graded_dims"] = int_vector_to_json(m.graded_dims);
    json tensors = json::array();
    for (const auto& a : m.action) tensors.push_back(matrix_to_json(a));
    doc["tensors"] = std::move(tensors);
    doc["top_trace"] = m.top_trace ? vec_to_json(*m.top_trace) : json(nullptr);
    return doc;
}

CupModule model_from_json(const json& doc) {
    const std::string what = "cup model";
    require_schema_version(doc, what);
    CupModule m;
    m.kind = require_string(doc, "kind", what);
    m.q = require_int(doc, "q", what);
    m.chi = require_int(doc, "chi", what);
    m.shift = require_int(doc, "shift", what);
    m.graded_dims = int_vector_from_json(require_field(doc, "graded_dims", what), what);
    if (m.q < 1) throw SchemaError(what + ": q must be positive");
    if (m.graded_dims.empty()) throw SchemaError(what + ": graded_dims must be nonempty");
    for (int d : m.graded_dims)
        if (d < 0) throw SchemaError(what + ": negative graded dimension");

    const json& tensors = require_field(doc, "tensors", what);
    if (!tensors.is_array() || int(tensors.size()) != m.levels())
        throw SchemaError(what + ": expected one action tensor per adjacent level pair");
    for (int k = 0; k < m.levels(); ++k) {
        ExactMatrix a = matrix_from_json(tensors[size_t(k)], what, m.q * m.dim(k));
        if (a.rows() != m.dim(k + 1) || a.cols() != m.q * m.dim(k))
            throw SchemaError(what + ": tensor " + std::to_string(k) + " has wrong shape");
        m.action.push_back(std::move(a));
    }

    const json& tt = require_field(doc, "top_trace", what);
    if (!tt.is_null()) {
        Vec v = vec_from_json(tt, what);
        if (int(v.size()) != m.graded_dims.back())
            throw SchemaError(what + ": top_trace has wrong dimension");
        m.top_trace = std::move(v);
    }

    require_cup_square_zero(m);
    return m;
}

}  // namespace para
