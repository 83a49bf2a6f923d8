#include "para/hodge_ledger.hpp"

#include <string>
#include <utility>

#include "para/errors.hpp"
#include "para/series.hpp"

namespace para {

namespace {

long binomial_long(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    if (!b.fits_slong_p()) throw DomainError("binomial coefficient exceeds machine range");
    return b.get_si();
}

}  // namespace

HodgeVector make_hodge_vector(int n, std::vector<long> h) {
    if (n < 1) throw DomainError("hodge vector: dimension must be at least 1");
    if (h.size() != static_cast<size_t>(n) + 1)
        throw DomainError("hodge vector: expected " + std::to_string(n + 1) + " entries, got " +
                          std::to_string(h.size()));
    if (h[0] != 1) throw DomainError("hodge vector: h^{0,0} must be 1");
    for (long v : h)
        if (v < 0) throw DomainError("hodge vector: entries must be nonnegative");
    return HodgeVector{n, std::move(h)};
}

ChiGap chi_and_gap(const HodgeVector& hv) {
    long long alternating = 0;
    for (int j = 0; j <= hv.n; ++j) {
        long long term = hv.h[static_cast<size_t>(j)];
        alternating += (j % 2 == 0) ? term : -term;
    }
    ChiGap out;
    out.chi = (hv.n % 2 == 0) ? alternating : -alternating;
    out.gap = hv.h[static_cast<size_t>(hv.n)] - (out.chi + hv.h[1] - 1);
    return out;
}

long long h_of_x(const HodgeVector& hv) {
    long long sum = 0;
    for (int j = hv.n - 1; j >= 0; j -= 2) sum += hv.h[static_cast<size_t>(j)];
    return sum;
}

mpz_class s_n_coefficient(const HodgeVector& hv) {
    TruncatedSeries<mpz_class> product = TruncatedSeries<mpz_class>::constant(mpz_class(1), hv.n);
    for (int j = 1; j <= hv.n; ++j) {
        long exponent = hv.h[static_cast<size_t>(hv.n - j)];
        if (j % 2 == 0) exponent = -exponent;
        product = product * series_expand_power(j, exponent, hv.n);
    }
    return product.coeff(hv.n);
}

bool binomial_is_odd(unsigned long long top, unsigned long long bottom) {
    if (bottom > top) return false;
    return (bottom & (top - bottom)) == 0;
}

std::string to_string(ExorbitantVerdict v) {
    switch (v) {
        case ExorbitantVerdict::Main: return "main";
        case ExorbitantVerdict::Exorbitant: return "exorbitant";
        case ExorbitantVerdict::OutOfHypotheses: return "out_of_hypotheses";
    }
    throw DomainError("unknown exorbitant verdict");
}

ParityFragment parity_criterion(const HodgeVector& hv) {
    ParityFragment out;
    out.h_of_x = h_of_x(hv);
    out.s_n = s_n_coefficient(hv);
    out.binom_odd = binomial_is_odd(static_cast<unsigned long long>(out.h_of_x),
                                    static_cast<unsigned long long>(hv.n));
    const bool s_odd = mpz_odd_p(out.s_n.get_mpz_t()) != 0;
    out.parity_ok = (s_odd == out.binom_odd);
    if (!out.parity_ok)
        throw AxiomViolation("parity identity",
                             "s_n = " + out.s_n.get_str() + " disagrees with C(" +
                                 std::to_string(out.h_of_x) + ", " + std::to_string(hv.n) +
                                 ") mod 2");
    out.verdict = out.binom_odd ? ExorbitantVerdict::Main : ExorbitantVerdict::Exorbitant;
    return out;
}

DimensionBounds dimension_count_bounds(int n, int q, int t) {
    if (n < 3) throw DomainError("dimension bounds: need n >= 3");
    if (q < n + 1) throw DomainError("dimension bounds: need q >= n+1");
    if (t < 2) throw DomainError("dimension bounds: need t >= 2");
    DimensionBounds out;
    const long long nn = n, qq = q, tt = t;
    if (qq >= nn + tt - 1) {
        out.bound_a = (nn - 2) * (qq - nn) + 2 * tt - 3;
        out.gap_bound_a = (nn - 2) * (qq - nn);
    } else {
        out.bound_b = nn * (qq - nn) + 1;
        out.gap_bound_b = (nn - 1) * (qq - nn) - nn + 2;
    }
    return out;
}

QCapCheck q_cap_check(int n, int q) {
    if (n < 3) throw DomainError("q cap: need n >= 3");
    QCapCheck out;
    out.lhs = static_cast<long long>(q) - 2;
    out.rhs = static_cast<long long>(n - 1) * (q - n);
    out.holds = (q <= n + 1);
    return out;
}

DoubleCoverInvariants double_cover_invariants(long long chiY, long long qY, long long pgY,
                                              long long h0_adjoint, long long h1_negative) {
    if (chiY < 0 || qY < 0 || pgY < 0 || h0_adjoint < 0 || h1_negative < 0)
        throw DomainError("double cover: inputs must be nonnegative");
    DoubleCoverInvariants out;
    out.chi = chiY + h0_adjoint;
    out.q = qY + h1_negative;
    out.pg = pgY + h0_adjoint;
    out.gap = out.pg - (out.chi + out.q - 1);
    return out;
}

ProductInvariants product_with_genus2_curve(int n, long long pgY, long long chiY, long long qY) {
    if (n < 3) throw DomainError("product construction: need n >= 3");
    if (pgY != 1 || chiY != 0 || qY != n)
        throw DomainError("product construction: factor must have p_g = 1, chi = 0, q = n");
    ProductInvariants out;
    out.dim = n + 1;
    out.q = n + 2;
    out.pg = 2;
    out.gap = 1 - n;
    return out;
}

CompleteIntersectionInvariants complete_intersection_invariants(int n, long long pgY) {
    if (n < 3) throw DomainError("complete intersection: need n >= 3");
    if (pgY < 0) throw DomainError("complete intersection: p_g of the factor must be nonnegative");
    CompleteIntersectionInvariants out;
    out.q = n + 1;
    std::vector<long> h(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= n - 2; ++i)
        h[static_cast<size_t>(i)] = binomial_long(static_cast<unsigned long>(out.q),
                                                  static_cast<unsigned long>(i));
    h[static_cast<size_t>(n - 1)] =
        binomial_long(static_cast<unsigned long>(out.q), static_cast<unsigned long>(n - 1)) + pgY;
    h[static_cast<size_t>(n)] =
        binomial_long(static_cast<unsigned long>(out.q), static_cast<unsigned long>(n));
    out.hv = make_hodge_vector(n, std::move(h));
    ChiGap cg = chi_and_gap(out.hv);
    out.chi = cg.chi;
    out.gap = cg.gap;
    if (out.gap != pgY)
        throw AxiomViolation("complete intersection gap",
                             "expected gap " + std::to_string(pgY) + ", computed " +
                                 std::to_string(out.gap));
    return out;
}

std::string to_string(IrreducibleClass c) {
    switch (c) {
        case IrreducibleClass::Curve: return "curve";
        case IrreducibleClass::SurfaceOddQ: return "surface_odd_q";
        case IrreducibleClass::ThreefoldPlusBoundary: return "threefold_plus_boundary";
        case IrreducibleClass::ReducibleCertificate: return "reducible_certificate";
    }
    throw DomainError("unknown classification");
}

IrreducibleClass classify_irreducible_system(int n, long long q, long long gap) {
    if (n < 1) throw DomainError("classification: need n >= 1");
    if (q < n + 1) throw DomainError("classification: need q >= n+1");
    if (n == 1) return IrreducibleClass::Curve;
    if (n == 2 && q % 2 == 1) return IrreducibleClass::SurfaceOddQ;
    if (n >= 3 && q == n + 1 && gap == 0) return IrreducibleClass::ThreefoldPlusBoundary;
    return IrreducibleClass::ReducibleCertificate;
}

LedgerVerdict build_verdict(const HodgeVector& hv, const LedgerFlags& flags) {
    LedgerVerdict out;
    out.n = hv.n;
    out.q = hv.h[1];
    ChiGap cg = chi_and_gap(hv);
    out.chi = cg.chi;
    out.gap = cg.gap;
    out.ineq_i = (out.gap >= 0);
    out.eq_case = (out.gap == 0);
    out.q_equals_n_plus_1 = (out.q == static_cast<long long>(hv.n) + 1);
    ParityFragment fragment = parity_criterion(hv);
    out.h_of_x = fragment.h_of_x;
    out.s_n = fragment.s_n;
    out.parity_ok = fragment.parity_ok;
    const bool hypotheses_claimed = flags.no_agt_fibration && flags.isolated_zero &&
                                    (hv.n < 3 || out.q_equals_n_plus_1);
    out.exorbitant_verdict =
        hypotheses_claimed ? fragment.verdict : ExorbitantVerdict::OutOfHypotheses;
    out.chi_ge_q_minus_n = (out.chi >= out.q - hv.n);
    out.flags = flags;
    return out;
}

LedgerInput ledger_input_from_json(const json& doc) {
    if (doc.contains("schema_version")) require_schema_version(doc, "ledger input");
    const int n = require_int(doc, "n", "ledger input");
    const json& arr = require_field(doc, "h", "ledger input");
    if (!arr.is_array()) throw SchemaError("ledger input: \"h\" must be an array");
    std::vector<long> h;
    for (const auto& entry : arr) {
        if (!entry.is_number_integer())
            throw SchemaError("ledger input: entries of \"h\" must be integers");
        h.push_back(entry.get<long>());
    }
    LedgerInput out;
    try {
        out.hv = make_hodge_vector(n, std::move(h));
    } catch (const DomainError& e) {
        throw SchemaError(std::string("ledger input: ") + e.what());
    }
    if (doc.contains("flags")) {
        const json& f = doc["flags"];
        if (!f.is_object()) throw SchemaError("ledger input: \"flags\" must be an object");
        if (f.contains("no_agt_fibration"))
            out.flags.no_agt_fibration = require_bool(f, "no_agt_fibration", "ledger flags");
        if (f.contains("isolated_zero"))
            out.flags.isolated_zero = require_bool(f, "isolated_zero", "ledger flags");
    }
    return out;
}

json ledger_input_to_json(const LedgerInput& input) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = input.hv.n;
    doc["h"] = input.hv.h;
    doc["flags"] = {{"no_agt_fibration", input.flags.no_agt_fibration},
                    {"isolated_zero", input.flags.isolated_zero}};
    return doc;
}

json verdict_to_json(const LedgerVerdict& v) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = v.n;
    doc["q"] = v.q;
    doc["chi"] = v.chi;
    doc["gap"] = v.gap;
    doc["ineq_i"] = v.ineq_i;
    doc["eq_case"] = v.eq_case;
    doc["q_equals_n_plus_1"] = v.q_equals_n_plus_1;
    doc["h_of_X"] = v.h_of_x;
    doc["s_n"] = v.s_n.get_str();
    doc["parity_ok"] = v.parity_ok;
    doc["exorbitant_verdict"] = to_string(v.exorbitant_verdict);
    doc["chi_ge_q_minus_n"] = v.chi_ge_q_minus_n;
    doc["flags"] = {{"no_agt_fibration", v.flags.no_agt_fibration},
                    {"isolated_zero", v.flags.isolated_zero}};
    return doc;
}

long parity_sweep(int max_n, long max_entry) {
    long counterexamples = 0;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<long> digits(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<long> h(static_cast<size_t>(n) + 1, 0);
            h[0] = 1;
            for (int j = 1; j <= n; ++j) h[static_cast<size_t>(j)] = digits[static_cast<size_t>(j - 1)];
            HodgeVector hv{n, std::move(h)};
            const mpz_class s = s_n_coefficient(hv);
            const bool s_odd = mpz_odd_p(s.get_mpz_t()) != 0;
            const bool b_odd = binomial_is_odd(static_cast<unsigned long long>(h_of_x(hv)),
                                               static_cast<unsigned long long>(n));
            if (s_odd != b_odd) ++counterexamples;
            int pos = 0;
            while (pos < n && digits[static_cast<size_t>(pos)] == max_entry) {
                digits[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == n) break;
            ++digits[static_cast<size_t>(pos)];
        }
    }
    return counterexamples;
}

}  // namespace para
