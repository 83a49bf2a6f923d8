#include "para/lifting.hpp"

#include <algorithm>
#include <string>

#include "para/errors.hpp"

namespace para {

namespace {

constexpr const char* kNormalizationTag =
    "sigma solves d_1(sigma) = v; tau_2 solves r_2(tau_2) = -sigma^2/2; for n >= 3, "
    "tau_n solves r_n(tau_n) = -(sigma*r_{n-1}(tau_{n-1}) + sigma^n/n)";

Vec unit_vector(int dim, int index) {
    Vec e(static_cast<size_t>(dim), GaussianRational(0));
    e[static_cast<size_t>(index)] = GaussianRational(1);
    return e;
}

const ExactMatrix& mul_matrix(const SectionAlgebraModel& m, int a, int b) {
    auto it = m.mul.find({a, b});
    if (it == m.mul.end())
        throw DomainError("missing product map Q_" + std::to_string(a) + " x Q_" +
                          std::to_string(b));
    return it->second;
}

void check_shapes(const SectionAlgebraModel& m) {
    const size_t want = static_cast<size_t>(m.n_max) + 1;
    if (m.n_max < 1) throw DomainError("model: truncation order must be at least 1");
    if (m.s_dim.size() != want || m.q_dim.size() != want || m.h1_dim.size() != want ||
        m.r.size() != want || m.d.size() != want || m.mult_s.size() != want)
        throw DomainError("model: per-order tables must have n_max+1 entries");
    for (int n = 1; n <= m.n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        if (m.r[sn].rows() != m.q_dim[sn] || m.r[sn].cols() != m.s_dim[sn])
            throw DomainError("model: restriction map at order " + std::to_string(n) +
                              " has the wrong shape");
        if (m.d[sn].rows() != m.h1_dim[sn - 1] || m.d[sn].cols() != m.q_dim[sn])
            throw DomainError("model: connecting map at order " + std::to_string(n) +
                              " has the wrong shape");
        if (m.mult_s[sn].rows() != m.h1_dim[sn] || m.mult_s[sn].cols() != m.h1_dim[sn - 1])
            throw DomainError("model: section multiplication at order " + std::to_string(n) +
                              " has the wrong shape");
    }
    const int h1_1 = (m.n_max >= 1) ? m.h1_dim[1] : 0;
    if (m.cup_v_s.rows() != h1_1 || m.cup_v_s.cols() != m.s_dim[1])
        throw DomainError("model: cup_v_s has the wrong shape");
    if (m.cup_v_h.rows() != m.h2_dim || m.cup_v_h.cols() != h1_1)
        throw DomainError("model: cup_v_h has the wrong shape");
    if (static_cast<int>(m.base_s.size()) != m.s_dim[1])
        throw DomainError("model: base section has the wrong length");
    if (static_cast<int>(m.v.size()) != m.h1_dim[0])
        throw DomainError("model: direction v has the wrong length");
    for (int a = 1; a < m.n_max; ++a)
        for (int b = 1; a + b <= m.n_max; ++b) {
            const ExactMatrix& t = mul_matrix(m, a, b);
            const auto sa = static_cast<size_t>(a), sb = static_cast<size_t>(b);
            if (t.rows() != m.q_dim[sa + sb] || t.cols() != m.q_dim[sa] * m.q_dim[sb])
                throw DomainError("model: product map Q_" + std::to_string(a) + " x Q_" +
                                  std::to_string(b) + " has the wrong shape");
        }
}

}  // namespace

Vec mul_apply(const SectionAlgebraModel& m, int a, int b, const Vec& x, const Vec& y) {
    const auto qa = static_cast<size_t>(m.q_dim[static_cast<size_t>(a)]);
    const auto qb = static_cast<size_t>(m.q_dim[static_cast<size_t>(b)]);
    if (x.size() != qa || y.size() != qb)
        throw DomainError("product arguments have the wrong lengths");
    Vec tensor(qa * qb, GaussianRational(0));
    for (size_t i = 0; i < qa; ++i)
        for (size_t j = 0; j < qb; ++j) tensor[i * qb + j] = x[i] * y[j];
    return mul_matrix(m, a, b).apply(tensor);
}

void validate_model(const SectionAlgebraModel& m) {
    check_shapes(m);

    if (!is_zero_vec(m.r[1].apply(m.base_s)))
        throw AxiomViolation("base section", "r_1(base_s) != 0");

    for (int n = 1; n <= m.n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        if (!(m.d[sn] * m.r[sn]).is_zero())
            throw AxiomViolation("exactness at Q_" + std::to_string(n),
                                 "d_n composed with r_n is nonzero");
        if (m.r[sn].rank() != m.q_dim[sn] - m.d[sn].rank())
            throw AxiomViolation("exactness at Q_" + std::to_string(n),
                                 "ker d_n is strictly larger than im r_n");
    }

    if (!(m.mult_s[1] * m.d[1]).is_zero())
        throw AxiomViolation("exactness at H1_0", "mult_s_1 composed with d_1 is nonzero");
    if (m.d[1].rank() != m.h1_dim[0] - m.mult_s[1].rank())
        throw AxiomViolation("exactness at H1_0",
                             "ker mult_s_1 is strictly larger than im d_1");

    if (!(m.cup_v_h * m.cup_v_s).is_zero())
        throw AxiomViolation("1-transversality", "cup_v_h composed with cup_v_s is nonzero");
    if (m.cup_v_s.rank() != m.h1_dim[1] - m.cup_v_h.rank())
        throw AxiomViolation("1-transversality",
                             "ker cup_v_h is strictly larger than im cup_v_s");

    for (int a = 1; a < m.n_max; ++a)
        for (int b = a; a + b <= m.n_max; ++b)
            for (int i = 0; i < m.q_dim[static_cast<size_t>(a)]; ++i)
                for (int j = 0; j < m.q_dim[static_cast<size_t>(b)]; ++j) {
                    Vec ei = unit_vector(m.q_dim[static_cast<size_t>(a)], i);
                    Vec ej = unit_vector(m.q_dim[static_cast<size_t>(b)], j);
                    if (mul_apply(m, a, b, ei, ej) != mul_apply(m, b, a, ej, ei))
                        throw AxiomViolation("product commutativity",
                                             "orders (" + std::to_string(a) + "," +
                                                 std::to_string(b) + "), basis (" +
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                 ")");
                }

    for (int a = 1; a + 2 <= m.n_max; ++a)
        for (int b = 1; a + b + 1 <= m.n_max; ++b)
            for (int c = 1; a + b + c <= m.n_max; ++c)
                for (int i = 0; i < m.q_dim[static_cast<size_t>(a)]; ++i)
                    for (int j = 0; j < m.q_dim[static_cast<size_t>(b)]; ++j)
                        for (int k = 0; k < m.q_dim[static_cast<size_t>(c)]; ++k) {
                            Vec ei = unit_vector(m.q_dim[static_cast<size_t>(a)], i);
                            Vec ej = unit_vector(m.q_dim[static_cast<size_t>(b)], j);
                            Vec ek = unit_vector(m.q_dim[static_cast<size_t>(c)], k);
                            Vec left = mul_apply(m, a + b, c, mul_apply(m, a, b, ei, ej), ek);
                            Vec right = mul_apply(m, a, b + c, ei, mul_apply(m, b, c, ej, ek));
                            if (left != right)
                                throw AxiomViolation(
                                    "product associativity",
                                    "orders (" + std::to_string(a) + "," + std::to_string(b) +
                                        "," + std::to_string(c) + "), basis (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
                        }

    if (m.n_max >= 2 && is_zero_vec(m.mult_s[1].apply(m.v))) {
        std::optional<Vec> sigma0 = m.d[1].solve(m.v);
        if (!sigma0)
            throw AxiomViolation("exactness at H1_0",
                                 "mult_s_1(v) = 0 but v is not in the image of d_1");
        for (int i = 0; i < m.s_dim[1]; ++i) {
            Vec xi = unit_vector(m.s_dim[1], i);
            Vec lhs = m.d[2].apply(mul_apply(m, 1, 1, m.r[1].apply(xi), *sigma0));
            if (lhs != m.cup_v_s.apply(xi))
                throw AxiomViolation("product compatibility",
                                     "d_2(r_1(e_" + std::to_string(i) +
                                         ") * sigma) != cup_v_s(e_" + std::to_string(i) + ")");
            for (int j = 0; j < m.s_dim[1]; ++j) {
                Vec eta = unit_vector(m.s_dim[1], j);
                if (!is_zero_vec(
                        m.d[2].apply(mul_apply(m, 1, 1, m.r[1].apply(xi), m.r[1].apply(eta)))))
                    throw AxiomViolation("product compatibility",
                                         "d_2(r_1(e_" + std::to_string(i) + ") * r_1(e_" +
                                             std::to_string(j) + ")) != 0");
            }
        }
    }
}

std::optional<Vec> solve_sigma(const SectionAlgebraModel& m) {
    if (!is_zero_vec(m.mult_s[1].apply(m.v))) return std::nullopt;
    std::optional<Vec> sigma = m.d[1].solve(m.v);
    if (!sigma)
        throw AxiomViolation("exactness at H1_0",
                             "mult_s_1(v) = 0 but v is not in the image of d_1");
    return sigma;
}

SecondOrderResult second_order_step(const SectionAlgebraModel& m, const Vec& sigma) {
    if (m.n_max < 2) throw DomainError("order-2 step needs truncation order at least 2");
    SecondOrderResult out;
    Vec sigma_sq = mul_apply(m, 1, 1, sigma, sigma);
    out.ob2 = m.d[2].apply(sigma_sq);
    if (!is_zero_vec(m.cup_v_h.apply(out.ob2)))
        throw AxiomViolation("order-2 compatibility",
                             "cup_v_h applied to d_2(sigma^2) is nonzero");
    std::optional<Vec> two_xi = m.cup_v_s.solve(out.ob2);
    if (!two_xi)
        throw ObstructionError(2, "d_2(sigma^2) is not in the image of cup_v_s");
    out.xi = scale(GaussianRational(1, 2), *two_xi);
    out.sigma_corrected = sigma - m.r[1].apply(out.xi);
    Vec corrected_sq = mul_apply(m, 1, 1, out.sigma_corrected, out.sigma_corrected);
    if (!is_zero_vec(m.d[2].apply(corrected_sq)))
        throw AxiomViolation("order-2 compatibility",
                             "the corrected square still has a nonzero class");
    std::optional<Vec> tau2 = m.r[2].solve(scale(GaussianRational(-1, 2), corrected_sq));
    if (!tau2)
        throw AxiomViolation("exactness at Q_2",
                             "-sigma^2/2 has zero class but is not in the image of r_2");
    out.tau2 = *tau2;
    return out;
}

Vec higher_order_step(const SectionAlgebraModel& m, LiftState& state, int n) {
    if (n < 3) throw DomainError("higher-order step starts at order 3");
    if (n > m.n_max) throw DomainError("order exceeds the model truncation");
    const auto sn = static_cast<size_t>(n);
    if (state.sigma_pow.size() != sn || state.p.size() != sn)
        throw DomainError("lift state is not aligned with order " + std::to_string(n));
    Vec sigma_n = mul_apply(m, 1, n - 1, state.sigma, state.sigma_pow[sn - 1]);
    Vec q_n = mul_apply(m, 1, n - 1, state.sigma, state.p[sn - 1]) +
              scale(GaussianRational(1, n), sigma_n);
    if (!is_zero_vec(m.d[sn].apply(q_n)))
        throw ObstructionError(n, "the order-" + std::to_string(n) +
                                      " class has nonzero connecting image");
    std::optional<Vec> tau_n = m.r[sn].solve(scale(GaussianRational(-1), q_n));
    if (!tau_n)
        throw AxiomViolation("exactness at Q_" + std::to_string(n),
                             "the order class vanishes but is not in the image of r_n");
    state.sigma_pow.push_back(std::move(sigma_n));
    state.p.push_back(m.r[sn].apply(*tau_n));
    return *tau_n;
}

LiftResult lift_full_from_sigma(const SectionAlgebraModel& m, const Vec& sigma, int N) {
    if (N < 1 || N > m.n_max) throw DomainError("lift order must be between 1 and n_max");
    if (m.d[1].apply(sigma) != m.v) throw DomainError("supplied sigma does not solve d_1(sigma) = v");

    LiftResult result;
    result.normalization = kNormalizationTag;
    result.sigma = sigma;
    result.order_achieved = 1;
    result.taus.assign(static_cast<size_t>(N) + 1, Vec{});
    if (N == 1) return result;

    SecondOrderResult second = second_order_step(m, sigma);
    result.sigma = second.sigma_corrected;
    result.taus[2] = second.tau2;
    result.order_achieved = 2;

    LiftState state;
    state.sigma = second.sigma_corrected;
    state.sigma_pow.assign(1, Vec{});  // index 0 unused
    state.sigma_pow.push_back(state.sigma);
    state.sigma_pow.push_back(mul_apply(m, 1, 1, state.sigma, state.sigma));
    state.p.assign(2, Vec{});  // indices 0,1 unused
    state.p.push_back(m.r[2].apply(second.tau2));

    LiftTraceEntry entry2;
    entry2.order = 2;
    entry2.q_class = scale(GaussianRational(1, 2), state.sigma_pow[2]);
    entry2.obstruction = m.cup_v_h.apply(second.ob2);
    entry2.solution = second.tau2;
    entry2.xi = second.xi;
    result.trace.push_back(std::move(entry2));

    for (int n = 3; n <= N; ++n) {
        Vec tau_n = higher_order_step(m, state, n);
        LiftTraceEntry entry;
        entry.order = n;
        entry.q_class = scale(GaussianRational(-1), state.p[static_cast<size_t>(n)]);
        entry.obstruction = Vec(static_cast<size_t>(m.h1_dim[static_cast<size_t>(n) - 1]),
                                GaussianRational(0));
        entry.solution = tau_n;
        result.trace.push_back(std::move(entry));
        result.taus[static_cast<size_t>(n)] = std::move(tau_n);
        result.order_achieved = n;
    }
    return result;
}

LiftResult lift_full(const SectionAlgebraModel& m, int N) {
    std::optional<Vec> sigma = solve_sigma(m);
    if (!sigma)
        throw NoFirstOrderDeformation(
            "multiplication by the base section does not annihilate the direction v");
    return lift_full_from_sigma(m, *sigma, N);
}

VerifyOutcome verify_lift(const SectionAlgebraModel& m, const LiftResult& result) {
    const int N = result.order_achieved;
    if (N < 1 || N > m.n_max) throw DomainError("lift result order is out of range");
    if (result.taus.size() < static_cast<size_t>(N) + 1)
        throw DomainError("lift result is missing tau entries");
    if (m.d[1].apply(result.sigma) != m.v) return {false, 1};

    Vec power = result.sigma;
    Vec prev_p;
    for (int n = 2; n <= N; ++n) {
        const auto sn = static_cast<size_t>(n);
        if (static_cast<int>(result.taus[sn].size()) != m.s_dim[sn])
            throw DomainError("tau at order " + std::to_string(n) + " has the wrong length");
        power = mul_apply(m, 1, n - 1, result.sigma, power);
        Vec p_n = m.r[sn].apply(result.taus[sn]);
        Vec combination = p_n + scale(GaussianRational(1, n), power);
        if (n >= 3) combination = combination + mul_apply(m, 1, n - 1, result.sigma, prev_p);
        if (!is_zero_vec(combination)) return {false, n};
        prev_p = std::move(p_n);
    }
    return {true, -1};
}

namespace {

ExactMatrix row_matrix(const std::vector<GaussianRational>& entries) {
    ExactMatrix m(1, static_cast<int>(entries.size()));
    for (size_t j = 0; j < entries.size(); ++j) m.at(0, static_cast<int>(j)) = entries[j];
    return m;
}

ExactMatrix column_matrix(const std::vector<GaussianRational>& entries) {
    ExactMatrix m(static_cast<int>(entries.size()), 1);
    for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
    return m;
}

ExactMatrix matrix_2x4(const std::array<std::array<int, 4>, 2>& rows) {
    ExactMatrix m(2, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = GaussianRational(rows[size_t(i)][size_t(j)]);
    return m;
}

void fill_mul(SectionAlgebraModel& m, const ExactMatrix& tensor) {
    for (int a = 1; a < m.n_max; ++a)
        for (int b = 1; a + b <= m.n_max; ++b) m.mul[{a, b}] = tensor;
}

}  // namespace

SectionAlgebraModel build_elliptic_model(int n_max) {
    if (n_max < 2) throw DomainError("elliptic model needs truncation order at least 2");
    SectionAlgebraModel m;
    m.n_max = n_max;
    const auto want = static_cast<size_t>(n_max) + 1;
    m.s_dim.assign(want, 0);
    m.q_dim.assign(want, 1);
    m.q_dim[0] = 0;
    m.h1_dim.assign(want, 0);
    m.h1_dim[0] = 1;
    m.h2_dim = 0;
    m.r.assign(want, ExactMatrix(0, 0));
    m.d.assign(want, ExactMatrix(0, 0));
    m.mult_s.assign(want, ExactMatrix(0, 0));
    for (int n = 1; n <= n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        m.s_dim[sn] = n;
        // Basis function 1 is the constant; basis function k >= 2 has pole
        // order k, with top Laurent coefficient 1 for even k and -2 for odd
        // k (the Weierstrass-derivative convention).
        ExactMatrix r_n(1, n);
        if (n >= 2) r_n.at(0, n - 1) = GaussianRational(n % 2 == 0 ? 1 : -2);
        m.r[sn] = r_n;
        m.d[sn] = ExactMatrix(m.h1_dim[sn - 1], 1);
        if (n == 1) m.d[1].at(0, 0) = GaussianRational(1);
        m.mult_s[sn] = ExactMatrix(m.h1_dim[sn], m.h1_dim[sn - 1]);
    }
    m.cup_v_s = ExactMatrix(0, 1);
    m.cup_v_h = ExactMatrix(0, 0);
    fill_mul(m, ExactMatrix::identity(1));
    m.base_s = Vec{GaussianRational(1)};
    m.v = Vec{GaussianRational(1)};
    return m;
}

SectionAlgebraModel build_synthetic_model(int n_max) {
    if (n_max < 3) throw DomainError("synthetic model needs truncation order at least 3");
    SectionAlgebraModel m;
    m.n_max = n_max;
    const auto want = static_cast<size_t>(n_max) + 1;
    m.s_dim.assign(want, 2);
    m.s_dim[0] = 0;
    m.s_dim[1] = 1;
    m.s_dim[2] = 1;
    m.q_dim.assign(want, 2);
    m.q_dim[0] = 0;
    m.h1_dim.assign(want, 0);
    m.h1_dim[0] = 1;
    m.h1_dim[1] = 1;
    m.h2_dim = 0;
    m.r.assign(want, ExactMatrix(0, 0));
    m.d.assign(want, ExactMatrix(0, 0));
    m.mult_s.assign(want, ExactMatrix(0, 0));
    for (int n = 1; n <= n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        if (n <= 2)
            m.r[sn] = column_matrix({GaussianRational(1), GaussianRational(0)});
        else
            m.r[sn] = ExactMatrix::identity(2);
        m.d[sn] = ExactMatrix(m.h1_dim[sn - 1], 2);
        if (n <= 2) m.d[sn].at(0, 1) = GaussianRational(1);
        m.mult_s[sn] = ExactMatrix(m.h1_dim[sn], m.h1_dim[sn - 1]);
    }
    m.cup_v_s = ExactMatrix::identity(1);
    m.cup_v_h = ExactMatrix(0, 1);
    // x*x = x, x*y = y*x = y, y*y = x + 2y.
    fill_mul(m, matrix_2x4({{{1, 0, 0, 1}, {0, 1, 1, 2}}}));
    m.base_s = Vec{GaussianRational(0)};
    m.v = Vec{GaussianRational(1)};
    return m;
}

SectionAlgebraModel build_obstructed_order2_model(int n_max) {
    SectionAlgebraModel m = build_synthetic_model(n_max);
    m.cup_v_s = ExactMatrix(1, 1);  // zero map: the correction has nowhere to come from
    return m;
}

SectionAlgebraModel build_obstructed_order3_model(int n_max) {
    if (n_max < 3) throw DomainError("obstructed order-3 model needs truncation order at least 3");
    SectionAlgebraModel m;
    m.n_max = n_max;
    const auto want = static_cast<size_t>(n_max) + 1;
    m.s_dim.assign(want, 2);
    m.s_dim[0] = 0;
    m.s_dim[1] = 1;
    m.s_dim[2] = 1;
    m.s_dim[3] = 1;
    m.q_dim.assign(want, 2);
    m.q_dim[0] = 0;
    m.h1_dim.assign(want, 0);
    m.h1_dim[0] = 1;
    m.h1_dim[1] = 1;
    m.h1_dim[2] = 1;
    m.h2_dim = 0;
    m.r.assign(want, ExactMatrix(0, 0));
    m.d.assign(want, ExactMatrix(0, 0));
    m.mult_s.assign(want, ExactMatrix(0, 0));
    for (int n = 1; n <= n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        switch (n) {
            case 1: m.r[sn] = column_matrix({GaussianRational(0), GaussianRational(1)}); break;
            case 2: m.r[sn] = column_matrix({GaussianRational(1), GaussianRational(0)}); break;
            case 3: m.r[sn] = column_matrix({GaussianRational(0), GaussianRational(1)}); break;
            default: m.r[sn] = ExactMatrix::identity(2); break;
        }
        m.d[sn] = ExactMatrix(m.h1_dim[sn - 1], 2);
        if (n == 1) m.d[1].at(0, 0) = GaussianRational(1);
        if (n == 2) m.d[2].at(0, 1) = GaussianRational(1);
        if (n == 3) m.d[3].at(0, 0) = GaussianRational(1);
        m.mult_s[sn] = ExactMatrix(m.h1_dim[sn], m.h1_dim[sn - 1]);
    }
    m.cup_v_s = ExactMatrix(1, 1);  // zero: the model is deliberately non-transversal
    m.cup_v_h = ExactMatrix(0, 1);
    // Exterior algebra on one odd generator over Q[x]: y*y = 0.
    fill_mul(m, matrix_2x4({{{1, 0, 0, 0}, {0, 1, 1, 0}}}));
    m.base_s = Vec{GaussianRational(0)};
    m.v = Vec{GaussianRational(1)};
    return m;
}

SectionAlgebraModel build_no_first_order_model(int n_max) {
    if (n_max < 2) throw DomainError("fixture needs truncation order at least 2");
    SectionAlgebraModel m;
    m.n_max = n_max;
    const auto want = static_cast<size_t>(n_max) + 1;
    m.s_dim.assign(want, 1);
    m.s_dim[0] = 0;
    m.q_dim.assign(want, 1);
    m.q_dim[0] = 0;
    m.h1_dim.assign(want, 0);
    m.h1_dim[0] = 1;
    m.h1_dim[1] = 1;
    m.h2_dim = 0;
    m.r.assign(want, ExactMatrix(0, 0));
    m.d.assign(want, ExactMatrix(0, 0));
    m.mult_s.assign(want, ExactMatrix(0, 0));
    for (int n = 1; n <= n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        m.r[sn] = ExactMatrix::identity(1);
        m.d[sn] = ExactMatrix(m.h1_dim[sn - 1], 1);
        m.mult_s[sn] = ExactMatrix(m.h1_dim[sn], m.h1_dim[sn - 1]);
    }
    m.mult_s[1] = ExactMatrix::identity(1);  // v survives cup with s: no lift can start
    m.cup_v_s = ExactMatrix::identity(1);
    m.cup_v_h = ExactMatrix(0, 1);
    fill_mul(m, ExactMatrix::identity(1));
    m.base_s = Vec{GaussianRational(0)};
    m.v = Vec{GaussianRational(1)};
    return m;
}

SectionAlgebraModel build_bad_exactness_model(int n_max) {
    SectionAlgebraModel m = build_no_first_order_model(n_max);
    m.mult_s[1] = ExactMatrix(1, 1);  // zero: ker mult_s_1 strictly exceeds im d_1
    return m;
}

json lift_model_to_json(const SectionAlgebraModel& m) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n_max"] = m.n_max;
    doc["s_dim"] = std::vector<int>(m.s_dim.begin() + 1, m.s_dim.end());
    doc["q_dim"] = std::vector<int>(m.q_dim.begin() + 1, m.q_dim.end());
    doc["h1_dim"] = m.h1_dim;
    doc["h2_dim"] = m.h2_dim;
    json r = json::array(), d = json::array(), mult = json::array();
    for (int n = 1; n <= m.n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        r.push_back(matrix_to_json(m.r[sn]));
        d.push_back(matrix_to_json(m.d[sn]));
        mult.push_back(matrix_to_json(m.mult_s[sn]));
    }
    doc["r"] = std::move(r);
    doc["d"] = std::move(d);
    doc["mult_s"] = std::move(mult);
    doc["cup_v_s"] = matrix_to_json(m.cup_v_s);
    doc["cup_v_h"] = matrix_to_json(m.cup_v_h);
    json mul = json::array();
    for (const auto& [key, tensor] : m.mul)
        mul.push_back(json{{"a", key.first}, {"b", key.second}, {"matrix", matrix_to_json(tensor)}});
    doc["mul"] = std::move(mul);
    doc["base_s"] = vec_to_json(m.base_s);
    doc["v"] = vec_to_json(m.v);
    return doc;
}

SectionAlgebraModel lift_model_from_json(const json& doc) {
    require_schema_version(doc, "lift model");
    SectionAlgebraModel m;
    m.n_max = require_int(doc, "n_max", "lift model");
    if (m.n_max < 1) throw SchemaError("lift model: n_max must be at least 1");
    const auto want = static_cast<size_t>(m.n_max) + 1;

    auto read_dims = [&](const char* key, size_t expected, int offset) {
        const json& arr = require_field(doc, key, "lift model");
        if (!arr.is_array() || arr.size() != expected)
            throw SchemaError(std::string("lift model: \"") + key + "\" must be an array of " +
                              std::to_string(expected) + " integers");
        std::vector<int> out(expected + static_cast<size_t>(offset), 0);
        for (size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_integer() || arr[i].get<int>() < 0)
                throw SchemaError(std::string("lift model: \"") + key +
                                  "\" entries must be nonnegative integers");
            out[i + static_cast<size_t>(offset)] = arr[i].get<int>();
        }
        return out;
    };
    m.s_dim = read_dims("s_dim", static_cast<size_t>(m.n_max), 1);
    m.q_dim = read_dims("q_dim", static_cast<size_t>(m.n_max), 1);
    m.h1_dim = read_dims("h1_dim", want, 0);
    m.h2_dim = require_int(doc, "h2_dim", "lift model");
    if (m.h2_dim < 0) throw SchemaError("lift model: h2_dim must be nonnegative");

    auto read_maps = [&](const char* key, auto row_dim, auto col_dim) {
        const json& arr = require_field(doc, key, "lift model");
        if (!arr.is_array() || arr.size() != static_cast<size_t>(m.n_max))
            throw SchemaError(std::string("lift model: \"") + key + "\" must list " +
                              std::to_string(m.n_max) + " matrices");
        std::vector<ExactMatrix> out(want, ExactMatrix(0, 0));
        for (int n = 1; n <= m.n_max; ++n) {
            const std::string what = std::string("lift model ") + key + "[" + std::to_string(n) + "]";
            ExactMatrix mat = matrix_from_json(arr[static_cast<size_t>(n - 1)], what, col_dim(n));
            if (mat.rows() != row_dim(n) || mat.cols() != col_dim(n))
                throw SchemaError(what + ": wrong shape");
            out[static_cast<size_t>(n)] = std::move(mat);
        }
        return out;
    };
    m.r = read_maps(
        "r", [&](int n) { return m.q_dim[static_cast<size_t>(n)]; },
        [&](int n) { return m.s_dim[static_cast<size_t>(n)]; });
    m.d = read_maps(
        "d", [&](int n) { return m.h1_dim[static_cast<size_t>(n) - 1]; },
        [&](int n) { return m.q_dim[static_cast<size_t>(n)]; });
    m.mult_s = read_maps(
        "mult_s", [&](int n) { return m.h1_dim[static_cast<size_t>(n)]; },
        [&](int n) { return m.h1_dim[static_cast<size_t>(n) - 1]; });

    m.cup_v_s = matrix_from_json(require_field(doc, "cup_v_s", "lift model"), "lift model cup_v_s",
                                 m.s_dim[1]);
    m.cup_v_h = matrix_from_json(require_field(doc, "cup_v_h", "lift model"), "lift model cup_v_h",
                                 m.h1_dim[1]);

    const json& mul = require_field(doc, "mul", "lift model");
    if (!mul.is_array()) throw SchemaError("lift model: \"mul\" must be an array");
    for (const auto& entry : mul) {
        const int a = require_int(entry, "a", "lift model mul entry");
        const int b = require_int(entry, "b", "lift model mul entry");
        if (a < 1 || b < 1 || a + b > m.n_max)
            throw SchemaError("lift model: product orders out of range");
        const std::string what =
            "lift model mul(" + std::to_string(a) + "," + std::to_string(b) + ")";
        m.mul[{a, b}] = matrix_from_json(
            require_field(entry, "matrix", what), what,
            m.q_dim[static_cast<size_t>(a)] * m.q_dim[static_cast<size_t>(b)]);
    }

    m.base_s = vec_from_json(require_field(doc, "base_s", "lift model"), "lift model base_s");
    m.v = vec_from_json(require_field(doc, "v", "lift model"), "lift model v");
    try {
        check_shapes(m);
    } catch (const DomainError& e) {
        throw SchemaError(std::string("lift model: ") + e.what());
    }
    return m;
}

json lift_result_to_json(const LiftResult& r) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["order_achieved"] = r.order_achieved;
    doc["normalization"] = r.normalization;
    doc["sigma"] = vec_to_json(r.sigma);
    json taus = json::array();
    for (size_t n = 2; n < r.taus.size(); ++n) taus.push_back(vec_to_json(r.taus[n]));
    doc["taus"] = std::move(taus);
    json trace = json::array();
    for (const auto& entry : r.trace) {
        json e;
        e["order"] = entry.order;
        e["q_class"] = vec_to_json(entry.q_class);
        e["obstruction"] = vec_to_json(entry.obstruction);
        e["solution"] = vec_to_json(entry.solution);
        e["xi"] = entry.xi.empty() ? json(nullptr) : vec_to_json(entry.xi);
        trace.push_back(std::move(e));
    }
    doc["trace"] = std::move(trace);
    return doc;
}

}  // namespace para
