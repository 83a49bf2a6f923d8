#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "para/errors.hpp"
#include "para/matrix.hpp"
#include "para/poly.hpp"
#include "para/rational.hpp"
#include "para/rng.hpp"
#include "para/series.hpp"

using namespace para;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(num, den); }
GaussianRational qi(long re, long im) { return GaussianRational(mpq_class(re), mpq_class(im)); }

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<Vec> vrows;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(q(x));
        vrows.push_back(v);
    }
    return matrix_from_rows(vrows);
}

// ---- independent oracles ---------------------------------------------------
// These deliberately avoid the library's elimination code paths: the
// determinant is the full Leibniz sum, the rank enumerates minors, and
// the Pfaffian uses the classical first-row expansion.

GaussianRational oracle_det(const ExactMatrix& m) {
    const int n = m.rows();
    REQUIRE(m.cols() == n);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    GaussianRational total(0);
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[size_t(a)] > perm[size_t(b)]) ++inversions;
        GaussianRational prod(1);
        for (int r = 0; r < n; ++r) prod *= m.at(r, perm[size_t(r)]);
        total += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    if (k == 0) {
        out.push_back({});
        return;
    }
    for (;;) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[size_t(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[size_t(i)];
        for (int j = i + 1; j < k; ++j) pick[size_t(j)] = pick[size_t(j - 1)] + 1;
    }
}

int oracle_rank(const ExactMatrix& m) {
    const int maxk = std::min(m.rows(), m.cols());
    for (int k = maxk; k >= 1; --k) {
        std::vector<std::vector<int>> row_sets, col_sets;
        subsets_of_size(m.rows(), k, row_sets);
        subsets_of_size(m.cols(), k, col_sets);
        for (const auto& rs : row_sets) {
            for (const auto& cs : col_sets) {
                ExactMatrix sub(k, k);
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) sub.at(a, b) = m.at(rs[size_t(a)], cs[size_t(b)]);
                if (!oracle_det(sub).is_zero()) return k;
            }
        }
    }
    return 0;
}

GaussianRational oracle_pfaffian_on(const ExactMatrix& a, const std::vector<int>& idx) {
    if (idx.empty()) return GaussianRational(1);
    if (idx.size() % 2 != 0) return GaussianRational(0);
    GaussianRational total(0);
    for (size_t j = 1; j < idx.size(); ++j) {
        std::vector<int> rest;
        for (size_t t = 1; t < idx.size(); ++t)
            if (t != j) rest.push_back(idx[t]);
        GaussianRational term = a.at(idx[0], idx[j]) * oracle_pfaffian_on(a, rest);
        total += (j % 2 == 1) ? term : -term;
    }
    return total;
}

GaussianRational oracle_pfaffian(const ExactMatrix& a) {
    std::vector<int> idx(static_cast<size_t>(a.rows()));
    std::iota(idx.begin(), idx.end(), 0);
    return oracle_pfaffian_on(a, idx);
}

}  // namespace

// ---- Q(i) scalar ------------------------------------------------------------

TEST_CASE("gaussian rational arithmetic matches hand computation") {
    GaussianRational a(mpq_class(1, 2), mpq_class(3, 4));  // 1/2 + 3/4 i
    GaussianRational b = qi(2, -1);                        // 2 - i
    GaussianRational prod = a * b;
    CHECK(prod == GaussianRational(mpq_class(7, 4), mpq_class(1)));

    CHECK(qi(3, 4).inverse() == GaussianRational(mpq_class(3, 25), mpq_class(-4, 25)));
    CHECK(qi(3, 4) * qi(3, 4).inverse() == q(1));
    CHECK((a / a) == q(1));
    CHECK(qi(3, 4).norm() == mpq_class(25));
    CHECK(qi(3, -4) == qi(3, 4).conjugate());
    CHECK_THROWS_AS(q(0).inverse(), DomainError);
    CHECK_THROWS_AS(GaussianRational(1, 0), DomainError);
    CHECK(q(-6, -4) == q(3, 2));  // canonicalized sign and gcd
}

TEST_CASE("canonical string form round-trips") {
    const char* forms[] = {"0",       "3",        "-2",        "1/2",      "-5/3",
                           "i",       "-i",       "2i",        "-1/2i",    "3+4i",
                           "3-4i",    "-3+4i",    "1/2-3i",    "-5/3+7/2i", "2/7-9/5i"};
    for (const char* s : forms) {
        GaussianRational x = GaussianRational::parse(s);
        CHECK(x.str() == s);
        CHECK(GaussianRational::parse(x.str()) == x);
    }
    CHECK(GaussianRational::parse("+i") == GaussianRational::i());
    CHECK(GaussianRational::parse(" 1/2 + 3i ") == GaussianRational(mpq_class(1, 2), mpq_class(3)));

    CHECK_THROWS_AS(GaussianRational::parse(""), SchemaError);
    CHECK_THROWS_AS(GaussianRational::parse("abc"), SchemaError);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), SchemaError);
    CHECK_THROWS_AS(GaussianRational::parse("1+2j"), SchemaError);
    CHECK_THROWS_AS(GaussianRational::parse("1+"), SchemaError);
    CHECK_THROWS_AS(GaussianRational::parse("2.5"), SchemaError);
}

// ---- matrices ---------------------------------------------------------------

TEST_CASE("rref is deterministic and canonical") {
    ExactMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    auto ech = m.rref();
    CHECK(ech.rank == 2);
    CHECK(ech.pivot_cols == std::vector<int>{0, 1});
    ExactMatrix expected = from_rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}});
    CHECK(ech.mat == expected);

    // Identical call, identical bytes.
    CHECK(m.rref().mat == ech.mat);
}

TEST_CASE("rank agrees with the minor-enumeration oracle") {
    SampleStream rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = int(rng.int_in(1, 4));
        const int cols = int(rng.int_in(1, 4));
        ExactMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = rng.small_int_value(2);
        CHECK(m.rank() == oracle_rank(m));
    }
}

TEST_CASE("determinant agrees with the Leibniz oracle") {
    SampleStream rng(11);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            ExactMatrix m(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m.at(r, c) = rng.small_int_value(2);
            CHECK(m.det() == oracle_det(m));
        }
    }
    CHECK(ExactMatrix::identity(4).det() == q(1));
}

TEST_CASE("kernel basis is the reduced-echelon basis of the kernel") {
    ExactMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    CHECK(ker[0] == Vec{q(1), q(0), q(-1, 3)});
    CHECK(ker[1] == Vec{q(0), q(1), q(-2, 3)});
    for (const auto& v : ker) CHECK(is_zero_vec(m.apply(v)));

    // rank-nullity on random samples
    SampleStream rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = int(rng.int_in(1, 5));
        const int cols = int(rng.int_in(1, 5));
        ExactMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a.at(r, c) = rng.small_int_value(2);
        auto basis = a.kernel_basis();
        CHECK(int(basis.size()) + a.rank() == cols);
        for (const auto& v : basis) CHECK(is_zero_vec(a.apply(v)));
    }
}

TEST_CASE("image basis spans the column space canonically") {
    ExactMatrix m = from_rows({{1, 2}, {2, 4}, {3, 6}});
    auto im = m.image_basis();
    REQUIRE(im.size() == 1);
    CHECK(im[0] == Vec{q(1), q(2), q(3)});
}

TEST_CASE("solve returns the echelon-canonical particular solution") {
    ExactMatrix a = from_rows({{1, 2}, {3, 4}});
    auto x = a.solve({q(5), q(6)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{q(-4), q(9, 2)});

    // Underdetermined: free variables are pinned to zero.
    ExactMatrix u = from_rows({{1, 0, 2}});
    auto y = u.solve({q(3)});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{q(3), q(0), q(0)});

    // Inconsistent system.
    ExactMatrix bad = from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(bad.solve({q(1), q(1)}).has_value());
}

TEST_CASE("empty shapes are handled throughout") {
    ExactMatrix zr(0, 3);
    CHECK(zr.rank() == 0);
    CHECK(zr.kernel_basis().size() == 3);
    CHECK(zr.image_basis().empty());
    auto s = zr.solve(Vec{});
    REQUIRE(s.has_value());
    CHECK(s->size() == 3);

    ExactMatrix zc(3, 0);
    CHECK(zc.rank() == 0);
    CHECK(zc.kernel_basis().empty());
    CHECK(zc.apply(Vec{}).size() == 3);

    ExactMatrix z0(0, 0);
    CHECK(z0.det() == q(1));       // empty product convention
    CHECK(z0.pfaffian() == q(1));  // empty matching convention
}

// ---- Pfaffian ---------------------------------------------------------------

TEST_CASE("pfaffian of the standard symplectic blocks is one") {
    for (int half = 1; half <= 4; ++half) {
        const int n = 2 * half;
        ExactMatrix j(n, n);
        for (int b = 0; b < half; ++b) {
            j.at(2 * b, 2 * b + 1) = q(1);
            j.at(2 * b + 1, 2 * b) = q(-1);
        }
        CHECK(j.pfaffian() == q(1));
        CHECK(j.det() == q(1));
    }
}

TEST_CASE("pfaffian matches the first-row expansion oracle") {
    // Frozen 4x4 identity: Pf = a01*a23 - a02*a13 + a03*a12.
    SampleStream fixed(3);
    ExactMatrix a = fixed.skew_matrix(4);
    GaussianRational expected =
        a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) + a.at(0, 3) * a.at(1, 2);
    CHECK(a.pfaffian() == expected);
    CHECK(oracle_pfaffian(a) == expected);

    SampleStream rng(17);
    for (int n : {2, 4, 6, 8}) {
        for (int trial = 0; trial < 6; ++trial) {
            ExactMatrix m = rng.skew_matrix(n);
            GaussianRational pf = m.pfaffian();
            CHECK(pf == oracle_pfaffian(m));
            CHECK(pf * pf == m.det());
        }
    }

    // Odd size vanishes; non-skew input is rejected.
    CHECK(SampleStream(5).skew_matrix(5).pfaffian() == q(0));
    CHECK_THROWS_AS(from_rows({{1, 0}, {0, 1}}).pfaffian(), DomainError);
}

TEST_CASE("pfaffian transforms by the determinant under congruence") {
    SampleStream rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix a = rng.skew_matrix(4);
        ExactMatrix u = rng.invertible_matrix(4);
        ExactMatrix conj = u * a * u.transpose();
        CHECK(conj.pfaffian() == u.det() * a.pfaffian());
    }
}

// ---- mod-p rank floor ---------------------------------------------------------

TEST_CASE("mod-p rank is a lower bound and usually exact") {
    SampleStream rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = int(rng.int_in(1, 6));
        const int cols = int(rng.int_in(1, 6));
        ExactMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = rng.value();
        auto lb = detail::rank_lower_bound_mod_p(m);
        REQUIRE(lb.has_value());
        const int exact = m.rank();
        CHECK(*lb <= exact);
        CHECK(*lb == exact);  // small random entries never collide with p
    }

    // A denominator divisible by p forfeits the certificate.
    ExactMatrix m(1, 1);
    m.at(0, 0) = GaussianRational(mpq_class(1, 998244353), mpq_class(0));
    CHECK_FALSE(detail::rank_lower_bound_mod_p(m).has_value());
}

// ---- polynomials --------------------------------------------------------------

TEST_CASE("sparse polynomial algebra") {
    SparsePoly x = SparsePoly::variable(0, 3);
    SparsePoly y = SparsePoly::variable(1, 3);
    SparsePoly z = SparsePoly::variable(2, 3);

    SparsePoly p = (x + y).pow(2);
    CHECK(p == x * x + x * y.scaled(q(2)) + y * y);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK_FALSE((p + SparsePoly::constant(q(1), 3)).is_homogeneous());

    // Cancellation removes terms entirely.
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);

    // Evaluation and differentiation.
    Vec pt{q(2), q(-1), q(5)};
    CHECK(p.eval(pt) == q(1));
    CHECK(p.derivative(0).eval(pt) == q(2));   // 2(x+y)
    CHECK(p.derivative(2).is_zero());
    Vec grad = p.gradient_at(pt);
    CHECK(grad == Vec{q(2), q(2), q(0)});

    // deg-respecting product
    SparsePoly cube = (x + y + z).pow(3);
    CHECK(cube.degree() == 3);
    CHECK(cube.term_count() == 10);
    CHECK(cube.coeff({1, 1, 1}) == q(6));
}

TEST_CASE("polynomial printing is canonical graded-lex") {
    SparsePoly p(3);
    p.add_term({0, 0, 1}, q(-1, 2));
    p.add_term({2, 1, 0}, q(2));
    p.add_term({0, 0, 0}, GaussianRational(mpq_class(0), mpq_class(3)));
    CHECK(p.str() == "2*x0^2*x1 - 1/2*x2 + 3i");

    CHECK(SparsePoly(2).str() == "0");
    SparsePoly m(1);
    m.add_term({1}, qi(1, 1));
    CHECK(m.str() == "(1+i)*x0");
}

// ---- truncated series ----------------------------------------------------------

TEST_CASE("series arithmetic and the frozen expansion goldens") {
    using ZS = TruncatedSeries<mpz_class>;

    ZS inv = series_expand_power(2, -1, 4);
    CHECK(inv.coeffs() == std::vector<mpz_class>{1, -2, 4, -8, 16});

    ZS pow4 = series_expand_power(1, 4, 4);
    CHECK(pow4.coeffs() == std::vector<mpz_class>{1, 4, 6, 4, 1});

    ZS prod = pow4 * inv;
    CHECK(prod.coeffs() == std::vector<mpz_class>{1, 2, 2, 0, 1});

    // inverse really inverts (truncated)
    ZS base(4);
    base.coeff(0) = 1;
    base.coeff(1) = 2;
    CHECK(base * base.geometric_inverse() == ZS::constant(1, 4));

    // (1 - t)^{-1} is the geometric series
    CHECK(series_expand_power(-1, -1, 5).coeffs() == std::vector<mpz_class>{1, 1, 1, 1, 1, 1});

    // constant term must be a unit for the geometric inverse
    ZS bad(2);
    bad.coeff(0) = 2;
    CHECK_THROWS_AS(bad.geometric_inverse(), DomainError);

    // order mismatch is a hard error
    CHECK_THROWS_AS((void)(ZS(2) * ZS(3)), DomainError);
    CHECK_THROWS_AS(ZS(-1), DomainError);
}

// ---- deterministic sampling ------------------------------------------------------

TEST_CASE("sample streams are reproducible and portable") {
    // The C++ standard pins down mt19937_64: the 10000th draw from the
    // default-seeded engine is fixed.  Our streams inherit that stability
    // because every mapping from raw draws is explicit integer arithmetic.
    std::mt19937_64 reference;  // seed 5489
    reference.discard(9999);
    CHECK(reference() == 9981545732273789042ULL);

    SampleStream a(123), b(123), c(124);
    std::vector<long> seq_a, seq_b, seq_c;
    for (int k = 0; k < 24; ++k) {
        seq_a.push_back(a.int_in(-50, 50));
        seq_b.push_back(b.int_in(-50, 50));
        seq_c.push_back(c.int_in(-50, 50));
    }
    CHECK(seq_a == seq_b);
    CHECK(seq_a != seq_c);

    SampleStream r1(9), r2(9);
    CHECK(r1.skew_matrix(6) == r2.skew_matrix(6));
    CHECK(r1.invertible_matrix(3).rows() == 3);
    CHECK_FALSE(SampleStream(31).invertible_matrix(4).det().is_zero());
    CHECK_FALSE(is_zero_vec(SampleStream(37).nonzero_int_vector(3)));

    CHECK_THROWS_AS(SampleStream(0).int_in(3, 2), DomainError);
}
