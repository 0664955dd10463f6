#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcrit/constructions.hpp"
#include "rankcrit/matrix_space.hpp"
#include "rankcrit/rng.hpp"

using namespace rankcrit;

namespace {
SampleOptions opts(uint64_t seed = 1) {
    SampleOptions o;
    o.seed = seed;
    return o;
}

MatrixSpace full_end(int n) {
    std::vector<Matrix> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = Rat(1);
            basis.push_back(std::move(e));
        }
    return MatrixSpace(n, std::move(basis));
}

Matrix diag(std::vector<long long> d) {
    Matrix m((int)d.size(), (int)d.size());
    for (size_t i = 0; i < d.size(); ++i) m((int)i, (int)i) = Rat(d[i]);
    return m;
}

MatrixSpace conjugated(const MatrixSpace& a, const Matrix& g) {
    Matrix gi = inverse_matrix(g);
    std::vector<Matrix> basis;
    for (const Matrix& m : a.basis()) basis.push_back(g * m * gi);
    return MatrixSpace(a.n(), std::move(basis));
}
}  // namespace

TEST_CASE("generic rank examples") {
    CHECK(generic_rank(MatrixSpace(3, {diag({1, 1, 0})}), opts()).r == 2);
    CHECK(generic_rank(full_end(3), opts()).r == 3);
    // skew 5x5: every element has even rank
    CHECK(generic_rank(skew_space(5), opts()).r == 4);
}

TEST_CASE("independence enforced") {
    CHECK_THROWS(MatrixSpace(2, {Matrix::identity(2), Matrix::identity(2)}));
    CHECK(MatrixSpace::from_spanning(2, {Matrix::identity(2), Matrix::identity(2)}).dim() == 1);
}

TEST_CASE("regular elements") {
    MatrixSpace scalars(3, {Matrix::identity(3)});
    auto rs = regular_elements(scalars, 3, 2, opts());
    CHECK(rs.size() == 2);
    for (const auto& s : rs) CHECK(s.kernel.dim() == 0);

    auto skew3 = regular_elements(skew_space(3), 2, 3, opts());
    for (const auto& s : skew3) {
        CHECK(s.kernel.dim() == 1);
        CHECK(s.image.dim() == 2);
    }

    // compression with k=1, W=0: every element kills U, so every sample's
    // kernel is exactly U at generic rank n-1
    Subspace u = Subspace::span_of({{Rat(1), Rat(0), Rat(0)}}, 3);
    MatrixSpace comp = compression_space(3, u, Subspace::zero(3));
    auto cs = regular_elements(comp, 2, 3, opts(5));
    for (const auto& s : cs) CHECK(s.kernel == u);

    CHECK_THROWS_AS(regular_elements(skew_space(3), 3, 1, opts()), RetryExhausted);
}

TEST_CASE("tangent constraint space") {
    // invertible sample: no conditions
    auto inv = regular_elements(MatrixSpace(3, {Matrix::identity(3)}), 3, 1, opts())[0];
    CHECK(tangent_constraint_space(inv) == Subspace::full(9));
    // n=3, r=2: dim = 9 - 1
    auto s3 = regular_elements(skew_space(3), 2, 1, opts())[0];
    CHECK(tangent_constraint_space(s3).dim() == 8);
    // X = diag(1,1,0): exactly the condition B(3,3) = 0
    RegularSample x{diag({1, 1, 0}), kernel_basis(diag({1, 1, 0})), image_basis(diag({1, 1, 0}))};
    Subspace t = tangent_constraint_space(x);
    CHECK(t.dim() == 8);
    std::vector<Rat> e33((size_t)9);
    e33[8] = Rat(1);
    CHECK_FALSE(t.contains(e33));
}

TEST_CASE("rnd examples") {
    // full End(Q^2) is its own rank-neutral space
    MatrixSpace e2 = full_end(2);
    CHECK(rnd(e2, opts()).space == e2.span());
    // odd skew n=3: exactly the skew matrices
    MatrixSpace sk3 = skew_space(3);
    RndResult r3 = rnd(sk3, opts());
    CHECK(r3.space == sk3.span());
    // compression space (n=4, k=2): RND equals the span
    MatrixSpace comp = standard_compression_space(4, 2);
    CHECK(rnd(comp, opts()).space == comp.span());
}

TEST_CASE("certify examples") {
    CriticalityCertificate c5 = certify_rank_critical(skew_space(5), opts());
    CHECK(c5.status == CertStatus::Certified);
    CHECK(c5.generic_rank == 4);

    CriticalityCertificate ce = certify_rank_critical(full_end(3), opts());
    CHECK(ce.status == CertStatus::Certified);
    CHECK(ce.generic_rank == 3);

    // standard Pare space: the computed rnd dimension is reported without a
    // pass/fail expectation; maximality of this family is known independently
    CriticalityCertificate cp = certify_rank_critical(pare_standard(3), opts());
    CHECK(cp.generic_rank == 2);
    CHECK(cp.rnd.dim() >= pare_standard(3).span().dim());
    MESSAGE("pare_standard(3): rnd dim = ", cp.rnd.dim(), ", status = ", to_string(cp.status));
}

TEST_CASE("is_singular / is_maximal_singular_certified") {
    CHECK(is_singular(skew_space(3), opts()));
    CHECK(is_maximal_singular_certified(skew_space(3), opts()));
    CHECK_FALSE(is_singular(full_end(3), opts()));
    CHECK_FALSE(is_maximal_singular_certified(full_end(3), opts()));
    MatrixSpace comp = standard_compression_space(4, 2);
    CHECK(is_singular(comp, opts()));
    CHECK(is_maximal_singular_certified(comp, opts()));
    CHECK_FALSE(is_singular(MatrixSpace(2, {diag({1, 0}), diag({0, 1})}), opts()));
}

TEST_CASE("degenerate zero space") {
    MatrixSpace zero(3, {});
    CriticalityCertificate c = certify_rank_critical(zero, opts());
    CHECK(c.generic_rank == 0);
    CHECK(c.rnd == Subspace::full(9));
    CHECK(c.status == CertStatus::Inconclusive);
    CHECK(is_singular(zero, opts()));
    CHECK_FALSE(is_maximal_singular_certified(zero, opts()));
    MatrixSpace zero0(0, {});
    CHECK(certify_rank_critical(zero0, opts()).status == CertStatus::Certified);
    CHECK_THROWS(generic_rank(zero, opts()));
}

TEST_CASE("properties: rnd contains span and shrinks monotonically") {
    Rng rng(77);
    for (int it = 0; it < 10; ++it) {
        int n = 3;
        std::vector<Matrix> basis;
        for (int k = 0; k < 2; ++k) basis.push_back(random_integer_matrix(n, n, 5, rng));
        MatrixSpace a = MatrixSpace::from_spanning(n, basis);
        if (a.dim() == 0) continue;
        GenericRank gr = generic_rank(a, opts(100 + it));
        Subspace span = a.span();
        Subspace cur = Subspace::full(n * n);
        for (int s = 0; s < 4; ++s) {
            SampleOptions so = opts(derive_seed(7, {(uint64_t)it, (uint64_t)s}));
            RegularSample x = std::move(regular_elements(a, gr.r, 1, so)[0]);
            CHECK(tangent_constraint_space(x).dim() == n * n - (n - gr.r) * (n - gr.r));
            int before = cur.dim();
            cur = restrict_by_constraints(cur, tangent_constraint_rows(x));
            CHECK(cur.dim() <= before);  // adding samples never grows the space
            CHECK(cur.contains(span));
        }
    }
}

TEST_CASE("property: certified status invariant under basis change and conjugation") {
    MatrixSpace sk = skew_space(3);
    // change of basis of the space
    std::vector<Matrix> newbasis = {sk.basis()[0] + sk.basis()[1],
                                    sk.basis()[1],
                                    sk.basis()[0] + Rat(2) * sk.basis()[2]};
    MatrixSpace sk2(3, newbasis);
    CHECK(certify_rank_critical(sk2, opts()).status == CertStatus::Certified);
    // simultaneous conjugation
    Rng rng(9);
    Matrix g = random_invertible_matrix(3, 5, rng);
    CHECK(certify_rank_critical(conjugated(sk, g), opts()).status == CertStatus::Certified);
}

TEST_CASE("compression dimension formula, 2 <= k <= n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            MatrixSpace a = standard_compression_space(n, k);
            CHECK(a.dim() == n * n - k * n + k * k - k);
        }
}
