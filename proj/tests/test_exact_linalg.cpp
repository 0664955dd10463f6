#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcrit/linalg.hpp"
#include "rankcrit/rng.hpp"
#include "rankcrit/subspace.hpp"

using namespace rankcrit;

namespace {
Matrix mat(int rows, int cols, std::vector<long long> v) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(v[(size_t)i * cols + j]);
    return m;
}

std::vector<Rat> vec(std::vector<long long> v) {
    std::vector<Rat> out;
    for (long long x : v) out.push_back(Rat(x));
    return out;
}

Subspace span1(std::vector<long long> v, int d) { return Subspace::span_of({vec(v)}, d); }
}  // namespace

TEST_CASE("rat basics") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(1, -2).den() == 2);
    CHECK(Rat(1, -2).num() == -1);
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse("-7").str() == "-7");
    CHECK(Rat(5, 3).str() == "5/3");
    CHECK_THROWS_AS(Rat::parse("x"), ParseError);
}

TEST_CASE("rref frozen examples") {
    // identity 3x3 -> itself, rank 3
    RrefResult rr = rref(Matrix::identity(3));
    CHECK(rr.rank == 3);
    CHECK(rr.rref == Matrix::identity(3));
    // zero 2x4 -> itself, rank 0
    rr = rref(Matrix::zero(2, 4));
    CHECK(rr.rank == 0);
    CHECK(rr.rref == Matrix::zero(2, 4));
    // [[1,2],[2,4]] -> [[1,2],[0,0]], rank 1 (hand elimination)
    rr = rref(mat(2, 2, {1, 2, 2, 4}));
    CHECK(rr.rank == 1);
    CHECK(rr.rref == mat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("kernel frozen examples") {
    Subspace k = kernel_basis(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0}));
    CHECK(k == span1({0, 0, 1}, 3));
    CHECK(kernel_basis(Matrix::zero(2, 2)) == Subspace::full(2));
    // [[1,1,1]]: 2-dim solution set of x1+x2+x3=0 (rank-nullity)
    Subspace k2 = kernel_basis(mat(1, 3, {1, 1, 1}));
    CHECK(k2.dim() == 2);
    CHECK(k2.contains(vec({1, -1, 0})));
    CHECK(k2.contains(vec({0, 1, -1})));
}

TEST_CASE("image frozen examples") {
    CHECK(image_basis(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0})) ==
          Subspace::span_of({vec({1, 0, 0}), vec({0, 1, 0})}, 3));
    CHECK(image_basis(Matrix::identity(4)) == Subspace::full(4));
    CHECK(image_basis(mat(2, 1, {1, 2})) == span1({1, 2}, 2));
}

TEST_CASE("solve") {
    auto x = solve(Matrix::identity(3), vec({4, 5, 6}));
    REQUIRE(x.has_value());
    CHECK(*x == vec({4, 5, 6}));
    CHECK_FALSE(solve(Matrix::zero(2, 2), vec({1, 0})).has_value());
    // [[1,1]] b=(2): verified by substitution
    auto y = solve(mat(1, 2, {1, 1}), vec({2}));
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == Rat(2));
}

TEST_CASE("subspace arithmetic frozen examples") {
    Subspace u = Subspace::span_of({vec({1, 0})}, 2);
    CHECK(intersect(u, u) == u);
    CHECK(intersect(span1({1, 0}, 2), span1({0, 1}, 2)).dim() == 0);
    // span(e1+e2, e2+e3) ^ span(e1, e3) = span(e1 - e3), by solving the
    // membership equations
    Subspace a = Subspace::span_of({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
    Subspace b = Subspace::span_of({vec({1, 0, 0}), vec({0, 0, 1})}, 3);
    CHECK(intersect(a, b) == span1({1, 0, -1}, 3));
    CHECK_THROWS_AS(intersect(u, span1({1, 0, 0}, 3)), DimensionMismatch);
}

TEST_CASE("random matrices") {
    Matrix a = random_rational_matrix(4, 4, 50, 7);
    Matrix b = random_rational_matrix(4, 4, 50, 7);
    CHECK(a == b);  // fixed seed -> reproducible
    Matrix c = random_rational_matrix(4, 4, 1, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(c(i, j).height() <= 1);
    CHECK(random_rational_matrix(4, 4, 50, 8) != a);  // distinct seeds differ
}

TEST_CASE("determinant and inverse") {
    CHECK(determinant(mat(2, 2, {1, 2, 3, 4})) == Rat(-2));
    CHECK(determinant(mat(2, 2, {1, 2, 2, 4})).is_zero());
    Matrix m = mat(2, 2, {1, 2, 3, 4});
    CHECK(inverse_matrix(m) * m == Matrix::identity(2));
    CHECK_THROWS(inverse_matrix(mat(2, 2, {1, 2, 2, 4})));
}

TEST_CASE("properties: rank-nullity, dims, idempotence, canonicality") {
    Rng rng(101);
    for (int it = 0; it < 200; ++it) {
        int rows = 1 + (int)rng.uniform_int(0, 5), cols = 1 + (int)rng.uniform_int(0, 5);
        Matrix m = random_integer_matrix(rows, cols, 9, rng);
        RrefResult rr = rref(m);
        CHECK(rr.rank + kernel_basis(m).dim() == cols);
        CHECK(rref(rr.rref).rref == rr.rref);  // idempotence
        // the parallel kernel agrees with the serial reference
        RrefResult ref = serial::rref(m);
        CHECK(rr.rref == ref.rref);
        CHECK(rr.rank == ref.rank);
    }
    for (int it = 0; it < 100; ++it) {
        int d = 2 + (int)rng.uniform_int(0, 4);
        Subspace u = Subspace::span_of_rows(random_integer_matrix(2, d, 9, rng));
        Subspace w = Subspace::span_of_rows(random_integer_matrix(2, d, 9, rng));
        CHECK(intersect(u, w).dim() + sum(u, w).dim() == u.dim() + w.dim());
        CHECK((u == w) == (u.basis() == w.basis()));  // canonical representation
    }
}

TEST_CASE("property: modular screening consistency") {
    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + (int)rng.uniform_int(0, 4);
        Matrix m = random_integer_matrix(n, n + 1, 20, rng);
        int exact = rank(m);
        int agree = 0;
        for (uint64_t s = 0; s < 4; ++s) {
            uint64_t p = random_prime62(derive_seed(77, {s, (uint64_t)it}));
            int rp = rank_mod_p(m, p);
            CHECK(rp <= exact);
            if (rp == exact) ++agree;
        }
        CHECK(agree >= 3);  // equality for all but finitely many primes
    }
}

TEST_CASE("subspace builder matches batch span") {
    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
        int d = 3 + (int)rng.uniform_int(0, 3);
        Matrix m = random_integer_matrix(4, d, 9, rng);
        SubspaceBuilder sb(d);
        for (int i = 0; i < m.rows(); ++i) sb.insert(m.row(i));
        CHECK(sb.to_subspace() == Subspace::span_of_rows(m));
    }
}

TEST_CASE("restrict_by_constraints is intersection with a kernel") {
    Rng rng(6);
    for (int it = 0; it < 40; ++it) {
        int d = 4 + (int)rng.uniform_int(0, 2);
        Subspace s = Subspace::span_of_rows(random_integer_matrix(3, d, 9, rng));
        Matrix c = random_integer_matrix(2, d, 9, rng);
        Subspace direct = restrict_by_constraints(s, c);
        Subspace via = intersect(s, kernel_basis(c));
        CHECK(direct == via);
    }
}
