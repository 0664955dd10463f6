#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcrit/criticality.hpp"
#include "rankcrit/lie.hpp"
#include "rankcrit/rng.hpp"

using namespace rankcrit;

namespace {
SampleOptions opts(uint64_t seed = 1) {
    SampleOptions o;
    o.seed = seed;
    return o;
}
}  // namespace

TEST_CASE("rep_image_space") {
    CHECK(rep_image_space(symmetric_power_poly_rep(3, 3)).dim() == 8);
    auto [g, stdr] = sl(2);
    CHECK(rep_image_space(adjoint_rep(g)).dim() == 3);
    Representation triv(g, std::vector<Matrix>(3, Matrix::zero(2, 2)), "trivial");
    CHECK(rep_image_space(triv).dim() == 0);
}

TEST_CASE("generic_rank_semisimple") {
    GenericRank r = generic_rank_semisimple(symmetric_power_poly_rep(3, 3), opts());
    CHECK(r.r == 9);  // 10 - 1
    CHECK(r.provenance == RankProvenance::WeightFormula);
    auto [g3, s3] = sl(3);
    CHECK(generic_rank_semisimple(adjoint_rep(g3), opts()).r == 6);  // 8 - 2
    // degenerate Killing rejected
    LiePtr ab = std::make_shared<const LieAlgebra>(1, std::vector<std::string>{"t"},
                                                   std::vector<int>{0},
                                                   std::vector<LieAlgebra::Entry>{});
    Matrix h(2, 2);
    h(0, 0) = Rat(1);
    h(1, 1) = Rat(-1);
    Representation r1(ab, {h}, "torus", WeightData{{{Rat(1)}, {Rat(-1)}}});
    CHECK_THROWS_AS(generic_rank_semisimple(r1, opts()), DegenerateKilling);
}

TEST_CASE("rnd multiplicities: adjoint of sl2 is certified") {
    auto [g, stdr] = sl(2);
    Representation ad2 = adjoint_rep(g);
    RootDatum rd = sl_root_datum(g, 2);
    MultiplicityReport rep = rnd_multiplicities(ad2, rd, opts());
    CHECK(rep.verdict == Verdict::Certified);
    CHECK(rep.generic_rank == 2);
    CHECK(rep.rnd_dim == 3);
    // the highest-root row carries multiplicity 1 = 1
    bool found = false;
    for (const auto& row : rep.rows) {
        CHECK(row.mult_rnd >= row.mult_image);
        if (row.mult_image == 1 && row.mult_rnd == 1 && row.hw_dim >= 1) found = true;
    }
    CHECK(found);
}

TEST_CASE("rnd multiplicities: adjoint of sl3 is certified") {
    auto [g, stdr] = sl(3);
    MultiplicityReport rep = rnd_multiplicities(adjoint_rep(g), sl_root_datum(g, 3), opts());
    CHECK(rep.verdict == Verdict::Certified);
    CHECK(rep.generic_rank == 6);
    CHECK(rep.rnd_dim == 8);
    // total image multiplicity weighted by irreducible dimensions = dim g
    long long total = 0;
    for (const auto& row : rep.rows) {
        if (row.mult_image == 0) continue;
        long long a = row.dynkin[0].num().get_si(), b = row.dynkin[1].num().get_si();
        total += row.mult_image * weyl_dim_sl3((int)a, (int)b);
    }
    CHECK(total == 8);
}

TEST_CASE("HW bookkeeping: End(V) of an sl3 module decomposes to full dimension") {
    Representation rho = symmetric_power_poly_rep(3, 3);
    RootDatum rd = sl_root_datum(rho.algebra_ptr(), 3);
    long long total = 0;
    for (const auto& h : highest_weight_spaces_end(rho, rd)) {
        long long a = h.dynkin[0].num().get_si(), b = h.dynkin[1].num().get_si();
        total += (long long)h.space.dim() * weyl_dim_sl3((int)a, (int)b);
    }
    CHECK(total == 100);  // dim End(V) for dim V = 10
}

TEST_CASE("certify_sym_power_maximal at (3,1)") {
    CriticalityCertificate cert = certify_sym_power_maximal(3, 1, opts());
    CHECK(cert.status == CertStatus::Certified);
    CHECK(cert.generic_rank == 9);
    CHECK(cert.rank_provenance == RankProvenance::WeightFormula);
    CHECK(cert.rnd.dim() == 8);
    CHECK_THROWS(certify_sym_power_maximal(2, 1, opts()));  // m >= 3 is the precondition
}

TEST_CASE("mg_space_sampled") {
    auto [g2, s2] = sl(2);
    Representation ad2 = adjoint_rep(g2);
    Subspace mg = mg_space_sampled(*g2, 20, opts());
    Subspace adspan = rep_image_space(ad2).span();
    CHECK(mg == adspan);  // supports M(g) = ad g for sl2
    // the result always contains the image of ad
    CHECK(mg.contains(adspan));
    // pairs (x,x) alone cut exactly o(kappa): independent oracle built here
    Matrix kappa = killing_form(*g2);
    Rng rng(3);
    std::vector<std::vector<Rat>> rows;
    for (int s = 0; s < 12; ++s) {
        std::vector<Rat> x;
        for (int i = 0; i < 3; ++i) x.push_back(rng.entry(50));
        std::vector<Rat> kx = kappa.apply(x);
        std::vector<Rat> row((size_t)9);
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) row[(size_t)k * 3 + l] = kx[k] * x[l];
        rows.push_back(std::move(row));
    }
    Matrix cm((int)rows.size(), 9);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < 9; ++j) cm(i, j) = rows[i][j];
    Subspace xx_only = restrict_by_constraints(Subspace::full(9), cm);
    CHECK(xx_only == orthogonal_algebra_of_form(kappa).span());
    CHECK(xx_only.dim() == 3);  // d(d-1)/2
}

TEST_CASE("unipotent rnd check") {
    auto [g, stdr] = sl(2);
    Representation ad2 = adjoint_rep(g);
    RootDatum rd = cartan_and_roots(g);
    Subspace adspan = rep_image_space(ad2).span();
    CHECK(unipotent_rnd_check(ad2, rd, adspan, 12, opts()));
    // identity word reduces to the defining constraint Y V_0 <= V_1: every
    // basis element of ad maps the Cartan into the root spaces
    const auto& w = ad2.weight_data()->weights;
    MatrixSpace ad2_img = rep_image_space(ad2);
    for (const Matrix& y : ad2_img.basis())
        for (int v = 0; v < 3; ++v) {
            if (!w[v][0].is_zero()) continue;
            for (int u = 0; u < 3; ++u)
                if (w[u][0].is_zero()) CHECK(y(u, v).is_zero());
        }
    // a direction outside RND fails within a few trials: symmetric traceless
    // direction for split so3 on its standard module
    auto [so3, so3std] = so_split(3);
    RootDatum rd3 = cartan_and_roots(so3);
    Matrix y(3, 3);
    y(0, 0) = Rat(1);
    y(1, 1) = Rat(-2);
    y(2, 2) = Rat(1);  // B-symmetric, not in o(B)
    Subspace bad = Subspace::span_of({y.flatten()}, 9);
    CHECK_FALSE(unipotent_rnd_check(so3std, rd3, bad, 12, opts()));
}

TEST_CASE("report invariants: certified equality is seed independent") {
    auto [g, stdr] = sl(2);
    Representation ad2 = adjoint_rep(g);
    RootDatum rd = sl_root_datum(g, 2);
    for (uint64_t seed : {7ULL, 99ULL, 123456ULL}) {
        MultiplicityReport rep = rnd_multiplicities(ad2, rd, opts(seed));
        CHECK(rep.verdict == Verdict::Certified);
        CHECK(rep.rnd_dim == 3);
    }
}

TEST_CASE("generic_rank_semisimple agrees with sampling on constructed reps") {
    std::vector<Representation> reps;
    reps.push_back(symmetric_power_poly_rep(3, 3));
    reps.push_back(adjoint_rep(sl(3).first));
    reps.push_back(adjoint_rep(so_split(5).first));
    reps.push_back(irreducible_sl3_rep(1, 1));
    for (const Representation& rho : reps)
        CHECK_NOTHROW(generic_rank_semisimple(with_weight_basis(rho), opts()));
}
