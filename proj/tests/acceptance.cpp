// Acceptance suite: runs every certification target end to end and prints one
// pass/fail line per criterion. Exact arithmetic throughout; every comparison
// is an equality of canonical forms, never a tolerance.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "rankcrit/constructions.hpp"
#include "rankcrit/criticality.hpp"
#include "rankcrit/lie.hpp"
#include "rankcrit/linalg.hpp"
#include "rankcrit/mpoly.hpp"
#include "rankcrit/rng.hpp"

using namespace rankcrit;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double secs) {
    std::printf("%s criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

void run(int criterion, const std::string& what, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, what + (note.empty() ? "" : "  [" + note + "]"), ok, secs);
}

SampleOptions opts(uint64_t seed) {
    SampleOptions o;
    o.seed = seed;
    return o;
}

bool check(bool cond, const char* what) {
    if (!cond) std::printf("      check failed: %s\n", what);
    return cond;
}
#define CHECK_(cond) \
    if (!check((cond), #cond)) return false

}  // namespace

int main() {
    // 1. odd skew maximality, n = 3, 5, 7
    for (int n : {3, 5, 7}) {
        run(1, "skew n=" + std::to_string(n) + " certified maximal singular", [&] {
            CriticalityCertificate c = certify_rank_critical(skew_space(n), opts(11 + n));
            CHECK_(c.status == CertStatus::Certified);
            CHECK_(c.generic_rank == n - 1);
            return true;
        });
    }

    // 2. compression spaces, all 2 <= k <= n <= 6
    run(2, "compression spaces certified for 2 <= k <= n <= 6", [&] {
        for (int n = 2; n <= 6; ++n) {
            for (int k = 2; k <= n; ++k) {
                MatrixSpace a = standard_compression_space(n, k);
                CHECK_(a.dim() == n * n - k * n + k * k - k);
                CriticalityCertificate c = certify_rank_critical(a, opts(100 + 10 * n + k));
                CHECK_(c.status == CertStatus::Certified);
                CHECK_(c.generic_rank == n - 1);
            }
        }
        return true;
    });

    // 3. sl3 images on polynomial modules are maximal singular
    run(3, "sl3 on cubics: n=10, image dim 8, certified with r=9", [&] {
        Representation rho = symmetric_power_poly_rep(3, 3);
        CHECK_(rho.dim_v() == 10);
        CHECK_(rep_image_space(rho).dim() == 8);
        CriticalityCertificate c = certify_sym_power_maximal(3, 1, opts(31));
        CHECK_(c.status == CertStatus::Certified);
        CHECK_(c.generic_rank == 9);
        return true;
    });
    run(3, "sl3 on degree-6: n=28, image dim 8, certified with r=27", [&] {
        Representation rho = symmetric_power_poly_rep(3, 6);
        CHECK_(rho.dim_v() == 28);
        CHECK_(rep_image_space(rho).dim() == 8);
        CriticalityCertificate c = certify_sym_power_maximal(3, 2, opts(32));
        CHECK_(c.status == CertStatus::Certified);
        CHECK_(c.generic_rank == 27);
        return true;
    });

    // 4. highest weight spaces of End(V) are the corner-operator powers
    run(4, "HW spaces of End(V) for (m,k)=(3,3): exactly 4, spanned by powers", [&] {
        Representation rho = symmetric_power_poly_rep(3, 3);
        RootDatum rd = sl_root_datum(rho.algebra_ptr(), 3);
        std::vector<HighestWeightSpace> hw = highest_weight_spaces_end(rho, rd);
        CHECK_(hw.size() == 4);
        int matched = 0;
        for (int d = 0; d <= 3; ++d) {
            Subspace span = Subspace::span_of({poly_lowering_power(3, 3, d).flatten()}, 100);
            for (const auto& h : hw)
                if (h.space.dim() == 1 && h.space == span) ++matched;
        }
        CHECK_(matched == 4);
        return true;
    });

    // 5. adjoint representations certified rank-critical
    auto adjoint_case = [&](const std::string& name, const LiePtr& g, const RootDatum& rd,
                            uint64_t seed) {
        run(5, "adjoint of " + name + " certified", [&] {
            MultiplicityReport rep = rnd_multiplicities(adjoint_rep(g), rd, opts(seed));
            CHECK_(rep.verdict == Verdict::Certified);
            CHECK_(rep.rnd_dim == g->dim());
            return true;
        });
    };
    {
        auto g = sl(2).first;
        adjoint_case("sl2", g, sl_root_datum(g, 2), 51);
    }
    {
        auto g = sl(3).first;
        adjoint_case("sl3", g, sl_root_datum(g, 3), 52);
    }
    {
        auto g = sl(4).first;
        adjoint_case("sl4", g, sl_root_datum(g, 4), 53);
    }
    {
        auto g = so_split(5).first;
        adjoint_case("so5", g, cartan_and_roots(g), 54);
    }
    DerivationAlgebra der_g2 = derivation_algebra(zorn_octonions());
    Representation g2_7 = trivial_summand_complement(der_g2.action);
    {
        run(5, "adjoint of g2 (via Der(Zorn), dim 14) certified", [&] {
            CHECK_(der_g2.algebra->dim() == 14);
            RootDatum rd = cartan_and_roots(der_g2.algebra);
            MultiplicityReport rep =
                rnd_multiplicities(adjoint_rep(der_g2.algebra), rd, opts(55));
            CHECK_(rep.verdict == Verdict::Certified);
            CHECK_(rep.rnd_dim == 14);
            return true;
        });
    }

    // 6. g2 7-dim module: RND = o7 exactly
    RootDatum rd_g2 = cartan_and_roots(der_g2.algebra);
    run(6, "g2 7-dim: verdict UpperBound, RND = o(B) of dim 21", [&] {
        MultiplicityReport rep = rnd_multiplicities(g2_7, rd_g2, opts(61));
        CHECK_(rep.verdict == Verdict::UpperBound);
        CHECK_(rep.rnd_dim == 21);
        Matrix b = invariant_bilinear_form(g2_7);
        CHECK_(rep.rnd_space == orthogonal_algebra_of_form(b).span());
        return true;
    });

    // 7. g2 27-dim module: generic rank 24, RND = induced o7 image
    run(7, "g2 27-dim: r=24, RND = 21-dim induced o7 image, UpperBound", [&] {
        Representation g2_27 = trivial_summand_complement(symmetric_square_rep(g2_7));
        CHECK_(g2_27.dim_v() == 27);
        GenericRank r = generic_rank_semisimple(g2_27, opts(71));
        CHECK_(r.r == 24);
        MultiplicityReport rep = rnd_multiplicities(g2_27, rd_g2, opts(72));
        CHECK_(rep.verdict == Verdict::UpperBound);
        CHECK_(rep.rnd_dim == 21);
        // the o7 action induced on S^2 of the 7-dim module, restricted to the
        // 27-dim complement, derivation-style
        Matrix b = invariant_bilinear_form(g2_7);
        MatrixSpace o7 = orthogonal_algebra_of_form(b);
        Subspace inv = invariant_vectors(symmetric_square_rep(g2_7));
        CHECK_(inv.dim() == 1);
        // rebuild the complement exactly as trivial_summand_complement does
        Representation s2 = symmetric_square_rep(g2_7);
        Matrix form28 = invariant_bilinear_form(s2);
        Matrix constraints(1, 28);
        std::vector<Rat> bw = form28.apply(inv.basis_row(0));
        for (int j = 0; j < 28; ++j) constraints(0, j) = bw[j];
        Subspace comp = restrict_by_constraints(Subspace::full(28), constraints);
        CoordinateMap cm(comp.basis());
        std::vector<std::vector<Rat>> images;
        for (const Matrix& x : o7.basis()) {
            // derivation action on the symmetric square, then restriction
            std::vector<std::vector<int>> monos = degree_monomials(7, 2);
            std::map<std::vector<int>, int> index;
            for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;
            Matrix xs(28, 28);
            for (int col = 0; col < 28; ++col) {
                const std::vector<int>& e = monos[col];
                for (int v = 0; v < 7; ++v) {
                    if (e[v] == 0) continue;
                    for (int u = 0; u < 7; ++u) {
                        if (x(u, v).is_zero()) continue;
                        std::vector<int> e2 = e;
                        e2[v] -= 1;
                        e2[u] += 1;
                        xs(index[e2], col) += Rat((long long)e[v]) * x(u, v);
                    }
                }
            }
            // restrict to the complement
            Matrix restricted(27, 27);
            for (int j = 0; j < 27; ++j) {
                std::vector<Rat> img = xs.apply(comp.basis_row(j));
                std::vector<Rat> coords = cm.coords(img);
                for (int i = 0; i < 27; ++i) restricted(i, j) = coords[i];
            }
            images.push_back(restricted.flatten());
        }
        Subspace induced = Subspace::span_of(images, 27 * 27);
        CHECK_(induced.dim() == 21);
        CHECK_(rep.rnd_space == induced);
        return true;
    });

    // 8. sl3 irreducible [4,1]
    run(8, "sl3 [4,1]: dim 35, RND rows {[1,4]:1,[1,1]:1,[4,1]:1}, UpperBound", [&] {
        Representation rho = irreducible_sl3_rep(4, 1);
        CHECK_(rho.dim_v() == 35);
        CHECK_(weyl_dim_sl3(4, 1) == 35);
        RootDatum rd = sl_root_datum(rho.algebra_ptr(), 3);
        MultiplicityReport rep = rnd_multiplicities(rho, rd, opts(81));
        CHECK_(rep.verdict == Verdict::UpperBound);
        auto lab = [](long long x, long long y) {
            return std::vector<Rat>{Rat(x), Rat(y)};
        };
        int rows14 = 0, rows11 = 0, rows41 = 0;
        for (const auto& row : rep.rows) {
            if (row.dynkin == lab(1, 4)) {
                CHECK_(row.mult_rnd == 1);
                ++rows14;
            } else if (row.dynkin == lab(1, 1)) {
                CHECK_(row.mult_rnd == 1);
                CHECK_(row.mult_image == 1);
                ++rows11;
            } else if (row.dynkin == lab(4, 1)) {
                CHECK_(row.mult_rnd == 1);
                ++rows41;
            } else {
                CHECK_(row.mult_rnd == 0);
            }
        }
        CHECK_(rows14 == 1 && rows11 == 1 && rows41 == 1);
        CHECK_(rep.rnd_dim == 35 + 8 + 35);
        return true;
    });

    // 9. STRETCH: f4 on the trace-zero 26-dim Jordan module
    if (std::getenv("RANKCRIT_SKIP_STRETCH")) {
        std::printf("SKIP criterion  9: f4 26-dim (RANKCRIT_SKIP_STRETCH set)\n");
    } else {
        run(9, "f4 26-dim via Der(jordan_h3): certified with r = 24", [&] {
            DerivationAlgebra der = derivation_algebra(jordan_h3(zorn_octonions()));
            CHECK_(der.algebra->dim() == 52);
            Representation f4_26 = trivial_summand_complement(der.action);
            CHECK_(f4_26.dim_v() == 26);
            RootDatum rd = cartan_and_roots(der.algebra);
            MultiplicityReport rep = rnd_multiplicities(f4_26, rd, opts(91));
            CHECK_(rep.generic_rank == 24);
            CHECK_(rep.verdict == Verdict::Certified);
            return true;
        });
    }

    // 10. coefficient polynomial sweeps
    run(10, "P_{d,e} divisibility sweep, Q_d closed form, operator coefficient", [&] {
        for (int e = 1; e <= 8; ++e) {
            CHECK_(!divisible_by_sigma1(p_de(0, e)));
            CHECK_(divisible_by_sigma1(p_de(1, e)));
            for (int d = 2; d <= 3 * e; ++d) CHECK_(!divisible_by_sigma1(p_de(d, e)));
        }
        for (int e = 1; e <= 10; ++e) {
            CHECK_(q_d_sum(1, e) == Rat((long long)-e * (e + 1)));
            for (int d = 1; d <= 2 * e + 1; ++d) CHECK_(q_d_sum(d, e) == q_d_closed(d, e));
        }
        for (int e = 1; e <= 3; ++e)
            for (int d = 0; d <= 6; ++d) {
                MPoly brute = brute_operator_coefficient(d, e, 3);
                MPoly sum(3);
                for (int a = 0; a <= d; ++a)
                    for (int b = 0; a + b <= d; ++b) {
                        int c = d - a - b;
                        mpz_class mult =
                            factorial((unsigned)d) / (factorial((unsigned)a) *
                                                      factorial((unsigned)b) * factorial((unsigned)c));
                        mpz_class coeff = mult * mult * falling_factorial(e, a) *
                                          falling_factorial(e, b) * falling_factorial(e, c);
                        sum.add_term({a, b, c}, Rat(coeff));
                    }
                CHECK_(brute == sum);
                CHECK_(brute == Rat(factorial((unsigned)d)) * p_de(d, e));
            }
        return true;
    });

    // 11. pencil proposition on random instances
    run(11, "50 singular pencils witnessed, 50 nonsingular rejected", [&] {
        Rng rng(1111);
        int witnessed = 0, rejected = 0;
        while (witnessed < 50) {
            const int n = 4;
            Matrix a0(n, n), b0(n, n);
            for (int i = 0; i < 2; ++i) {
                a0(0, i) = rng.entry(9);
                b0(0, i) = rng.entry(9);
            }
            for (int i = 2; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    a0(j, i) = rng.entry(9);
                    b0(j, i) = rng.entry(9);
                }
            Matrix g = random_invertible_matrix(n, 5, rng);
            Matrix h = random_invertible_matrix(n, 5, rng);
            Matrix a = g * a0 * h, b = g * b0 * h;
            try {
                CompressionWitness w = pencil_compression_witness(a, b);
                CHECK_(w.W.dim() < w.U.dim());
                for (int i = 0; i < w.U.dim(); ++i) {
                    CHECK_(w.W.contains(a.apply(w.U.basis_row(i))));
                    CHECK_(w.W.contains(b.apply(w.U.basis_row(i))));
                }
                ++witnessed;
            } catch (const NotTwoDimensional&) {
                continue;  // degenerate draw; resample
            }
        }
        while (rejected < 50) {
            const int n = 4;
            Matrix a = random_integer_matrix(n, n, 9, rng);
            Matrix b = random_integer_matrix(n, n, 9, rng);
            if (determinant(a).is_zero()) continue;  // det(sA+tB) is then nonzero at (1,0)
            bool got_not_singular = false;
            try {
                pencil_compression_witness(a, b);
            } catch (const NotSingular&) {
                got_not_singular = true;
            } catch (const NotTwoDimensional&) {
                continue;  // dependent draw; resample
            }
            CHECK_(got_not_singular);
            ++rejected;
        }
        return true;
    });

    // 12. M(g) support: commuting-pair conditions pin ad g
    for (int m : {2, 3}) {
        run(12, "M(sl" + std::to_string(m) + ") sampled equals ad with 20 pairs", [&] {
            auto g = sl(m).first;
            SampleOptions o = opts(120 + m);
            Subspace mg = mg_space_sampled(*g, 20, o);
            Subspace ad = rep_image_space(adjoint_rep(g)).span();
            CHECK_(mg == ad);
            return true;
        });
    }

    // 13. randomized property suites at full volume
    run(13, "exact_linalg invariants, 1000 random cases", [&] {
        Rng rng(1301);
        for (int it = 0; it < 1000; ++it) {
            int rows = 1 + (int)rng.uniform_int(0, 5), cols = 1 + (int)rng.uniform_int(0, 5);
            Matrix m = random_integer_matrix(rows, cols, 9, rng);
            RrefResult rr = rref(m);
            CHECK_(rr.rank + kernel_basis(m).dim() == cols);
            CHECK_(rref(rr.rref).rref == rr.rref);
            int d = cols;
            Subspace u = Subspace::span_of_rows(random_integer_matrix(2, d, 9, rng));
            Subspace w = Subspace::span_of_rows(random_integer_matrix(2, d, 9, rng));
            CHECK_(intersect(u, w).dim() + sum(u, w).dim() == u.dim() + w.dim());
            CHECK_((u == w) == (u.basis() == w.basis()));
            if (it % 10 == 0) {
                uint64_t p = random_prime62(derive_seed(13, {(uint64_t)it}));
                CHECK_(rank_mod_p(m, p) <= rr.rank);
            }
        }
        return true;
    });
    run(13, "matrix_space invariants, 1000 random cases", [&] {
        Rng rng(1302);
        int done = 0;
        for (int it = 0; done < 1000; ++it) {
            int n = 2 + (int)rng.uniform_int(0, 1);
            std::vector<Matrix> gens;
            for (int k = 0; k < 2; ++k) gens.push_back(random_integer_matrix(n, n, 4, rng));
            MatrixSpace a = MatrixSpace::from_spanning(n, gens);
            if (a.dim() == 0) continue;
            SampleOptions o = opts(derive_seed(1302, {(uint64_t)it}));
            o.stabilize = 3;
            GenericRank gr = generic_rank(a, o);
            RegularSample x = std::move(regular_elements(a, gr.r, 1, o)[0]);
            CHECK_(tangent_constraint_space(x).dim() == n * n - (n - gr.r) * (n - gr.r));
            CHECK_(tangent_constraint_space(x).contains(a.span()));
            ++done;
        }
        return true;
    });

    std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "RESULT", failures);
    return failures > 127 ? 127 : failures;
}
