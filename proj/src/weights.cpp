#include <algorithm>
#include <map>

#include "rankcrit/errors.hpp"
#include "rankcrit/lie.hpp"
#include "rankcrit/linalg.hpp"
#include "rankcrit/rng.hpp"

namespace rankcrit {

namespace {

// fixed screening prime for eigenvalue scans
uint64_t eigen_prime() {
    static uint64_t p = random_prime62(0x65696765ULL);
    return p;
}

// integer candidates lambda with ker(C - lambda I) != 0, screened mod p
std::vector<long long> integer_eigenvalue_candidates(const Matrix& c) {
    const int k = c.rows();
    Rat bound;
    for (int i = 0; i < k; ++i) {
        Rat row_sum;
        for (int j = 0; j < k; ++j) {
            const Rat& x = c(i, j);
            row_sum += x.sign() < 0 ? -x : x;
        }
        if (row_sum > bound) bound = row_sum;
    }
    mpz_class b = bound.num() / bound.den() + 1;
    if (b > 100000) throw Error("eigenvalue scan: Gershgorin bound too large");
    long long lim = b.get_si();
    std::vector<long long> out;
    for (long long lam = -lim; lam <= lim; ++lam) out.push_back(lam);
    return out;
}

Matrix shift_diag(const Matrix& c, long long lam) {
    Matrix m = c;
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= Rat((long long)lam);
    return m;
}

}  // namespace

std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<Matrix>& ops, int dim) {
    std::vector<EigenBlock> blocks{EigenBlock{{}, Matrix::identity(dim)}};
    for (const Matrix& op : ops) {
        if (op.rows() != dim || op.cols() != dim)
            throw DimensionMismatch("simultaneous_eigenspaces: operator shape");
        std::vector<EigenBlock> next;
        for (const EigenBlock& blk : blocks) {
            const Matrix& rows = blk.basis_rows;
            const int k = rows.rows();
            if (k == 0) continue;
            // restriction of op to the block
            CoordinateMap cm(rows);
            Matrix c(k, k);
            for (int j = 0; j < k; ++j) {
                std::vector<Rat> img = op.apply(rows.row(j));
                std::vector<Rat> coords = cm.coords(img);
                for (int i = 0; i < k; ++i) c(i, j) = coords[i];
            }
            int found = 0;
            for (long long lam : integer_eigenvalue_candidates(c)) {
                Matrix shifted = shift_diag(c, lam);
                bool maybe = true;
                try {
                    if (rank_mod_p(shifted, eigen_prime()) == k) maybe = false;
                } catch (const Error&) {
                    maybe = true;  // prime hit a denominator; decide exactly
                }
                if (!maybe) continue;
                Subspace eig = kernel_basis(shifted);
                if (eig.dim() == 0) continue;
                EigenBlock nb;
                nb.eigen = blk.eigen;
                nb.eigen.push_back(Rat((long long)lam));
                nb.basis_rows = eig.basis() * rows;
                next.push_back(std::move(nb));
                found += eig.dim();
                if (found == k) break;
            }
            if (found < k) {
                // generalized eigenspaces decide between the two failure modes
                int gen = 0;
                for (long long lam : integer_eigenvalue_candidates(c)) {
                    Matrix shifted = shift_diag(c, lam);
                    Matrix power = shifted;
                    for (int i = 1; i < k; ++i) power = power * shifted;
                    gen += k - rank(power);
                    if (gen >= k) break;
                }
                if (gen >= k)
                    throw NonDiagonalizable("simultaneous_eigenspaces: operator has a nilpotent part");
                throw NonSplit("simultaneous_eigenspaces: eigenvalue outside the rational integers");
            }
        }
        blocks = std::move(next);
    }
    return blocks;
}

Representation with_weight_basis(const Representation& rho) {
    const LieAlgebra& g = rho.algebra();
    if (rho.weight_data()) {
        // verify the claim: each Cartan matrix diagonal with the stated entries
        for (int c = 0; c < g.rank(); ++c) {
            const Matrix& h = rho.matrix(g.cartan()[c]);
            for (int i = 0; i < rho.dim_v(); ++i)
                for (int j = 0; j < rho.dim_v(); ++j) {
                    const Rat& want = i == j ? rho.weight_data()->weights[i][c] : Rat(0);
                    if (h(i, j) != want)
                        throw InternalInconsistency("with_weight_basis: attached weights are wrong");
                }
        }
        return rho;
    }
    std::vector<Matrix> ops;
    for (int c : g.cartan()) ops.push_back(rho.matrix(c));
    std::vector<EigenBlock> blocks = simultaneous_eigenspaces(ops, rho.dim_v());
    Matrix p(rho.dim_v(), rho.dim_v());
    WeightData wd;
    int r = 0;
    for (const EigenBlock& blk : blocks) {
        for (int i = 0; i < blk.basis_rows.rows(); ++i, ++r) {
            for (int j = 0; j < rho.dim_v(); ++j) p(r, j) = blk.basis_rows(i, j);
            wd.weights.push_back(blk.eigen);
        }
    }
    if (r != rho.dim_v())
        throw InternalInconsistency("with_weight_basis: weight spaces do not fill the module");
    // new basis vectors are the rows of p; matrices transform by S^-1 X S with S = p^T
    Matrix s = p.transpose();
    Matrix s_inv = inverse_matrix(s);
    std::vector<Matrix> mats;
    for (const Matrix& x : rho.matrices()) mats.push_back(s_inv * x * s);
    Representation out(rho.algebra_ptr(), std::move(mats), rho.label(), std::move(wd),
                       /*validate=*/false, rho.dim_v());
    // the conjugation preserves the homomorphism identity; re-verify the weights
    for (int c = 0; c < g.rank(); ++c) {
        const Matrix& h = out.matrix(g.cartan()[c]);
        for (int i = 0; i < out.dim_v(); ++i)
            for (int j = 0; j < out.dim_v(); ++j)
                if (h(i, j) != (i == j ? out.weight_data()->weights[i][c] : Rat(0)))
                    throw InternalInconsistency("with_weight_basis: conjugation failed");
    }
    return out;
}

std::optional<std::vector<std::vector<Rat>>> basis_ad_weights(const LieAlgebra& g) {
    std::vector<std::vector<Rat>> out((size_t)g.dim());
    for (int i = 0; i < g.dim(); ++i) {
        std::vector<Rat> w((size_t)g.rank());
        for (int c = 0; c < g.rank(); ++c) {
            const SparseVec& b = g.bracket_basis(g.cartan()[c], i);
            if (b.empty()) continue;
            if (b.size() != 1 || b[0].k != i) return std::nullopt;
            w[c] = b[0].c;
        }
        out[i] = std::move(w);
    }
    return out;
}

// ---- root data ----------------------------------------------------------------

namespace {

// positivity functional: (l, l-1, ..., 1) when tie-free on the roots, else a
// base-N functional with N past twice the largest coordinate (provably tie-free)
std::vector<Rat> positivity_functional(const std::vector<std::vector<Rat>>& roots, int rank) {
    std::vector<Rat> f((size_t)rank);
    for (int i = 0; i < rank; ++i) f[i] = Rat((long long)(rank - i));
    auto value = [&](const std::vector<Rat>& alpha) {
        Rat v;
        for (int i = 0; i < rank; ++i) v += f[i] * alpha[i];
        return v;
    };
    bool tie = false;
    for (const auto& alpha : roots)
        if (value(alpha).is_zero()) { tie = true; break; }
    if (!tie) return f;
    Rat maxabs;
    for (const auto& alpha : roots)
        for (const Rat& x : alpha) {
            Rat a = x.sign() < 0 ? -x : x;
            if (a > maxabs) maxabs = a;
        }
    Rat n = Rat(2) * maxabs + Rat(1);
    Rat acc(1);
    for (int i = rank - 1; i >= 0; --i) {
        f[i] = acc;
        acc *= n;
    }
    for (const auto& alpha : roots)
        if (value(alpha).is_zero())
            throw InternalInconsistency("positivity functional: tie with base-N weights");
    return f;
}

RootDatum decompose_roots(const LiePtr& g) {
    RootDatum rd;
    rd.g = g;
    std::vector<Matrix> ops;
    for (int c : g->cartan()) ops.push_back(g->ad_basis(c));
    std::vector<EigenBlock> blocks = simultaneous_eigenspaces(ops, g->dim());
    rd.zero_space = Subspace::zero(g->dim());
    for (EigenBlock& blk : blocks) {
        bool zero = std::all_of(blk.eigen.begin(), blk.eigen.end(),
                                [](const Rat& x) { return x.is_zero(); });
        if (zero) {
            rd.zero_space = Subspace::span_of_rows(blk.basis_rows);
        } else {
            rd.roots.push_back(blk.eigen);
            rd.root_spaces.push_back(Subspace::span_of_rows(blk.basis_rows));
        }
    }
    return rd;
}

std::vector<Rat> root_space_vector(const RootDatum& rd, const std::vector<Rat>& alpha) {
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (rd.roots[i] == alpha) {
            if (rd.root_spaces[i].dim() != 1)
                throw Error("root datum: simple root space is not 1-dimensional");
            return primitive_scale(rd.root_spaces[i].basis_row(0));
        }
    throw InternalInconsistency("root datum: missing root space");
}

SimpleRootInfo make_simple_info(const LiePtr& g, const RootDatum& rd,
                                const std::vector<Rat>& alpha, std::vector<Rat> raising) {
    SimpleRootInfo info;
    info.alpha = alpha;
    info.raising = std::move(raising);
    std::vector<Rat> neg = alpha;
    for (Rat& x : neg) x = -x;
    info.lowering = root_space_vector(rd, neg);
    std::vector<Rat> t = g->bracket(info.raising, info.lowering);
    // t must lie in the span of the designated Cartan elements
    std::vector<Rat> on_cartan((size_t)g->rank());
    for (int i = 0; i < g->dim(); ++i) {
        if (t[i].is_zero()) continue;
        auto it = std::find(g->cartan().begin(), g->cartan().end(), i);
        if (it == g->cartan().end())
            throw InternalInconsistency("root datum: [e,f] leaves the designated Cartan");
        on_cartan[it - g->cartan().begin()] = t[i];
    }
    Rat pairing;
    for (int i = 0; i < g->rank(); ++i) pairing += alpha[i] * on_cartan[i];
    if (pairing.is_zero())
        throw InternalInconsistency("root datum: alpha([e,f]) vanishes");
    Rat scale = Rat(2) / pairing;
    info.coroot = on_cartan;
    for (Rat& x : info.coroot) x *= scale;
    return info;
}

}  // namespace

std::vector<Rat> RootDatum::dynkin_label(const std::vector<Rat>& weight) const {
    std::vector<Rat> out(simple.size());
    for (size_t i = 0; i < simple.size(); ++i) {
        Rat acc;
        for (size_t j = 0; j < weight.size(); ++j) acc += simple[i].coroot[j] * weight[j];
        out[i] = acc;
    }
    return out;
}

RootDatum cartan_and_roots(const LiePtr& g) {
    RootDatum rd = decompose_roots(g);
    const int rank = g->rank();
    std::vector<Rat> f = positivity_functional(rd.roots, rank);
    auto fval = [&](const std::vector<Rat>& alpha) {
        Rat v;
        for (int i = 0; i < rank; ++i) v += f[i] * alpha[i];
        return v;
    };
    std::map<std::vector<Rat>, int> root_index;
    for (size_t i = 0; i < rd.roots.size(); ++i) root_index[rd.roots[i]] = (int)i;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (fval(rd.roots[i]).sign() > 0) rd.positive.push_back((int)i);
    // simple = indecomposable positive roots
    std::vector<int> simple_idx;
    for (int i : rd.positive) {
        bool decomposable = false;
        for (int a : rd.positive) {
            if (decomposable) break;
            for (int b : rd.positive) {
                if (a > b) continue;
                std::vector<Rat> sum = rd.roots[a];
                for (int t = 0; t < rank; ++t) sum[t] += rd.roots[b][t];
                if (sum == rd.roots[i]) { decomposable = true; break; }
            }
        }
        if (!decomposable) simple_idx.push_back(i);
    }
    // order shortest-first (Killing length), then by positivity value
    Matrix kappa = killing_form(*g);
    Matrix kh(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) kh(i, j) = kappa(g->cartan()[i], g->cartan()[j]);
    bool kh_ok = is_nondegenerate(kh);
    auto len2 = [&](const std::vector<Rat>& alpha) {
        if (!kh_ok) return Rat(0);
        std::optional<std::vector<Rat>> t = solve(kh, alpha);
        if (!t) throw InternalInconsistency("root datum: Killing restriction unsolvable");
        Rat acc;
        for (int i = 0; i < rank; ++i) acc += alpha[i] * (*t)[i];
        return acc;
    };
    std::stable_sort(simple_idx.begin(), simple_idx.end(), [&](int a, int b) {
        Rat la = len2(rd.roots[a]), lb = len2(rd.roots[b]);
        if (la != lb) return la < lb;
        return fval(rd.roots[a]) < fval(rd.roots[b]);
    });
    for (int i : simple_idx)
        rd.simple.push_back(
            make_simple_info(g, rd, rd.roots[i], root_space_vector(rd, rd.roots[i])));
    return rd;
}

RootDatum cartan_and_roots(const LiePtr& g,
                           const std::vector<std::vector<Rat>>& designated_simple_raisings) {
    RootDatum rd = decompose_roots(g);
    const int rank = g->rank();
    // the simple roots are the ad-weights of the designated raisings
    std::vector<std::vector<Rat>> simple_roots;
    for (const auto& e : designated_simple_raisings) {
        std::vector<Rat> alpha((size_t)rank);
        std::vector<Rat> img;
        for (int c = 0; c < rank; ++c) {
            std::vector<Rat> h((size_t)g->dim());
            h[g->cartan()[c]] = Rat(1);
            img = g->bracket(h, e);
            // img must equal alpha_c * e
            Rat lam;
            for (int i = 0; i < g->dim(); ++i) {
                if (e[i].is_zero()) {
                    if (!img[i].is_zero())
                        throw Error("cartan_and_roots: raising is not an ad-eigenvector");
                    continue;
                }
                Rat q = img[i] / e[i];
                if (lam.is_zero())
                    lam = q;
                else if (lam != q)
                    throw Error("cartan_and_roots: raising is not an ad-eigenvector");
            }
            alpha[c] = lam;
        }
        simple_roots.push_back(std::move(alpha));
    }
    // positivity: coordinates in the simple basis must be all >= 0 or all <= 0
    Matrix sr((int)simple_roots.size(), rank);
    for (int i = 0; i < (int)simple_roots.size(); ++i)
        for (int j = 0; j < rank; ++j) sr(i, j) = simple_roots[i][j];
    Matrix srt = sr.transpose();
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        std::optional<std::vector<Rat>> coords = solve(srt, rd.roots[i]);
        if (!coords)
            throw Error("cartan_and_roots: root outside the lattice of the designated simples");
        int sign = 0;
        for (const Rat& c : *coords) {
            if (c.sign() > 0) sign = sign >= 0 ? 1 : 2;
            if (c.sign() < 0) sign = sign <= 0 ? -1 : 2;
        }
        if (sign == 2)
            throw Error("cartan_and_roots: designated raisings are not a simple system");
        if (sign > 0) rd.positive.push_back((int)i);
    }
    for (size_t s = 0; s < simple_roots.size(); ++s)
        rd.simple.push_back(make_simple_info(g, rd, simple_roots[s],
                                             primitive_scale(designated_simple_raisings[s])));
    return rd;
}

// ---- highest weight spaces -----------------------------------------------------

namespace {
std::map<std::vector<Rat>, std::vector<int>> group_by_weight(
    const std::vector<std::vector<Rat>>& weights) {
    std::map<std::vector<Rat>, std::vector<int>> groups;
    for (size_t i = 0; i < weights.size(); ++i) groups[weights[i]].push_back((int)i);
    return groups;
}
}  // namespace

std::vector<HighestWeightSpace> highest_weight_spaces(const Representation& rho,
                                                      const RootDatum& rd) {
    if (!rho.weight_data()) throw NonSplit("highest_weight_spaces: no weight data attached");
    const auto& weights = rho.weight_data()->weights;
    auto groups = group_by_weight(weights);
    std::vector<Matrix> raisings;
    for (const auto& s : rd.simple) raisings.push_back(rho.apply(s.raising));
    std::vector<HighestWeightSpace> out;
    for (const auto& [mu, idxs] : groups) {
        const int l = (int)idxs.size();
        Matrix constraints((int)raisings.size() * rho.dim_v(), l);
        int r = 0;
        for (const Matrix& e : raisings) {
            for (int row = 0; row < rho.dim_v(); ++row, ++r)
                for (int s = 0; s < l; ++s) constraints(r, s) = e(row, idxs[s]);
        }
        Subspace coeff = kernel_basis(constraints);
        if (coeff.dim() == 0) continue;
        Matrix rows(coeff.dim(), rho.dim_v());
        for (int i = 0; i < coeff.dim(); ++i)
            for (int s = 0; s < l; ++s) rows(i, idxs[s]) = coeff.basis()(i, s);
        out.push_back(HighestWeightSpace{mu, rd.dynkin_label(mu), Subspace::span_of_rows(rows)});
    }
    return out;
}

std::vector<HighestWeightSpace> highest_weight_spaces_end(const Representation& rho,
                                                          const RootDatum& rd) {
    if (!rho.weight_data()) throw NonSplit("highest_weight_spaces_end: no weight data attached");
    const int n = rho.dim_v();
    const auto& lam = rho.weight_data()->weights;
    const int rank = rho.algebra().rank();
    // group End basis pairs (a,b) by weight lam_a - lam_b
    std::map<std::vector<Rat>, std::vector<std::pair<int, int>>> groups;
    std::vector<int> group_pos((size_t)n * n, -1);
    std::vector<Rat> diff((size_t)rank);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < rank; ++c) diff[c] = lam[a][c] - lam[b][c];
            auto& vec = groups[diff];
            group_pos[(size_t)a * n + b] = (int)vec.size();
            vec.push_back({a, b});
        }
    std::vector<Matrix> raisings;
    std::vector<std::vector<Rat>> alphas;
    for (const auto& s : rd.simple) {
        raisings.push_back(rho.apply(s.raising));
        alphas.push_back(s.alpha);
    }
    std::vector<HighestWeightSpace> out;
    std::vector<Rat> target_w((size_t)rank);
    for (const auto& [mu, pairs] : groups) {
        const int l = (int)pairs.size();
        std::vector<Matrix> constraint_blocks;
        int total_rows = 0;
        for (size_t k = 0; k < raisings.size(); ++k) {
            const Matrix& e = raisings[k];
            for (int c = 0; c < rank; ++c) target_w[c] = mu[c] + alphas[k][c];
            auto it = groups.find(target_w);
            const int tl = it == groups.end() ? 0 : (int)it->second.size();
            Matrix r(tl, l);
            if (tl > 0) {
                for (int s = 0; s < l; ++s) {
                    auto [a, b] = pairs[s];
                    // [E, E_ab] = sum_x E(x,a) E_xb - sum_y E(b,y) E_ay
                    for (int x = 0; x < n; ++x) {
                        if (e(x, a).is_zero()) continue;
                        int pos = group_pos[(size_t)x * n + b];
                        r(pos, s) += e(x, a);
                    }
                    for (int y = 0; y < n; ++y) {
                        if (e(b, y).is_zero()) continue;
                        int pos = group_pos[(size_t)a * n + y];
                        r(pos, s) -= e(b, y);
                    }
                }
            }
            total_rows += tl;
            constraint_blocks.push_back(std::move(r));
        }
        Matrix constraints(total_rows, l);
        int r0 = 0;
        for (const Matrix& blk : constraint_blocks) {
            for (int i = 0; i < blk.rows(); ++i, ++r0)
                for (int j = 0; j < l; ++j) constraints(r0, j) = blk(i, j);
        }
        Subspace coeff = kernel_basis(constraints);
        if (coeff.dim() == 0) continue;
        Matrix rows(coeff.dim(), n * n);
        for (int i = 0; i < coeff.dim(); ++i)
            for (int s = 0; s < l; ++s) {
                auto [a, b] = pairs[s];
                rows(i, a * n + b) = coeff.basis()(i, s);
            }
        out.push_back(HighestWeightSpace{mu, rd.dynkin_label(mu), Subspace::span_of_rows(rows)});
    }
    return out;
}

WeightedVectors weighted_closure(
    int ambient, const std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& seeds,
    const std::vector<std::pair<VectorOp, std::vector<Rat>>>& ops) {
    std::map<std::vector<Rat>, SubspaceBuilder> builders;
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> queue;  // (weight, vector)
    auto insert = [&](const std::vector<Rat>& w, std::vector<Rat> v) {
        auto it = builders.find(w);
        if (it == builders.end()) it = builders.emplace(w, SubspaceBuilder(ambient)).first;
        if (it->second.insert(v)) queue.push_back({w, std::move(v)});
    };
    for (const auto& [v, w] : seeds) insert(w, v);
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [w, v] = queue[head];
        for (const auto& [op, shift] : ops) {
            std::vector<Rat> img = op(v);
            if (std::all_of(img.begin(), img.end(), [](const Rat& x) { return x.is_zero(); }))
                continue;
            std::vector<Rat> nw = w;
            for (size_t c = 0; c < nw.size(); ++c) nw[c] += shift[c];
            insert(nw, std::move(img));
        }
    }
    WeightedVectors out;
    int total = 0;
    for (const auto& [w, b] : builders) total += b.dim();
    out.rows = Matrix(total, ambient);
    int r = 0;
    for (const auto& [w, b] : builders) {
        Subspace s = b.to_subspace();
        for (int i = 0; i < s.dim(); ++i, ++r) {
            for (int j = 0; j < ambient; ++j) out.rows(r, j) = s.basis()(i, j);
            out.weights.push_back(w);
        }
    }
    return out;
}

}  // namespace rankcrit
