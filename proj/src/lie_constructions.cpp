#include <algorithm>
#include <array>
#include <map>

#include "rankcrit/errors.hpp"
#include "rankcrit/lie.hpp"
#include "rankcrit/linalg.hpp"

namespace rankcrit {

LiePtr lie_from_matrix_basis(const std::vector<Matrix>& basis, std::vector<int> cartan_indices,
                             std::vector<std::string> labels) {
    const int d = (int)basis.size();
    if (d == 0)
        return std::make_shared<const LieAlgebra>(0, std::vector<std::string>{},
                                                  std::vector<int>{},
                                                  std::vector<LieAlgebra::Entry>{});
    const int n = basis[0].rows();
    Matrix rows(d, n * n);
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> f = basis[i].flatten();
        for (int j = 0; j < n * n; ++j) rows(i, j) = f[j];
    }
    CoordinateMap cm(rows);
    std::vector<LieAlgebra::Entry> entries;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Matrix comm = Matrix::commutator(basis[i], basis[j]);
            std::vector<Rat> coords;
            try {
                coords = cm.coords(comm.flatten());
            } catch (const InternalInconsistency&) {
                throw NotClosedUnderBracket(
                    "lie_from_matrix_basis: commutator leaves the span of the basis");
            }
            for (int k = 0; k < d; ++k)
                if (!coords[k].is_zero()) entries.push_back({i, j, k, coords[k]});
        }
    }
    return std::make_shared<const LieAlgebra>(d, std::move(labels), std::move(cartan_indices),
                                              entries);
}

std::pair<LiePtr, Representation> matrix_lie_with_root_basis(const MatrixSpace& l,
                                                             const Subspace& cartan,
                                                             const std::string& label) {
    const int n = l.n();
    const int d = l.dim();
    Matrix lrows(d, n * n);
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> f = l.basis()[i].flatten();
        for (int j = 0; j < n * n; ++j) lrows(i, j) = f[j];
    }
    std::vector<std::vector<Rat>> ordered;  // coordinates in the basis of l
    const int rank = cartan.dim();
    if (rank == 0) {
        for (int i = 0; i < d; ++i) {
            std::vector<Rat> e((size_t)d);
            e[i] = Rat(1);
            ordered.push_back(std::move(e));
        }
    } else {
        CoordinateMap cm(lrows);
        std::vector<std::vector<Rat>> cartan_coords;
        std::vector<Matrix> cartan_ops;
        for (int i = 0; i < rank; ++i) {
            // primitive integer scaling keeps the Cartan eigenvalues integral
            std::vector<Rat> h = primitive_scale(cartan.basis_row(i));
            cartan_coords.push_back(cm.coords(h));
            cartan_ops.push_back(Matrix::unflatten(n, n, h));
        }
        std::vector<Matrix> ops;
        for (const Matrix& h : cartan_ops) {
            Matrix op(d, d);
            for (int j = 0; j < d; ++j) {
                Matrix comm = Matrix::commutator(h, l.basis()[j]);
                std::vector<Rat> c = cm.coords(comm.flatten());
                for (int i = 0; i < d; ++i) op(i, j) = c[i];
            }
            ops.push_back(std::move(op));
        }
        std::vector<EigenBlock> blocks = simultaneous_eigenspaces(ops, d);
        std::stable_sort(blocks.begin(), blocks.end(),
                         [](const EigenBlock& a, const EigenBlock& b) { return a.eigen < b.eigen; });
        SubspaceBuilder seen(d);
        for (const auto& c : cartan_coords) {
            if (!seen.insert(c))
                throw InternalInconsistency("matrix_lie_with_root_basis: dependent Cartan vectors");
            ordered.push_back(c);
        }
        for (const EigenBlock& blk : blocks) {
            bool zero = std::all_of(blk.eigen.begin(), blk.eigen.end(),
                                    [](const Rat& x) { return x.is_zero(); });
            for (int i = 0; i < blk.basis_rows.rows(); ++i) {
                std::vector<Rat> row = blk.basis_rows.row(i);
                if (zero && !seen.insert(row)) continue;  // Cartan vectors already placed
                if (!zero && !seen.insert(row))
                    throw InternalInconsistency("matrix_lie_with_root_basis: dependent root vector");
                ordered.push_back(std::move(row));
            }
        }
        if ((int)ordered.size() != d)
            throw InternalInconsistency("matrix_lie_with_root_basis: basis reassembly lost vectors");
    }
    std::vector<Matrix> mats;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) {
        Matrix m(n, n);
        for (int k = 0; k < d; ++k) {
            if (ordered[i][k].is_zero()) continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!l.basis()[k](a, b).is_zero()) m(a, b) += ordered[i][k] * l.basis()[k](a, b);
        }
        mats.push_back(std::move(m));
        labels.push_back(i < rank ? "h" + std::to_string(i + 1)
                                  : "x" + std::to_string(i - rank + 1));
    }
    std::vector<int> cartan_idx;
    for (int i = 0; i < rank; ++i) cartan_idx.push_back(i);
    LiePtr g = lie_from_matrix_basis(mats, cartan_idx, labels);
    // the natural module basis is a weight basis iff the Cartan matrices are diagonal
    std::optional<WeightData> wd;
    bool diag = true;
    for (int c = 0; c < rank && diag; ++c)
        for (int a = 0; a < n && diag; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && !mats[c](a, b).is_zero()) { diag = false; break; }
    if (diag) {
        WeightData w;
        for (int v = 0; v < n; ++v) {
            std::vector<Rat> lam((size_t)rank);
            for (int c = 0; c < rank; ++c) lam[c] = mats[c](v, v);
            w.weights.push_back(std::move(lam));
        }
        wd = std::move(w);
    }
    Representation rep(g, mats, label, std::move(wd), /*validate=*/true, n);
    return {g, std::move(rep)};
}

// ---- classical algebras -------------------------------------------------------

namespace {
int pair_index(int m, int i, int j) {
    // position of E_ij (i != j) in lexicographic order over ordered pairs
    int idx = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if (a == i && b == j) return idx;
            ++idx;
        }
    throw Error("pair_index: bad pair");
}
}  // namespace

std::pair<LiePtr, Representation> sl(int m) {
    if (m < 2) throw Error("sl: m >= 2 required");
    std::vector<Matrix> mats;
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            Matrix e(m, m);
            e(i, j) = Rat(1);
            mats.push_back(std::move(e));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    std::vector<int> cartan;
    for (int i = 0; i + 1 < m; ++i) {
        Matrix h(m, m);
        h(i, i) = Rat(1);
        h(i + 1, i + 1) = Rat(-1);
        cartan.push_back((int)mats.size());
        mats.push_back(std::move(h));
        labels.push_back("h" + std::to_string(i + 1));
    }
    LiePtr g = lie_from_matrix_basis(mats, cartan, labels);
    WeightData wd;
    for (int v = 0; v < m; ++v) {
        std::vector<Rat> lam((size_t)m - 1);
        for (int c = 0; c + 1 < m; ++c) lam[c] = Rat((v == c) - (v == c + 1));
        wd.weights.push_back(std::move(lam));
    }
    Representation rep(g, std::move(mats), "sl" + std::to_string(m) + "-std", std::move(wd));
    return {g, std::move(rep)};
}

RootDatum sl_root_datum(const LiePtr& g, int m) {
    std::vector<std::vector<Rat>> raisings;
    for (int i = 0; i + 1 < m; ++i) {
        std::vector<Rat> e((size_t)g->dim());
        e[pair_index(m, i, i + 1)] = Rat(1);
        raisings.push_back(std::move(e));
    }
    return cartan_and_roots(g, raisings);
}

namespace {
MatrixSpace form_algebra(const Matrix& b) {
    const int n = b.rows();
    Matrix rows(n * (n + 1) / 2, n * n);
    int r = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v, ++r)
            for (int w = 0; w < n; ++w) {
                if (!b(u, w).is_zero()) rows(r, w * n + v) += b(u, w);
                if (!b(w, v).is_zero()) rows(r, w * n + u) += b(w, v);
            }
    Subspace sol = restrict_by_constraints(Subspace::full(n * n), rows);
    std::vector<Matrix> basis;
    for (int i = 0; i < sol.dim(); ++i) basis.push_back(Matrix::unflatten(n, n, sol.basis_row(i)));
    return MatrixSpace(n, std::move(basis));
}

Subspace diagonal_members_of_form_algebra(const Matrix& b) {
    const int n = b.rows();
    // diag(d) lies in the algebra iff B_uv (d_u + d_v) = 0 whenever B_uv != 0
    std::vector<std::vector<Rat>> rows;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (b(u, v).is_zero()) continue;
            std::vector<Rat> row((size_t)n);
            row[u] += Rat(1);
            row[v] += Rat(1);
            rows.push_back(std::move(row));
        }
    Matrix cm((int)rows.size(), n);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < n; ++j) cm(i, j) = rows[i][j];
    Subspace diag = kernel_basis(cm);
    Matrix lifted(diag.dim(), n * n);
    for (int i = 0; i < diag.dim(); ++i)
        for (int j = 0; j < n; ++j) lifted(i, j * n + j) = diag.basis()(i, j);
    return Subspace::span_of_rows(lifted);
}
}  // namespace

std::pair<LiePtr, Representation> so_split(int n) {
    if (n < 3) throw Error("so_split: n >= 3 required");
    Matrix b(n, n);
    for (int i = 0; i < n; ++i) b(i, n - 1 - i) = Rat(1);
    MatrixSpace l = form_algebra(b);
    return matrix_lie_with_root_basis(l, diagonal_members_of_form_algebra(b),
                                      "so" + std::to_string(n) + "-std");
}

std::pair<LiePtr, Representation> sp_split(int n) {
    if (n < 2 || n % 2 != 0) throw Error("sp_split: even n >= 2 required");
    Matrix b(n, n);
    for (int i = 0; i < n / 2; ++i) {
        b(i, n - 1 - i) = Rat(1);
        b(n - 1 - i, i) = Rat(-1);
    }
    MatrixSpace l = form_algebra(b);
    return matrix_lie_with_root_basis(l, diagonal_members_of_form_algebra(b),
                                      "sp" + std::to_string(n) + "-std");
}

// ---- sl_m on polynomials --------------------------------------------------------

Representation symmetric_power_poly_rep(int m, int k) {
    if (m < 2 || k < 0) throw Error("symmetric_power_poly_rep: m >= 2, k >= 0 required");
    auto [g, std_rep] = sl(m);
    (void)std_rep;
    std::vector<std::vector<int>> monos = degree_monomials(m, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;
    const int nn = (int)monos.size();
    std::vector<Matrix> mats;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            // E_ij acts as -x_j d/dx_i on polynomials on K^m
            Matrix e(nn, nn);
            for (int col = 0; col < nn; ++col) {
                const std::vector<int>& a = monos[col];
                if (a[i] == 0) continue;
                std::vector<int> a2 = a;
                a2[i] -= 1;
                a2[j] += 1;
                e(index[a2], col) = Rat((long long)-a[i]);
            }
            mats.push_back(std::move(e));
        }
    for (int c = 0; c + 1 < m; ++c) {
        Matrix h(nn, nn);
        for (int col = 0; col < nn; ++col)
            h(col, col) = Rat((long long)(monos[col][c + 1] - monos[col][c]));
        mats.push_back(std::move(h));
    }
    WeightData wd;
    for (int col = 0; col < nn; ++col) {
        std::vector<Rat> lam((size_t)m - 1);
        for (int c = 0; c + 1 < m; ++c)
            lam[c] = Rat((long long)(monos[col][c + 1] - monos[col][c]));
        wd.weights.push_back(std::move(lam));
    }
    return Representation(g, std::move(mats),
                          "sl" + std::to_string(m) + "-sym" + std::to_string(k), std::move(wd));
}

Matrix poly_lowering_power(int m, int k, int d) {
    std::vector<std::vector<int>> monos = degree_monomials(m, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;
    const int nn = (int)monos.size();
    Matrix op(nn, nn);  // x_m d/dx_1
    for (int col = 0; col < nn; ++col) {
        const std::vector<int>& a = monos[col];
        if (a[0] == 0) continue;
        std::vector<int> a2 = a;
        a2[0] -= 1;
        a2[m - 1] += 1;
        op(index[a2], col) = Rat((long long)a[0]);
    }
    Matrix acc = Matrix::identity(nn);
    for (int i = 0; i < d; ++i) acc = acc * op;
    return acc;
}

Representation adjoint_rep(const LiePtr& g) {
    std::vector<Matrix> mats;
    for (int i = 0; i < g->dim(); ++i) mats.push_back(g->ad_basis(i));
    std::optional<std::vector<std::vector<Rat>>> w = basis_ad_weights(*g);
    std::optional<WeightData> wd;
    if (w) wd = WeightData{std::move(*w)};
    Representation rep(g, std::move(mats), "adjoint", std::move(wd), true, g->dim());
    if (!rep.weight_data() && g->rank() > 0) return with_weight_basis(rep);
    return rep;
}

// ---- split octonions and the exceptional constructions --------------------------

std::vector<Rat> NonassocAlgebra::multiply(const std::vector<Rat>& x,
                                           const std::vector<Rat>& y) const {
    std::vector<Rat> out((size_t)dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rat c = x[i] * y[j];
            for (int k = 0; k < dim; ++k)
                if (!mult[i][j][k].is_zero()) out[k] += c * mult[i][j][k];
        }
    }
    return out;
}

NonassocAlgebra zorn_octonions() {
    // (a, u; v, b)(a', u'; v', b') =
    //   (aa' + u.v', a u' + b' u - v x v'; a' v + b v' + u x u', bb' + v.u')
    NonassocAlgebra alg;
    alg.dim = 8;
    alg.labels = {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};
    struct Elt {
        Rat a, b;
        std::array<Rat, 3> u, v;
    };
    auto basis_elt = [](int k) {
        Elt e;
        if (k == 0) e.a = Rat(1);
        else if (k == 1) e.b = Rat(1);
        else if (k < 5) e.u[k - 2] = Rat(1);
        else e.v[k - 5] = Rat(1);
        return e;
    };
    auto cross = [](const std::array<Rat, 3>& x, const std::array<Rat, 3>& y) {
        return std::array<Rat, 3>{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                                  x[0] * y[1] - x[1] * y[0]};
    };
    auto dot = [](const std::array<Rat, 3>& x, const std::array<Rat, 3>& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    };
    alg.mult.assign(8, std::vector<std::vector<Rat>>(8, std::vector<Rat>(8)));
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Elt x = basis_elt(i), y = basis_elt(j);
            Elt z;
            z.a = x.a * y.a + dot(x.u, y.v);
            z.b = x.b * y.b + dot(x.v, y.u);
            std::array<Rat, 3> vxv = cross(x.v, y.v), uxu = cross(x.u, y.u);
            for (int t = 0; t < 3; ++t) {
                z.u[t] = x.a * y.u[t] + y.b * x.u[t] - vxv[t];
                z.v[t] = y.a * x.v[t] + x.b * y.v[t] + uxu[t];
            }
            std::vector<Rat>& out = alg.mult[i][j];
            out[0] = z.a;
            out[1] = z.b;
            for (int t = 0; t < 3; ++t) {
                out[2 + t] = z.u[t];
                out[5 + t] = z.v[t];
            }
        }
    }
    return alg;
}

namespace {
std::vector<Rat> algebra_identity(const NonassocAlgebra& a) {
    // solve e * a_i = a_i and a_i * e = a_i for all i
    Matrix rows(2 * a.dim * a.dim, a.dim);
    std::vector<Rat> rhs((size_t)2 * a.dim * a.dim);
    int r = 0;
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k, ++r) {
            for (int e = 0; e < a.dim; ++e) rows(r, e) = a.mult[e][i][k];
            rhs[r] = Rat(i == k ? 1 : 0);
        }
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k, ++r) {
            for (int e = 0; e < a.dim; ++e) rows(r, e) = a.mult[i][e][k];
            rhs[r] = Rat(i == k ? 1 : 0);
        }
    std::optional<std::vector<Rat>> e = solve(rows, rhs);
    if (!e) throw Error("algebra has no identity element");
    return *e;
}

std::vector<Rat> octonion_conj(const NonassocAlgebra& oct, const std::vector<Rat>& identity,
                               const std::vector<Rat>& x) {
    // conj(x) = (2/dim) trace(L_x) 1 - x, valid in a unital composition algebra
    Rat tr;
    for (int i = 0; i < oct.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < oct.dim; ++j) tr += x[i] * oct.mult[i][j][j];
    }
    Rat scale = Rat(2, oct.dim) * tr;
    std::vector<Rat> out((size_t)oct.dim);
    for (int i = 0; i < oct.dim; ++i) out[i] = scale * identity[i] - x[i];
    return out;
}
}  // namespace

NonassocAlgebra jordan_h3(const NonassocAlgebra& oct) {
    const int od = oct.dim;
    std::vector<Rat> id = algebra_identity(oct);
    const std::array<std::pair<int, int>, 3> slots{{{0, 1}, {1, 2}, {0, 2}}};
    const int dim = 3 + 3 * od;
    using OctMat = std::array<std::array<std::vector<Rat>, 3>, 3>;
    auto zero_mat = [&]() {
        OctMat m;
        for (auto& row : m)
            for (auto& e : row) e.assign((size_t)od, Rat(0));
        return m;
    };
    auto basis_mat = [&](int idx) {
        OctMat m = zero_mat();
        if (idx < 3) {
            m[idx][idx] = id;
        } else {
            int slot = (idx - 3) / od, unit = (idx - 3) % od;
            auto [i, j] = slots[slot];
            std::vector<Rat> x((size_t)od);
            x[unit] = Rat(1);
            m[i][j] = x;
            m[j][i] = octonion_conj(oct, id, x);
        }
        return m;
    };
    auto mat_mul = [&](const OctMat& x, const OctMat& y) {
        OctMat z = zero_mat();
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j) {
                    std::vector<Rat> p = oct.multiply(x[i][j], y[j][k]);
                    for (int t = 0; t < od; ++t) z[i][k][t] += p[t];
                }
        return z;
    };
    auto coords_of = [&](const OctMat& m) {
        std::vector<Rat> c((size_t)dim);
        for (int i = 0; i < 3; ++i) {
            // diagonal entries must be scalar multiples of the identity
            Rat a;
            for (int t = 0; t < od; ++t) {
                if (id[t].is_zero()) continue;
                a = m[i][i][t] / id[t];
                break;
            }
            for (int t = 0; t < od; ++t)
                if (m[i][i][t] != a * id[t])
                    throw InternalInconsistency("jordan_h3: diagonal entry not scalar");
            c[i] = a;
        }
        for (int slot = 0; slot < 3; ++slot) {
            auto [i, j] = slots[slot];
            std::vector<Rat> cj = octonion_conj(oct, id, m[i][j]);
            for (int t = 0; t < od; ++t) {
                c[3 + slot * od + t] = m[i][j][t];
                if (m[j][i][t] != cj[t])
                    throw InternalInconsistency("jordan_h3: product is not hermitian");
            }
        }
        return c;
    };
    NonassocAlgebra h;
    h.dim = dim;
    h.labels = {"E1", "E2", "E3"};
    for (int slot = 0; slot < 3; ++slot) {
        auto [i, j] = slots[slot];
        for (int t = 0; t < od; ++t)
            h.labels.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1) + "_" +
                               oct.labels[t]);
    }
    h.mult.assign(dim, std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim)));
    std::vector<OctMat> mats;
    for (int i = 0; i < dim; ++i) mats.push_back(basis_mat(i));
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            OctMat xy = mat_mul(mats[i], mats[j]);
            OctMat yx = mat_mul(mats[j], mats[i]);
            OctMat sym = zero_mat();
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    for (int t = 0; t < od; ++t)
                        sym[p][q][t] = (xy[p][q][t] + yx[p][q][t]) * Rat(1, 2);
            std::vector<Rat> c = coords_of(sym);
            h.mult[i][j] = c;
            h.mult[j][i] = std::move(c);
        }
    }
    return h;
}

DerivationAlgebra derivation_algebra(const NonassocAlgebra& a) {
    const int d = a.dim;
    const int nn = d * d;
    // rows of D(a_i a_j) = D(a_i) a_j + a_i D(a_j), chunked by i:
    // sum_l (c_{lj}^m D_{li} + c_{il}^m D_{lj}) - sum_k c_{ij}^k D_{mk} = 0
    Subspace space = Subspace::full(nn);
    using SparseRow = std::vector<std::pair<int, Rat>>;
    for (int i = 0; i < d && space.dim() > 0; ++i) {
        std::vector<SparseRow> chunk;
        for (int j = 0; j < d; ++j) {
            for (int m = 0; m < d; ++m) {
                SparseRow row;
                for (int l = 0; l < d; ++l) {
                    if (!a.mult[l][j][m].is_zero()) row.push_back({l * d + i, a.mult[l][j][m]});
                    if (!a.mult[i][l][m].is_zero()) row.push_back({l * d + j, a.mult[i][l][m]});
                }
                for (int k = 0; k < d; ++k)
                    if (!a.mult[i][j][k].is_zero()) row.push_back({m * d + k, -a.mult[i][j][k]});
                if (!row.empty()) chunk.push_back(std::move(row));
            }
        }
        // constraints restricted to the current space
        Matrix cb((int)chunk.size(), space.dim());
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < (int)chunk.size(); ++r) {
            for (int t = 0; t < space.dim(); ++t) {
                Rat acc;
                for (const auto& [col, val] : chunk[r]) {
                    const Rat& bval = space.basis()(t, col);
                    if (!bval.is_zero()) acc += val * bval;
                }
                cb(r, t) = acc;
            }
        }
        Subspace coeff = kernel_basis(cb);
        space = Subspace::span_of_rows(coeff.basis() * space.basis());
    }
    std::vector<Matrix> der_basis;
    for (int i = 0; i < space.dim(); ++i) der_basis.push_back(Matrix::unflatten(d, d, space.basis_row(i)));
    MatrixSpace l(d, std::move(der_basis));
    // Cartan: diagonal derivations t with t_k = t_i + t_j on every structure constant
    std::vector<std::vector<Rat>> trows;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (a.mult[i][j][k].is_zero()) continue;
                std::vector<Rat> row((size_t)d);
                row[k] += Rat(1);
                row[i] -= Rat(1);
                row[j] -= Rat(1);
                trows.push_back(std::move(row));
            }
    Matrix tmat((int)trows.size(), d);
    for (int i = 0; i < (int)trows.size(); ++i)
        for (int j = 0; j < d; ++j) tmat(i, j) = trows[i][j];
    Subspace tker = kernel_basis(tmat);
    Matrix lifted(tker.dim(), nn);
    for (int i = 0; i < tker.dim(); ++i)
        for (int j = 0; j < d; ++j) lifted(i, j * d + j) = tker.basis()(i, j);
    Subspace cartan = Subspace::span_of_rows(lifted);
    auto [g, rep] = matrix_lie_with_root_basis(l, cartan, "der");
    return DerivationAlgebra{g, std::move(rep)};
}

// ---- sl3 irreducibles -----------------------------------------------------------

Representation irreducible_sl3_rep(int a, int b) {
    if (a < 0 || b < 0) throw Error("irreducible_sl3_rep: nonnegative labels required");
    auto [g, std_rep] = sl(3);
    Representation t = symmetric_power_rep(std_rep, a);
    int gen_index = 0;  // monomial (a,0,0) is first in the descending order
    for (int r = 0; r < b; ++r) {
        t = tensor_rep(t, dual_rep(std_rep));
        gen_index = gen_index * 3 + 2;  // highest weight of the dual is e_3^*
    }
    std::optional<std::vector<std::vector<Rat>>> adw = basis_ad_weights(*g);
    if (!adw) throw InternalInconsistency("irreducible_sl3_rep: sl basis lost its root grading");
    std::vector<Rat> gen((size_t)t.dim_v());
    gen[gen_index] = Rat(1);
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> seeds{
        {gen, t.weight_data()->weights[gen_index]}};
    std::vector<std::pair<VectorOp, std::vector<Rat>>> ops;
    for (int i = 0; i < g->dim(); ++i) {
        const Matrix* m = &t.matrix(i);
        ops.push_back({[m](const std::vector<Rat>& v) { return m->apply(v); }, (*adw)[i]});
    }
    WeightedVectors closure = weighted_closure(t.dim_v(), seeds, ops);
    if ((long long)closure.rows.rows() != weyl_dim_sl3(a, b))
        throw DimensionMismatch("irreducible_sl3_rep: dimension " +
                                std::to_string(closure.rows.rows()) + " != Weyl value " +
                                std::to_string(weyl_dim_sl3(a, b)));
    return restrict_rep(t, closure.rows, closure.weights,
                        "sl3-irrep[" + std::to_string(a) + "," + std::to_string(b) + "]");
}

}  // namespace rankcrit
