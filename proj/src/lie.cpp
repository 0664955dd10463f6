#include "rankcrit/lie.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include "rankcrit/errors.hpp"
#include "rankcrit/linalg.hpp"

namespace rankcrit {

namespace {
void sparse_canonicalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.k < b.k; });
    SparseVec out;
    for (const SparseTerm& t : v) {
        if (!out.empty() && out.back().k == t.k)
            out.back().c += t.c;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const SparseTerm& t) { return t.c.is_zero(); }),
              out.end());
    v = std::move(out);
}

bool sparse_equal_neg(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].k != b[i].k || a[i].c != -b[i].c) return false;
    return true;
}
}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels, std::vector<int> cartan,
                       const std::vector<Entry>& constants)
    : dim_(dim), labels_(std::move(labels)), cartan_(std::move(cartan)),
      table_((size_t)dim * dim) {
    if (labels_.empty()) {
        labels_.resize((size_t)dim);
        for (int i = 0; i < dim; ++i) labels_[i] = "x" + std::to_string(i + 1);
    }
    if ((int)labels_.size() != dim) throw ParseError("LieAlgebra: label count mismatch");
    std::vector<bool> given((size_t)dim * dim, false);
    for (const Entry& e : constants) {
        if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
            throw ParseError("LieAlgebra: structure constant index out of range");
        if (e.c.is_zero()) continue;
        if (e.i == e.j) throw AntisymmetryViolation("LieAlgebra: nonzero [x_i, x_i]");
        table_[(size_t)e.i * dim + e.j].push_back({e.k, e.c});
        given[(size_t)e.i * dim + e.j] = true;
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) sparse_canonicalize(table_[(size_t)i * dim + j]);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            SparseVec& up = table_[(size_t)i * dim + j];
            SparseVec& lo = table_[(size_t)j * dim + i];
            bool has_up = given[(size_t)i * dim + j], has_lo = given[(size_t)j * dim + i];
            if (has_up && has_lo) {
                if (!sparse_equal_neg(up, lo))
                    throw AntisymmetryViolation("LieAlgebra: [x_i,x_j] != -[x_j,x_i] in input");
            } else if (has_up) {
                lo.clear();
                for (const SparseTerm& t : up) lo.push_back({t.k, -t.c});
            } else if (has_lo) {
                up.clear();
                for (const SparseTerm& t : lo) up.push_back({t.k, -t.c});
            }
        }
    }
    for (int c : cartan_) {
        if (c < 0 || c >= dim) throw ParseError("LieAlgebra: cartan index out of range");
    }
    validate();
}

void LieAlgebra::validate() const {
    // Jacobi on all basis triples
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < dim_; ++i) {
        if (bad.load()) continue;
        std::vector<Rat> acc((size_t)dim_);
        for (int j = i + 1; j < dim_; ++j) {
            for (int k = j + 1; k < dim_; ++k) {
                for (Rat& x : acc) x = Rat(0);
                auto add = [&](int a, const SparseVec& bc) {
                    for (const SparseTerm& t : bc)
                        for (const SparseTerm& s : bracket_basis(a, t.k)) acc[s.k] += t.c * s.c;
                };
                add(i, bracket_basis(j, k));
                add(j, bracket_basis(k, i));
                add(k, bracket_basis(i, j));
                for (const Rat& x : acc)
                    if (!x.is_zero()) { bad.store(true); break; }
            }
        }
    }
    if (bad.load()) throw JacobiViolation("LieAlgebra: Jacobi identity fails on a basis triple");
    for (size_t a = 0; a < cartan_.size(); ++a)
        for (size_t b = a + 1; b < cartan_.size(); ++b)
            if (!bracket_basis(cartan_[a], cartan_[b]).empty())
                throw CartanNotCommuting("LieAlgebra: designated Cartan elements do not commute");
}

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if ((int)x.size() != dim_ || (int)y.size() != dim_)
        throw DimensionMismatch("LieAlgebra::bracket: coordinate length");
    std::vector<Rat> out((size_t)dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rat c = x[i] * y[j];
            for (const SparseTerm& t : bracket_basis(i, j)) out[t.k] += c * t.c;
        }
    }
    return out;
}

Matrix LieAlgebra::ad_basis(int i) const {
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (const SparseTerm& t : bracket_basis(i, j)) m(t.k, j) = t.c;
    return m;
}

Matrix LieAlgebra::ad(const std::vector<Rat>& x) const {
    Matrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            for (const SparseTerm& t : bracket_basis(i, j)) m(t.k, j) += x[i] * t.c;
    }
    return m;
}

std::vector<LieAlgebra::Entry> LieAlgebra::structure_entries() const {
    std::vector<Entry> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (const SparseTerm& t : bracket_basis(i, j)) out.push_back({i, j, t.k, t.c});
    return out;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim_ != b.dim_ || a.labels_ != b.labels_ || a.cartan_ != b.cartan_) return false;
    for (size_t t = 0; t < a.table_.size(); ++t) {
        const SparseVec &u = a.table_[t], &v = b.table_[t];
        if (u.size() != v.size()) return false;
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i].k != v[i].k || u[i].c != v[i].c) return false;
    }
    return true;
}

Representation::Representation(LiePtr g, std::vector<Matrix> matrices, std::string label,
                               std::optional<WeightData> weights, bool validate, int dim_v_hint)
    : g_(std::move(g)), mats_(std::move(matrices)), label_(std::move(label)),
      weights_(std::move(weights)) {
    if ((int)mats_.size() != g_->dim())
        throw DimensionMismatch("Representation: one matrix per basis element required");
    dim_v_ = mats_.empty() ? std::max(dim_v_hint, 0) : mats_[0].rows();
    for (const Matrix& m : mats_)
        if (m.rows() != dim_v_ || m.cols() != dim_v_)
            throw DimensionMismatch("Representation: matrices must be square of equal size");
    if (weights_) {
        if ((int)weights_->weights.size() != dim_v_)
            throw DimensionMismatch("Representation: weight count != module dimension");
        for (const auto& w : weights_->weights)
            if ((int)w.size() != g_->rank())
                throw DimensionMismatch("Representation: weight arity != Cartan rank");
    }
    if (validate) check_homomorphism();
}

Matrix Representation::apply(const std::vector<Rat>& x) const {
    if ((int)x.size() != g_->dim()) throw DimensionMismatch("Representation::apply: coords");
    Matrix acc(dim_v_, dim_v_);
    for (size_t i = 0; i < mats_.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (int a = 0; a < dim_v_; ++a)
            for (int b = 0; b < dim_v_; ++b)
                if (!mats_[i](a, b).is_zero()) acc(a, b) += x[i] * mats_[i](a, b);
    }
    return acc;
}

void Representation::check_homomorphism() const {
    const int d = g_->dim();
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < d; ++i) {
        if (bad.load()) continue;
        for (int j = i + 1; j < d; ++j) {
            Matrix lhs(dim_v_, dim_v_);
            for (const SparseTerm& t : g_->bracket_basis(i, j)) {
                for (int a = 0; a < dim_v_; ++a)
                    for (int b = 0; b < dim_v_; ++b)
                        if (!mats_[t.k](a, b).is_zero()) lhs(a, b) += t.c * mats_[t.k](a, b);
            }
            if (lhs != Matrix::commutator(mats_[i], mats_[j])) {
                bad.store(true);
                break;
            }
        }
    }
    if (bad.load())
        throw Error("Representation '" + label_ + "': homomorphism identity fails");
}

Matrix killing_form(const LieAlgebra& g) {
    const int d = g.dim();
    std::vector<Matrix> ads;
    ads.reserve(d);
    for (int i = 0; i < d; ++i) ads.push_back(g.ad_basis(i));
    Matrix kappa(d, d);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Rat tr;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero())
                        tr += ads[i](a, b) * ads[j](b, a);
            kappa(i, j) = tr;
            kappa(j, i) = tr;
        }
    }
    return kappa;
}

bool is_nondegenerate(const Matrix& symmetric) {
    return !determinant(symmetric).is_zero();
}

Matrix invariant_bilinear_form(const Representation& rho) {
    const int n = rho.dim_v();
    const int nsym = n * (n + 1) / 2;
    auto idx = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * n - u * (u - 1) / 2 + (v - u);
    };
    Matrix rows((int)rho.matrices().size() * nsym, nsym);
    int r = 0;
    for (const Matrix& x : rho.matrices()) {
        for (int u = 0; u < n; ++u) {
            for (int v = u; v < n; ++v, ++r) {
                // B(X e_u, e_v) + B(e_u, X e_v) = 0
                for (int w = 0; w < n; ++w) {
                    if (!x(w, u).is_zero()) rows(r, idx(w, v)) += x(w, u);
                    if (!x(w, v).is_zero()) rows(r, idx(u, w)) += x(w, v);
                }
            }
        }
    }
    Subspace sol = kernel_basis(rows);
    if (sol.dim() == 0) throw NoInvariantForm("invariant_bilinear_form: no invariant form");
    auto build = [&](const std::vector<Rat>& coeffs) {
        Matrix b(n, n);
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v) {
                b(u, v) = coeffs[idx(u, v)];
                b(v, u) = b(u, v);
            }
        return b;
    };
    // prefer a nondegenerate member: basis vectors first, then cumulative sums
    std::vector<Rat> acc((size_t)nsym);
    for (int i = 0; i < sol.dim(); ++i) {
        Matrix b = build(sol.basis_row(i));
        if (is_nondegenerate(b)) return b;
    }
    for (int i = 0; i < sol.dim(); ++i) {
        std::vector<Rat> row = sol.basis_row(i);
        for (int j = 0; j < nsym; ++j) acc[j] += row[j];
        Matrix b = build(acc);
        if (i > 0 && is_nondegenerate(b)) return b;
    }
    return build(sol.basis_row(0));  // degenerate; callers check
}

MatrixSpace orthogonal_algebra_of_form(const Matrix& b) {
    if (!b.is_square()) throw DimensionMismatch("orthogonal_algebra_of_form: not square");
    const int n = b.rows();
    if (b != b.transpose()) throw Error("orthogonal_algebra_of_form: form is not symmetric");
    if (!is_nondegenerate(b)) throw DegenerateForm("orthogonal_algebra_of_form: degenerate form");
    // (B X + X^t B)_{uv} = 0 for u <= v
    Matrix rows(n * (n + 1) / 2, n * n);
    int r = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v, ++r) {
            for (int w = 0; w < n; ++w) {
                if (!b(u, w).is_zero()) rows(r, w * n + v) += b(u, w);
                if (!b(w, v).is_zero()) rows(r, w * n + u) += b(w, v);
            }
        }
    }
    Subspace sol = restrict_by_constraints(Subspace::full(n * n), rows);
    std::vector<Matrix> basis;
    for (int i = 0; i < sol.dim(); ++i) basis.push_back(Matrix::unflatten(n, n, sol.basis_row(i)));
    return MatrixSpace(n, std::move(basis));
}

Subspace invariant_vectors(const Representation& rho) {
    const int n = rho.dim_v();
    const int d = (int)rho.matrices().size();
    Matrix stacked(d * n, n);
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < n; ++a)
            for (int bcol = 0; bcol < n; ++bcol) stacked(i * n + a, bcol) = rho.matrix(i)(a, bcol);
    return kernel_basis(stacked);
}

Subspace submodule_generated(const Representation& rho,
                             const std::vector<std::vector<Rat>>& vectors) {
    const int n = rho.dim_v();
    SubspaceBuilder sb(n);
    std::vector<std::vector<Rat>> queue;
    for (const auto& v : vectors)
        if (sb.insert(v)) queue.push_back(v);
    for (size_t head = 0; head < queue.size(); ++head) {
        std::vector<Rat> v = queue[head];
        for (const Matrix& m : rho.matrices()) {
            std::vector<Rat> w = m.apply(v);
            if (sb.insert(w)) queue.push_back(std::move(w));
        }
    }
    return sb.to_subspace();
}

Matrix unipotent_exponential(const Matrix& nilpotent) {
    if (!nilpotent.is_square()) throw DimensionMismatch("unipotent_exponential: not square");
    const int n = nilpotent.rows();
    Matrix acc = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    mpz_class fact = 1;
    for (int j = 1; j <= n; ++j) {
        power = power * nilpotent;
        if (power.is_zero()) return acc;
        fact *= j;
        acc = acc + Rat(mpq_class(mpz_class(1), fact)) * power;
    }
    throw NotNilpotent("unipotent_exponential: matrix is not nilpotent");
}

Matrix unipotent_exponential(const Representation& rho, const std::vector<Rat>& x) {
    return unipotent_exponential(rho.apply(x));
}

Representation tensor_rep(const Representation& a, const Representation& b) {
    if (!(a.algebra() == b.algebra()))
        throw Error("tensor_rep: representations of different algebras");
    const int da = a.dim_v(), db = b.dim_v();
    std::vector<Matrix> mats;
    for (int i = 0; i < (int)a.matrices().size(); ++i) {
        Matrix m(da * db, da * db);
        const Matrix &x = a.matrix(i), &y = b.matrix(i);
        for (int p = 0; p < da; ++p)
            for (int q = 0; q < da; ++q)
                if (!x(p, q).is_zero())
                    for (int s = 0; s < db; ++s) m(p * db + s, q * db + s) += x(p, q);
        for (int s = 0; s < db; ++s)
            for (int t = 0; t < db; ++t)
                if (!y(s, t).is_zero())
                    for (int p = 0; p < da; ++p) m(p * db + s, p * db + t) += y(s, t);
        mats.push_back(std::move(m));
    }
    std::optional<WeightData> wd;
    if (a.weight_data() && b.weight_data()) {
        WeightData w;
        for (int p = 0; p < da; ++p)
            for (int s = 0; s < db; ++s) {
                std::vector<Rat> sumw = a.weight_data()->weights[p];
                for (size_t c = 0; c < sumw.size(); ++c) sumw[c] += b.weight_data()->weights[s][c];
                w.weights.push_back(std::move(sumw));
            }
        wd = std::move(w);
    }
    return Representation(a.algebra_ptr(), std::move(mats),
                          "tensor(" + a.label() + "," + b.label() + ")", std::move(wd));
}

std::vector<std::vector<int>> degree_monomials(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur((size_t)nvars, 0);
    // lexicographically descending in the exponent of x1, then x2, ...
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, remaining - e);
        }
    };
    if (nvars > 0) rec(0, degree);
    return out;
}

Representation symmetric_power_rep(const Representation& a, int k) {
    const int n = a.dim_v();
    std::vector<std::vector<int>> monos = degree_monomials(n, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;
    const int nn = (int)monos.size();
    std::vector<Matrix> mats;
    for (const Matrix& x : a.matrices()) {
        Matrix m(nn, nn);
        for (int col = 0; col < nn; ++col) {
            const std::vector<int>& e = monos[col];
            for (int v = 0; v < n; ++v) {
                if (e[v] == 0) continue;
                for (int u = 0; u < n; ++u) {
                    if (x(u, v).is_zero()) continue;
                    std::vector<int> e2 = e;
                    e2[v] -= 1;
                    e2[u] += 1;
                    m(index[e2], col) += Rat((long long)e[v]) * x(u, v);
                }
            }
        }
        mats.push_back(std::move(m));
    }
    std::optional<WeightData> wd;
    if (a.weight_data()) {
        WeightData w;
        for (const auto& e : monos) {
            std::vector<Rat> acc((size_t)a.algebra().rank());
            for (int v = 0; v < n; ++v) {
                if (e[v] == 0) continue;
                for (size_t c = 0; c < acc.size(); ++c)
                    acc[c] += Rat((long long)e[v]) * a.weight_data()->weights[v][c];
            }
            w.weights.push_back(std::move(acc));
        }
        wd = std::move(w);
    }
    return Representation(a.algebra_ptr(), std::move(mats),
                          "S^" + std::to_string(k) + "(" + a.label() + ")", std::move(wd));
}

Representation symmetric_square_rep(const Representation& a) { return symmetric_power_rep(a, 2); }

Representation dual_rep(const Representation& a) {
    std::vector<Matrix> mats;
    for (const Matrix& x : a.matrices()) mats.push_back(Rat(-1) * x.transpose());
    std::optional<WeightData> wd;
    if (a.weight_data()) {
        WeightData w;
        for (const auto& lam : a.weight_data()->weights) {
            std::vector<Rat> neg = lam;
            for (Rat& c : neg) c = -c;
            w.weights.push_back(std::move(neg));
        }
        wd = std::move(w);
    }
    return Representation(a.algebra_ptr(), std::move(mats), "dual(" + a.label() + ")",
                          std::move(wd));
}

Representation restrict_rep(const Representation& rho, const Matrix& basis_rows,
                            std::optional<std::vector<std::vector<Rat>>> row_weights,
                            const std::string& label) {
    CoordinateMap cm(basis_rows);
    const int k = basis_rows.rows();
    std::vector<Matrix> mats;
    for (const Matrix& x : rho.matrices()) {
        Matrix m(k, k);
        for (int j = 0; j < k; ++j) {
            std::vector<Rat> img = x.apply(basis_rows.row(j));
            std::vector<Rat> c = cm.coords(img);  // throws if not invariant
            for (int i = 0; i < k; ++i) m(i, j) = c[i];
        }
        mats.push_back(std::move(m));
    }
    std::optional<WeightData> wd;
    if (row_weights) wd = WeightData{std::move(*row_weights)};
    return Representation(rho.algebra_ptr(), std::move(mats), label, std::move(wd));
}

namespace {
std::optional<std::vector<std::vector<Rat>>> row_weights_from_support(const Matrix& rows,
                                                                      const WeightData& wd) {
    std::vector<std::vector<Rat>> out;
    for (int i = 0; i < rows.rows(); ++i) {
        std::optional<std::vector<Rat>> w;
        for (int j = 0; j < rows.cols(); ++j) {
            if (rows(i, j).is_zero()) continue;
            if (!w)
                w = wd.weights[j];
            else if (*w != wd.weights[j])
                return std::nullopt;
        }
        if (!w) return std::nullopt;
        out.push_back(std::move(*w));
    }
    return out;
}
}  // namespace

Representation trivial_summand_complement(const Representation& rho) {
    const int n = rho.dim_v();
    Subspace inv = invariant_vectors(rho);
    if (inv.dim() == 0) return rho;
    Matrix form = invariant_bilinear_form(rho);
    Matrix constraints(inv.dim(), n);
    for (int i = 0; i < inv.dim(); ++i) {
        std::vector<Rat> bw = form.apply(inv.basis_row(i));
        for (int j = 0; j < n; ++j) constraints(i, j) = bw[j];
    }
    Subspace comp = restrict_by_constraints(Subspace::full(n), constraints);
    if (comp.dim() != n - inv.dim() || intersect(comp, inv).dim() != 0)
        throw DegenerateForm("trivial_summand_complement: invariant form does not split off the trivials");
    std::optional<std::vector<std::vector<Rat>>> rw;
    if (rho.weight_data()) {
        rw = row_weights_from_support(comp.basis(), *rho.weight_data());
        if (!rw)
            throw InternalInconsistency("trivial_summand_complement: complement is not weight-homogeneous");
    }
    return restrict_rep(rho, comp.basis(), std::move(rw), rho.label() + "/triv");
}

long long weyl_dim_sl3(int a, int b) {
    return (long long)(a + 1) * (b + 1) * (a + b + 2) / 2;
}

}  // namespace rankcrit
