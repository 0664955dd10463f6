#include "rankcrit/constructions.hpp"

#include <algorithm>

#include "rankcrit/errors.hpp"
#include "rankcrit/upoly.hpp"

namespace rankcrit {

MatrixSpace compression_space(int n, const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != n || w.ambient_dim() != n)
        throw DimensionMismatch("compression_space: U or W does not live in Q^n");
    if (w.dim() >= u.dim())
        throw Error("compression_space: requires dim W < dim U");
    // A U <= W, one condition per (functional vanishing on W, basis vector of U)
    Subspace w_perp = kernel_basis(w.basis());
    Matrix rows(w_perp.dim() * u.dim(), n * n);
    int r = 0;
    for (int fi = 0; fi < w_perp.dim(); ++fi) {
        for (int ui = 0; ui < u.dim(); ++ui, ++r) {
            for (int a = 0; a < n; ++a) {
                const Rat& f = w_perp.basis()(fi, a);
                if (f.is_zero()) continue;
                for (int b = 0; b < n; ++b) {
                    const Rat& x = u.basis()(ui, b);
                    if (!x.is_zero()) rows(r, a * n + b) = f * x;
                }
            }
        }
    }
    Subspace sol = restrict_by_constraints(Subspace::full(n * n), rows);
    std::vector<Matrix> basis;
    basis.reserve(sol.dim());
    for (int i = 0; i < sol.dim(); ++i) basis.push_back(Matrix::unflatten(n, n, sol.basis_row(i)));
    return MatrixSpace(n, std::move(basis));
}

MatrixSpace standard_compression_space(int n, int k) {
    std::vector<std::vector<Rat>> uvecs, wvecs;
    for (int i = 0; i < k; ++i) {
        std::vector<Rat> e((size_t)n);
        e[i] = Rat(1);
        uvecs.push_back(e);
        if (i < k - 1) wvecs.push_back(e);
    }
    return compression_space(n, Subspace::span_of(uvecs, n), Subspace::span_of(wvecs, n));
}

MatrixSpace skew_space(int n) {
    std::vector<Matrix> basis;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Matrix m(n, n);
            m(i, j) = Rat(1);
            m(j, i) = Rat(-1);
            basis.push_back(std::move(m));
        }
    }
    return MatrixSpace(n, std::move(basis));
}

MatrixSpace pare_space(const std::vector<Matrix>& skews) {
    const int n = (int)skews.size();
    if (n < 3) throw Error("pare_space: needs n >= 3 matrices");
    for (const Matrix& a : skews) {
        if (a.rows() != n || a.cols() != n)
            throw DimensionMismatch("pare_space: matrices must be n x n with n = count");
        // x^t A x = 0 identically: the symmetric part of each quadratic form vanishes
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(a(i, j) + a(j, i)).is_zero())
                    throw NonSkewInput("pare_space: input matrix is not skew-symmetric");
    }
    std::vector<Matrix> images;
    for (int j = 0; j < n; ++j) {
        Matrix m(n, n);  // phi(e_j): column i is A_i e_j
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a) m(a, i) = skews[i](a, j);
        images.push_back(std::move(m));
    }
    return MatrixSpace::from_spanning(n, images);
}

MatrixSpace pare_standard(int n) {
    if (n < 3) throw Error("pare_standard: needs n >= 3");
    std::vector<Matrix> skews;
    for (int i = 0; i + 1 < n; ++i) {
        Matrix a(n, n);
        a(i, i + 1) = Rat(1);
        a(i + 1, i) = Rat(-1);
        skews.push_back(std::move(a));
    }
    Matrix last(n, n);
    last(n - 1, 0) = Rat(1);
    last(0, n - 1) = Rat(-1);
    skews.push_back(std::move(last));
    return pare_space(skews);
}

namespace {

// determinant of s*A + B over Q[s], fraction-free
UPoly pencil_determinant(const Matrix& a, const Matrix& b) {
    const int n = a.rows();
    std::vector<std::vector<UPoly>> m((size_t)n, std::vector<UPoly>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = UPoly(std::vector<Rat>{b(i, j), a(i, j)});
    UPoly prev(Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { pr = i; break; }
        if (pr < 0) return UPoly();
        if (pr != k) { std::swap(m[pr], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                UPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                UPoly q, r;
                UPoly::divmod(num, prev, q, r);
                if (!r.is_zero()) throw InternalInconsistency("pencil_determinant: inexact division");
                m[i][j] = q;
            }
            m[i][k] = UPoly();
        }
        prev = m[k][k];
    }
    UPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// kernel basis of s*A + B over the fraction field Q(s)
std::vector<std::vector<PolyFrac>> pencil_kernel(const Matrix& a, const Matrix& b) {
    const int n = a.rows();
    std::vector<std::vector<PolyFrac>> m((size_t)n, std::vector<PolyFrac>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = PolyFrac(UPoly(std::vector<Rat>{b(i, j), a(i, j)}));
    // Gauss-Jordan over Q(s)
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        PolyFrac inv = PolyFrac(UPoly(Rat(1))) / m[r][c];
        for (int j = c; j < n; ++j) m[r][j] = inv * m[r][j];
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            PolyFrac t = m[i][c];
            for (int j = c; j < n; ++j) m[i][j] = m[i][j] - t * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot((size_t)n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<PolyFrac>> kernel;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<PolyFrac> v((size_t)n);
        v[f] = PolyFrac(UPoly(Rat(1)));
        for (int i = 0; i < (int)pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Clears denominators and strips the common polynomial factor, giving a
// primitive polynomial kernel vector.
std::vector<UPoly> clear_to_poly(const std::vector<PolyFrac>& v) {
    UPoly common(Rat(1));
    for (const PolyFrac& x : v) {
        if (x.is_zero()) continue;
        UPoly g = UPoly::gcd(common, x.den());
        UPoly q, r;
        UPoly::divmod(x.den(), g, q, r);
        common = common * q;  // lcm accumulation
    }
    std::vector<UPoly> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        UPoly q, r;
        UPoly::divmod(common, v[i].den(), q, r);
        out[i] = v[i].num() * q;
    }
    UPoly content;
    for (const UPoly& p : out)
        if (!p.is_zero()) content = content.is_zero() ? p : UPoly::gcd(content, p);
    if (content.degree() > 0) {
        for (UPoly& p : out) {
            if (p.is_zero()) continue;
            UPoly q, r;
            UPoly::divmod(p, content, q, r);
            p = q;
        }
    }
    return out;
}

}  // namespace

CompressionWitness pencil_compression_witness(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("pencil_compression_witness: need two n x n matrices");
    const int n = a.rows();
    {
        Matrix two(2, n * n);
        std::vector<Rat> fa = a.flatten(), fb = b.flatten();
        for (int j = 0; j < n * n; ++j) {
            two(0, j) = fa[j];
            two(1, j) = fb[j];
        }
        if (Subspace::span_of_rows(two).dim() != 2)
            throw NotTwoDimensional("pencil_compression_witness: span{A,B} is not 2-dimensional");
    }
    if (!pencil_determinant(a, b).is_zero())
        throw NotSingular("pencil_compression_witness: det(sA+tB) is not identically zero");

    std::vector<std::vector<PolyFrac>> kernel = pencil_kernel(a, b);
    if (kernel.empty())
        throw InternalInconsistency("pencil_compression_witness: singular pencil without kernel");

    // minimal-degree kernel vector, ties broken by first index
    int best = -1, best_deg = -1;
    std::vector<std::vector<UPoly>> cleared(kernel.size());
    for (size_t i = 0; i < kernel.size(); ++i) {
        cleared[i] = clear_to_poly(kernel[i]);
        int d = -1;
        for (const UPoly& p : cleared[i]) d = std::max(d, p.degree());
        if (best < 0 || d < best_deg) {
            best = (int)i;
            best_deg = d;
        }
    }
    const std::vector<UPoly>& u = cleared[best];
    const int d = best_deg;

    // coefficient vectors of u(s) = sum_j c_j s^j; the chain below runs
    // top-down, u_i := c_{d-i}
    std::vector<std::vector<Rat>> coeffs;
    for (int j = 0; j <= d; ++j) {
        std::vector<Rat> c((size_t)n);
        for (int i = 0; i < n; ++i) c[i] = u[i].coeff(j);
        coeffs.push_back(std::move(c));
    }
    auto is_zero_vec = [](const std::vector<Rat>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
    };
    // chain A c_d = 0, A c_{j-1} = -B c_j, B c_0 = 0, re-verified term by term
    if (is_zero_vec(coeffs[d]))
        throw InternalInconsistency("pencil witness: leading coefficient vector vanishes");
    if (!is_zero_vec(a.apply(coeffs[d])))
        throw InternalInconsistency("pencil witness: A u_0 != 0");
    for (int j = d; j >= 1; --j) {
        std::vector<Rat> lhs = a.apply(coeffs[j - 1]);
        std::vector<Rat> rhs = b.apply(coeffs[j]);
        for (int i = 0; i < n; ++i)
            if (!(lhs[i] + rhs[i]).is_zero())
                throw InternalInconsistency("pencil witness: chain A u_{i+1} = -B u_i broken");
    }
    if (!is_zero_vec(b.apply(coeffs[0])))
        throw InternalInconsistency("pencil witness: B u_d != 0");

    CompressionWitness wit;
    wit.U = Subspace::span_of(coeffs, n);
    std::vector<std::vector<Rat>> images;
    for (const std::vector<Rat>& c : coeffs) images.push_back(a.apply(c));
    wit.W = Subspace::span_of(images, n);

    // postcondition: (sA+tB) U <= W identically, and W is strictly smaller
    for (int i = 0; i < wit.U.dim(); ++i) {
        std::vector<Rat> v = wit.U.basis_row(i);
        if (!wit.W.contains(a.apply(v)) || !wit.W.contains(b.apply(v)))
            throw InternalInconsistency("pencil witness: AU <= W or BU <= W failed");
    }
    if (wit.W.dim() >= wit.U.dim())
        throw InternalInconsistency("pencil witness: dim W < dim U failed");
    return wit;
}

}  // namespace rankcrit
