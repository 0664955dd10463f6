#include "rankcrit/linalg.hpp"

#include <algorithm>
#include <utility>

namespace rankcrit {

namespace {

// Integer working rows. Each row is kept primitive (content stripped), which
// makes every working row the primitive part of the corresponding Bareiss
// minor row, so entries never exceed fraction-free growth.
using IntRow = std::vector<mpz_class>;

void strip_content(IntRow& row) {
    mpz_class g = 0;
    for (const mpz_class& x : row) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (mpz_class& x : row)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntRow> integerize(const Matrix& m) {
    std::vector<IntRow> rows((size_t)m.rows());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        IntRow r((size_t)m.cols());
        for (int j = 0; j < m.cols(); ++j) r[j] = m(i, j).num() * (l / m(i, j).den());
        strip_content(r);
        rows[i] = std::move(r);
    }
    return rows;
}

// new_row = p * row - t * pivot_row, then stripped.
void eliminate_row(IntRow& row, const mpz_class& t, const IntRow& pivot_row, const mpz_class& p,
                   int from_col) {
    mpz_class tmp;
    for (size_t j = (size_t)from_col; j < row.size(); ++j) {
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), row[j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), t.get_mpz_t(), pivot_row[j].get_mpz_t());
        row[j] = tmp;
    }
    for (size_t j = 0; j < (size_t)from_col; ++j) row[j] = 0;
    strip_content(row);
}

// Pivot choice: smallest entry by bit size, lowest row index on ties. Any
// choice yields the same RREF; small pivots keep intermediate entries short.
int choose_pivot(const std::vector<IntRow>& rows, int from_row, int col) {
    int best = -1;
    size_t best_bits = 0;
    for (int i = from_row; i < (int)rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        size_t bits = mpz_sizeinbase(rows[i][col].get_mpz_t(), 2);
        if (best < 0 || bits < best_bits) {
            best = i;
            best_bits = bits;
            if (bits == 1) break;
        }
    }
    return best;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    std::vector<IntRow> rows = integerize(m);
    const int nrows = m.rows(), ncols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = choose_pivot(rows, r, c);
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        const mpz_class p = rows[r][c];
#pragma omp parallel for schedule(dynamic)
        for (int i = r + 1; i < nrows; ++i) {
            if (sgn(rows[i][c]) != 0) {
                mpz_class t = rows[i][c];
                eliminate_row(rows[i], t, rows[r], p, c);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    // back-elimination above each pivot
    for (int k = r - 1; k >= 0; --k) {
        const int c = pivots[k];
        const mpz_class p = rows[k][c];
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < k; ++i) {
            if (sgn(rows[i][c]) != 0) {
                mpz_class t = rows[i][c];
                mpz_class tmp;
                IntRow& row = rows[i];
                for (size_t j = 0; j < row.size(); ++j) {
                    mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), row[j].get_mpz_t());
                    mpz_submul(tmp.get_mpz_t(), t.get_mpz_t(), rows[k][j].get_mpz_t());
                    row[j] = tmp;
                }
                strip_content(row);
            }
        }
    }
    RrefResult out;
    out.rank = r;
    out.pivots = pivots;
    out.rref = Matrix(nrows, ncols);
    for (int i = 0; i < r; ++i) {
        const mpz_class& p = rows[i][pivots[i]];
        for (int j = pivots[i]; j < ncols; ++j) {
            if (sgn(rows[i][j]) != 0) out.rref(i, j) = Rat(mpq_class(rows[i][j], p));
        }
    }
    return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    Matrix kern(n - rr.rank, n);
    int k = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        kern(k, f) = Rat(1);
        for (int i = 0; i < rr.rank; ++i) kern(k, rr.pivots[i]) = -rr.rref(i, f);
        ++k;
    }
    return Subspace::span_of_rows(kern);
}

Subspace image_basis(const Matrix& m) { return Subspace::span_of_rows(m.transpose()); }

Subspace left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()); }

std::optional<std::vector<Rat>> solve(const Matrix& m, const std::vector<Rat>& b) {
    if ((int)b.size() != m.rows()) throw DimensionMismatch("solve: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    for (int c : rr.pivots)
        if (c == m.cols()) return std::nullopt;
    std::vector<Rat> x((size_t)m.cols());
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.rref(i, m.cols());
    return x;
}

Rat determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant: not square");
    const int n = m.rows();
    if (n == 0) return Rat(1);
    // classic Bareiss; row scaling factors are divided back out at the end
    std::vector<IntRow> rows((size_t)n);
    mpq_class scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        IntRow r((size_t)n);
        for (int j = 0; j < n; ++j) r[j] = m(i, j).num() * (l / m(i, j).den());
        scale *= l;
        rows[i] = std::move(r);
    }
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (sgn(rows[i][k]) != 0) { pr = i; break; }
        if (pr < 0) return Rat(0);
        if (pr != k) { std::swap(rows[pr], rows[k]); sign = -sign; }
        const mpz_class p = rows[k][k];
#pragma omp parallel for schedule(dynamic)
        for (int i = k + 1; i < n; ++i) {
            mpz_class tmp;
            for (int j = k + 1; j < n; ++j) {
                mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), rows[i][j].get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), rows[i][k].get_mpz_t(), rows[k][j].get_mpz_t());
                mpz_divexact(rows[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][k] = 0;
        }
        prev = p;
    }
    mpz_class det = rows[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rat(mpq_class(det) / scale);
}

std::vector<Rat> primitive_scale(std::vector<Rat> v) {
    mpz_class lcm = 1, gcd = 0;
    for (const Rat& x : v)
        if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    for (Rat& x : v) x *= Rat(lcm);
    for (const Rat& x : v)
        if (!x.is_zero()) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.num().get_mpz_t());
    if (gcd > 1)
        for (Rat& x : v) x /= Rat(gcd);
    return v;
}

Matrix inverse_matrix(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse_matrix: not square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw Error("inverse_matrix: matrix is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
    return inv;
}

CoordinateMap::CoordinateMap(Matrix basis_rows) : basis_(std::move(basis_rows)) {
    Matrix gram = basis_ * basis_.transpose();
    solver_ = inverse_matrix(gram) * basis_;
}

std::vector<Rat> CoordinateMap::coords(const std::vector<Rat>& v, bool verify) const {
    std::vector<Rat> c = solver_.apply(v);
    if (verify) {
        for (int j = 0; j < basis_.cols(); ++j) {
            Rat acc;
            for (int i = 0; i < basis_.rows(); ++i)
                if (!basis_(i, j).is_zero() && !c[i].is_zero()) acc += c[i] * basis_(i, j);
            if (acc != v[j])
                throw InternalInconsistency("CoordinateMap: vector outside the spanned subspace");
        }
    }
    return c;
}

namespace serial {
RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const int nrows = a.rows(), ncols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (!a(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j < ncols; ++j) std::swap(a(r, j), a(pr, j));
        Rat inv = inverse(a(r, c));
        for (int j = c; j < ncols; ++j) a(r, j) = inv * a(r, j);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rat t = a(i, c);
            for (int j = c; j < ncols; ++j) a(i, j) = a(i, j) - t * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), r, std::move(pivots)};
}
}  // namespace serial

namespace {
uint64_t addmul_mod(uint64_t acc, uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)(((unsigned __int128)a * b + acc) % p);
}
uint64_t inv_mod(uint64_t a, uint64_t p) {
    // Fermat; p prime
    uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = (uint64_t)((unsigned __int128)r * a % p);
        a = (uint64_t)((unsigned __int128)a * a % p);
        e >>= 1;
    }
    return r;
}
}  // namespace

int rank_mod_p(const Matrix& m, uint64_t p) {
    const int nrows = m.rows(), ncols = m.cols();
    std::vector<std::vector<uint64_t>> a((size_t)nrows, std::vector<uint64_t>((size_t)ncols));
    for (int i = 0; i < nrows; ++i) {
        for (int j = 0; j < ncols; ++j) {
            const Rat& x = m(i, j);
            uint64_t den = mpz_fdiv_ui(x.den().get_mpz_t(), p);
            if (den == 0) throw Error("rank_mod_p: denominator vanishes mod p");
            uint64_t num = mpz_fdiv_ui(x.num().get_mpz_t(), p);  // floor remainder, already in [0, p)
            a[i][j] = (uint64_t)((unsigned __int128)num * inv_mod(den, p) % p);
        }
    }
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (a[i][c] % p != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        uint64_t inv = inv_mod(a[r][c], p);
#pragma omp parallel for schedule(dynamic)
        for (int i = r + 1; i < nrows; ++i) {
            if (a[i][c] == 0) continue;
            uint64_t t = (uint64_t)((unsigned __int128)a[i][c] * inv % p);
            uint64_t neg = t == 0 ? 0 : p - t;
            for (int j = c; j < ncols; ++j) a[i][j] = addmul_mod(a[i][j], neg, a[r][j], p);
        }
        ++r;
    }
    return r;
}

Matrix random_integer_matrix(int rows, int cols, int64_t height, Rng& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.entry(height);
    return m;
}

Matrix random_rational_matrix(int rows, int cols, int64_t height, uint64_t seed) {
    if (height < 1) throw Error("random_rational_matrix: height must be >= 1");
    Rng rng(seed);
    return random_integer_matrix(rows, cols, height, rng);
}

Matrix random_invertible_matrix(int n, int64_t height, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_integer_matrix(n, n, height, rng);
        if (!determinant(m).is_zero()) return m;
    }
    throw RetryExhausted("random_invertible_matrix: could not find invertible sample");
}

}  // namespace rankcrit
