#include "rankcrit/matrix_space.hpp"

#include "rankcrit/errors.hpp"
#include "rankcrit/rng.hpp"

namespace rankcrit {

namespace {
// tags for sub-seed derivation (documented in the README)
constexpr uint64_t kTagGenericRank = 1;
constexpr uint64_t kTagRnd = 2;
constexpr uint64_t kTagRegular = 3;
constexpr uint64_t kTagPrime = 4;

uint64_t screening_prime(const SampleOptions& opt) {
    return opt.prime ? *opt.prime : random_prime62(derive_seed(opt.seed, {kTagPrime}));
}
}  // namespace

MatrixSpace::MatrixSpace(int n, std::vector<Matrix> basis) : n_(n), basis_(std::move(basis)) {
    SubspaceBuilder sb(n * n);
    for (const Matrix& m : basis_) {
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("MatrixSpace: basis matrix is not n x n");
        if (!sb.insert(m.flatten()))
            throw Error("MatrixSpace: basis matrices are linearly dependent");
    }
}

MatrixSpace MatrixSpace::from_spanning(int n, const std::vector<Matrix>& mats) {
    SubspaceBuilder sb(n * n);
    std::vector<Matrix> basis;
    for (const Matrix& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("MatrixSpace: spanning matrix is not n x n");
        if (sb.insert(m.flatten())) basis.push_back(m);
    }
    return MatrixSpace(n, std::move(basis));
}

Matrix MatrixSpace::element(const std::vector<Rat>& coeffs) const {
    if (coeffs.size() != basis_.size()) throw DimensionMismatch("MatrixSpace::element: coeff count");
    Matrix acc(n_, n_);
    for (size_t k = 0; k < basis_.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!basis_[k](i, j).is_zero()) acc(i, j) += coeffs[k] * basis_[k](i, j);
    }
    return acc;
}

Subspace MatrixSpace::span() const {
    Matrix rows(dim(), n_ * n_);
    for (int k = 0; k < dim(); ++k) {
        std::vector<Rat> f = basis_[k].flatten();
        for (int j = 0; j < n_ * n_; ++j) rows(k, j) = f[j];
    }
    return Subspace::span_of_rows(rows);
}

std::string to_string(RankProvenance p) {
    return p == RankProvenance::SampledLowerBound ? "sampled-lower-bound" : "weight-formula";
}

std::string to_string(CertStatus s) {
    return s == CertStatus::Certified ? "Certified" : "Inconclusive";
}

namespace {
std::vector<Rat> random_coeffs(Rng& rng, size_t k, int64_t height) {
    std::vector<Rat> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = rng.entry(height);
    return c;
}

// modular screen with exact fallback when the prime hits a denominator
int screened_rank(const Matrix& m, uint64_t p, bool& exact) {
    exact = false;
    try {
        return rank_mod_p(m, p);
    } catch (const Error&) {
        exact = true;
        return rank(m);
    }
}
}  // namespace

GenericRank generic_rank(const MatrixSpace& a, const SampleOptions& opt) {
    if (a.dim() == 0) throw Error("generic_rank: empty basis");
    const uint64_t p = screening_prime(opt);
    Rng rng(derive_seed(opt.seed, {kTagGenericRank}));
    GenericRank out;
    out.r = 0;
    int consecutive = 0;
    while (consecutive < opt.stabilize && out.r < a.n()) {
        Matrix m = a.element(random_coeffs(rng, a.basis().size(), opt.height));
        ++out.samples_used;
        bool was_exact = false;
        int est = screened_rank(m, p, was_exact);
        if (est > out.r) {
            int exact = was_exact ? est : rank(m);
            if (exact > out.r) {
                out.r = exact;
                consecutive = 0;
                continue;
            }
        }
        ++consecutive;
    }
    return out;
}

std::vector<RegularSample> regular_elements(const MatrixSpace& a, int r, int count,
                                            const SampleOptions& opt) {
    const uint64_t p = screening_prime(opt);
    Rng rng(derive_seed(opt.seed, {kTagRegular}));
    std::vector<RegularSample> out;
    out.reserve(count);
    long rejects = 0;
    while ((int)out.size() < count) {
        if (rejects >= 100L * count)
            throw RetryExhausted("regular_elements: no rank-" + std::to_string(r) +
                                 " sample found; generic rank over-estimated or space degenerate");
        Matrix m = a.element(random_coeffs(rng, a.basis().size(), opt.height));
        bool was_exact = false;
        if (screened_rank(m, p, was_exact) < r) {
            ++rejects;
            continue;
        }
        Subspace ker = kernel_basis(m);
        int exact_rank = a.n() - ker.dim();
        if (exact_rank < r) {
            ++rejects;
            continue;
        }
        if (exact_rank > r)
            throw InternalInconsistency("regular_elements: sample of rank " +
                                        std::to_string(exact_rank) + " exceeds claimed generic rank " +
                                        std::to_string(r));
        rejects = 0;
        out.push_back(RegularSample{std::move(m), std::move(ker), Subspace()});
        out.back().image = image_basis(out.back().element);
    }
    return out;
}

Matrix tangent_constraint_rows(const RegularSample& x) {
    const int n = x.element.rows();
    Subspace cokernel = left_kernel_basis(x.element);
    const int kd = x.kernel.dim(), cd = cokernel.dim();
    Matrix rows(kd * cd, n * n);
    for (int fi = 0; fi < cd; ++fi) {
        for (int vi = 0; vi < kd; ++vi) {
            int row = fi * kd + vi;
            for (int a = 0; a < n; ++a) {
                const Rat& f = cokernel.basis()(fi, a);
                if (f.is_zero()) continue;
                for (int b = 0; b < n; ++b) {
                    const Rat& v = x.kernel.basis()(vi, b);
                    if (!v.is_zero()) rows(row, a * n + b) = f * v;
                }
            }
        }
    }
    return rows;
}

Subspace tangent_constraint_space(const RegularSample& x) {
    const int n = x.element.rows();
    return restrict_by_constraints(Subspace::full(n * n), tangent_constraint_rows(x));
}

RndResult rnd(const MatrixSpace& a, int r, const SampleOptions& opt) {
    const int n = a.n();
    Subspace span = a.span();
    Subspace cur = Subspace::full(n * n);
    RndResult out;
    int consecutive = 0;
    int index = 0;
    while (consecutive < opt.stabilize && cur.dim() > span.dim()) {
        SampleOptions sub = opt;
        sub.seed = derive_seed(opt.seed, {kTagRnd, (uint64_t)index});
        RegularSample x = std::move(regular_elements(a, r, 1, sub)[0]);
        ++index;
        ++out.samples_used;
        int before = cur.dim();
        cur = restrict_by_constraints(cur, tangent_constraint_rows(x));
        if (cur.dim() == before)
            ++consecutive;
        else
            consecutive = 0;
    }
    if (!cur.contains(span))
        throw InternalInconsistency("rnd: computed space lost the span of the input");
    out.space = std::move(cur);
    return out;
}

RndResult rnd(const MatrixSpace& a, const SampleOptions& opt) {
    GenericRank gr = generic_rank(a, opt);
    RndResult res = rnd(a, gr.r, opt);
    res.samples_used += gr.samples_used;
    return res;
}

CriticalityCertificate certify_rank_critical(const MatrixSpace& a, const SampleOptions& opt) {
    CriticalityCertificate cert;
    cert.seed = opt.seed;
    const int n = a.n();
    if (a.dim() == 0) {
        // The zero space: nothing to sample, so no tangent condition ever
        // cuts End(V) down. Reported as-is rather than rejected.
        cert.generic_rank = 0;
        cert.rnd = Subspace::full(n * n);
        cert.status = n == 0 ? CertStatus::Certified : CertStatus::Inconclusive;
        return cert;
    }
    GenericRank gr = generic_rank(a, opt);
    cert.generic_rank = gr.r;
    cert.rank_provenance = gr.provenance;
    RndResult res = rnd(a, gr.r, opt);
    cert.rnd = std::move(res.space);
    cert.samples_used = gr.samples_used + res.samples_used;
    cert.status = cert.rnd == a.span() ? CertStatus::Certified : CertStatus::Inconclusive;
    return cert;
}

bool is_singular(const MatrixSpace& a, const SampleOptions& opt) {
    if (a.dim() == 0) return a.n() > 0;
    return generic_rank(a, opt).r < a.n();
}

bool is_maximal_singular_certified(const MatrixSpace& a, const SampleOptions& opt) {
    if (a.dim() == 0) return false;
    CriticalityCertificate cert = certify_rank_critical(a, opt);
    return cert.status == CertStatus::Certified && cert.generic_rank == a.n() - 1;
}

}  // namespace rankcrit
