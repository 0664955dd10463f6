#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankcrit/linalg.hpp"
#include "rankcrit/matrix.hpp"
#include "rankcrit/subspace.hpp"

namespace rankcrit {

/// Sampling knobs shared by the randomized operations. One seed governs a
/// run; sub-seeds are derived per task so parallel and serial runs match.
struct SampleOptions {
    int64_t height = 100;
    uint64_t seed = 1;
    int stabilize = 5;
    std::optional<uint64_t> prime;  // screening prime; derived from seed when absent
};

/// A space of n x n matrices given by a linearly independent basis.
class MatrixSpace {
public:
    MatrixSpace() : n_(0) {}
    /// Throws unless all matrices are n x n and independent as vectors in Q^{n^2}.
    MatrixSpace(int n, std::vector<Matrix> basis);
    /// Extracts an independent subset spanning the same space (first-seen order).
    static MatrixSpace from_spanning(int n, const std::vector<Matrix>& mats);

    int n() const { return n_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }

    Matrix element(const std::vector<Rat>& coeffs) const;

    /// The span as a subspace of Q^{n^2} (row-major flattening).
    Subspace span() const;

private:
    int n_;
    std::vector<Matrix> basis_;
};

/// An element of the space attaining the generic rank, with its kernel and
/// image precomputed.
struct RegularSample {
    Matrix element;
    Subspace kernel;
    Subspace image;
};

enum class RankProvenance { SampledLowerBound, WeightFormula };

std::string to_string(RankProvenance p);

struct GenericRank {
    int r = 0;
    RankProvenance provenance = RankProvenance::SampledLowerBound;
    int samples_used = 0;
};

/// Maximal rank seen over random integer combinations of the basis, stopping
/// after `stabilize` consecutive samples without improvement. Guaranteed lower
/// bound for the true generic rank; equal to it with high probability. Each
/// improvement is verified in exact arithmetic (the modular rank only screens).
GenericRank generic_rank(const MatrixSpace& a, const SampleOptions& opt);

/// `count` samples of rank exactly r, rejection-sampled. Throws RetryExhausted
/// after 100*count consecutive rejects (r was over-estimated or the space is
/// degenerate) and InternalInconsistency if a sample exceeds rank r.
std::vector<RegularSample> regular_elements(const MatrixSpace& a, int r, int count,
                                            const SampleOptions& opt);

/// The (n-r)^2 linear conditions "B ker X <= im X" on B in End(V), one row per
/// (cokernel functional, kernel vector) pair, in row-major End coordinates.
Matrix tangent_constraint_rows(const RegularSample& x);

/// {B : B ker X <= im X} as a subspace of Q^{n^2}; dim = n^2 - (n-r)^2.
Subspace tangent_constraint_space(const RegularSample& x);

struct RndResult {
    Subspace space;
    int samples_used = 0;
};

/// Intersection of tangent constraint spaces over freshly sampled regular
/// elements until the dimension is stable for `stabilize` samples. Always
/// contains span(a) and the true rank-neutral-direction space; equals the
/// latter with high probability.
RndResult rnd(const MatrixSpace& a, int r, const SampleOptions& opt);
RndResult rnd(const MatrixSpace& a, const SampleOptions& opt);

enum class CertStatus { Certified, Inconclusive };

std::string to_string(CertStatus s);

struct CriticalityCertificate {
    int generic_rank = 0;
    RankProvenance rank_provenance = RankProvenance::SampledLowerBound;
    Subspace rnd;  // upper bound for the true RND space; exact when Certified
    CertStatus status = CertStatus::Inconclusive;
    int samples_used = 0;
    uint64_t seed = 0;
};

/// Certified iff the computed RND space equals span(a) exactly. Sound given
/// that the generic rank is correct: unconditionally for weight-formula
/// provenance, conditionally for sampled lower bounds.
CriticalityCertificate certify_rank_critical(const MatrixSpace& a, const SampleOptions& opt);

bool is_singular(const MatrixSpace& a, const SampleOptions& opt);
bool is_maximal_singular_certified(const MatrixSpace& a, const SampleOptions& opt);

}  // namespace rankcrit
