#pragma once

#include <string>
#include <vector>

#include "rankcrit/lie.hpp"
#include "rankcrit/matrix_space.hpp"

namespace rankcrit {

struct MultiplicityRow {
    std::vector<Rat> weight;  // on the Cartan basis
    std::vector<Rat> dynkin;  // label on simple coroots
    int hw_dim = 0;           // dim HW_mu in End(V)
    int mult_image = 0;       // multiplicity of mu among highest weights of rho(g)
    int mult_rnd = 0;         // computed multiplicity in RND (upper bound, sharp whp)
    int samples = 0;          // regular samples used for this row
};

enum class Verdict { Certified, UpperBound };

std::string to_string(Verdict v);

/// Per-highest-weight multiplicities of the rank-neutral directions of a
/// representation image. mult_rnd >= mult_image on every row; Certified iff
/// they agree everywhere, which proves rank-criticality.
struct MultiplicityReport {
    std::string rep_label;
    int dim_v = 0;
    int generic_rank = 0;
    RankProvenance provenance = RankProvenance::WeightFormula;
    std::vector<MultiplicityRow> rows;
    Verdict verdict = Verdict::UpperBound;
    int rnd_dim = 0;
    Subspace rnd_space;  // the g-submodule generated by the computed HW rows
    uint64_t seed = 0;
    int oversample = 0;
};

/// Span of {rho(x_i)} as a matrix space (an independent basis is extracted).
MatrixSpace rep_image_space(const Representation& rho);

/// r = dim V - dim V_0 for a split semisimple module, cross-checked against
/// the sampled generic rank of the image (InternalInconsistency on mismatch).
GenericRank generic_rank_semisimple(const Representation& rho, const SampleOptions& opt);

/// The randomized highest-weight multiplicity algorithm: for each nonzero
/// HW_mu of End(V) of dimension l, intersects the tangent conditions of
/// l + oversample fresh regular elements of rho(g). Rows are independent and
/// use sub-seeds derived from (seed, row index).
MultiplicityReport rnd_multiplicities(const Representation& rho, const RootDatum& rd,
                                      const SampleOptions& opt, int oversample = 3);

/// Builds sl_m on degree-(e*m) polynomials and certifies maximal singularity:
/// Certified requires the multiplicity verdict plus r = dim V - 1.
CriticalityCertificate certify_sym_power_maximal(int m, int e, const SampleOptions& opt,
                                                 int oversample = 3);

/// Intersection of the conditions kappa(x, A y) = 0 over sampled commuting
/// pairs (x in g random, y random in the centralizer of x), with the pairs
/// (x, x) always included. Always contains ad g, so exact equality with ad g
/// proves M(g) = ad g.
Subspace mg_space_sampled(const LieAlgebra& g, int samples, const SampleOptions& opt);

/// Spot check of G-stability: for random unipotent words g and random Y in
/// rnd, verifies (g Y g^-1) V_0 <= sum of the nonzero weight spaces.
bool unipotent_rnd_check(const Representation& rho, const RootDatum& rd, const Subspace& rnd,
                         int trials, const SampleOptions& opt);

}  // namespace rankcrit
