#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rankcrit/matrix.hpp"
#include "rankcrit/matrix_space.hpp"
#include "rankcrit/subspace.hpp"

namespace rankcrit {

struct SparseTerm {
    int k;
    Rat c;
};
using SparseVec = std::vector<SparseTerm>;  // ascending k

/// Lie algebra over Q given by structure constants, with a designated split
/// Cartan subalgebra (a subset of the basis). Validated on construction:
/// antisymmetry, the Jacobi identity on all basis triples, and commutativity
/// of the designated Cartan elements.
class LieAlgebra {
public:
    struct Entry {
        int i, j, k;
        Rat c;
    };

    LieAlgebra(int dim, std::vector<std::string> labels, std::vector<int> cartan,
               const std::vector<Entry>& constants);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& cartan() const { return cartan_; }
    int rank() const { return (int)cartan_.size(); }

    const SparseVec& bracket_basis(int i, int j) const { return table_[(size_t)i * dim_ + j]; }
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    Matrix ad_basis(int i) const;
    Matrix ad(const std::vector<Rat>& x) const;

    /// Entries (i < j only) for serialization; mirrors are implicit.
    std::vector<Entry> structure_entries() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
    void validate() const;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<int> cartan_;
    std::vector<SparseVec> table_;  // dim x dim, full table
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

/// Weights of the module basis vectors, as tuples of eigenvalues on the
/// Cartan basis. Present means the natural basis is a weight basis.
struct WeightData {
    std::vector<std::vector<Rat>> weights;  // per basis index, length = rank
};

/// Representation by per-basis-element matrices. The homomorphism identity
/// rho([x_i,x_j]) = [rho(x_i), rho(x_j)] is re-checked on construction.
class Representation {
public:
    /// dim_v_hint disambiguates the module dimension when the algebra is
    /// zero-dimensional (no matrices to read it from).
    Representation(LiePtr g, std::vector<Matrix> matrices, std::string label,
                   std::optional<WeightData> weights = std::nullopt, bool validate = true,
                   int dim_v_hint = -1);

    const LieAlgebra& algebra() const { return *g_; }
    const LiePtr& algebra_ptr() const { return g_; }
    int dim_v() const { return dim_v_; }
    const std::vector<Matrix>& matrices() const { return mats_; }
    const Matrix& matrix(int i) const { return mats_[i]; }
    Matrix apply(const std::vector<Rat>& x) const;  // rho of a coordinate vector
    const std::string& label() const { return label_; }
    const std::optional<WeightData>& weight_data() const { return weights_; }

    void check_homomorphism() const;

private:
    LiePtr g_;
    int dim_v_;
    std::vector<Matrix> mats_;
    std::string label_;
    std::optional<WeightData> weights_;
};

// ---- roots -----------------------------------------------------------------

struct SimpleRootInfo {
    std::vector<Rat> alpha;    // values on the Cartan basis
    std::vector<Rat> raising;  // e_i, coordinates in the algebra basis
    std::vector<Rat> lowering; // f_i
    std::vector<Rat> coroot;   // h_i^vee, coordinates on the Cartan basis
};

/// Root decomposition with a fixed positive system and simple root data.
/// Simple roots are ordered shortest-first (then by positivity functional),
/// so for g2 the first Dynkin label is the one whose fundamental
/// representation is 7-dimensional. Constructions with a conventional node
/// order (sl_m) pass their raisings explicitly.
struct RootDatum {
    LiePtr g;
    std::vector<std::vector<Rat>> roots;  // all nonzero roots, values on Cartan basis
    std::vector<Subspace> root_spaces;    // aligned with roots
    Subspace zero_space;
    std::vector<int> positive;            // indices into roots
    std::vector<SimpleRootInfo> simple;

    std::vector<Rat> dynkin_label(const std::vector<Rat>& weight) const;
};

RootDatum cartan_and_roots(const LiePtr& g);
RootDatum cartan_and_roots(const LiePtr& g,
                           const std::vector<std::vector<Rat>>& designated_simple_raisings);

// ---- weight machinery -------------------------------------------------------

struct EigenBlock {
    std::vector<Rat> eigen;  // eigenvalue tuple, one per operator
    Matrix basis_rows;       // rows spanning the joint eigenspace
};

/// Joint eigenspace decomposition of commuting operators with integral
/// eigenvalue tuples. Throws NonSplit when an eigenvalue is not a rational
/// integer and NonDiagonalizable when an operator has a nilpotent part.
std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<Matrix>& ops, int dim);

/// Returns an equivalent representation whose natural basis is a weight
/// basis, computing the weight decomposition if it is not already attached.
Representation with_weight_basis(const Representation& rho);

struct HighestWeightSpace {
    std::vector<Rat> weight;  // on the Cartan basis
    std::vector<Rat> dynkin;  // labels on simple coroots
    Subspace space;           // in module coordinates
};

/// Nonzero highest weight spaces of the module V itself.
std::vector<HighestWeightSpace> highest_weight_spaces(const Representation& rho,
                                                      const RootDatum& rd);

/// Nonzero highest weight spaces of End(V) under Y -> [rho(e), Y], in
/// row-major End coordinates (the same flattening MatrixSpace uses).
std::vector<HighestWeightSpace> highest_weight_spaces_end(const Representation& rho,
                                                          const RootDatum& rd);

/// Closure of the given vectors under all rho(x_i).
Subspace submodule_generated(const Representation& rho,
                             const std::vector<std::vector<Rat>>& vectors);

/// Per-basis-element ad-weights when the algebra basis is a root basis for
/// its designated Cartan ([h_c, x_i] a multiple of x_i for all c), else nullopt.
std::optional<std::vector<std::vector<Rat>>> basis_ad_weights(const LieAlgebra& g);

struct WeightedVectors {
    Matrix rows;
    std::vector<std::vector<Rat>> weights;  // one per row
};

using VectorOp = std::function<std::vector<Rat>(const std::vector<Rat>&)>;

/// Closure of weight-tagged seed vectors under weight-shifting operators,
/// eliminating only within equal-weight groups so the result stays a
/// weight-homogeneous basis. Deterministic FIFO processing.
WeightedVectors weighted_closure(
    int ambient, const std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& seeds,
    const std::vector<std::pair<VectorOp, std::vector<Rat>>>& ops);

/// Common kernel of all rho(x_i): the invariant vectors of the module.
Subspace invariant_vectors(const Representation& rho);

/// exp(N) for nilpotent N, an exact finite sum. Throws NotNilpotent.
Matrix unipotent_exponential(const Matrix& nilpotent);
Matrix unipotent_exponential(const Representation& rho, const std::vector<Rat>& x);

// ---- forms ------------------------------------------------------------------

/// kappa(x_i, x_j) = trace(ad x_i ad x_j).
Matrix killing_form(const LieAlgebra& g);

bool is_nondegenerate(const Matrix& symmetric);

/// The symmetric bilinear form B with B(rho(x)u, v) + B(u, rho(x)v) = 0,
/// unique up to scale. Throws NoInvariantForm if none (or not unique).
Matrix invariant_bilinear_form(const Representation& rho);

/// o(B) = {X : BX + X^t B = 0} for symmetric nondegenerate B, of dim N(N-1)/2.
MatrixSpace orthogonal_algebra_of_form(const Matrix& b);

// ---- constructions ----------------------------------------------------------

/// sl_m with basis {E_ij (i != j)} then {E_ii - E_{i+1,i+1}}; the standard
/// m-dimensional representation rides along.
std::pair<LiePtr, Representation> sl(int m);

/// Root datum of sl_m with the conventional node order (raisings E_{i,i+1}).
RootDatum sl_root_datum(const LiePtr& g, int m);

/// Split so_n / sp_n: matrices skew for the anti-diagonal symmetric
/// (resp. standard split skew) form, so the diagonal members form a split
/// Cartan over Q.
std::pair<LiePtr, Representation> so_split(int n);
std::pair<LiePtr, Representation> sp_split(int n);

/// sl_m acting on homogeneous polynomials of degree k in m variables by
/// E_ij -> -x_j d/dx_i (monomial basis, a weight basis).
Representation symmetric_power_poly_rep(int m, int k);

/// The matrix of x_m d/dx_1 raised to the d-th power on the same monomial
/// basis; these powers span the highest weight spaces of End(V) and serve
/// as an independent oracle in the tests.
Matrix poly_lowering_power(int m, int k, int d);

Representation adjoint_rep(const LiePtr& g);

// ---- nonassociative algebras and derivation algebras ------------------------

/// Finite-dimensional (not necessarily associative) algebra by structure
/// constants: mult[i][j] = coordinates of a_i * a_j.
struct NonassocAlgebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<Rat>>> mult;

    std::vector<Rat> multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
};

/// Zorn vector matrices: the split octonion algebra (dim 8).
NonassocAlgebra zorn_octonions();

/// 3x3 hermitian matrices over an octonion algebra with the Jordan product
/// x o y = (xy + yx)/2 (dim 27).
NonassocAlgebra jordan_h3(const NonassocAlgebra& octonions);

struct DerivationAlgebra {
    LiePtr algebra;         // Der(A) with Cartan = derivations diagonal in A's basis
    Representation action;  // tautological action on A, in a weight basis
};

/// Solves D(ab) = D(a)b + a D(b) exactly; the solution space is verified
/// closed under commutators and returned with its induced bracket.
DerivationAlgebra derivation_algebra(const NonassocAlgebra& a);

// ---- module constructions ----------------------------------------------------

Representation tensor_rep(const Representation& a, const Representation& b);
Representation symmetric_power_rep(const Representation& a, int k);
Representation symmetric_square_rep(const Representation& a);
Representation dual_rep(const Representation& a);

/// Restriction of rho to the orthogonal complement (for the computed
/// invariant form) of its invariant vectors. Identity when there are none.
/// Throws DegenerateForm when the form does not split off the invariants.
Representation trivial_summand_complement(const Representation& rho);

/// Restricts rho to an invariant subspace given by basis rows; row_weights,
/// when present, keep the result a weight basis.
Representation restrict_rep(const Representation& rho, const Matrix& basis_rows,
                            std::optional<std::vector<std::vector<Rat>>> row_weights,
                            const std::string& label);

/// Irreducible sl_3 module of highest weight a*omega_1 + b*omega_2, built as
/// the submodule generated by the product of highest weight vectors inside
/// S^a(standard) (x) (dual standard)^{(x) b}. Dimension checked against the
/// Weyl formula (a+1)(b+1)(a+b+2)/2.
Representation irreducible_sl3_rep(int a, int b);

long long weyl_dim_sl3(int a, int b);

/// Exponent vectors of total degree `degree` in `nvars` variables, in
/// lexicographically descending order (the monomial basis used throughout).
std::vector<std::vector<int>> degree_monomials(int nvars, int degree);

/// Lie algebra from explicit matrix generators: structure constants computed
/// by expressing brackets in the given basis, which must be independent and
/// closed under commutators (else NotClosedUnderBracket).
LiePtr lie_from_matrix_basis(const std::vector<Matrix>& basis, std::vector<int> cartan_indices,
                             std::vector<std::string> labels);

/// Rebuilds a matrix Lie algebra on a basis adapted to a split Cartan
/// subspace: Cartan vectors first, then joint ad-eigenvectors ordered by
/// weight. Returns the algebra together with its tautological representation
/// (whose natural basis is a weight basis when the Cartan matrices are
/// diagonal).
std::pair<LiePtr, Representation> matrix_lie_with_root_basis(const MatrixSpace& l,
                                                             const Subspace& cartan,
                                                             const std::string& label);

}  // namespace rankcrit
