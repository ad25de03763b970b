#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mublab/groups.hpp"

namespace mublab {

/// The degree-(q-1) standard representation of a group acting faithfully and
/// transitively on q points: the permutation representation with the all-ones
/// line removed.
///
/// Two models are carried side by side:
///  - an exact integer model in the lattice basis {e_x - e_0 : x != 0},
///    where the matrix of g has column x with +1 at row g(x) (dropped when
///    g(x) = 0) and -1 at row g(0) (dropped when g(0) = 0);
///  - a float model conjugated into an orthonormal basis of the sum-zero
///    subspace (columns of basis()), whose matrices are orthogonal.
/// Algebraic statements are checked in the integer model only; the float
/// model exists for metric work (overlaps, commutants, searches).
class Representation {
public:
    static Representation standard(const FiniteGroup& G);

    const FiniteGroup& group() const { return G_; }
    int degree() const { return d_; }
    int points() const { return q_; }

    /// Exact matrix of g in the lattice basis; entries in {-1, 0, 1}.
    Eigen::MatrixXi integer_matrix(int g) const;
    /// Exact character: (number of fixed points of g) - 1.
    long long character(int g) const;
    int fixed_points(int g) const;

    /// Matrix of g in the orthonormal basis (real orthogonal).
    Eigen::MatrixXd unitary_matrix(int g) const;
    /// q x (q-1) orthonormal basis of the sum-zero subspace, built by
    /// Gram-Schmidt over the ordered lattice basis.
    const Eigen::MatrixXd& basis() const { return Q_; }
    /// (q-1) x (q-1) change of basis B with B * integer_matrix(g) =
    /// unitary_matrix(g) * B for all g.
    const Eigen::MatrixXd& basis_change() const { return B_; }

private:
    explicit Representation(FiniteGroup G) : G_(std::move(G)) {}
    void verify_integer_homomorphism() const;
    void verify_float_model() const;

    FiniteGroup G_;
    int q_ = 0;
    int d_ = 0;
    Eigen::MatrixXd Q_;
    Eigen::MatrixXd B_;
    std::vector<Eigen::MatrixXd> unitary_; // eager cache for small q
};

struct IrreducibilitySum {
    long long sum = 0;       // exact sum of squared characters over the group
    bool irreducible = false; // true iff sum == |G|
};

/// Exact squared-character sum over the whole group; equals |G| exactly iff
/// the representation is irreducible.
IrreducibilitySum irreducibility_sum(const Representation& rep);
/// Same sum for an arbitrary integer character function (test doubles).
IrreducibilitySum irreducibility_sum(const FiniteGroup& G,
                                     const std::vector<long long>& chi);

/// Simultaneous eigenbasis of the translation subgroup inside the standard
/// representation, labeled by the q-1 nonzero field elements. The basis
/// vector for label x is the character column y -> (-1)^{Tr(x*y)} projected
/// into the orthonormal model; its eigenvalue under translation by b is
/// (-1)^{Tr(x*b)}, recorded in signs (rows = labels, columns = translations).
struct EigenStructure {
    std::vector<int> labels;    // field element indices 1..q-1
    Eigen::MatrixXi vectors;    // q x (q-1): column j = the +-1 pattern of label j+1
    Eigen::MatrixXi signs;      // (q-1) x (q-1): signs(j, b-1) for label j+1, translation b
    Eigen::MatrixXd basis;      // (q-1) x (q-1): orthonormal-model coordinates
};

/// Requires K to be exactly the translation subgroup (group indices 0..q-1);
/// NotTranslationSubgroup otherwise. Every eigen relation is verified with
/// exact integer arithmetic in the permutation picture.
EigenStructure kernel_eigenstructure(const Representation& rep, const std::vector<int>& K);

struct CyclicPermutationCheck {
    bool pass = false;
    std::vector<int> label_cycle; // orbit of the first label, length q-1 on pass
    std::string failure;
};

/// For g of multiplicative order q-1: the representation of g permutes the
/// translation eigenbasis rays, the induced label permutation is one
/// (q-1)-cycle, and conjugating each diagonal translation matrix by g
/// permutes the sign table consistently. All checks exact.
/// WrongElementOrder if g does not have order q-1.
CyclicPermutationCheck cyclic_permutation_check(const Representation& rep, int g);

/// Exact integer sum of the representation matrices over K \ {identity};
/// the caller asserts it against -Identity.
Eigen::MatrixXi kstar_sum(const Representation& rep, const std::vector<int>& K);

/// Irreducible degrees of a group extracted from its regular representation:
/// a random Hermitian matrix is averaged over conjugation by the regular
/// permutation action; eigenvalue clusters of the average have multiplicity
/// equal to an irreducible degree d, with each degree-d irreducible owning
/// exactly d clusters. Cluster projectors yield characters, and a cluster is
/// projectively faithful when |chi(g)| = chi(1) only at the identity.
struct RegularDecomposition {
    std::vector<int> degrees;          // per-irreducible, sorted ascending
    std::vector<int> cluster_degrees;  // per-cluster multiplicities
    std::vector<char> cluster_faithful;
    long long degree_square_sum = 0;   // asserted equal to |G|
};

RegularDecomposition regular_rep_degrees(const FiniteGroup& G, std::uint64_t seed);

struct ScanEntry {
    std::string group;
    std::vector<int> degrees;
    int max_degree = 0;
    int max_faithful_degree = 0; // 0 when no projectively faithful irreducible
    bool faithful_at_target = false;
};

/// Reports, for every group of the given order in the catalog, its
/// irreducible degrees and faithfulness data; the target degree p solves
/// p(p+1) = order. Two independent random draws must agree on every degree
/// multiset. UnsupportedOrder unless order = 12.
std::vector<ScanEntry> small_order_scan(int order, std::uint64_t seed);

} // namespace mublab
