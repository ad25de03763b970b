#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mublab/errors.hpp"
#include "mublab/parallel.hpp"

namespace mublab {

/// A family of orthonormal bases of C^d. Each basis is a d x d matrix whose
/// columns are the states. Basis 0 is the computational basis; for odd prime
/// d, basis 1+a (a = 0..d-1) holds the states with j-th amplitude
/// w^(a*j^2 + b*j)/sqrt(d), w = exp(2*pi*i/d). Dimension 2 carries the three
/// Pauli eigenbases.
struct MubSet {
    int dim = 0;
    std::vector<Eigen::MatrixXcd> bases;
};

/// Complete set of dim+1 mutually unbiased bases; dim must be prime
/// (NonPrimeDimension otherwise) and at most 131 (CapExceeded).
MubSet construct_mub(int dim);

struct UnbiasedReport {
    double max_orthonormality_defect = 0.0; // max |<i|j> - delta_ij| within a basis
    double max_overlap_defect = 0.0;        // max ||<psi|phi>|^2 - 1/d| across bases
    bool pass = false;
};

/// Checks every basis for orthonormality (normalization included) and every
/// cross-basis state pair for |overlap|^2 = 1/d, to the given tolerance.
UnbiasedReport verify_unbiased(const MubSet& mub, double tol,
                               Execution exec = Execution::Parallel);

/// All basis-state projectors scaled by 1/(bases count), flattened to rows.
Eigen::MatrixXcd povm_matrix(const MubSet& mub);

/// Entrywise defect of (sum of POVM outcomes) against the identity.
double povm_completeness_defect(const MubSet& mub);

/// Rank of the POVM outcome set inside the d^2-dimensional operator space
/// (singular values above 1e-9 of the largest). Informationally complete
/// iff the rank is d^2. Capped at dim 31 (CapExceeded).
int ic_rank(const MubSet& mub);

} // namespace mublab
