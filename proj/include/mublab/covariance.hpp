#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mublab/errors.hpp"
#include "mublab/mub.hpp"

namespace mublab {

/// A unitary acting on rays (states modulo global phase). With the flag set
/// the input is conjugated first, i.e. the action is v -> M * conj(v).
struct Collineation {
    Eigen::MatrixXcd matrix;
    bool antiunitary = false;
};

/// f after g. The antiunitary flags combine by XOR; when f is antiunitary its
/// conjugation passes through g's matrix.
Collineation compose(const Collineation& f, const Collineation& g);

Eigen::VectorXcd act(const Collineation& c, const Eigen::VectorXcd& v);

/// max |M^dagger M - I|, entrywise.
double unitary_defect(const Eigen::MatrixXcd& m);

/// Phase normal form: the first entry of modulus > 1e-8 (column-major scan)
/// is made real positive. Phase classes become comparable arrays.
Eigen::MatrixXcd canonical_phase(const Eigen::MatrixXcd& m);

/// Same normal form for state vectors, which also get normalized.
Eigen::VectorXcd canonical_ray(const Eigen::VectorXcd& v);

/// Equality modulo a global phase (flags must match exactly).
bool same_collineation(const Collineation& a, const Collineation& b, double tol = 1e-7);

/// | |<u|v>| - 1 | <= tol for unit vectors.
bool same_ray(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, double tol = 1e-7);

/// Closure of the generators under composition, with phase-class dedup.
/// Deterministic element order: generators first, then products in discovery
/// order. CapExceeded once the element count would pass the cap.
std::vector<Collineation> close_collineations(const std::vector<Collineation>& generators,
                                              int cap);

/// Distinct rays reachable from the fiducial by generator words, in
/// deterministic discovery order. CapExceeded once the ray count would pass
/// the cap.
std::vector<Eigen::VectorXcd> orbit(const std::vector<Collineation>& generators,
                                    const Eigen::VectorXcd& fiducial, int cap,
                                    double ray_tol = 1e-7);

struct CovarianceVerdict {
    bool pass = false;
    int group_order = 0;    // distinct elements modulo phase
    int expected_order = 0; // d(d+1)
    int orbit_size = 0;     // orbit of the successful (or last tried) fiducial
    bool covers_all_states = false;
    bool regular = false;
    int fiducial_basis = -1; // index into mub.bases
    int fiducial_state = -1; // column within that basis
    std::string failure;     // empty when pass
};

/// A group of collineations generates the basis set sharply when its order
/// modulo phase is exactly d(d+1), the orbit of some basis state is the full
/// d(d+1)-ray state set, and no nonidentity element fixes that state's ray
/// (so states are reached without repetition). NotClosed if the supplied
/// list is not composition-closed modulo phase.
CovarianceVerdict sharp_covariance_check(const MubSet& mub,
                                         const std::vector<Collineation>& group,
                                         double ray_tol = 1e-7);

/// Dimension of {M : MU = UM for every unitary U in the list}, computed as
/// the null-space dimension of the stacked commutation system. Antiunitary
/// entries are ignored. 1 means the matrices act irreducibly.
int commutant_dim(const std::vector<Collineation>& group);

/// Explicit order-6 collineation group: the closure of the Bloch-sphere
/// rotation by 2*pi/3 about (1,1,1)/sqrt(3) and the rotation by pi about
/// the perpendicular axis (1,-1,0)/sqrt(2). Passes sharp_covariance_check
/// on construct_mub(2), which needs order 6 = d(d+1).
std::vector<Collineation> qubit_order6_witness();

struct AntiunitarySplit {
    std::vector<Collineation> unitary;
    std::vector<Collineation> antiunitary;
    int index = 1; // [group : unitary part], 1 or 2
};

/// Splits a closed group by the antiunitary flag. The unitary part is a
/// subgroup and the antiunitary part, when nonempty, is a single coset of
/// it, so the index is 1 or 2. NotClosed if the input is not closed.
AntiunitarySplit antiunitary_split(const std::vector<Collineation>& group);

} // namespace mublab
