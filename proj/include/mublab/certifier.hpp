#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mublab/errors.hpp"
#include "mublab/parallel.hpp"
#include "mublab/repr.hpp"

namespace mublab {

struct SignSumResult {
    int n = 0;
    long long target = 0;     // 2^n - 1
    bool feasible = false;    // true iff target is a perfect square
    long long m = 0;          // the negative root, when feasible
    long long floor_root = 0; // floor(sqrt(target)): floor^2 < target < (floor+1)^2
    std::vector<long long> pattern_sums; // n = 2 only: distinct sums over all 8
                                         // sign patterns on the 3 kernel elements
};

/// Exact Diophantine step: a state unbiased against the 2^n - 1 nonidentity
/// translations would force -1 = m / sqrt(2^n - 1) with integer m, which
/// needs 2^n - 1 to be a perfect square. That holds only at n = 1 (m = -1).
/// For n = 2 the 8 possible sign-pattern sums {-3,-1,1,3} are enumerated as
/// a cross-check: none equals -sqrt(3). Guarded to 1 <= n <= 33 so all
/// quantities stay exact in 64-bit arithmetic.
SignSumResult sign_sum_infeasibility(int n);

struct FiducialResult {
    double objective = 0.0; // max_g | |<psi|U(g)|psi>|^2 - 1/dim |
    Eigen::VectorXcd state;
    int restart_index = 0;
};

enum class FiducialScope { AllNonidentity, KernelOnly };

/// Minimizes f(psi) = max over the given unitaries of
/// | |<psi|U|psi>|^2 - 1/dim | over unit states in C^dim: seeded random
/// restarts, each refined by coordinate-pair rotations on the real
/// parameterization of the sphere with geometric step decay (at most 200
/// sweeps). Deterministic for fixed (restarts, seed); the serial and
/// parallel paths return identical results (ties break to the lowest
/// restart index). An empty unitary list makes the objective identically 0.
FiducialResult fiducial_search(const std::vector<Eigen::MatrixXcd>& unitaries, int dim,
                               int restarts, std::uint64_t seed,
                               Execution exec = Execution::Parallel);

/// Same search over a representation's unitary model; the unitary list is
/// every nonidentity element, or only the nonidentity translations with
/// scope KernelOnly.
FiducialResult fiducial_search(const Representation& rep, int restarts,
                               std::uint64_t seed,
                               FiducialScope scope = FiducialScope::AllNonidentity,
                               Execution exec = Execution::Parallel);

struct AntiunitaryCheck {
    int p = 0;
    long long half_order = 0; // p(p+1)/2
    long long p_squared = 0;
    bool pass = false; // half_order < p_squared verified exactly
    std::string note;
};

/// Rules out antiunitary help: were antiunitary elements present in a
/// minimal generating group, its unitary part would be an index-2 subgroup
/// of order p(p+1)/2 < p^2, too small to act irreducibly in dimension p,
/// and a reducible action with two equal components is impossible because p
/// is odd. NotOddPrime for other inputs.
AntiunitaryCheck antiunitary_check(int p);

struct CheckRecord {
    std::string name;
    std::string anchor;  // the mathematical claim this check verifies
    std::string outcome; // "pass" or "fail"
    std::string witness; // exact supporting data
    bool machine_checked = true;
};

struct CertificateReport {
    int p = 0;
    std::string branch; // "mersenne" or "not-mersenne"
    std::optional<int> n; // exponent when p = 2^n - 1
    std::vector<CheckRecord> checks;
    // possible values of the integer overlap sum m: [-(2^n-1), 2^n-1]
    std::optional<std::pair<long long, long long>> m_range;
    std::string verdict; // "NONEXISTENT" or "INCONCLUSIVE"
    std::uint64_t seed = 0;

    bool all_passed() const;
};

/// Decides nonexistence of a sharply covariant complete basis family in odd
/// prime dimension p. When p + 1 is not a power of two the candidate
/// generating group cannot exist (classification of the order-p(p+1) case;
/// recorded as an established theorem, machine-checked exhaustively only at
/// order 12). When p = 2^n - 1 the affine-group candidate is built and every
/// structural property is verified exactly, ending in the Diophantine
/// contradiction. restarts > 0 appends a numerical fiducial-search
/// corroboration on the mersenne branch. NotOddPrime unless p is an odd
/// prime.
CertificateReport certify(int p, std::uint64_t seed = 0, int restarts = 0);

} // namespace mublab
