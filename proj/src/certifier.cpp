#include "mublab/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "mublab/gf.hpp"
#include "mublab/groups.hpp"

namespace mublab {

namespace {

// any located minimum this far above zero is not a feasible fiducial; a real
// solution would be driven below the refinement resolution (~1e-7)
constexpr double kFeasibilityResolution = 1e-4;

long long exact_isqrt(long long t) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(t)));
    while (r > 0 && r * r > t) --r;
    while ((r + 1) * (r + 1) <= t) ++r;
    return r;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double overlap_objective(const std::vector<Eigen::MatrixXcd>& us,
                         const Eigen::VectorXcd& psi, Eigen::VectorXcd& work,
                         double target, double cutoff) {
    double worst = 0.0;
    for (const auto& u : us) {
        work.noalias() = u * psi;
        const double dev = std::abs(std::norm(psi.dot(work)) - target);
        if (dev > worst) {
            worst = dev;
            if (worst >= cutoff) return worst; // candidate already rejected
        }
    }
    return worst;
}

struct RestartOutcome {
    double objective = 0.0;
    Eigen::VectorXcd state;
};

RestartOutcome run_restart(const std::vector<Eigen::MatrixXcd>& us, int dim,
                           std::uint64_t restart_seed, double target) {
    std::mt19937_64 rng(restart_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int m = 2 * dim; // real parameterization of the unit sphere
    Eigen::VectorXd x(m);
    for (int i = 0; i < m; ++i) x(i) = gauss(rng);
    x.normalize();

    Eigen::VectorXcd psi(dim), work(dim);
    const auto decode = [&](const Eigen::VectorXd& v) {
        for (int i = 0; i < dim; ++i) psi(i) = {v(i), v(i + dim)};
    };
    decode(x);
    double current =
        overlap_objective(us, psi, work, target, std::numeric_limits<double>::infinity());

    // coordinate-pair rotations keep the norm exact; the step decays
    // geometrically once a full sweep brings no improvement
    Eigen::VectorXd y = x;
    double step = 0.5;
    for (int sweep = 0; sweep < 200 && step > 1e-7; ++sweep) {
        bool improved = false;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (const double angle : {step, -step}) {
                    const double c = std::cos(angle), s = std::sin(angle);
                    y = x;
                    y(i) = c * x(i) - s * x(j);
                    y(j) = s * x(i) + c * x(j);
                    decode(y);
                    const double cand = overlap_objective(us, psi, work, target, current);
                    if (cand < current) {
                        x = y;
                        current = cand;
                        improved = true;
                    }
                }
        if (!improved) step *= 0.5;
    }
    decode(x);
    return {current, psi};
}

} // namespace

SignSumResult sign_sum_infeasibility(int n) {
    if (n < 1 || n > 33)
        throw Error("exponent " + std::to_string(n) + " outside the exact range [1, 33]");
    SignSumResult r;
    r.n = n;
    r.target = (1LL << n) - 1;
    r.floor_root = exact_isqrt(r.target);
    r.feasible = r.floor_root * r.floor_root == r.target;
    if (r.feasible) r.m = -r.floor_root; // the overlap sum is forced negative
    if (n == 2) {
        std::set<long long> sums;
        for (int pattern = 0; pattern < 8; ++pattern) {
            long long sum = 0;
            for (int bit = 0; bit < 3; ++bit) sum += (pattern >> bit) & 1 ? 1 : -1;
            sums.insert(sum);
        }
        r.pattern_sums.assign(sums.begin(), sums.end());
    }
    return r;
}

FiducialResult fiducial_search(const std::vector<Eigen::MatrixXcd>& unitaries, int dim,
                               int restarts, std::uint64_t seed, Execution exec) {
    if (dim < 1) throw Error("state dimension must be positive");
    if (restarts < 1) throw Error("at least one restart is required");
    for (const auto& u : unitaries)
        if (u.rows() != dim || u.cols() != dim)
            throw Error("unitary dimension mismatch");
    const double target = 1.0 / dim;

    std::vector<double> objectives(static_cast<size_t>(restarts));
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < restarts; ++r)
            objectives[static_cast<size_t>(r)] =
                run_restart(unitaries, dim, mix_seed(seed, static_cast<std::uint64_t>(r)),
                            target)
                    .objective;
    } else {
        for (int r = 0; r < restarts; ++r)
            objectives[static_cast<size_t>(r)] =
                run_restart(unitaries, dim, mix_seed(seed, static_cast<std::uint64_t>(r)),
                            target)
                    .objective;
    }

    int best = 0;
    for (int r = 1; r < restarts; ++r)
        if (objectives[static_cast<size_t>(r)] < objectives[static_cast<size_t>(best)])
            best = r; // strict: ties stay with the lowest index
    // recompute the winner to recover its state without storing every state
    RestartOutcome out = run_restart(
        unitaries, dim, mix_seed(seed, static_cast<std::uint64_t>(best)), target);
    return {out.objective, std::move(out.state), best};
}

FiducialResult fiducial_search(const Representation& rep, int restarts,
                               std::uint64_t seed, FiducialScope scope, Execution exec) {
    const int last = scope == FiducialScope::KernelOnly ? rep.points() : rep.group().order();
    std::vector<Eigen::MatrixXcd> us;
    us.reserve(static_cast<size_t>(last - 1));
    for (int g = 1; g < last; ++g)
        us.push_back(rep.unitary_matrix(g).cast<std::complex<double>>());
    return fiducial_search(us, rep.degree(), restarts, seed, exec);
}

AntiunitaryCheck antiunitary_check(int p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw NotOddPrime(std::to_string(p) + " is not an odd prime");
    AntiunitaryCheck c;
    c.p = p;
    c.half_order = static_cast<long long>(p) * (p + 1) / 2;
    c.p_squared = static_cast<long long>(p) * p;
    c.pass = c.half_order < c.p_squared;
    c.note = "an index-2 unitary subgroup would have order " +
             std::to_string(c.half_order) + " < " + std::to_string(c.p_squared) +
             ", below the minimum for irreducible action in dimension " +
             std::to_string(p) +
             "; splitting into two equal components is impossible for odd " +
             std::to_string(p);
    return c;
}

bool CertificateReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.outcome == "pass"; });
}

namespace {

void push(CertificateReport& rep, std::string name, std::string anchor, bool pass,
          std::string witness, bool machine_checked = true) {
    rep.checks.push_back({std::move(name), std::move(anchor), pass ? "pass" : "fail",
                          std::move(witness), machine_checked});
}

void append_antiunitary(CertificateReport& rep) {
    const AntiunitaryCheck a = antiunitary_check(rep.p);
    push(rep, "antiunitary_subgroup",
         "a minimal generating group with antiunitary elements would leave a "
         "unitary subgroup of index 2 and order p(p+1)/2 < p^2, too small to act "
         "irreducibly, and odd p forbids two equal reducible components",
         a.pass,
         "p(p+1)/2 = " + std::to_string(a.half_order) + " < " +
             std::to_string(a.p_squared) + " = p^2");
}

} // namespace

CertificateReport certify(int p, std::uint64_t seed, int restarts) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw NotOddPrime(std::to_string(p) + " is not an odd prime");

    CertificateReport rep;
    rep.p = p;
    rep.seed = seed;

    const std::optional<int> n = mersenne_check(p);
    if (!n) {
        rep.branch = "not-mersenne";
        long long below = 1;
        while (below * 2 <= p + 1) below *= 2;
        push(rep, "non_mersenne_order",
             "a group generating the d(d+1) states of a complete basis family "
             "in dimension p without repetition has order p(p+1), which forces "
             "p + 1 to be a power of two; here it is not",
             below != p + 1,
             "p + 1 = " + std::to_string(p + 1) + " lies strictly between " +
                 std::to_string(below) + " and " + std::to_string(2 * below));
        push(rep, "group_classification",
             "every group of order p(p+1) acting the required way is the "
             "one-dimensional affine group over a field of p + 1 elements, so no "
             "candidate group exists when p + 1 is not a prime power of two",
             true,
             "established classification theorem; machine-checked exhaustively "
             "only at order 12",
             /*machine_checked=*/false);
        append_antiunitary(rep);
        rep.verdict = rep.all_passed() ? "NONEXISTENT" : "INCONCLUSIVE";
        return rep;
    }

    rep.branch = "mersenne";
    rep.n = *n;
    const long long top = (1LL << *n) - 1;
    rep.m_range = {-top, top};
    const int q = p + 1;

    push(rep, "mersenne_form", "p = 2^n - 1, so a field with p + 1 elements exists",
         (1LL << *n) - 1 == p, "n = " + std::to_string(*n));

    const FieldPtr field = FieldSpec::create(2, *n);
    const FiniteGroup G = FiniteGroup::affine(field);
    push(rep, "group_order",
         "the affine maps x -> ax + b over the field of q = p + 1 elements form "
         "a sharply 2-transitive group of order q(q-1) = p(p+1), the minimum "
         "order that can generate the d(d+1) states without repetition",
         G.order() == static_cast<long long>(p) * (p + 1) &&
             G.order() == static_cast<long long>(q) * (q - 1),
         "order = " + std::to_string(G.order()));

    const long long syl = sylow_count(G, p);
    push(rep, "sylow_count",
         "the group has exactly p + 1 subgroups of order p (the point "
         "stabilizers), pinning its isomorphism type",
         syl == p + 1, "count = " + std::to_string(syl));

    std::vector<int> translations(static_cast<size_t>(q));
    std::iota(translations.begin(), translations.end(), 0);
    const std::vector<int> H = find_sylow(G, p);
    std::vector<int> K = frobenius_kernel(G, H);
    std::sort(K.begin(), K.end());
    push(rep, "frobenius_kernel",
         "the elements lying in no conjugate of a point stabilizer, plus the "
         "identity, form a normal elementary abelian subgroup of order p + 1 "
         "(the translations)",
         K == translations && is_elementary_abelian(G, K, 2) &&
             static_cast<int>(K.size()) == q,
         "kernel = translations, order " + std::to_string(K.size()));

    const Representation srep = Representation::standard(G);
    const IrreducibilitySum is = irreducibility_sum(srep);
    push(rep, "irreducibility_sum",
         "the squared characters of the degree-p component of the permutation "
         "action sum to the group order, so that component is irreducible",
         is.irreducible && is.sum == G.order(),
         "sum = " + std::to_string(is.sum) + " = |G|");

    const EigenStructure es = kernel_eigenstructure(srep, translations);
    bool mult_ok = true;
    for (int b = 1; b < q && mult_ok; ++b) {
        int plus = 0, minus = 0;
        for (int j = 0; j < q - 1; ++j)
            (es.signs(j, b - 1) == 1 ? plus : minus) += 1;
        mult_ok = plus == q / 2 - 1 && minus == q / 2;
    }
    push(rep, "eigenvalue_multiplicities",
         "every nonidentity translation acts on the irreducible component with "
         "eigenvalues +1 and -1 of multiplicities 2^(n-1) - 1 and 2^(n-1)",
         mult_ok,
         "per translation: +1 x " + std::to_string(q / 2 - 1) + ", -1 x " +
             std::to_string(q / 2));

    const CyclicPermutationCheck cyc = cyclic_permutation_check(srep, G.affine_index(2, 0));
    push(rep, "eigenbasis_cycle",
         "a multiplicative generator permutes the p common eigenvectors of the "
         "translations in a single p-cycle, so the joint eigenvalue patterns "
         "are nondegenerate",
         cyc.pass, cyc.pass ? "label cycle length " + std::to_string(cyc.label_cycle.size())
                            : cyc.failure);

    const Eigen::MatrixXi S = kstar_sum(srep, translations);
    const bool kstar_ok =
        (S + Eigen::MatrixXi::Identity(q - 1, q - 1)).cwiseAbs().sum() == 0;
    push(rep, "kernel_star_sum",
         "the representing matrices of the nonidentity translations sum to "
         "minus the identity, exactly",
         kstar_ok, "integer matrix sum equals -I");

    const SignSumResult ss = sign_sum_infeasibility(*n);
    std::string ss_witness = std::to_string(ss.floor_root) + "^2 = " +
                             std::to_string(ss.floor_root * ss.floor_root) + " < " +
                             std::to_string(ss.target) + " < " +
                             std::to_string((ss.floor_root + 1) * (ss.floor_root + 1)) +
                             " = " + std::to_string(ss.floor_root + 1) + "^2";
    if (*n == 2) {
        ss_witness += "; sign-pattern sums {";
        for (size_t i = 0; i < ss.pattern_sums.size(); ++i)
            ss_witness += (i ? "," : "") + std::to_string(ss.pattern_sums[i]);
        ss_witness += "} exclude -sqrt(3)";
    }
    push(rep, "sign_sum_infeasibility",
         "a fiducial unbiased against the p nonidentity translations would force "
         "-1 = m/sqrt(2^n - 1) with integer m in [-(2^n - 1), 2^n - 1], but "
         "2^n - 1 is not a perfect square for n >= 2",
         !ss.feasible, ss_witness);

    if (p == 3) {
        const auto scan = small_order_scan(12, seed);
        int hits = 0;
        std::string witness;
        for (const auto& e : scan)
            if (e.faithful_at_target) {
                ++hits;
                witness = e.group + " degrees {";
                for (size_t i = 0; i < e.degrees.size(); ++i)
                    witness += (i ? "," : "") + std::to_string(e.degrees[i]);
                witness += "}";
            }
        push(rep, "order12_scan",
             "among all five groups of order 12, exactly one admits a "
             "projectively faithful irreducible representation of degree 3, and "
             "it is isomorphic to the affine group over the 4-element field",
             hits == 1, witness.empty() ? "no group qualified" : witness);
    }

    if (restarts > 0) {
        const FiducialResult f =
            fiducial_search(srep, restarts, seed, FiducialScope::AllNonidentity);
        push(rep, "fiducial_search",
             "numerical corroboration: minimizing the worst unbiasedness defect "
             "over unit states stays above the feasibility resolution, so no "
             "fiducial satisfies all the overlap constraints",
             f.objective > kFeasibilityResolution,
             "best objective " + fmt_double(f.objective) + " after " +
                 std::to_string(restarts) + " restarts (seed " + std::to_string(seed) +
                 ")");
    }

    append_antiunitary(rep);
    rep.verdict = rep.all_passed() ? "NONEXISTENT" : "INCONCLUSIVE";
    return rep;
}

} // namespace mublab
