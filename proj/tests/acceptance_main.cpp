// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion has a wall-clock budget enforced alongside its
// correctness checks; everything below runs on a single default seed.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "mublab/certifier.hpp"
#include "mublab/covariance.hpp"
#include "mublab/gf.hpp"
#include "mublab/groups.hpp"
#include "mublab/mub.hpp"
#include "mublab/repr.hpp"

using namespace mublab;

namespace {

int g_failures = 0;

double run_timed(int index, const char* name, double budget_seconds,
                 bool (*body)(std::string&)) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs >= budget_seconds) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over time budget";
    }
    std::printf("[%d/8] %-55s %s  (%.2f s / %.0f s)%s%s\n", index, name,
                ok ? "PASS" : "FAIL", secs, budget_seconds,
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++g_failures;
    return secs;
}

bool expect(bool cond, std::string& detail, const std::string& what) {
    if (!cond) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    return cond;
}

std::vector<int> odd_primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 3; p <= n; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// 1. Exact structural suite over the affine groups of GF(4) and GF(8):
//    orders, Sylow counts, Frobenius kernel, character sum, eigenvalue
//    multiplicities, label cycle, kernel star sum. Integer arithmetic only.
bool criterion1(std::string& detail) {
    bool ok = true;
    for (int q : {4, 8}) {
        const int n = q == 4 ? 2 : 3;
        const int p = q - 1;
        const FiniteGroup G = FiniteGroup::affine(FieldSpec::create(2, n));
        const std::string tag = "q=" + std::to_string(q) + ": ";
        ok &= expect(G.order() == static_cast<long long>(q) * (q - 1), detail,
                     tag + "group order");
        ok &= expect(sylow_count(G, p) == q, detail, tag + "sylow count");

        const auto H = find_sylow(G, p);
        auto K = frobenius_kernel(G, H);
        std::sort(K.begin(), K.end());
        std::vector<int> translations(static_cast<size_t>(q));
        std::iota(translations.begin(), translations.end(), 0);
        ok &= expect(K == translations, detail, tag + "kernel = translations");
        ok &= expect(is_elementary_abelian(G, K, 2), detail,
                     tag + "kernel elementary abelian");

        const Representation rep = Representation::standard(G);
        const IrreducibilitySum is = irreducibility_sum(rep);
        ok &= expect(is.irreducible && is.sum == G.order(), detail,
                     tag + "character square sum");

        const EigenStructure es = kernel_eigenstructure(rep, K);
        for (int b = 1; b < q; ++b) {
            int plus = 0;
            for (int j = 0; j < q - 1; ++j) plus += es.signs(j, b - 1) == 1;
            ok &= expect(plus == q / 2 - 1 && (q - 1 - plus) == q / 2, detail,
                         tag + "eigenvalue multiplicities b=" + std::to_string(b));
        }

        ok &= expect(cyclic_permutation_check(rep, G.affine_index(2, 0)).pass,
                     detail, tag + "single label cycle");

        const Eigen::MatrixXi S = kstar_sum(rep, K);
        ok &= expect((S + Eigen::MatrixXi::Identity(q - 1, q - 1)).cwiseAbs().sum() ==
                         0,
                     detail, tag + "kernel star sum = -I");
    }
    return ok;
}

// 2. Sign-sum feasibility: feasible only at n = 1, infeasible on [2, 33].
bool criterion2(std::string& detail) {
    bool ok = expect(sign_sum_infeasibility(1).feasible, detail, "n=1 feasible");
    for (int n = 2; n <= 33; ++n)
        ok &= expect(!sign_sum_infeasibility(n).feasible, detail,
                     "n=" + std::to_string(n) + " infeasible");
    return ok;
}

// 3. Certificates: NONEXISTENT for every odd prime <= 127, with the field
//    branch exactly at {3, 7, 31, 127} and the order-12 scan joined at p = 3.
bool criterion3(std::string& detail) {
    bool ok = true;
    for (int p : odd_primes_up_to(127)) {
        const CertificateReport cert = certify(p);
        const std::string tag = "p=" + std::to_string(p) + ": ";
        ok &= expect(cert.verdict == "NONEXISTENT", detail, tag + "verdict");
        const bool mersenne = p == 3 || p == 7 || p == 31 || p == 127;
        ok &= expect(cert.branch == (mersenne ? "mersenne" : "not-mersenne"),
                     detail, tag + "branch");
        ok &= expect(cert.all_passed(), detail, tag + "all checks");
        const bool has_scan =
            std::any_of(cert.checks.begin(), cert.checks.end(),
                        [](const CheckRecord& c) { return c.name == "order12_scan"; });
        ok &= expect(has_scan == (p == 3), detail, tag + "order-12 scan presence");
    }
    return ok;
}

// 4. Complete unbiased families for d in {2,3,5,7,11,13}: defects within
//    1e-9 and full operator-space rank d^2.
bool criterion4(std::string& detail) {
    bool ok = true;
    for (int d : {2, 3, 5, 7, 11, 13}) {
        const MubSet mub = construct_mub(d);
        const std::string tag = "d=" + std::to_string(d) + ": ";
        ok &= expect(verify_unbiased(mub, 1e-9).pass, detail, tag + "defects");
        ok &= expect(ic_rank(mub) == d * d, detail, tag + "rank");
    }
    return ok;
}

// 5. Positive control: the order-6 qubit collineation group acts sharply on
//    the three qubit bases (order 6 = d(d+1), full orbit, regular).
bool criterion5(std::string& detail) {
    const CovarianceVerdict v =
        sharp_covariance_check(construct_mub(2), qubit_order6_witness());
    bool ok = expect(v.pass, detail, "sharp covariance verdict");
    ok &= expect(v.group_order == 6 && v.orbit_size == 6, detail, "order/orbit 6");
    ok &= expect(v.covers_all_states && v.regular, detail, "coverage/regularity");
    return ok;
}

// 6. Fiducial search stays above the frozen floor, and a planted
//    counterexample (no nonidentity elements to constrain the state) drives
//    the objective to exactly zero, so the harness can detect feasibility.
//    Floor provenance: established by a pre-build dense random search
//    (2x10^6 uniform states) plus coordinate-rotation refinement over three
//    independent seeds; the minimum found was ~0.1806, and the acceptance
//    floor 0.17 sits 6% below it.
bool criterion6(std::string& detail) {
    const FiniteGroup G = FiniteGroup::affine(FieldSpec::create(2, 2));
    const Representation rep = Representation::standard(G);
    const FiducialResult best = fiducial_search(rep, 10000, 0);
    bool ok = expect(best.objective > 0.17, detail,
                     "best objective " + std::to_string(best.objective) +
                         " above floor 0.17");
    const FiducialResult planted =
        fiducial_search(std::vector<Eigen::MatrixXcd>{}, 3, 100, 0);
    ok &= expect(planted.objective == 0.0, detail,
                 "planted trivial group reaches objective 0");
    return ok;
}

// 7. Commutant dimensions: 1 for the full unitary models at q in {4, 8}
//    (irreducibility), q-1 for the translation images alone (the commuting
//    diagonal algebra).
bool criterion7(std::string& detail) {
    bool ok = true;
    for (int q : {4, 8}) {
        const int n = q == 4 ? 2 : 3;
        const FiniteGroup G = FiniteGroup::affine(FieldSpec::create(2, n));
        const Representation rep = Representation::standard(G);
        const std::string tag = "q=" + std::to_string(q) + ": ";

        std::vector<Collineation> full;
        for (int g = 0; g < G.order(); ++g)
            full.push_back(
                {rep.unitary_matrix(g).cast<std::complex<double>>(), false});
        ok &= expect(commutant_dim(full) == 1, detail, tag + "full group dim 1");

        std::vector<Collineation> kernel_only;
        for (int g = 0; g < q; ++g)
            kernel_only.push_back(
                {rep.unitary_matrix(g).cast<std::complex<double>>(), false});
        ok &= expect(commutant_dim(kernel_only) == q - 1, detail,
                     tag + "kernel dim q-1");
    }
    return ok;
}

// 8. Antiunitary order arithmetic for all odd primes <= 1000.
bool criterion8(std::string& detail) {
    bool ok = true;
    for (int p : odd_primes_up_to(1000)) {
        const AntiunitaryCheck c = antiunitary_check(p);
        ok &= expect(c.pass && c.half_order < c.p_squared, detail,
                     "p=" + std::to_string(p));
    }
    return ok;
}

} // namespace

int main() {
    std::printf("acceptance gate\n");
    run_timed(1, "exact structure suite, q in {4,8}", 10.0, criterion1);
    run_timed(2, "sign-sum infeasibility sweep, n in [1,33]", 1.0, criterion2);
    run_timed(3, "certificates for all odd primes <= 127", 60.0, criterion3);
    run_timed(4, "unbiased basis suite, d in {2,...,13}", 5.0, criterion4);
    run_timed(5, "qubit order-6 sharp covariance control", 1.0, criterion5);
    run_timed(6, "fiducial floor + planted counterexample", 120.0, criterion6);
    run_timed(7, "commutant dims: full group vs kernel", 5.0, criterion7);
    run_timed(8, "antiunitary arithmetic, odd primes <= 1000", 1.0, criterion8);
    std::printf("acceptance: %d/8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
