#include <doctest.h>

#include "mublab/certifier.hpp"
#include "mublab/gf.hpp"
#include "mublab/groups.hpp"

using namespace mublab;

namespace {

Representation standard_rep(int n) {
    return Representation::standard(FiniteGroup::affine(FieldSpec::create(2, n)));
}

const CheckRecord* find_check(const CertificateReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

TEST_SUITE("certifier") {

TEST_CASE("square-root infeasibility is exact") {
    auto r1 = sign_sum_infeasibility(1);
    CHECK(r1.feasible);
    CHECK(r1.m == -1);
    CHECK(r1.target == 1);

    auto r2 = sign_sum_infeasibility(2);
    CHECK_FALSE(r2.feasible);
    CHECK(r2.target == 3);
    CHECK(r2.floor_root == 1);
    CHECK(r2.pattern_sums == std::vector<long long>{-3, -1, 1, 3});

    auto r3 = sign_sum_infeasibility(3);
    CHECK_FALSE(r3.feasible);
    CHECK(r3.target == 7);
    CHECK(r3.floor_root == 2); // 4 < 7 < 9

    for (int n = 2; n <= 33; ++n) {
        CAPTURE(n);
        auto r = sign_sum_infeasibility(n);
        CHECK_FALSE(r.feasible);
        CHECK(r.floor_root * r.floor_root < r.target);
        CHECK((r.floor_root + 1) * (r.floor_root + 1) > r.target);
        CHECK(r.pattern_sums.empty() == (n != 2));
    }

    CHECK_THROWS_AS(sign_sum_infeasibility(0), Error);
    CHECK_THROWS_AS(sign_sum_infeasibility(34), Error);
}

TEST_CASE("antiunitary arithmetic") {
    auto a3 = antiunitary_check(3);
    CHECK(a3.pass);
    CHECK(a3.half_order == 6);
    CHECK(a3.p_squared == 9);

    auto a7 = antiunitary_check(7);
    CHECK(a7.pass);
    CHECK(a7.half_order == 28);
    CHECK(a7.p_squared == 49);

    auto a31 = antiunitary_check(31);
    CHECK(a31.pass);
    CHECK(a31.half_order == 496);
    CHECK(a31.p_squared == 961);

    for (int p = 3; p <= 1000; p += 2)
        if (is_prime(p)) CHECK(antiunitary_check(p).pass);

    CHECK_THROWS_AS(antiunitary_check(9), NotOddPrime);
    CHECK_THROWS_AS(antiunitary_check(2), NotOddPrime);
    CHECK_THROWS_AS(antiunitary_check(1), NotOddPrime);
    CHECK_THROWS_AS(antiunitary_check(15), NotOddPrime);
}

TEST_CASE("fiducial search on a vacuous constraint set reaches zero") {
    auto r = fiducial_search({}, 3, 3, 5);
    CHECK(r.objective == 0.0);
    CHECK(r.state.size() == 3);
    CHECK(std::abs(r.state.norm() - 1.0) < 1e-12);
}

TEST_CASE("fiducial search guards") {
    CHECK_THROWS_AS(fiducial_search({}, 0, 1, 0), Error);
    CHECK_THROWS_AS(fiducial_search({}, 3, 0, 0), Error);
    std::vector<Eigen::MatrixXcd> wrong = {Eigen::MatrixXcd::Identity(2, 2)};
    CHECK_THROWS_AS(fiducial_search(wrong, 3, 1, 0), Error);
}

TEST_CASE("fiducial search is deterministic and seed-prefix monotone") {
    auto rep = standard_rep(2);
    auto a = fiducial_search(rep, 20, 7);
    auto b = fiducial_search(rep, 20, 7);
    CHECK(a.objective == b.objective);
    CHECK(a.restart_index == b.restart_index);
    CHECK((a.state - b.state).cwiseAbs().maxCoeff() == 0.0);

    auto serial = fiducial_search(rep, 20, 7, FiducialScope::AllNonidentity,
                                  Execution::Serial);
    CHECK(serial.objective == a.objective);
    CHECK(serial.restart_index == a.restart_index);
    CHECK((serial.state - a.state).cwiseAbs().maxCoeff() == 0.0);

    // more restarts with the same seed can only improve the best objective
    auto r1 = fiducial_search(rep, 1, 7);
    auto r5 = fiducial_search(rep, 5, 7);
    CHECK(r5.objective <= r1.objective);
    CHECK(r5.objective >= a.objective);
}

TEST_CASE("fiducial objectives stay away from zero for the affine groups") {
    auto rep = standard_rep(2);
    auto full = fiducial_search(rep, 30, 0);
    CHECK(full.objective > 1e-3);
    auto kernel = fiducial_search(rep, 30, 0, FiducialScope::KernelOnly);
    CHECK(kernel.objective > 1e-3);
}

TEST_CASE("certificates for mersenne primes") {
    for (int p : {3, 7, 31}) {
        CAPTURE(p);
        auto rep = certify(p);
        CHECK(rep.p == p);
        CHECK(rep.branch == "mersenne");
        REQUIRE(rep.n.has_value());
        CHECK((1 << *rep.n) - 1 == p);
        CHECK(rep.verdict == "NONEXISTENT");
        CHECK(rep.all_passed());
        REQUIRE(rep.m_range.has_value());
        CHECK(rep.m_range->first == -p);
        CHECK(rep.m_range->second == p);
        for (const char* name :
             {"mersenne_form", "group_order", "sylow_count", "frobenius_kernel",
              "irreducibility_sum", "eigenvalue_multiplicities", "eigenbasis_cycle",
              "kernel_star_sum", "sign_sum_infeasibility", "antiunitary_subgroup"}) {
            CAPTURE(name);
            const auto* c = find_check(rep, name);
            REQUIRE(c != nullptr);
            CHECK(c->outcome == "pass");
            CHECK(c->machine_checked);
        }
        CHECK((find_check(rep, "order12_scan") != nullptr) == (p == 3));
        CHECK(find_check(rep, "fiducial_search") == nullptr); // restarts defaulted to 0
    }
}

TEST_CASE("the order-12 scan is recorded for p = 3") {
    auto rep = certify(3);
    const auto* scan = find_check(rep, "order12_scan");
    REQUIRE(scan != nullptr);
    CHECK(scan->outcome == "pass");
    CHECK(scan->witness.find("A4") != std::string::npos);
    CHECK(scan->witness.find("{1,1,1,3}") != std::string::npos);
}

TEST_CASE("certificates for non-mersenne primes") {
    for (int p : {5, 11, 13, 17, 19, 23, 29, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                  79, 83, 89, 97, 101, 103, 107, 109, 113}) {
        CAPTURE(p);
        auto rep = certify(p);
        CHECK(rep.branch == "not-mersenne");
        CHECK_FALSE(rep.n.has_value());
        CHECK_FALSE(rep.m_range.has_value());
        CHECK(rep.verdict == "NONEXISTENT");
        CHECK(rep.all_passed());
        const auto* cls = find_check(rep, "group_classification");
        REQUIRE(cls != nullptr);
        CHECK_FALSE(cls->machine_checked); // established theorem, labeled honestly
        const auto* nm = find_check(rep, "non_mersenne_order");
        REQUIRE(nm != nullptr);
        CHECK(nm->machine_checked);
    }
}

TEST_CASE("certification rejects non-odd-primes") {
    CHECK_THROWS_AS(certify(9), NotOddPrime);
    CHECK_THROWS_AS(certify(2), NotOddPrime);
    CHECK_THROWS_AS(certify(1), NotOddPrime);
    CHECK_THROWS_AS(certify(15), NotOddPrime);
    CHECK_THROWS_AS(certify(-3), NotOddPrime);
}

TEST_CASE("certificates are reproducible") {
    auto a = certify(3, 42, 10);
    auto b = certify(3, 42, 10);
    CHECK(a.verdict == b.verdict);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].anchor == b.checks[i].anchor);
        CHECK(a.checks[i].outcome == b.checks[i].outcome);
        CHECK(a.checks[i].witness == b.checks[i].witness);
        CHECK(a.checks[i].machine_checked == b.checks[i].machine_checked);
    }
}

TEST_CASE("optional fiducial corroboration joins the certificate") {
    auto rep = certify(3, 0, 25);
    const auto* f = find_check(rep, "fiducial_search");
    REQUIRE(f != nullptr);
    CHECK(f->outcome == "pass");
    CHECK(f->witness.find("25 restarts") != std::string::npos);
    CHECK(rep.verdict == "NONEXISTENT");
}

TEST_CASE("eigenvalue sign table matches the sign-pattern reasoning") {
    // the sums the Diophantine step reasons about are realized rows of the
    // translation eigenvalue table; every row sums to -1, consistent with the
    // exact -I sum over nonidentity translations
    for (int n : {2, 3}) {
        CAPTURE(n);
        auto rep = standard_rep(n);
        const int q = 1 << n;
        std::vector<int> K(static_cast<size_t>(q));
        for (int i = 0; i < q; ++i) K[static_cast<size_t>(i)] = i;
        auto es = kernel_eigenstructure(rep, K);
        for (int j = 0; j < q - 1; ++j) {
            long long row = 0;
            for (int b = 1; b < q; ++b) row += es.signs(j, b - 1);
            CHECK(row == -1);
        }
    }
    // for n = 2 the realized row sum -1 appears among the enumerated sums
    auto ss = sign_sum_infeasibility(2);
    bool found = false;
    for (long long s : ss.pattern_sums) found |= s == -1;
    CHECK(found);
}

} // TEST_SUITE
