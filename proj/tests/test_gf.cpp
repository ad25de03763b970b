#include <doctest.h>

#include "mublab/gf.hpp"

using namespace mublab;

TEST_SUITE("gf") {

TEST_CASE("default moduli are the lex-smallest irreducible polynomials") {
    CHECK(default_modulus(2, 2) == std::vector<int>{1, 1, 1});   // x^2+x+1
    CHECK(default_modulus(2, 3) == std::vector<int>{1, 0, 1, 1}); // x^3+x^2+1
    CHECK(default_modulus(3, 2) == std::vector<int>{1, 0, 1});   // x^2+1
    CHECK(default_modulus(2, 7) == default_modulus(2, 7));
}

TEST_CASE("irreducibility screening") {
    CHECK(poly_is_irreducible({1, 1, 1}, 2));
    CHECK_FALSE(poly_is_irreducible({1, 0, 1}, 2));    // x^2+1 = (x+1)^2
    CHECK_FALSE(poly_is_irreducible({0, 1, 1}, 2));    // x^2+x = x(x+1)
    CHECK(poly_is_irreducible({1, 1, 0, 1}, 2));       // x^3+x+1
    CHECK(poly_is_irreducible({1, 0, 1, 1}, 2));       // x^3+x^2+1
    CHECK_FALSE(poly_is_irreducible({1, 0, 0, 1}, 2)); // x^3+1
    CHECK_THROWS_AS(FieldSpec::create(2, 2, {1, 0, 1}), ReduciblePolynomial);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(FieldSpec::create(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::create(6, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::create(2, 13), CapExceeded); // 8192 over cap
    CHECK_THROWS_AS(FieldSpec::create(2, 3, {1, 1}), Error);
}

TEST_CASE("element order starts at zero then walks primitive powers") {
    auto f = FieldSpec::create(2, 3); // GF(8)/x^3+x^2+1
    CHECK(f->to_string() == "GF(8)/x^3+x^2+1");
    CHECK(f->element(0).is_zero());
    CHECK(f->element(1).is_one());
    auto g = f->primitive();
    CHECK(g.coeffs == std::vector<int>{0, 1}); // x is the smallest generator
    CHECK(g.index() == 2);
    for (int i = 0; i < 8; ++i) CHECK(f->element(i).index() == i);
    for (int k = 0; k < 7; ++k) CHECK(power(g, k).index() == k + 1);
    CHECK(power(g, 7).is_one());
}

TEST_CASE("GF(4) arithmetic") {
    auto f = FieldSpec::create(2, 2);
    auto w = f->primitive(); // w = x, w^2 = w+1
    CHECK((w * w).coeffs == std::vector<int>{1, 1});
    CHECK(inverse(w).coeffs == std::vector<int>{1, 1});
    CHECK((w + f->one()) == w * w);
    CHECK(absolute_trace(w) == 1);
    CHECK(absolute_trace(f->one()) == 0); // 1 + 1^2 = 0 in GF(2)
    CHECK(absolute_trace(f->zero()) == 0);
}

TEST_CASE("GF(8) with explicit modulus x^3+x+1") {
    auto f = FieldSpec::create(2, 3, {1, 1, 0, 1});
    CHECK(f->to_string() == "GF(8)/x^3+x+1");
    auto x = f->from_coeffs({0, 1});
    auto x2 = f->from_coeffs({0, 0, 1});
    CHECK((x * x2).coeffs == std::vector<int>{1, 1}); // x^3 = x+1
    CHECK(absolute_trace(f->one()) == 1);             // n = 3 ones
    CHECK(absolute_trace(x) == 0);
    CHECK(power(x, 7).is_one());
}

TEST_CASE("GF(9) primitive element and traces") {
    auto f = FieldSpec::create(3, 2); // modulus x^2+1
    auto g = f->primitive();
    CHECK(g.coeffs == std::vector<int>{1, 1}); // x is order 4, x+1 generates
    CHECK(power(g, 8).is_one());
    CHECK_FALSE(power(g, 4).is_one());
    CHECK(absolute_trace(f->one()) == 2);
    CHECK(absolute_trace(f->from_coeffs({0, 1})) == 0);
    CHECK(absolute_trace(g) == 2);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [r, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        auto f = FieldSpec::create(r, n);
        const int q = static_cast<int>(f->size());
        for (int i = 0; i < q; ++i) {
            CHECK(f->add_index(i, 0) == i);
            CHECK(f->mul_index(i, 1) == i);
            CHECK(f->mul_index(i, 0) == 0);
            CHECK(f->add_index(i, f->neg_index(i)) == 0);
            if (i != 0) {
                CHECK(f->mul_index(i, f->inv_index(i)) == 1);
                CHECK(f->mul_index(f->element(i).index(),
                                   power(f->element(i), q - 2).index()) == 1);
            }
            for (int j = 0; j < q; ++j) {
                CHECK(f->add_index(i, j) == f->add_index(j, i));
                CHECK(f->mul_index(i, j) == f->mul_index(j, i));
                for (int k = 0; k < q; ++k) {
                    CHECK(f->add_index(f->add_index(i, j), k) ==
                          f->add_index(i, f->add_index(j, k)));
                    CHECK(f->mul_index(f->mul_index(i, j), k) ==
                          f->mul_index(i, f->mul_index(j, k)));
                    CHECK(f->mul_index(i, f->add_index(j, k)) ==
                          f->add_index(f->mul_index(i, j), f->mul_index(i, k)));
                }
            }
        }
    }
}

TEST_CASE("index multiplication matches polynomial multiplication") {
    for (auto f : {FieldSpec::create(2, 3), FieldSpec::create(3, 2),
                   FieldSpec::create(2, 4)}) {
        const int q = static_cast<int>(f->size());
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                auto prod = f->element(i) * f->element(j);
                // Independent route: multiply coefficient vectors, reduce.
                std::vector<int> raw(f->element(i).coeffs.size() +
                                         f->element(j).coeffs.size(),
                                     0);
                for (size_t a = 0; a < f->element(i).coeffs.size(); ++a)
                    for (size_t b = 0; b < f->element(j).coeffs.size(); ++b)
                        raw[a + b] += f->element(i).coeffs[a] * f->element(j).coeffs[b];
                CHECK(f->from_coeffs(raw) == prod);
            }
    }
}

TEST_CASE("trace is additive and balanced over GF(2^n)") {
    for (int n : {2, 3, 4, 5, 7}) {
        auto f = FieldSpec::create(2, n);
        const int q = static_cast<int>(f->size());
        int ones = 0;
        for (int i = 0; i < q; ++i) {
            int ti = f->trace_index(i);
            CHECK((ti == 0 || ti == 1));
            ones += ti;
            for (int j = 0; j < q; ++j)
                CHECK(f->trace_index(f->add_index(i, j)) == (ti + f->trace_index(j)) % 2);
        }
        CHECK(ones == q / 2); // each trace value is hit equally often
    }
}

TEST_CASE("additive characters are orthogonal with squared norm q") {
    // chi_b(x) = (-1)^(Tr(xb)) over GF(2^n)
    for (int n : {2, 3, 4}) {
        auto f = FieldSpec::create(2, n);
        const int q = static_cast<int>(f->size());
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                int dot = 0;
                for (int x = 0; x < q; ++x) {
                    int sb = f->trace_index(f->mul_index(x, b)) ? -1 : 1;
                    int sc = f->trace_index(f->mul_index(x, c)) ? -1 : 1;
                    dot += sb * sc;
                }
                CHECK(dot == (b == c ? q : 0));
            }
    }
}

TEST_CASE("power handles edge exponents") {
    auto f = FieldSpec::create(2, 3);
    auto g = f->primitive();
    CHECK(power(g, 0).is_one());
    CHECK(power(g, -1) == inverse(g));
    CHECK(power(g, -3) == inverse(power(g, 3)));
    CHECK(power(f->zero(), 0).is_one());
    CHECK(power(f->zero(), 5).is_zero());
    CHECK_THROWS_AS(power(f->zero(), -1), ZeroInverse);
    CHECK_THROWS_AS(inverse(f->zero()), ZeroInverse);
    CHECK_THROWS_AS(f->inv_index(0), ZeroInverse);
}

TEST_CASE("elements refuse cross-field arithmetic") {
    auto f4 = FieldSpec::create(2, 2);
    auto f8a = FieldSpec::create(2, 3);
    auto f8b = FieldSpec::create(2, 3, {1, 1, 0, 1});
    CHECK_THROWS_AS(f4->one() + f8a->one(), SpecMismatch);
    CHECK_THROWS_AS(f8a->one() * f8b->one(), SpecMismatch);
    CHECK(f8a->one() + f8a->primitive() == f8a->from_coeffs({1, 1}));
}

TEST_CASE("GF(128) is exact at scale") {
    auto f = FieldSpec::create(2, 7);
    CHECK(f->size() == 128);
    auto g = f->primitive();
    CHECK(power(g, 127).is_one());
    for (long long d : {7LL, 63LL, 1LL}) // proper divisor orders never close
        CHECK_FALSE(power(g, d).is_one());
    int ones = 0;
    for (int i = 0; i < 128; ++i) ones += f->trace_index(i);
    CHECK(ones == 64);
    // spot-check inverses across the whole field
    for (int i = 1; i < 128; ++i) CHECK(f->mul_index(i, f->inv_index(i)) == 1);
}

TEST_CASE("prime fields work through the same interface") {
    auto f = FieldSpec::create(7, 1);
    CHECK(f->size() == 7);
    auto g = f->primitive();
    CHECK(g.coeffs == std::vector<int>{3}); // 3 is the least primitive root mod 7
    CHECK(absolute_trace(f->element(4)) == f->element(4).coeffs[0]);
    for (int i = 1; i < 7; ++i) CHECK(f->mul_index(i, f->inv_index(i)) == 1);
}

} // TEST_SUITE
