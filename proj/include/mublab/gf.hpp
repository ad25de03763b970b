#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mublab/errors.hpp"

namespace mublab {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Element of GF(r^n) in the polynomial basis of its FieldSpec.
/// Coefficients are stored constant term first and kept reduced mod r.
struct FieldElement {
    FieldPtr spec;
    std::vector<int> coeffs;

    bool is_zero() const;
    bool is_one() const;
    /// Position in the owning field's canonical element order (0, g^0, g^1, ...).
    int index() const;
};

bool operator==(const FieldElement& a, const FieldElement& b);
bool operator!=(const FieldElement& a, const FieldElement& b);

/// Exact field arithmetic by polynomial computation mod the field's modulus.
/// Operands must belong to the same field (SpecMismatch otherwise).
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement inverse(const FieldElement& a); // ZeroInverse on 0
FieldElement power(const FieldElement& a, long long k); // k < 0 inverts first

/// Absolute trace to the prime subfield, Tr(a) = a + a^r + ... + a^(r^(n-1)).
/// The result lies in GF(r) and is returned as an integer in [0, r).
int absolute_trace(const FieldElement& a);

/// A finite field GF(r^n), fixed irreducible modulus, with a canonical
/// element order: 0 first, then the powers g^0, g^1, ..., g^(q-2) of the
/// canonical primitive element. Index-level add/mul/inv tables are
/// precomputed from the polynomial arithmetic so group-layer loops stay
/// cheap without giving up exactness.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Builds GF(r^n). When no modulus is given the default is the
    /// lexicographically smallest irreducible polynomial of degree n over
    /// GF(r), coefficients compared from the constant term. A supplied
    /// modulus must have degree n and is verified irreducible.
    static FieldPtr create(int characteristic, int degree,
                           std::vector<int> modulus = {});

    int characteristic() const { return r_; }
    int degree() const { return n_; }
    long long size() const { return q_; } // q = r^n
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(int index) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }
    /// The canonical primitive element: smallest in polynomial-basis
    /// lexicographic order among elements of multiplicative order q-1.
    FieldElement primitive() const;
    FieldElement from_coeffs(std::vector<int> coeffs) const;
    int index_of(const std::vector<int>& coeffs) const;

    // Index-level arithmetic over the canonical order. Multiplication and
    // inversion ride the power order directly: index i >= 1 holds g^(i-1).
    int add_index(int i, int j) const { return add_[at(i, j)]; }
    int mul_index(int i, int j) const {
        if (i == 0 || j == 0) return 0;
        return static_cast<int>(1 + (static_cast<long long>(i) - 1 + j - 1) % (q_ - 1));
    }
    int inv_index(int i) const;
    int neg_index(int i) const { return neg_[static_cast<size_t>(i)]; }
    int trace_index(int i) const { return trace_[static_cast<size_t>(i)]; }

    /// "GF(q)/modulus", e.g. "GF(8)/x^3+x^2+1".
    std::string to_string() const;
    std::string modulus_string() const;

    /// Structural identity: same characteristic, degree and modulus.
    bool same_field(const FieldSpec& other) const;

private:
    FieldSpec() = default;
    size_t at(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(q_) +
               static_cast<size_t>(j);
    }

    int r_ = 0;
    int n_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_;            // length n+1, constant term first
    std::vector<std::vector<int>> elems_; // canonical order
    std::vector<int> index_of_code_;      // packed coeff code -> index
    std::vector<int> add_, neg_, trace_;
};

/// True iff poly (constant term first, nonzero leading coefficient) is
/// irreducible over GF(r). Checked by trial division.
bool poly_is_irreducible(const std::vector<int>& poly, int r);

/// The default modulus chosen by FieldSpec::create when none is supplied.
std::vector<int> default_modulus(int r, int n);

std::string poly_to_string(const std::vector<int>& poly);

bool is_prime(long long v);

} // namespace mublab
