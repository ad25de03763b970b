#include "mublab/gf.hpp"

#include <algorithm>
#include <sstream>

namespace mublab {

namespace {

// Polynomials are coefficient vectors over GF(r), constant term first.

int mod_int(long long v, int r) {
    long long m = v % r;
    if (m < 0) m += r;
    return static_cast<int>(m);
}

int inv_mod(int a, int r) {
    a = mod_int(a, r);
    if (a == 0) throw ZeroInverse("zero has no inverse mod " + std::to_string(r));
    int t = 0, new_t = 1, n = r, new_n = a;
    while (new_n != 0) {
        int quot = n / new_n;
        int tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = n - quot * new_n;
        n = new_n;
        new_n = tmp;
    }
    return mod_int(t, r);
}

void ptrim(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int pdeg(const std::vector<int>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

std::vector<int> padd(const std::vector<int>& a, const std::vector<int>& b, int r) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        int v = 0;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v += b[i];
        out[i] = mod_int(v, r);
    }
    ptrim(out);
    return out;
}

std::vector<int> pmul(const std::vector<int>& a, const std::vector<int>& b, int r) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_int(out[i + j] + static_cast<long long>(a[i]) * b[j], r);
    }
    ptrim(out);
    return out;
}

// Remainder of a by monic divisor m.
std::vector<int> pmod_monic(std::vector<int> a, const std::vector<int>& m, int r) {
    int dm = pdeg(m);
    for (int da = pdeg(a); da >= dm; da = pdeg(a)) {
        int lead = a[static_cast<size_t>(da)];
        int shift = da - dm;
        for (int i = 0; i <= dm; ++i) {
            size_t k = static_cast<size_t>(i + shift);
            a[k] = mod_int(a[k] - static_cast<long long>(lead) * m[static_cast<size_t>(i)], r);
        }
    }
    ptrim(a);
    return a;
}

std::vector<int> make_monic(std::vector<int> p, int r) {
    int d = pdeg(p);
    if (d < 0) return p;
    int lead = p[static_cast<size_t>(d)];
    if (lead != 1) {
        int s = inv_mod(lead, r);
        for (auto& c : p) c = mod_int(static_cast<long long>(c) * s, r);
    }
    ptrim(p);
    return p;
}

// Element codes treat the constant term as the least significant digit,
// so index order over codes walks 0, 1, ..., x, x+1, ... for r = 2.
long long code_of(const std::vector<int>& coeffs, int r, int n) {
    long long code = 0;
    for (int i = n - 1; i >= 0; --i) {
        int c = i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(i)] : 0;
        code = code * r + c;
    }
    return code;
}

std::vector<int> coeffs_of_code(long long code, int r, int n) {
    std::vector<int> coeffs(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        coeffs[static_cast<size_t>(i)] = static_cast<int>(code % r);
        code /= r;
    }
    return coeffs;
}

std::vector<long long> proper_divisors(long long v) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        if (d < v) out.push_back(d);
        long long e = v / d;
        if (e != d && e < v) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ppow_mod(std::vector<int> base, long long k, const std::vector<int>& m, int r) {
    std::vector<int> acc{1};
    base = pmod_monic(std::move(base), m, r);
    while (k > 0) {
        if (k & 1) acc = pmod_monic(pmul(acc, base, r), m, r);
        base = pmod_monic(pmul(base, base, r), m, r);
        k >>= 1;
    }
    return acc;
}

bool is_one_poly(const std::vector<int>& p) {
    return pdeg(p) == 0 && p[0] == 1;
}

constexpr long long kMaxFieldSize = 4096;

} // namespace

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool poly_is_irreducible(const std::vector<int>& poly, int r) {
    std::vector<int> p = make_monic(poly, r);
    int n = pdeg(p);
    if (n <= 0) return false;
    if (n == 1) return true;
    if (p[0] == 0) return false; // divisible by x
    // Trial-divide by every monic polynomial of degree 1..n/2.
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= r;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> div = coeffs_of_code(code, r, d);
            div.push_back(1);
            if (pdeg(pmod_monic(p, div, r)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int r, int n) {
    // Scan monic degree-n polynomials in lexicographic order of
    // (c0, c1, ..., c_{n-1}) and return the first irreducible one.
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= r;
    for (long long k = 0; k < count; ++k) {
        std::vector<int> cand(static_cast<size_t>(n), 0);
        long long rem = k;
        for (int i = n - 1; i >= 0; --i) {
            cand[static_cast<size_t>(i)] = static_cast<int>(rem % r);
            rem /= r;
        }
        cand.push_back(1);
        if (poly_is_irreducible(cand, r)) return cand;
    }
    throw Error("no irreducible polynomial found (degree " + std::to_string(n) + ")");
}

FieldPtr FieldSpec::create(int characteristic, int degree, std::vector<int> modulus) {
    if (!is_prime(characteristic))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(characteristic) +
                                     " is not prime");
    if (degree < 1) throw Error("field degree must be positive");

    long long q = 1;
    for (int i = 0; i < degree; ++i) {
        q *= characteristic;
        if (q > kMaxFieldSize)
            throw CapExceeded("field size exceeds cap " + std::to_string(kMaxFieldSize));
    }

    if (modulus.empty()) {
        modulus = default_modulus(characteristic, degree);
    } else {
        for (auto& c : modulus) c = mod_int(c, characteristic);
        modulus = make_monic(std::move(modulus), characteristic);
        if (pdeg(modulus) != degree)
            throw Error("modulus degree " + std::to_string(pdeg(modulus)) +
                        " does not match field degree " + std::to_string(degree));
        if (!poly_is_irreducible(modulus, characteristic))
            throw ReduciblePolynomial("modulus " + poly_to_string(modulus) +
                                      " is reducible over GF(" +
                                      std::to_string(characteristic) + ")");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->r_ = characteristic;
    spec->n_ = degree;
    spec->q_ = q;
    spec->modulus_ = modulus;

    const int r = characteristic;
    const int n = degree;

    // Canonical primitive element: the code-order-smallest element of
    // multiplicative order q-1.
    auto mul_ord_full = [&](const std::vector<int>& a) {
        for (long long d : proper_divisors(q - 1))
            if (is_one_poly(ppow_mod(a, d, modulus, r))) return false;
        return is_one_poly(ppow_mod(a, q - 1, modulus, r));
    };
    std::vector<int> g;
    for (long long code = 1; code < q; ++code) {
        std::vector<int> cand = coeffs_of_code(code, r, n);
        ptrim(cand);
        if (mul_ord_full(cand)) {
            g = cand;
            break;
        }
    }
    if (g.empty()) throw Error("no primitive element found in " + spec->to_string());

    // Element order: 0 first, then g^0, g^1, ..., g^(q-2).
    spec->elems_.reserve(static_cast<size_t>(q));
    spec->elems_.push_back({});
    std::vector<int> pw{1};
    for (long long k = 0; k < q - 1; ++k) {
        spec->elems_.push_back(pw);
        pw = pmod_monic(pmul(pw, g, r), modulus, r);
    }

    spec->index_of_code_.assign(static_cast<size_t>(q), -1);
    for (long long i = 0; i < q; ++i) {
        long long code = code_of(spec->elems_[static_cast<size_t>(i)], r, n);
        if (spec->index_of_code_[static_cast<size_t>(code)] != -1)
            throw Error("primitive element powers collide in " + spec->to_string());
        spec->index_of_code_[static_cast<size_t>(code)] = static_cast<int>(i);
    }

    // Index-level addition table; multiplication rides the power order
    // (index i >= 1 holds g^(i-1)) so it needs no table.
    spec->add_.assign(static_cast<size_t>(q) * static_cast<size_t>(q), 0);
    for (long long i = 0; i < q; ++i) {
        for (long long j = 0; j <= i; ++j) {
            std::vector<int> s = padd(spec->elems_[static_cast<size_t>(i)],
                                      spec->elems_[static_cast<size_t>(j)], r);
            int idx = spec->index_of_code_[static_cast<size_t>(code_of(s, r, n))];
            spec->add_[spec->at(static_cast<int>(i), static_cast<int>(j))] = idx;
            spec->add_[spec->at(static_cast<int>(j), static_cast<int>(i))] = idx;
        }
    }

    spec->neg_.assign(static_cast<size_t>(q), 0);
    for (long long i = 0; i < q; ++i) {
        std::vector<int> m = spec->elems_[static_cast<size_t>(i)];
        for (auto& c : m) c = mod_int(-c, r);
        ptrim(m);
        spec->neg_[static_cast<size_t>(i)] = spec->index_of_code_[static_cast<size_t>(code_of(m, r, n))];
    }

    spec->trace_.assign(static_cast<size_t>(q), 0);
    for (long long i = 0; i < q; ++i) {
        const std::vector<int>& a = spec->elems_[static_cast<size_t>(i)];
        std::vector<int> acc;
        std::vector<int> term = a;
        for (int k = 0; k < n; ++k) {
            acc = padd(acc, term, r);
            term = ppow_mod(term, r, modulus, r);
        }
        if (pdeg(acc) > 0)
            throw Error("trace left the prime subfield in " + spec->to_string());
        spec->trace_[static_cast<size_t>(i)] = acc.empty() ? 0 : acc[0];
    }

    return spec;
}

FieldElement FieldSpec::element(int index) const {
    if (index < 0 || index >= q_)
        throw Error("element index " + std::to_string(index) + " out of range for " + to_string());
    return FieldElement{shared_from_this(), elems_[static_cast<size_t>(index)]};
}

FieldElement FieldSpec::primitive() const { return element(q_ > 2 ? 2 : 1); }

FieldElement FieldSpec::from_coeffs(std::vector<int> coeffs) const {
    std::vector<int> reduced(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) reduced[i] = mod_int(coeffs[i], r_);
    reduced = pmod_monic(std::move(reduced), modulus_, r_);
    return element(index_of(reduced));
}

int FieldSpec::index_of(const std::vector<int>& coeffs) const {
    if (pdeg(coeffs) >= n_) throw Error("coefficient vector exceeds field degree");
    return index_of_code_[static_cast<size_t>(code_of(coeffs, r_, n_))];
}

int FieldSpec::inv_index(int i) const {
    if (i == 0) throw ZeroInverse("zero has no multiplicative inverse");
    return static_cast<int>(1 + ((q_ - 1) - (i - 1)) % (q_ - 1));
}

std::string FieldSpec::modulus_string() const { return poly_to_string(modulus_); }

std::string FieldSpec::to_string() const {
    return "GF(" + std::to_string(q_) + ")/" + modulus_string();
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    return r_ == other.r_ && n_ == other.n_ && modulus_ == other.modulus_;
}

bool FieldElement::is_zero() const { return coeffs.empty(); }

bool FieldElement::is_one() const {
    return coeffs.size() == 1 && coeffs[0] == 1;
}

int FieldElement::index() const { return spec->index_of(coeffs); }

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.spec || !b.spec || !a.spec->same_field(*b.spec))
        throw SpecMismatch("operands belong to different fields");
}

} // namespace

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.coeffs == b.coeffs;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.spec->element(a.spec->add_index(a.index(), b.index()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.spec->element(a.spec->mul_index(a.index(), b.index()));
}

FieldElement inverse(const FieldElement& a) {
    return a.spec->element(a.spec->inv_index(a.index()));
}

FieldElement power(const FieldElement& a, long long k) {
    const long long q = a.spec->size();
    if (a.is_zero()) {
        if (k < 0) throw ZeroInverse("zero has no negative powers");
        return k == 0 ? a.spec->one() : a.spec->zero();
    }
    long long e = k % (q - 1);
    if (e < 0) e += q - 1;
    int acc = 1; // g^0
    int base = a.index();
    while (e > 0) {
        if (e & 1) acc = a.spec->mul_index(acc, base);
        base = a.spec->mul_index(base, base);
        e >>= 1;
    }
    return a.spec->element(acc);
}

int absolute_trace(const FieldElement& a) { return a.spec->trace_index(a.index()); }

std::string poly_to_string(const std::vector<int>& poly) {
    int d = pdeg(poly);
    if (d < 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = d; i >= 0; --i) {
        int c = poly[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace mublab
