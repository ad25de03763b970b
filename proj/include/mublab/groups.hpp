#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mublab/gf.hpp"

namespace mublab {

/// Finite group over contiguous element indices with the identity at index 0.
///
/// Two backings:
///  - explicit multiplication table (the small catalog groups);
///  - affine maps x -> a*x + b over a finite field, composed through the
///    field's index tables. Element ai*q + bi encodes a = field element
///    ai+1 (nonzero), b = field element bi, so the translations occupy
///    indices 0..q-1 and the identity (a=1, b=0) sits at index 0.
///
/// Group axioms are verified at construction: exhaustively for order <= 256,
/// by deterministic sampling above that.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> table);
    /// AGL(1,q) with its faithful action on the q field elements.
    static FiniteGroup affine(FieldPtr field);

    const std::string& name() const { return name_; }
    int order() const { return order_; }

    /// mul(g,h) composes maps with h applied first: (g*h)(x) = g(h(x)).
    int mul(int g, int h) const {
        if (!table_.empty()) return table_[static_cast<size_t>(g)][static_cast<size_t>(h)];
        const int q = static_cast<int>(field_->size());
        const int a1 = g / q + 1, b1 = g % q;
        const int a2 = h / q + 1, b2 = h % q;
        const int a = field_->mul_index(a1, a2);
        const int b = field_->add_index(field_->mul_index(a1, b2), b1);
        return (a - 1) * q + b;
    }
    int inv(int g) const { return inv_[static_cast<size_t>(g)]; }
    /// Conjugate h by g: g h g^{-1}.
    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
    int element_order(int g) const;

    bool has_action() const { return degree_ > 0; }
    int action_degree() const;
    /// Image of point x under element g. NoActionAttached without an action.
    int act(int g, int x) const {
        if (degree_ == 0) throw NoActionAttached("group " + name_ + " carries no point action");
        const int q = static_cast<int>(field_->size());
        return field_->add_index(field_->mul_index(g / q + 1, x), g % q);
    }

    bool is_affine() const { return static_cast<bool>(field_); }
    FieldPtr field() const { return field_; }
    /// (multiplier, offset) as field element indices; affine groups only.
    std::pair<int, int> affine_coords(int g) const;
    int affine_index(int a_field_index, int b_field_index) const;

private:
    FiniteGroup() = default;
    void build_inverses();
    void verify_axioms() const;

    std::string name_;
    int order_ = 1;
    FieldPtr field_;
    std::vector<std::vector<int>> table_; // empty for affine groups
    std::vector<int> inv_;
    int degree_ = 0;
};

/// Subgroup generated by gens (identity always included), as sorted indices.
std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens);

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& S);
bool is_normal(const FiniteGroup& G, const std::vector<int>& S);
bool is_elementary_abelian(const FiniteGroup& G, const std::vector<int>& S, int p);

/// One Sylow p-subgroup, grown from the identity by repeatedly adjoining an
/// order-p coset of the current subgroup's normalizer quotient.
std::vector<int> find_sylow(const FiniteGroup& G, int p);

/// Number of Sylow p-subgroups: one is located, then its distinct conjugates
/// are enumerated exhaustively. PrimeDoesNotDivideOrder if p does not divide
/// |G|.
long long sylow_count(const FiniteGroup& G, int p);

/// K = (G \ union of conjugates of H) + identity, for a Frobenius complement
/// H (H meets its conjugates trivially; NotFrobeniusComplement otherwise).
/// The result is verified to be a normal subgroup of order |G|/|H|.
std::vector<int> frobenius_kernel(const FiniteGroup& G, const std::vector<int>& H);

/// Exact partition into conjugacy classes, identity class first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);

/// All subgroups of the given order (sorted index sets). Guards: the order
/// must divide |G| (OrderDoesNotDivide) and |G| <= 48 (OrderTooLarge).
std::vector<std::vector<int>> subgroup_enumerate(const FiniteGroup& G, int order);

/// The exponent n with p = 2^n - 1 when p is a Mersenne prime, else empty.
std::optional<int> mersenne_check(long long p);

/// Element order -> count.
std::map<int, int> order_histogram(const FiniteGroup& G);

/// The five groups of order 12: C12, C2xC6, D12, Dic3, A4.
std::vector<FiniteGroup> order12_catalog();

} // namespace mublab
