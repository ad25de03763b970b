#include "mublab/groups.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mublab/parallel.hpp"

namespace mublab {

namespace {

constexpr std::uint64_t kAxiomSeed = 0x67726f75700001ULL;
constexpr int kExhaustiveOrderCap = 256;
constexpr int kSampledTriples = 20000;

int gpow(const FiniteGroup& G, int g, long long e) {
    int acc = 0;
    while (e-- > 0) acc = G.mul(acc, g);
    return acc;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table) {
    FiniteGroup G;
    G.name_ = std::move(name);
    G.order_ = static_cast<int>(table.size());
    G.table_ = std::move(table);
    if (G.order_ == 0) throw Error("empty multiplication table");
    for (const auto& row : G.table_) {
        if (static_cast<int>(row.size()) != G.order_)
            throw Error("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= G.order_)
                throw NotClosed("table entry out of range in group " + G.name_);
    }
    for (int g = 0; g < G.order_; ++g) {
        std::vector<char> row_seen(static_cast<size_t>(G.order_), 0);
        std::vector<char> col_seen(static_cast<size_t>(G.order_), 0);
        for (int h = 0; h < G.order_; ++h) {
            if (row_seen[static_cast<size_t>(G.mul(g, h))]++)
                throw NotClosed("row " + std::to_string(g) + " repeats in " + G.name_);
            if (col_seen[static_cast<size_t>(G.mul(h, g))]++)
                throw NotClosed("column " + std::to_string(g) + " repeats in " + G.name_);
        }
    }
    G.build_inverses();
    G.verify_axioms();
    return G;
}

FiniteGroup FiniteGroup::affine(FieldPtr field) {
    FiniteGroup G;
    const long long q = field->size();
    G.name_ = "AGL(1," + std::to_string(q) + ")";
    G.order_ = static_cast<int>(q * (q - 1));
    G.field_ = std::move(field);
    G.degree_ = static_cast<int>(q);
    G.build_inverses();
    G.verify_axioms();
    return G;
}

void FiniteGroup::build_inverses() {
    inv_.assign(static_cast<size_t>(order_), -1);
    if (!table_.empty()) {
        for (int g = 0; g < order_; ++g)
            for (int h = 0; h < order_; ++h)
                if (table_[static_cast<size_t>(g)][static_cast<size_t>(h)] == 0 &&
                    table_[static_cast<size_t>(h)][static_cast<size_t>(g)] == 0) {
                    inv_[static_cast<size_t>(g)] = h;
                    break;
                }
        for (int g = 0; g < order_; ++g)
            if (inv_[static_cast<size_t>(g)] < 0)
                throw Error("element " + std::to_string(g) + " has no inverse in " + name_);
    } else {
        const int q = static_cast<int>(field_->size());
        for (int g = 0; g < order_; ++g) {
            const int ai = g / q + 1, bi = g % q;
            const int a_inv = field_->inv_index(ai);
            const int b_new = field_->neg_index(field_->mul_index(a_inv, bi));
            inv_[static_cast<size_t>(g)] = (a_inv - 1) * q + b_new;
        }
    }
}

void FiniteGroup::verify_axioms() const {
    for (int g = 0; g < order_; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g)
            throw Error("identity fails at element " + std::to_string(g) + " in " + name_);
        if (mul(g, inv_[static_cast<size_t>(g)]) != 0 || mul(inv_[static_cast<size_t>(g)], g) != 0)
            throw Error("inverse fails at element " + std::to_string(g) + " in " + name_);
    }
    if (order_ <= kExhaustiveOrderCap) {
        for (int g = 0; g < order_; ++g)
            for (int h = 0; h < order_; ++h)
                for (int k = 0; k < order_; ++k)
                    if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                        throw Error("associativity fails in " + name_);
    } else {
        for (int i = 0; i < kSampledTriples; ++i) {
            const int g = static_cast<int>(mix_seed(kAxiomSeed, 3u * i) % order_);
            const int h = static_cast<int>(mix_seed(kAxiomSeed, 3u * i + 1) % order_);
            const int k = static_cast<int>(mix_seed(kAxiomSeed, 3u * i + 2) % order_);
            if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                throw Error("associativity fails in " + name_);
        }
    }
    if (degree_ > 0) {
        // action is a homomorphism and faithful
        const auto check_pair = [&](int g, int h) {
            const int gh = mul(g, h);
            for (int x = 0; x < degree_; ++x)
                if (act(gh, x) != act(g, act(h, x)))
                    throw Error("action is not a homomorphism in " + name_);
        };
        if (order_ <= kExhaustiveOrderCap) {
            for (int g = 0; g < order_; ++g)
                for (int h = 0; h < order_; ++h) check_pair(g, h);
        } else {
            for (int i = 0; i < kSampledTriples; ++i)
                check_pair(static_cast<int>(mix_seed(kAxiomSeed + 1, 2u * i) % order_),
                           static_cast<int>(mix_seed(kAxiomSeed + 1, 2u * i + 1) % order_));
        }
        for (int g = 1; g < order_; ++g) {
            bool moves = false;
            for (int x = 0; x < degree_ && !moves; ++x) moves = act(g, x) != x;
            if (!moves) throw Error("action is not faithful in " + name_);
        }
    }
}

int FiniteGroup::element_order(int g) const {
    int cur = g, n = 1;
    while (cur != 0) {
        cur = mul(cur, g);
        ++n;
        if (n > order_) throw Error("element order runaway in " + name_);
    }
    return n;
}

int FiniteGroup::action_degree() const { return degree_; }

std::pair<int, int> FiniteGroup::affine_coords(int g) const {
    if (!field_) throw Error("group " + name_ + " is not affine");
    const int q = static_cast<int>(field_->size());
    return {g / q + 1, g % q};
}

int FiniteGroup::affine_index(int a_field_index, int b_field_index) const {
    if (!field_) throw Error("group " + name_ + " is not affine");
    const int q = static_cast<int>(field_->size());
    if (a_field_index < 1 || a_field_index >= q || b_field_index < 0 || b_field_index >= q)
        throw Error("affine coordinates out of range");
    return (a_field_index - 1) * q + b_field_index;
}

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> mask(static_cast<size_t>(G.order()), 0);
    std::vector<int> elems{0};
    mask[0] = 1;
    for (int g : gens)
        if (!mask[static_cast<size_t>(g)]) {
            mask[static_cast<size_t>(g)] = 1;
            elems.push_back(g);
        }
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = 0; j < elems.size(); ++j) {
            for (int prod : {G.mul(elems[i], elems[j]), G.mul(elems[j], elems[i])}) {
                if (!mask[static_cast<size_t>(prod)]) {
                    mask[static_cast<size_t>(prod)] = 1;
                    elems.push_back(prod);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& S) {
    if (S.empty() || S[0] != 0) return false;
    std::vector<char> mask(static_cast<size_t>(G.order()), 0);
    for (int g : S) mask[static_cast<size_t>(g)] = 1;
    for (int g : S)
        for (int h : S)
            if (!mask[static_cast<size_t>(G.mul(g, h))]) return false;
    return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& S) {
    std::vector<char> mask(static_cast<size_t>(G.order()), 0);
    for (int g : S) mask[static_cast<size_t>(g)] = 1;
    for (int g = 0; g < G.order(); ++g)
        for (int s : S)
            if (!mask[static_cast<size_t>(G.conj(g, s))]) return false;
    return true;
}

bool is_elementary_abelian(const FiniteGroup& G, const std::vector<int>& S, int p) {
    for (int g : S) {
        if (g != 0 && G.element_order(g) != p) return false;
        for (int h : S)
            if (G.mul(g, h) != G.mul(h, g)) return false;
    }
    return true;
}

std::vector<int> find_sylow(const FiniteGroup& G, int p) {
    if (!is_prime(p)) throw Error("Sylow parameter " + std::to_string(p) + " is not prime");
    if (G.order() % p != 0)
        throw PrimeDoesNotDivideOrder(std::to_string(p) + " does not divide group order " +
                                      std::to_string(G.order()));
    long long target = 1;
    for (long long rest = G.order(); rest % p == 0; rest /= p) target *= p;

    std::vector<int> Q{0};
    std::vector<char> mask(static_cast<size_t>(G.order()), 0);
    mask[0] = 1;
    while (static_cast<long long>(Q.size()) < target) {
        // normalizer of Q
        std::vector<int> N;
        for (int g = 0; g < G.order(); ++g) {
            bool ok = true;
            for (int x : Q)
                if (!mask[static_cast<size_t>(G.conj(g, x))]) {
                    ok = false;
                    break;
                }
            if (ok) N.push_back(g);
        }
        // find a coset of order p in N/Q and adjoin it
        bool grown = false;
        for (int g : N) {
            if (mask[static_cast<size_t>(g)]) continue;
            int cur = g, t = 1;
            while (!mask[static_cast<size_t>(cur)]) {
                cur = G.mul(cur, g);
                ++t;
            }
            if (t % p != 0) continue;
            const int x = gpow(G, g, t / p);
            std::vector<int> grownQ = Q;
            int xj = 0;
            for (int j = 1; j < p; ++j) {
                xj = G.mul(xj, x);
                for (int y : Q) grownQ.push_back(G.mul(xj, y));
            }
            Q = std::move(grownQ);
            std::fill(mask.begin(), mask.end(), 0);
            for (int e : Q) mask[static_cast<size_t>(e)] = 1;
            if (static_cast<long long>(Q.size()) !=
                static_cast<long long>(std::count(mask.begin(), mask.end(), 1)))
                throw Error("Sylow growth produced duplicates in " + G.name());
            grown = true;
            break;
        }
        if (!grown) throw Error("Sylow growth stalled in " + G.name());
    }
    std::sort(Q.begin(), Q.end());
    return Q;
}

long long sylow_count(const FiniteGroup& G, int p) {
    const std::vector<int> P = find_sylow(G, p);
    std::set<std::vector<int>> distinct;
    std::vector<int> image(P.size());
    for (int g = 0; g < G.order(); ++g) {
        for (size_t i = 0; i < P.size(); ++i) image[i] = G.conj(g, P[i]);
        std::sort(image.begin(), image.end());
        distinct.insert(image);
    }
    return static_cast<long long>(distinct.size());
}

std::vector<int> frobenius_kernel(const FiniteGroup& G, const std::vector<int>& H) {
    std::vector<int> Hs = H;
    std::sort(Hs.begin(), Hs.end());
    if (!is_subgroup(G, Hs)) throw Error("complement candidate is not a subgroup of " + G.name());
    std::vector<char> in_H(static_cast<size_t>(G.order()), 0);
    for (int h : Hs) in_H[static_cast<size_t>(h)] = 1;

    std::vector<char> covered(static_cast<size_t>(G.order()), 0);
    for (int g = 0; g < G.order(); ++g) {
        const bool outside = !in_H[static_cast<size_t>(g)];
        for (int h : Hs) {
            const int c = G.conj(g, h);
            if (outside && h != 0 && in_H[static_cast<size_t>(c)])
                throw NotFrobeniusComplement("conjugate of complement meets it beyond identity");
            covered[static_cast<size_t>(c)] = 1;
        }
    }

    std::vector<int> K{0};
    for (int g = 1; g < G.order(); ++g)
        if (!covered[static_cast<size_t>(g)]) K.push_back(g);

    if (static_cast<long long>(K.size()) * static_cast<long long>(Hs.size()) != G.order())
        throw Error("kernel size is not the complement index in " + G.name());
    if (!is_subgroup(G, K)) throw Error("kernel is not closed in " + G.name());
    if (!is_normal(G, K)) throw Error("kernel is not normal in " + G.name());
    return K;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    if (G.order() > 4096)
        throw CapExceeded("conjugacy class partition capped at order 4096");
    std::vector<char> seen(static_cast<size_t>(G.order()), 0);
    std::vector<std::vector<int>> classes;
    for (int e = 0; e < G.order(); ++e) {
        if (seen[static_cast<size_t>(e)]) continue;
        std::vector<char> in_class(static_cast<size_t>(G.order()), 0);
        std::vector<int> cls;
        for (int g = 0; g < G.order(); ++g) {
            const int c = G.conj(g, e);
            if (!in_class[static_cast<size_t>(c)]) {
                in_class[static_cast<size_t>(c)] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        for (int c : cls) seen[static_cast<size_t>(c)] = 1;
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::vector<int>> subgroup_enumerate(const FiniteGroup& G, int order) {
    if (G.order() > 48)
        throw OrderTooLarge("subgroup enumeration capped at group order 48");
    if (order < 1 || G.order() % order != 0)
        throw OrderDoesNotDivide(std::to_string(order) + " does not divide " +
                                 std::to_string(G.order()));
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> frontier{{0}};
    known.insert({0});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& S : frontier) {
            if (static_cast<int>(S.size()) >= order) continue;
            std::vector<char> in_S(static_cast<size_t>(G.order()), 0);
            for (int s : S) in_S[static_cast<size_t>(s)] = 1;
            for (int g = 1; g < G.order(); ++g) {
                if (in_S[static_cast<size_t>(g)]) continue;
                std::vector<int> gens = S;
                gens.push_back(g);
                std::vector<int> T = closure(G, gens);
                if (static_cast<int>(T.size()) > order) continue;
                if (known.insert(T).second) next.push_back(std::move(T));
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out;
    for (const auto& S : known)
        if (static_cast<int>(S.size()) == order) out.push_back(S);
    return out;
}

std::optional<int> mersenne_check(long long p) {
    if (!is_prime(p)) return std::nullopt;
    long long m = p + 1;
    if ((m & (m - 1)) != 0) return std::nullopt;
    int n = 0;
    while (m > 1) {
        m >>= 1;
        ++n;
    }
    return n;
}

std::map<int, int> order_histogram(const FiniteGroup& G) {
    std::map<int, int> hist;
    for (int g = 0; g < G.order(); ++g) ++hist[G.element_order(g)];
    return hist;
}

namespace {

FiniteGroup cyclic12() {
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % 12;
    return FiniteGroup::from_table("C12", std::move(t));
}

FiniteGroup c2xc6() {
    // index = u*6 + v with u mod 2, v mod 6
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                ((i / 6 + j / 6) % 2) * 6 + (i % 6 + j % 6) % 6;
    return FiniteGroup::from_table("C2xC6", std::move(t));
}

FiniteGroup dihedral12() {
    // index = i + 6*j encodes r^i s^j with s r = r^{-1} s
    auto mul = [](int i1, int j1, int i2, int j2) {
        const int i = j1 == 0 ? (i1 + i2) % 6 : ((i1 - i2) % 6 + 6) % 6;
        return i + 6 * ((j1 + j2) % 2);
    };
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (int x = 0; x < 12; ++x)
        for (int y = 0; y < 12; ++y)
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = mul(x % 6, x / 6, y % 6, y / 6);
    return FiniteGroup::from_table("D12", std::move(t));
}

FiniteGroup dicyclic3() {
    // index = i + 6*j encodes a^i b^j with a^6 = 1, b^2 = a^3, b a = a^{-1} b
    auto mul = [](int i1, int j1, int i2, int j2) {
        if (j1 == 0) return (i1 + i2) % 6 + 6 * j2;
        const int i = ((i1 - i2) % 6 + 6) % 6;
        return j2 == 0 ? i + 6 : (i + 3) % 6;
    };
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (int x = 0; x < 12; ++x)
        for (int y = 0; y < 12; ++y)
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = mul(x % 6, x / 6, y % 6, y / 6);
    return FiniteGroup::from_table("Dic3", std::move(t));
}

FiniteGroup alternating4() {
    // even permutations of {0,1,2,3} in lexicographic order; identity first
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inversions += p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)];
        if (inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](const std::array<int, 4>& q) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return static_cast<int>(i);
        throw Error("permutation composition left A4");
    };
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (size_t i = 0; i < perms.size(); ++i)
        for (size_t j = 0; j < perms.size(); ++j) {
            std::array<int, 4> comp{};
            for (int x = 0; x < 4; ++x)
                comp[static_cast<size_t>(x)] =
                    perms[i][static_cast<size_t>(perms[j][static_cast<size_t>(x)])];
            t[i][j] = index_of(comp);
        }
    return FiniteGroup::from_table("A4", std::move(t));
}

} // namespace

std::vector<FiniteGroup> order12_catalog() {
    std::vector<FiniteGroup> out;
    out.push_back(cyclic12());
    out.push_back(c2xc6());
    out.push_back(dihedral12());
    out.push_back(dicyclic3());
    out.push_back(alternating4());
    return out;
}

} // namespace mublab
