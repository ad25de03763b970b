#include "mublab/repr.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <random>

#include "mublab/parallel.hpp"

namespace mublab {

namespace {

constexpr double kMatrixTol = 1e-9;
constexpr std::uint64_t kPairSeed = 0x726570720001ULL;
constexpr int kSampledPairs = 10000;
constexpr int kExhaustivePairOrder = 56; // exhaustive pair checks up to AGL(1,8)

std::vector<int> translation_indices(int q) {
    std::vector<int> K(static_cast<size_t>(q));
    std::iota(K.begin(), K.end(), 0);
    return K;
}

void require_translations(const Representation& rep, const std::vector<int>& K) {
    const FiniteGroup& G = rep.group();
    if (!G.is_affine() || G.field()->characteristic() != 2)
        throw NotTranslationSubgroup("translation eigenstructure needs an affine group over GF(2^n)");
    if (K != translation_indices(rep.points()))
        throw NotTranslationSubgroup("subgroup is not the full translation block");
}

} // namespace

Representation Representation::standard(const FiniteGroup& G) {
    if (!G.has_action()) throw NoActionAttached("standard representation needs a point action");
    Representation rep(G);
    rep.q_ = G.action_degree();
    rep.d_ = rep.q_ - 1;
    if (rep.d_ < 1) throw Error("action degree must be at least 2");

    std::vector<char> hit(static_cast<size_t>(rep.q_), 0);
    for (int g = 0; g < G.order(); ++g) hit[static_cast<size_t>(G.act(g, 0))] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != rep.q_)
        throw Error("action of " + G.name() + " is not transitive");

    // lattice basis as float columns, then two-pass Gram-Schmidt
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(rep.q_, rep.d_);
    for (int j = 0; j < rep.d_; ++j) {
        F(j + 1, j) = 1.0;
        F(0, j) = -1.0;
    }
    Eigen::MatrixXd Q = F;
    for (int j = 0; j < rep.d_; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < j; ++i) Q.col(j) -= Q.col(i).dot(Q.col(j)) * Q.col(i);
        const double norm = Q.col(j).norm();
        if (norm < 1e-12) throw Error("degenerate lattice basis column");
        Q.col(j) /= norm;
    }
    rep.Q_ = Q;
    rep.B_ = Q.transpose() * F;

    if (rep.q_ <= 16) {
        std::vector<Eigen::MatrixXd> cache;
        cache.reserve(static_cast<size_t>(G.order()));
        for (int g = 0; g < G.order(); ++g) cache.push_back(rep.unitary_matrix(g));
        rep.unitary_ = std::move(cache);
    }
    rep.verify_integer_homomorphism();
    rep.verify_float_model();
    return rep;
}

Eigen::MatrixXi Representation::integer_matrix(int g) const {
    Eigen::MatrixXi M = Eigen::MatrixXi::Zero(d_, d_);
    const int g0 = G_.act(g, 0);
    for (int x = 1; x < q_; ++x) {
        const int gx = G_.act(g, x);
        if (gx != 0) M(gx - 1, x - 1) += 1;
        if (g0 != 0) M(g0 - 1, x - 1) -= 1;
    }
    return M;
}

int Representation::fixed_points(int g) const {
    int n = 0;
    for (int x = 0; x < q_; ++x) n += G_.act(g, x) == x;
    return n;
}

long long Representation::character(int g) const { return fixed_points(g) - 1; }

Eigen::MatrixXd Representation::unitary_matrix(int g) const {
    if (!unitary_.empty()) return unitary_[static_cast<size_t>(g)];
    const int ginv = G_.inv(g);
    Eigen::MatrixXd PQ(q_, d_);
    for (int y = 0; y < q_; ++y) PQ.row(y) = Q_.row(G_.act(ginv, y));
    return Q_.transpose() * PQ;
}

void Representation::verify_integer_homomorphism() const {
    const auto check_pair = [&](int g, int h) {
        const Eigen::MatrixXi Mg = integer_matrix(g);
        const Eigen::MatrixXi Mgh = integer_matrix(G_.mul(g, h));
        const int h0 = G_.act(h, 0);
        for (int x = 1; x < q_; ++x) {
            const int hx = G_.act(h, x);
            for (int r = 0; r < d_; ++r) {
                int v = 0;
                if (hx != 0) v += Mg(r, hx - 1);
                if (h0 != 0) v -= Mg(r, h0 - 1);
                if (v != Mgh(r, x - 1))
                    throw Error("integer model breaks the homomorphism law in " + G_.name());
            }
        }
    };
    if (G_.order() <= kExhaustivePairOrder) {
        for (int g = 0; g < G_.order(); ++g)
            for (int h = 0; h < G_.order(); ++h) check_pair(g, h);
    } else {
        for (int i = 0; i < kSampledPairs; ++i)
            check_pair(static_cast<int>(mix_seed(kPairSeed, 2u * i) % G_.order()),
                       static_cast<int>(mix_seed(kPairSeed, 2u * i + 1) % G_.order()));
    }
    // faithfulness: only the identity may act as the identity matrix
    for (int g = 1; g < G_.order(); ++g)
        if (fixed_points(g) == q_)
            throw Error("integer model is not faithful in " + G_.name());
}

void Representation::verify_float_model() const {
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d_, d_);
    const auto check_one = [&](int g) {
        const Eigen::MatrixXd U = unitary_matrix(g);
        if (((U * U.transpose()) - I).cwiseAbs().maxCoeff() > kMatrixTol)
            throw Error("float model is not orthogonal in " + G_.name());
        const Eigen::MatrixXd lhs = B_ * integer_matrix(g).cast<double>();
        if ((lhs - U * B_).cwiseAbs().maxCoeff() > kMatrixTol)
            throw Error("float and integer models disagree in " + G_.name());
    };
    if (G_.order() <= 256) {
        for (int g = 0; g < G_.order(); ++g) check_one(g);
    } else {
        for (int i = 0; i < 64; ++i)
            check_one(static_cast<int>(mix_seed(kPairSeed + 1, i) % G_.order()));
    }
}

IrreducibilitySum irreducibility_sum(const Representation& rep) {
    IrreducibilitySum out;
    const FiniteGroup& G = rep.group();
    for (int g = 0; g < G.order(); ++g) {
        const long long c = rep.character(g);
        out.sum += c * c;
    }
    out.irreducible = out.sum == G.order();
    return out;
}

IrreducibilitySum irreducibility_sum(const FiniteGroup& G, const std::vector<long long>& chi) {
    if (static_cast<int>(chi.size()) != G.order())
        throw Error("character vector length mismatch");
    IrreducibilitySum out;
    for (long long c : chi) out.sum += c * c;
    out.irreducible = out.sum == G.order();
    return out;
}

EigenStructure kernel_eigenstructure(const Representation& rep, const std::vector<int>& K) {
    require_translations(rep, K);
    const FiniteGroup& G = rep.group();
    const FieldPtr f = G.field();
    const int q = rep.points(), d = rep.degree();

    EigenStructure es;
    es.labels.resize(static_cast<size_t>(d));
    std::iota(es.labels.begin(), es.labels.end(), 1);

    es.vectors.resize(q, d);
    for (int j = 0; j < d; ++j)
        for (int y = 0; y < q; ++y)
            es.vectors(y, j) = f->trace_index(f->mul_index(j + 1, y)) ? -1 : 1;

    // column sums vanish and distinct columns are orthogonal with norm^2 q
    for (int i = 0; i < d; ++i) {
        if (es.vectors.col(i).sum() != 0) throw Error("eigenvector is not sum-zero");
        for (int j = 0; j < d; ++j) {
            const int dot = es.vectors.col(i).dot(es.vectors.col(j));
            if (dot != (i == j ? q : 0)) throw Error("eigenvectors are not orthogonal");
        }
    }

    // exact eigen relation: shifting entries by translation b multiplies
    // column x by (-1)^{Tr(x*b)}
    es.signs.resize(d, d);
    for (int b = 1; b < q; ++b) {
        for (int j = 0; j < d; ++j) {
            const int s = f->trace_index(f->mul_index(j + 1, b)) ? -1 : 1;
            es.signs(j, b - 1) = s;
            for (int y = 0; y < q; ++y)
                if (es.vectors(G.act(b, y), j) != s * es.vectors(y, j))
                    throw Error("translation eigenvalue mismatch at label " +
                                std::to_string(j + 1));
        }
    }

    // nondegeneracy: no two labels share an eigenvalue pattern
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if ((es.signs.row(i) - es.signs.row(j)).cwiseAbs().sum() == 0)
                throw Error("degenerate eigenvalue patterns at labels " + std::to_string(i + 1) +
                            " and " + std::to_string(j + 1));

    es.basis = (rep.basis().transpose() * es.vectors.cast<double>()) / std::sqrt(double(q));
    const Eigen::MatrixXd gram = es.basis.transpose() * es.basis;
    if ((gram - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > kMatrixTol)
        throw Error("projected eigenbasis lost orthonormality");
    if (q <= 16) {
        for (int b = 1; b < q; ++b) {
            const Eigen::MatrixXd U = rep.unitary_matrix(b);
            for (int j = 0; j < d; ++j)
                if ((U * es.basis.col(j) - es.signs(j, b - 1) * es.basis.col(j)).norm() > kMatrixTol)
                    throw Error("float eigen relation drifted");
        }
    }
    return es;
}

CyclicPermutationCheck cyclic_permutation_check(const Representation& rep, int g) {
    const FiniteGroup& G = rep.group();
    const int q = rep.points(), d = rep.degree();
    if (G.element_order(g) != d)
        throw WrongElementOrder("element order " + std::to_string(G.element_order(g)) +
                                ", expected " + std::to_string(d));
    const EigenStructure es = kernel_eigenstructure(rep, translation_indices(q));

    CyclicPermutationCheck out;
    std::map<std::vector<int>, int> by_pattern;
    for (int j = 0; j < d; ++j) {
        std::vector<int> w(static_cast<size_t>(q));
        for (int y = 0; y < q; ++y) w[static_cast<size_t>(y)] = es.vectors(y, j);
        by_pattern[w] = j;
    }

    // image of each eigenvector under g must be +-(another eigenvector), exactly
    std::vector<int> sigma(static_cast<size_t>(d), -1);
    const int ginv = G.inv(g);
    for (int j = 0; j < d; ++j) {
        std::vector<int> u(static_cast<size_t>(q)), nu(static_cast<size_t>(q));
        for (int y = 0; y < q; ++y) {
            u[static_cast<size_t>(y)] = es.vectors(G.act(ginv, y), j);
            nu[static_cast<size_t>(y)] = -u[static_cast<size_t>(y)];
        }
        auto it = by_pattern.find(u);
        if (it == by_pattern.end()) it = by_pattern.find(nu);
        if (it == by_pattern.end()) {
            out.failure = "image of label " + std::to_string(j + 1) + " left the eigenbasis rays";
            return out;
        }
        sigma[static_cast<size_t>(j)] = it->second;
    }

    // sigma must be one d-cycle
    out.label_cycle.push_back(es.labels[0]);
    int cur = 0;
    for (int step = 0; step < d; ++step) {
        cur = sigma[static_cast<size_t>(cur)];
        if (cur == 0) {
            if (step != d - 1) {
                out.failure = "label permutation closed after " + std::to_string(step + 1) +
                              " steps instead of " + std::to_string(d);
                out.label_cycle.clear();
                return out;
            }
        } else if (step < d - 1) {
            out.label_cycle.push_back(es.labels[static_cast<size_t>(cur)]);
        }
    }
    if (static_cast<int>(out.label_cycle.size()) != d) {
        out.failure = "label orbit is not the full cycle";
        out.label_cycle.clear();
        return out;
    }

    // conjugating each translation by g permutes the sign table consistently
    for (int k = 1; k < q; ++k) {
        const int kk = G.conj(g, k);
        if (kk <= 0 || kk >= q) {
            out.failure = "conjugate of a translation left the translation block";
            return out;
        }
        for (int j = 0; j < d; ++j)
            if (es.signs(sigma[static_cast<size_t>(j)], kk - 1) != es.signs(j, k - 1)) {
                out.failure = "sign table permutation inconsistency";
                return out;
            }
    }
    out.pass = true;
    return out;
}

Eigen::MatrixXi kstar_sum(const Representation& rep, const std::vector<int>& K) {
    require_translations(rep, K);
    const int d = rep.degree();
    Eigen::MatrixXi S = Eigen::MatrixXi::Zero(d, d);
    for (int k : K)
        if (k != 0) S += rep.integer_matrix(k);
    if ((S + Eigen::MatrixXi::Identity(d, d)).cwiseAbs().sum() != 0)
        throw Error("sum over nonidentity translations is not -I");
    return S;
}

namespace {

struct ClusterData {
    std::vector<int> degrees;          // per cluster
    std::vector<char> faithful;        // per cluster
};

ClusterData decompose_once(const FiniteGroup& G, std::uint64_t seed) {
    const int N = G.order();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    Eigen::MatrixXcd A(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) A(i, j) = std::complex<double>(nd(rng), nd(rng));
    A = (A + A.adjoint().eval()) / 2.0;

    // average A over conjugation by the left regular permutation action
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
    for (int g = 0; g < N; ++g) {
        const int ginv = G.inv(g);
        for (int x = 0; x < N; ++x) {
            const int gx = G.mul(ginv, x);
            for (int y = 0; y < N; ++y) M(x, y) += A(gx, G.mul(ginv, y));
        }
    }
    M /= double(N);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M);
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
    const Eigen::VectorXd ev = solver.eigenvalues();
    const Eigen::MatrixXcd V = solver.eigenvectors();

    const double gap = 1e-7 * std::max(1.0, ev.cwiseAbs().maxCoeff());
    ClusterData out;
    int start = 0;
    for (int i = 1; i <= N; ++i) {
        if (i == N || ev(i) - ev(i - 1) > gap) {
            const int dim = i - start;
            const Eigen::MatrixXcd block = V.middleCols(start, dim);
            const Eigen::MatrixXcd P = block * block.adjoint();
            // character of the cluster's invariant subspace
            bool faithful = true;
            for (int g = 0; g < N; ++g) {
                std::complex<double> chi = 0.0;
                for (int x = 0; x < N; ++x) chi += P(x, G.mul(g, x));
                if (g == 0 && std::abs(chi - std::complex<double>(dim, 0)) > 1e-6)
                    throw Error("cluster character fails at the identity");
                if (g != 0 && std::abs(std::abs(chi) - dim) < 1e-6) faithful = false;
            }
            out.degrees.push_back(dim);
            out.faithful.push_back(faithful);
            start = i;
        }
    }
    return out;
}

std::vector<int> degrees_from_clusters(const std::vector<int>& cluster_degrees,
                                       const std::string& name) {
    std::map<int, int> count;
    for (int d : cluster_degrees) ++count[d];
    std::vector<int> degrees;
    for (auto [d, c] : count) {
        if (c % d != 0)
            throw Error("cluster multiplicities of degree " + std::to_string(d) +
                        " do not balance in " + name);
        for (int i = 0; i < c / d; ++i) degrees.push_back(d);
    }
    return degrees;
}

} // namespace

RegularDecomposition regular_rep_degrees(const FiniteGroup& G, std::uint64_t seed) {
    const ClusterData cd = decompose_once(G, seed);
    RegularDecomposition out;
    out.cluster_degrees = cd.degrees;
    out.cluster_faithful = cd.faithful;
    out.degrees = degrees_from_clusters(cd.degrees, G.name());
    for (int d : out.degrees) out.degree_square_sum += static_cast<long long>(d) * d;
    if (out.degree_square_sum != G.order())
        throw Error("degree squares sum to " + std::to_string(out.degree_square_sum) +
                    " instead of the order of " + G.name());
    return out;
}

std::vector<ScanEntry> small_order_scan(int order, std::uint64_t seed) {
    if (order != 12) throw UnsupportedOrder("catalog covers order 12 only");
    const int target = 3; // solves p(p+1) = 12

    std::vector<ScanEntry> out;
    int idx = 0;
    for (const FiniteGroup& G : order12_catalog()) {
        const RegularDecomposition first = regular_rep_degrees(G, mix_seed(seed, idx));
        const RegularDecomposition second =
            regular_rep_degrees(G, mix_seed(seed, idx + 1000));
        if (first.degrees != second.degrees)
            throw Error("independent draws disagree on degrees for " + G.name());
        ++idx;

        ScanEntry e;
        e.group = G.name();
        e.degrees = first.degrees;
        e.max_degree = *std::max_element(e.degrees.begin(), e.degrees.end());
        for (size_t c = 0; c < first.cluster_degrees.size(); ++c)
            if (first.cluster_faithful[c])
                e.max_faithful_degree = std::max(e.max_faithful_degree, first.cluster_degrees[c]);
        e.faithful_at_target = false;
        for (size_t c = 0; c < first.cluster_degrees.size(); ++c)
            if (first.cluster_faithful[c] && first.cluster_degrees[c] == target)
                e.faithful_at_target = true;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace mublab
