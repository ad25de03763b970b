#include "mublab/covariance.hpp"

#include <cmath>

namespace mublab {

namespace {

constexpr double kEntryFloor = 1e-8;    // "nonzero" cutoff for phase fixing
constexpr double kUnitaryTol = 1e-9;

void require_unitary(const std::vector<Collineation>& group) {
    for (const auto& c : group)
        if (unitary_defect(c.matrix) > kUnitaryTol)
            throw Error("collineation matrix is not unitary");
}

int find_in(const std::vector<Collineation>& set, const Collineation& c, double tol) {
    for (size_t i = 0; i < set.size(); ++i)
        if (same_collineation(set[i], c, tol)) return static_cast<int>(i);
    return -1;
}

void require_closed(const std::vector<Collineation>& group, double tol) {
    require_unitary(group);
    const int n = static_cast<int>(group.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (find_in(group, compose(group[static_cast<size_t>(i)],
                                       group[static_cast<size_t>(j)]),
                        tol) < 0)
                throw NotClosed("product of elements " + std::to_string(i) + " and " +
                                std::to_string(j) + " is not in the set");
}

} // namespace

Collineation compose(const Collineation& f, const Collineation& g) {
    Collineation r;
    r.matrix = f.antiunitary ? (f.matrix * g.matrix.conjugate()).eval()
                             : (f.matrix * g.matrix).eval();
    r.antiunitary = f.antiunitary != g.antiunitary;
    return r;
}

Eigen::VectorXcd act(const Collineation& c, const Eigen::VectorXcd& v) {
    if (c.antiunitary) return c.matrix * v.conjugate();
    return c.matrix * v;
}

double unitary_defect(const Eigen::MatrixXcd& m) {
    return (m.adjoint() * m -
            Eigen::MatrixXcd::Identity(m.rows(), m.cols()))
        .cwiseAbs()
        .maxCoeff();
}

Eigen::MatrixXcd canonical_phase(const Eigen::MatrixXcd& m) {
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) {
            const std::complex<double> z = m(i, j);
            if (std::abs(z) > kEntryFloor) return m * (std::abs(z) / z);
        }
    return m;
}

Eigen::VectorXcd canonical_ray(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd u = v / v.norm();
    for (int i = 0; i < u.size(); ++i) {
        const std::complex<double> z = u(i);
        if (std::abs(z) > kEntryFloor) return u * (std::abs(z) / z);
    }
    return u;
}

bool same_collineation(const Collineation& a, const Collineation& b, double tol) {
    if (a.antiunitary != b.antiunitary) return false;
    if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols())
        return false;
    return (canonical_phase(a.matrix) - canonical_phase(b.matrix)).cwiseAbs().maxCoeff() <=
           tol;
}

bool same_ray(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, double tol) {
    return std::abs(std::abs(u.dot(v)) - 1.0) <= tol;
}

std::vector<Collineation> close_collineations(const std::vector<Collineation>& generators,
                                              int cap) {
    require_unitary(generators);
    std::vector<Collineation> group;
    const int d = generators.empty() ? 0 : static_cast<int>(generators[0].matrix.rows());
    group.push_back({Eigen::MatrixXcd::Identity(d, d), false});
    // breadth-first generator words; every element is some word s_k...s_1,
    // so left-composing generators onto each discovered element finds all
    for (size_t i = 0; i < group.size(); ++i)
        for (const auto& g : generators) {
            Collineation c = compose(g, group[i]);
            c.matrix = canonical_phase(c.matrix);
            if (find_in(group, c, 1e-7) < 0) {
                if (static_cast<int>(group.size()) >= cap)
                    throw CapExceeded("closure passed " + std::to_string(cap) +
                                      " elements");
                group.push_back(std::move(c));
            }
        }
    return group;
}

std::vector<Eigen::VectorXcd> orbit(const std::vector<Collineation>& generators,
                                    const Eigen::VectorXcd& fiducial, int cap,
                                    double ray_tol) {
    require_unitary(generators);
    if (cap < 1) throw Error("orbit cap must be at least 1");
    std::vector<Eigen::VectorXcd> rays;
    rays.push_back(canonical_ray(fiducial));
    for (size_t i = 0; i < rays.size(); ++i)
        for (const auto& g : generators) {
            Eigen::VectorXcd next = canonical_ray(act(g, rays[i]));
            bool known = false;
            for (const auto& r : rays)
                if (same_ray(r, next, ray_tol)) {
                    known = true;
                    break;
                }
            if (!known) {
                if (static_cast<int>(rays.size()) >= cap)
                    throw CapExceeded("orbit passed " + std::to_string(cap) + " rays");
                rays.push_back(std::move(next));
            }
        }
    return rays;
}

CovarianceVerdict sharp_covariance_check(const MubSet& mub,
                                         const std::vector<Collineation>& group,
                                         double ray_tol) {
    const int d = mub.dim;
    if (d < 1) throw Error("basis dimension must be positive");
    for (const auto& basis : mub.bases)
        if (basis.rows() != d || basis.cols() != d)
            throw Error("basis block shape does not match the stated dimension");
    for (const auto& g : group)
        if (g.matrix.rows() != d || g.matrix.cols() != d)
            throw Error(
                "collineation matrix dimension does not match the basis dimension");

    require_closed(group, 1e-7);

    CovarianceVerdict v;
    v.expected_order = d * (d + 1);

    // count distinct phase classes (tolerates duplicated inputs)
    std::vector<Collineation> distinct;
    for (const auto& g : group) {
        Collineation c{canonical_phase(g.matrix), g.antiunitary};
        if (find_in(distinct, c, 1e-7) < 0) distinct.push_back(std::move(c));
    }
    v.group_order = static_cast<int>(distinct.size());
    if (v.group_order != v.expected_order) {
        v.failure = "group order " + std::to_string(v.group_order) + " != " +
                    std::to_string(v.expected_order);
        return v;
    }

    // all d(d+1) basis states as canonical rays
    std::vector<Eigen::VectorXcd> states;
    for (const auto& basis : mub.bases)
        for (int b = 0; b < d; ++b) states.push_back(canonical_ray(basis.col(b)));

    for (size_t a = 0; a < mub.bases.size(); ++a)
        for (int b = 0; b < d; ++b) {
            const Eigen::VectorXcd psi = canonical_ray(mub.bases[a].col(b));
            int fixers = 0;
            std::vector<Eigen::VectorXcd> rays;
            for (const auto& g : distinct) {
                const Eigen::VectorXcd img = canonical_ray(act(g, psi));
                if (same_ray(img, psi, ray_tol)) ++fixers;
                bool known = false;
                for (const auto& r : rays)
                    if (same_ray(r, img, ray_tol)) {
                        known = true;
                        break;
                    }
                if (!known) rays.push_back(img);
            }
            v.fiducial_basis = static_cast<int>(a);
            v.fiducial_state = b;
            v.orbit_size = static_cast<int>(rays.size());
            bool covers = v.orbit_size == static_cast<int>(states.size());
            if (covers)
                for (const auto& s : states) {
                    bool hit = false;
                    for (const auto& r : rays)
                        if (same_ray(r, s, ray_tol)) {
                            hit = true;
                            break;
                        }
                    if (!hit) {
                        covers = false;
                        break;
                    }
                }
            v.covers_all_states = covers;
            v.regular = fixers == 1; // only the identity may fix the fiducial
            if (covers && v.regular) {
                v.pass = true;
                return v;
            }
        }
    v.failure = "no basis state has a full regular orbit";
    return v;
}

int commutant_dim(const std::vector<Collineation>& group) {
    int d = 0;
    for (const auto& c : group)
        if (!c.antiunitary) {
            d = static_cast<int>(c.matrix.rows());
            break;
        }
    if (d == 0) throw Error("commutant needs at least one unitary element");

    // MU = UM  <=>  (I kron U - U^T kron I) vec(M) = 0, column-major vec;
    // stack the systems as A = sum L^dagger L and count zero eigenvalues.
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (const auto& c : group) {
        if (c.antiunitary) continue;
        const Eigen::MatrixXcd& u = c.matrix;
        Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(d * d, d * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    L(i + j * d, k + j * d) += u(i, k); // I kron U
                    L(i + j * d, i + k * d) -= u(k, j); // U^T kron I
                }
        A += L.adjoint() * L;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    const double cut = 1e-7 * std::max(1.0, top);
    int null_dim = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        null_dim += std::abs(es.eigenvalues()(i)) < cut;
    return null_dim;
}

std::vector<Collineation> qubit_order6_witness() {
    const std::complex<double> I(0, 1);
    Eigen::Matrix2cd sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, -I, I, 0;
    sz << 1, 0, 0, -1;
    // rotation by 2*pi/3 about (1,1,1)/sqrt(3): cos(pi/3) I - i sin(pi/3) n.s
    const Eigen::Matrix2cd r3 = 0.5 * (Eigen::Matrix2cd::Identity() - I * (sx + sy + sz));
    // rotation by pi about (1,-1,0)/sqrt(2), a two-fold axis perpendicular to
    // the three-fold one; together they close at order 6 (axis stabilizer),
    // not the full order-24 rotation group of the basis octahedron
    const Eigen::Matrix2cd r2 = -I * (sx - sy) / std::sqrt(2.0);
    return close_collineations({{r3, false}, {r2, false}}, 16);
}

AntiunitarySplit antiunitary_split(const std::vector<Collineation>& group) {
    require_closed(group, 1e-7);
    AntiunitarySplit split;
    for (const auto& g : group)
        (g.antiunitary ? split.antiunitary : split.unitary).push_back(g);
    const size_t u = split.unitary.size(), a = split.antiunitary.size();
    if (u == 0 || (a != 0 && a != u))
        throw Error("antiunitary part is not a single coset of the unitary part");
    split.index = a == 0 ? 1 : 2;
    return split;
}

} // namespace mublab
