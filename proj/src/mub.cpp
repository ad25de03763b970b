#include "mublab/mub.hpp"

#include <cmath>

#include "mublab/gf.hpp"

namespace mublab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

MubSet construct_mub(int dim) {
    if (!is_prime(dim)) throw NonPrimeDimension(std::to_string(dim) + " is not prime");
    if (dim > 131) throw CapExceeded("basis construction capped at dimension 131");

    MubSet mub;
    mub.dim = dim;
    mub.bases.reserve(static_cast<size_t>(dim) + 1);
    mub.bases.push_back(Eigen::MatrixXcd::Identity(dim, dim));

    if (dim == 2) {
        const double s = 1.0 / std::sqrt(2.0);
        Eigen::MatrixXcd x(2, 2), y(2, 2);
        x << s, s, s, -s;
        y << s, s, std::complex<double>(0, s), std::complex<double>(0, -s);
        mub.bases.push_back(x);
        mub.bases.push_back(y);
        return mub;
    }

    // roots of unity from exact integer multiples of 2*pi/d
    std::vector<std::complex<double>> roots(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        const double angle = 2.0 * kPi * k / dim;
        roots[static_cast<size_t>(k)] = {std::cos(angle), std::sin(angle)};
    }
    const double scale = 1.0 / std::sqrt(double(dim));
    for (int a = 0; a < dim; ++a) {
        Eigen::MatrixXcd basis(dim, dim);
        for (int b = 0; b < dim; ++b)
            for (int j = 0; j < dim; ++j) {
                const long long e = (static_cast<long long>(a) * j * j +
                                     static_cast<long long>(b) * j) %
                                    dim;
                basis(j, b) = roots[static_cast<size_t>(e)] * scale;
            }
        mub.bases.push_back(std::move(basis));
    }
    return mub;
}

UnbiasedReport verify_unbiased(const MubSet& mub, double tol, Execution exec) {
    const int nb = static_cast<int>(mub.bases.size());
    const int d = mub.dim;
    const double target = 1.0 / d;

    std::vector<double> ortho(static_cast<size_t>(nb), 0.0);
    std::vector<double> cross(static_cast<size_t>(nb) * static_cast<size_t>(nb), 0.0);

    const auto ortho_defect = [&](int a) {
        const Eigen::MatrixXcd gram = mub.bases[static_cast<size_t>(a)].adjoint() *
                                      mub.bases[static_cast<size_t>(a)];
        return (gram - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    };
    const auto cross_defect = [&](int a, int b) {
        const Eigen::MatrixXcd m = mub.bases[static_cast<size_t>(a)].adjoint() *
                                   mub.bases[static_cast<size_t>(b)];
        return (m.cwiseAbs2().array() - target).abs().maxCoeff();
    };

    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int a = 0; a < nb; ++a) ortho[static_cast<size_t>(a)] = ortho_defect(a);
#pragma omp parallel for schedule(dynamic)
        for (int idx = 0; idx < nb * nb; ++idx) {
            const int a = idx / nb, b = idx % nb;
            if (a < b)
                cross[static_cast<size_t>(idx)] = cross_defect(a, b);
        }
    } else {
        for (int a = 0; a < nb; ++a) ortho[static_cast<size_t>(a)] = ortho_defect(a);
        for (int a = 0; a < nb; ++a)
            for (int b = a + 1; b < nb; ++b)
                cross[static_cast<size_t>(a) * static_cast<size_t>(nb) +
                      static_cast<size_t>(b)] = cross_defect(a, b);
    }

    UnbiasedReport rep;
    for (double v : ortho) rep.max_orthonormality_defect = std::max(rep.max_orthonormality_defect, v);
    for (double v : cross) rep.max_overlap_defect = std::max(rep.max_overlap_defect, v);
    rep.pass = rep.max_orthonormality_defect <= tol && rep.max_overlap_defect <= tol;
    return rep;
}

Eigen::MatrixXcd povm_matrix(const MubSet& mub) {
    const int d = mub.dim;
    const int nb = static_cast<int>(mub.bases.size());
    Eigen::MatrixXcd M(nb * d, d * d);
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < d; ++b) {
            const Eigen::VectorXcd psi = mub.bases[static_cast<size_t>(a)].col(b);
            const Eigen::MatrixXcd proj = (psi * psi.adjoint()) / double(nb);
            M.row(a * d + b) = Eigen::Map<const Eigen::VectorXcd>(proj.data(), d * d);
        }
    return M;
}

double povm_completeness_defect(const MubSet& mub) {
    const int d = mub.dim;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    const int nb = static_cast<int>(mub.bases.size());
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < d; ++b) {
            const Eigen::VectorXcd psi = mub.bases[static_cast<size_t>(a)].col(b);
            sum += (psi * psi.adjoint()) / double(nb);
        }
    return (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

int ic_rank(const MubSet& mub) {
    if (mub.dim > 31) throw CapExceeded("operator-space rank capped at dimension 31");
    const Eigen::MatrixXcd M = povm_matrix(mub);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cut = 1e-9 * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) rank += sv(i) > cut;
    return rank;
}

} // namespace mublab
