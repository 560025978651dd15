#include "qprop/density.hpp"

#include "qprop/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace qprop {

double gaussian_pdf(const Quaternion& q, const CovarianceR& g) {
    Eigen::LLT<Matrix4> llt(0.5 * (g.matrix + g.matrix.transpose()));
    if (llt.info() != Eigen::Success) {
        throw DomainError("gaussian_pdf: covariance is singular");
    }
    const Matrix4 l = llt.matrixL();
    const double diag_prod = l.diagonal().prod();
    if (!(diag_prod > 0.0)) {
        throw DomainError("gaussian_pdf: covariance is singular");
    }
    const Vector4 y = llt.matrixL().solve(vec(q));
    // (2π)² √det Γ = 4π² · prod(diag L)
    return std::exp(-0.5 * y.squaredNorm()) / (4.0 * M_PI * M_PI * diag_prod);
}

namespace {

double checked_denominator(double sigma2, const Quaternion& gamma, const PureUnit& nu) {
    const double denom = sigma2 * sigma2 - norm2(gamma);
    if (!(sigma2 > 0.0) || !(denom > 0.0)) {
        throw DomainError("pdf_1mu_proper: sigma^4 - |gamma|^2 must be positive");
    }
    if (std::abs(dot(gamma, nu)) > kIdentityTol * std::max(1.0, sigma2)) {
        throw DomainError("pdf_1mu_proper: gamma must have no component along the axis");
    }
    return denom;
}

}  // namespace

double one_mu_kernel(const Quaternion& q, double sigma2, const Quaternion& gamma, const PureUnit& nu) {
    const double denom = checked_denominator(sigma2, gamma, nu);
    const double cross = (conj(q) * gamma * involution(q, nu)).a;
    return 2.0 * (sigma2 * norm2(q) - cross) / denom;
}

double pdf_1mu_proper(const Quaternion& q, double sigma2, const Quaternion& gamma, const PureUnit& nu) {
    const double denom = checked_denominator(sigma2, gamma, nu);
    return 4.0 / (M_PI * M_PI * denom) * std::exp(-one_mu_kernel(q, sigma2, gamma, nu));
}

}  // namespace qprop
