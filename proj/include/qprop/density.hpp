#pragma once

#include "qprop/covariance.hpp"
#include "qprop/quaternion.hpp"

namespace qprop {

/// 4-variate zero-mean normal density of vec(q). Throws DomainError for singular Γ_R.
double gaussian_pdf(const Quaternion& q, const CovarianceR& g);

/// Exponent of the (1, nu)-proper density: 2(σ²|q|² − Re(q̄ γ q^nu)) / (σ⁴ − |γ|²),
/// with σ² = E|q|² and γ = E[q (q^nu)*].
double one_mu_kernel(const Quaternion& q, double sigma2, const Quaternion& gamma, const PureUnit& nu);

/// Density of a (1, nu)-proper Gaussian written through q and q^nu only:
/// 4 / (π² (σ⁴ − |γ|²)) · exp(−one_mu_kernel). Requires σ⁴ − |γ|² > 0 and γ free of a
/// nu-component; throws DomainError otherwise.
double pdf_1mu_proper(const Quaternion& q, double sigma2, const Quaternion& gamma, const PureUnit& nu);

}  // namespace qprop
