#pragma once

// Sample estimates of the complementary covariances, the covariance faces, and a
// residual-based classifier over the properness classes of a basis.

#include "qprop/covariance.hpp"
#include "qprop/properness.hpp"
#include "qprop/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qprop {

struct ComplementaryCovariances {
    double sigma2_hat = 0.0;  // mean of |q|²
    Quaternion A_hat;         // mean of q (q^mu1)*
    Quaternion B_hat;         // mean of q (q^mu2)*
    Quaternion C_hat;         // mean of q (q^mu3)*
    QuaternionBasis basis = QuaternionBasis::standard();
    std::size_t n = 0;
};

struct EstimationOptions {
    /// Subtract the sample mean before forming moments. Off by default: the estimands are
    /// moments of a centered variable.
    bool center = false;
};

/// Requires N ≥ 2 (DataError otherwise).
ComplementaryCovariances complementary_covariances(const SampleSet& s, const QuaternionBasis& basis,
                                                   const EstimationOptions& opts = {});

/// Γ_H assembled from (σ̂², Â, B̂, Ĉ) projected onto their structural subspaces, Γ_R the plain
/// sample second-moment matrix, Γ_C from Γ_H. Requires N ≥ 5.
CovarianceFaces covariance_faces(const SampleSet& s, const QuaternionBasis& basis,
                                 const EstimationOptions& opts = {});

/// (1/N) Σ vec(q) vec(q)ᵀ, optionally centered. Requires N ≥ 1.
Matrix4 sample_covariance(const SampleSet& s, bool center = false);

/// ‖UΓUᵀ − Γ‖_F / ‖Γ‖_F with U = double_rotation(u, v). Throws DataError for Γ = 0.
double symmetry_residual(const CovarianceR& g, const Quaternion& u, const Quaternion& v);

/// max |UΓUᵀ − Γ|_ij / σ², σ² = tr Γ. The decision score used by classify.
double entrywise_symmetry_residual(const CovarianceR& g, const Quaternion& u, const Quaternion& v);

struct TolerancePolicy {
    double c = 5.0;  // tolerance = c / √N, relative to σ̂² per entry
    bool center = false;
};

struct CandidateResult {
    PropernessClass cls;
    double residual = 0.0;            // decision score
    double frobenius_residual = 0.0;  // symmetry_residual (relative Frobenius)
    bool passed = false;
};

struct PropernessReport {
    std::vector<CandidateResult> candidates;
    PropernessClass chosen;
    double tolerance = 0.0;
    double c = 5.0;
    std::size_t n = 0;
    QuaternionBasis basis = QuaternionBasis::standard();
    double sigma2_hat = 0.0;
    /// For a OneMu result: per-entry |Ê[z1 z2]| / σ̂² in the class-adapted Cayley–Dickson form.
    std::optional<double> pseudo_covariance_residual;
};

/// Every class candidate formed from the basis axes: MuOne/OneMu/MuSame per axis, MuMu per
/// ordered pair of distinct axes. Fixed order.
std::vector<PropernessClass> candidate_classes(const QuaternionBasis& basis);

/// Requires N ≥ 100. Throws DataError("degenerate covariance") for all-zero data.
PropernessReport classify(const SampleSet& s, const QuaternionBasis& basis,
                          const TolerancePolicy& policy = {});

/// Name in the earlier complementary-covariance taxonomy: "ℍ-proper", "ℂ^j-proper",
/// "ℝ-proper", or "outside prior taxonomy".
std::string via_class_alias(const PropernessReport& report);

}  // namespace qprop
