#pragma once

// The three faces of the covariance of a centered quaternion variable q:
//
//   real        Γ_R = E[vec(q) vec(q)ᵀ]               (standard components a, b, c, d)
//   complex     Γ_C = E[q_C q_C†], q_C = (z1, z1*, z2, z2*), q = z1 + z2 mu2, z in C_{mu1}
//   quaternion  Γ_H = E[q_H q_H†], q_H = (q, q^mu1, q^mu2, q^mu3)
//
// Complex entries are stored as std::complex with the imaginary part holding the
// mu1-component.

#include "qprop/properness.hpp"
#include "qprop/quaternion.hpp"
#include "qprop/rotations4d.hpp"

#include <Eigen/Core>

#include <array>
#include <variant>

namespace qprop {

/// Eigenvalue floor for admissible covariances.
inline constexpr double kPsdFloor = -1e-10;

using QuaternionMatrix4 = std::array<std::array<Quaternion, 4>, 4>;

QuaternionMatrix4 operator*(const QuaternionMatrix4& x, const QuaternionMatrix4& y);
QuaternionMatrix4 adjoint(const QuaternionMatrix4& x);

struct CovarianceR {
    Matrix4 matrix = Matrix4::Zero();
    QuaternionBasis basis = QuaternionBasis::standard();
};

struct CovarianceC {
    Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
    QuaternionBasis basis = QuaternionBasis::standard();
};

struct CovarianceH {
    QuaternionMatrix4 entries{};
    QuaternionBasis basis = QuaternionBasis::standard();

    const Quaternion& operator()(int r, int c) const { return entries[r][c]; }
    Quaternion& operator()(int r, int c) { return entries[r][c]; }

    double sigma2() const { return entries[0][0].a; }
    /// gamma_{1 mu_n} for n = 1, 2, 3 (first row).
    const Quaternion& complementary(int n) const { return entries[0][n]; }
};

enum class Face { Real, Complex, Quaternion };

using Covariance = std::variant<CovarianceR, CovarianceC, CovarianceH>;

/// T with q_H = T·q_R: T[m][c] = (e_c)^{eta_m}, e = (1, i, j, k), eta = (none, mu1, mu2, mu3).
QuaternionMatrix4 representation_map(const QuaternionBasis& basis);

/// M_{H:C} with q_C = M·q_H.
QuaternionMatrix4 quaternion_to_complex_map(const QuaternionBasis& basis);

CovarianceH to_quaternion(const CovarianceR& g);
CovarianceH to_quaternion(const CovarianceC& g);
CovarianceC to_complex(const CovarianceR& g);
/// Γ_C = M Γ_H M†, evaluated in quaternion arithmetic.
CovarianceC to_complex(const CovarianceH& g);
CovarianceR to_real(const CovarianceC& g);
/// Least-squares inverse of to_quaternion over symmetric Γ_R (exact for consistent Γ_H).
CovarianceR to_real(const CovarianceH& g);

Covariance convert(const Covariance& g, Face to);

/// Γ_H from the compact template: sigma2 on the diagonal, (A, B, C) on the first row and
/// the involution relations elsewhere.
CovarianceH quaternion_template(double sigma2, const Quaternion& A, const Quaternion& B,
                                const Quaternion& C, const QuaternionBasis& basis);

/// Projects gamma_{1 mu_n} onto its structural subspace (drops the mu_n component).
Quaternion project_structural(const Quaternion& gamma, int n, const QuaternionBasis& basis);

double min_eigenvalue(const Matrix4& g);

struct CovarianceFaces {
    CovarianceC complex;
    CovarianceR real;
    CovarianceH quaternion;
};

/// Structured covariance of a class. The class axes are basis.mu1 (and basis.mu2 for MuMu).
/// Throws ParameterError for mismatched or structurally invalid parameters and for an
/// indefinite Γ_R (min_eigenvalue() carries the most negative eigenvalue).
CovarianceFaces covariance_from_params(const PropernessClass& cls, const ClassParams& params);

/// Γ_C pattern printed for the four proper cases, before any conversion.
Eigen::Matrix4cd structured_complex_matrix(ClassTag tag, const ClassParams& params);

}  // namespace qprop
