#pragma once

// Real 4×4 representations of quaternion multiplication and SO(4) double rotations.
//
// vec(q) is always ordered (a, b, c, d); the matrix layouts of left_matrix and
// right_matrix depend on it.

#include "qprop/quaternion.hpp"

#include <Eigen/Core>

namespace qprop {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

inline Vector4 vec(const Quaternion& q) { return {q.a, q.b, q.c, q.d}; }
inline Quaternion from_vec(const Vector4& v) { return {v[0], v[1], v[2], v[3]}; }

/// L_q with L_q·vec(p) = vec(q·p).
Matrix4 left_matrix(const Quaternion& q);

/// R_q with R_q·vec(p) = vec(p·q).
Matrix4 right_matrix(const Quaternion& q);

/// The rotation q ↦ u q v for unit u, v. (u, v) and (−u, −v) give the same matrix.
class DoubleRotation {
public:
    const Quaternion& left() const { return u_; }
    const Quaternion& right() const { return v_; }
    const Matrix4& matrix() const { return matrix_; }

    Quaternion apply(const Quaternion& q) const { return u_ * q * v_; }

    /// this ∘ first: q ↦ u₂(u₁ q v₁)v₂.
    DoubleRotation after(const DoubleRotation& first) const;

private:
    friend DoubleRotation double_rotation(const Quaternion& u, const Quaternion& v);

    DoubleRotation(const Quaternion& u, const Quaternion& v);

    Quaternion u_;
    Quaternion v_;
    Matrix4 matrix_;
};

/// Normalizes u and v (throws DomainError on zero input); matrix = L_u·R_v.
DoubleRotation double_rotation(const Quaternion& u, const Quaternion& v);

struct So4Check {
    bool is_rotation;
    double orthogonality_residual;  // ‖M Mᵀ − I‖_F
    double determinant_residual;    // det(M) − 1
};

So4Check is_so4(const Matrix4& m, double tol = kIdentityTol);

struct IsoclinicAngles {
    double left;   // Euler angle of u
    double right;  // Euler angle of v
    bool left_is_real;
    bool right_is_real;
};

/// Euler angles of the unit quaternions of a double rotation. The matrix eigenvalues are
/// e^{±i(left+right)} and e^{±i(left−right)}. A real u or v yields angle 0 (for +1) or π
/// (for −1) with its real flag set.
IsoclinicAngles isoclinic_angles(const Quaternion& u, const Quaternion& v);

}  // namespace qprop
