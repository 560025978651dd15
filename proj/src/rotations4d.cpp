#include "qprop/rotations4d.hpp"

#include "qprop/errors.hpp"

#include <Eigen/LU>

#include <cmath>

namespace qprop {

Matrix4 left_matrix(const Quaternion& q) {
    Matrix4 m;
    m << q.a, -q.b, -q.c, -q.d,
         q.b,  q.a, -q.d,  q.c,
         q.c,  q.d,  q.a, -q.b,
         q.d, -q.c,  q.b,  q.a;
    return m;
}

Matrix4 right_matrix(const Quaternion& q) {
    Matrix4 m;
    m << q.a, -q.b, -q.c, -q.d,
         q.b,  q.a,  q.d, -q.c,
         q.c, -q.d,  q.a,  q.b,
         q.d,  q.c, -q.b,  q.a;
    return m;
}

namespace {

Quaternion unit_or_throw(const Quaternion& q) {
    const double m = modulus(q);
    if (m == 0.0) {
        throw DomainError("double_rotation: zero quaternion");
    }
    return q / m;
}

double real_angle(const Quaternion& q) { return q.a < 0.0 ? M_PI : 0.0; }

}  // namespace

DoubleRotation::DoubleRotation(const Quaternion& u, const Quaternion& v)
    : u_(u), v_(v), matrix_(left_matrix(u) * right_matrix(v)) {}

DoubleRotation double_rotation(const Quaternion& u, const Quaternion& v) {
    return DoubleRotation(unit_or_throw(u), unit_or_throw(v));
}

DoubleRotation DoubleRotation::after(const DoubleRotation& first) const {
    return double_rotation(u_ * first.u_, first.v_ * v_);
}

So4Check is_so4(const Matrix4& m, double tol) {
    const double ortho = (m * m.transpose() - Matrix4::Identity()).norm();
    const double det = m.determinant() - 1.0;
    return {ortho <= tol && std::abs(det) <= tol, ortho, det};
}

IsoclinicAngles isoclinic_angles(const Quaternion& u, const Quaternion& v) {
    IsoclinicAngles out{0.0, 0.0, false, false};
    const Quaternion un = unit_or_throw(u);
    const Quaternion vn = unit_or_throw(v);
    try {
        out.left = euler_form(un).angle;
    } catch (const DegenerateAxisError&) {
        out.left = real_angle(un);
        out.left_is_real = true;
    }
    try {
        out.right = euler_form(vn).angle;
    } catch (const DegenerateAxisError&) {
        out.right = real_angle(vn);
        out.right_is_real = true;
    }
    return out;
}

}  // namespace qprop
