#include "qprop/quaternion.hpp"

#include "qprop/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qprop {

double modulus(const Quaternion& q) { return std::sqrt(norm2(q)); }

Quaternion inverse(const Quaternion& q) {
    const double n2 = norm2(q);
    if (n2 == 0.0) {
        throw DomainError("inverse of the zero quaternion");
    }
    return conj(q) / n2;
}

double distance(const Quaternion& p, const Quaternion& q) { return modulus(p - q); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a << ", " << q.b << "i, " << q.c << "j, " << q.d << "k)";
}

PureUnit PureUnit::from_vector(double x, double y, double z) {
    const double len = std::sqrt(x * x + y * y + z * z);
    if (!(len >= kAxisFloor)) {
        throw DomainError("axis vector too short to define a direction");
    }
    return PureUnit(Quaternion(0.0, x / len, y / len, z / len));
}

PureUnit PureUnit::normalized(const Quaternion& q) { return from_vector(q.b, q.c, q.d); }

PureUnit PureUnit::exact(const Quaternion& q) {
    if (std::abs(q.a) > kIdentityTol) {
        throw BasisError(BasisError::Kind::NotPure, "axis has a nonzero scalar part");
    }
    if (std::abs(modulus(q) - 1.0) > kIdentityTol) {
        throw BasisError(BasisError::Kind::NotUnit, "axis is not of unit modulus");
    }
    return PureUnit(q.vector());
}

QuaternionBasis QuaternionBasis::standard() {
    return QuaternionBasis(PureUnit::i(), PureUnit::j(), PureUnit::k());
}

Quaternion QuaternionBasis::element(int index) const {
    switch (index) {
        case 0: return Quaternion::one();
        case 1: return mu1_;
        case 2: return mu2_;
        case 3: return mu3_;
        default: throw DomainError("basis index out of range");
    }
}

std::array<double, 4> QuaternionBasis::coordinates(const Quaternion& q) const {
    return {q.a, dot(q, mu1_), dot(q, mu2_), dot(q, mu3_)};
}

Quaternion QuaternionBasis::from_coordinates(const std::array<double, 4>& x) const {
    return Quaternion(x[0]) + x[1] * mu1_.value() + x[2] * mu2_.value() + x[3] * mu3_.value();
}

bool QuaternionBasis::is_standard() const {
    return mu1_.value() == Quaternion::i() && mu2_.value() == Quaternion::j() &&
           mu3_.value() == Quaternion::k();
}

QuaternionBasis validate_basis(const Quaternion& mu1, const Quaternion& mu2) {
    const PureUnit u1 = PureUnit::exact(mu1);
    const PureUnit u2 = PureUnit::exact(mu2);
    const Quaternion prod = u1.value() * u2.value();
    if (std::abs(prod.a) > kIdentityTol) {
        throw BasisError(BasisError::Kind::NotOrthogonal, "basis axes are not orthogonal");
    }
    // The scalar residue (below kIdentityTol) is dropped; products of standard axes stay exact.
    return QuaternionBasis(u1, u2, PureUnit::normalized(prod));
}

Quaternion involution(const Quaternion& q, const PureUnit& mu) {
    const Quaternion& m = mu.value();
    return -(m * q * m);
}

RestrictionMask::RestrictionMask(std::initializer_list<Component> components) : bits_(0) {
    for (Component c : components) {
        bits_ |= static_cast<std::uint8_t>(c);
    }
    if (bits_ == 0) {
        throw DomainError("restriction mask must be non-empty");
    }
}

RestrictionMask::RestrictionMask(std::uint8_t bits) : bits_(bits) {}

RestrictionMask RestrictionMask::full() { return RestrictionMask(std::uint8_t{0x0F}); }

RestrictionMask RestrictionMask::complement() const {
    if (is_full()) {
        throw DomainError("complement of the full mask is empty");
    }
    return RestrictionMask(static_cast<std::uint8_t>(~bits_ & 0x0F));
}

Quaternion restrict(const Quaternion& q, const RestrictionMask& mask, const QuaternionBasis& basis) {
    if (mask.is_full()) {
        return q;
    }
    if (basis.is_standard()) {
        return {mask.contains_index(0) ? q.a : 0.0, mask.contains_index(1) ? q.b : 0.0,
                mask.contains_index(2) ? q.c : 0.0, mask.contains_index(3) ? q.d : 0.0};
    }
    auto x = basis.coordinates(q);
    for (int n = 0; n < 4; ++n) {
        if (!mask.contains_index(n)) {
            x[n] = 0.0;
        }
    }
    return basis.from_coordinates(x);
}

EulerForm euler_form(const Quaternion& q) {
    const double m = modulus(q);
    const double v = std::sqrt(q.b * q.b + q.c * q.c + q.d * q.d);
    if (m == 0.0 || v < kAxisFloor * m) {
        throw DegenerateAxisError("euler_form: quaternion has no vector part, axis undefined");
    }
    return {m, PureUnit::from_vector(q.b / m, q.c / m, q.d / m), std::atan2(v, q.a)};
}

Quaternion unit_exp(const PureUnit& mu, double theta) {
    return Quaternion(std::cos(theta)) + std::sin(theta) * mu.value();
}

Quaternion from_euler(const EulerForm& e) { return e.modulus * unit_exp(e.axis, e.angle); }

ComplexPair cayley_dickson(const Quaternion& q, const QuaternionBasis& basis) {
    const auto x = basis.coordinates(q);
    return {{x[0], x[1]}, {x[2], x[3]}, basis};
}

Quaternion embed(std::complex<double> z, const PureUnit& mu1) {
    return Quaternion(z.real()) + z.imag() * mu1.value();
}

Quaternion recompose(const ComplexPair& pair) {
    return embed(pair.z1, pair.basis.mu1()) + embed(pair.z2, pair.basis.mu1()) * pair.basis.mu2().value();
}

std::string axis_label(const PureUnit& mu) {
    static constexpr const char* names[] = {"i", "j", "k"};
    const auto v = mu.vector3();
    for (int n = 0; n < 3; ++n) {
        const bool others_zero = v[(n + 1) % 3] == 0.0 && v[(n + 2) % 3] == 0.0;
        if (others_zero && v[n] == 1.0) {
            return names[n];
        }
        if (others_zero && v[n] == -1.0) {
            return std::string("-") + names[n];
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.6g,%.6g,%.6g]", v[0], v[1], v[2]);
    return buf;
}

}  // namespace qprop
