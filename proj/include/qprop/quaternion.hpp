#pragma once

// Quaternion algebra over an arbitrary orthonormal basis {1, mu1, mu2, mu3}.
//
// Components are always stored in the standard basis {1, i, j, k}; other
// bases enter only through QuaternionBasis-parameterized functions.

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>

namespace qprop {

/// Tolerance for algebraic identities and basis validation.
inline constexpr double kIdentityTol = 1e-12;
/// Vector parts shorter than this are refused as axes.
inline constexpr double kAxisFloor = 1e-9;

struct Quaternion {
    double a = 0.0;  // scalar
    double b = 0.0;  // i
    double c = 0.0;  // j
    double d = 0.0;  // k

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double scalar() const { return a; }
    constexpr Quaternion vector() const { return {0.0, b, c, d}; }
    constexpr std::array<double, 4> components() const { return {a, b, c, d}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion& operator+=(const Quaternion& o) {
        a += o.a; b += o.b; c += o.c; d += o.d;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        a -= o.a; b -= o.b; c -= o.c; d -= o.d;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        a *= s; b *= s; c *= s; d *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q *= (1.0 / s); }

/// Hamilton product. Not commutative.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

/// Euclidean inner product of the component 4-vectors.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
    return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
}

/// |q|², computed as a² + b² + c² + d².
constexpr double norm2(const Quaternion& q) { return dot(q, q); }

double modulus(const Quaternion& q);

/// q̄ / |q|². Throws DomainError for q = 0.
Quaternion inverse(const Quaternion& q);

/// |p − q|.
double distance(const Quaternion& p, const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A quaternion with zero scalar part and unit modulus.
class PureUnit {
public:
    /// Normalizes the pure part (x, y, z); throws DomainError if its length is below kAxisFloor.
    static PureUnit from_vector(double x, double y, double z);

    /// Normalizes V(q), ignoring S(q). Same rejection rule as from_vector.
    static PureUnit normalized(const Quaternion& q);

    /// Strict: q must already be pure and unit to kIdentityTol; throws BasisError otherwise.
    static PureUnit exact(const Quaternion& q);

    static PureUnit i() { return PureUnit(Quaternion::i()); }
    static PureUnit j() { return PureUnit(Quaternion::j()); }
    static PureUnit k() { return PureUnit(Quaternion::k()); }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

    std::array<double, 3> vector3() const { return {q_.b, q_.c, q_.d}; }

    PureUnit operator-() const { return PureUnit(-q_); }

private:
    explicit PureUnit(const Quaternion& q) : q_(q) {}

    Quaternion q_;
};

/// Orthonormal basis {1, mu1, mu2, mu3 = mu1·mu2}.
class QuaternionBasis {
public:
    static QuaternionBasis standard();

    const PureUnit& mu1() const { return mu1_; }
    const PureUnit& mu2() const { return mu2_; }
    const PureUnit& mu3() const { return mu3_; }

    /// Basis element by index: 0 → 1, 1 → mu1, 2 → mu2, 3 → mu3.
    Quaternion element(int index) const;

    /// Coordinates (⟨q,1⟩, ⟨q,mu1⟩, ⟨q,mu2⟩, ⟨q,mu3⟩).
    std::array<double, 4> coordinates(const Quaternion& q) const;

    Quaternion from_coordinates(const std::array<double, 4>& x) const;

    bool is_standard() const;

private:
    friend QuaternionBasis validate_basis(const Quaternion& mu1, const Quaternion& mu2);

    QuaternionBasis(PureUnit mu1, PureUnit mu2, PureUnit mu3)
        : mu1_(mu1), mu2_(mu2), mu3_(mu3) {}

    PureUnit mu1_;
    PureUnit mu2_;
    PureUnit mu3_;
};

/// Builds {1, mu1, mu2, mu1·mu2}. Throws BasisError with kind NotPure, NotUnit or
/// NotOrthogonal, checked in that order.
QuaternionBasis validate_basis(const Quaternion& mu1, const Quaternion& mu2);

/// q^mu = −mu q mu, the rotation of V(q) by π around mu.
Quaternion involution(const Quaternion& q, const PureUnit& mu);

enum class Component : std::uint8_t { Real = 1, Mu1 = 2, Mu2 = 4, Mu3 = 8 };

/// Non-empty subset of {1, mu1, mu2, mu3}.
class RestrictionMask {
public:
    RestrictionMask(std::initializer_list<Component> components);

    static RestrictionMask full();

    bool contains(Component c) const { return (bits_ & static_cast<std::uint8_t>(c)) != 0; }
    bool contains_index(int index) const { return (bits_ >> index) & 1U; }
    bool is_full() const { return bits_ == 0x0F; }
    std::uint8_t bits() const { return bits_; }

    /// Throws DomainError for the full mask (the complement would be empty).
    RestrictionMask complement() const;

private:
    explicit RestrictionMask(std::uint8_t bits);

    std::uint8_t bits_;
};

/// Degenerate quaternion keeping only the masked components expressed in `basis`.
Quaternion restrict(const Quaternion& q, const RestrictionMask& mask, const QuaternionBasis& basis);

struct EulerForm {
    double modulus;
    PureUnit axis;
    double angle;  // in [0, π]
};

/// q = |q| e^{axis·angle}. Throws DegenerateAxisError when q has no vector part.
EulerForm euler_form(const Quaternion& q);

Quaternion from_euler(const EulerForm& e);

/// e^{mu·theta} = cos θ + mu sin θ.
Quaternion unit_exp(const PureUnit& mu, double theta);

/// q = z1 + z2 mu2 with z1, z2 in C_{mu1}; each stored as (real part, mu1-part).
struct ComplexPair {
    std::complex<double> z1;
    std::complex<double> z2;
    QuaternionBasis basis;
};

ComplexPair cayley_dickson(const Quaternion& q, const QuaternionBasis& basis);

Quaternion recompose(const ComplexPair& pair);

/// Embeds z = x + y·mu1 of C_{mu1} as a quaternion.
Quaternion embed(std::complex<double> z, const PureUnit& mu1);

/// Short human-readable axis name: "i", "-j", ... for standard axes, "[x,y,z]" otherwise.
std::string axis_label(const PureUnit& mu);

}  // namespace qprop
