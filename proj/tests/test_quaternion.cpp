#include "qprop/errors.hpp"
#include "qprop/quaternion.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <Eigen/Geometry>

#include <numbers>
#include <sstream>

using namespace qprop;
using qprop::test::max_abs_diff;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kTol = 1e-12;

const Quaternion kI = Quaternion::i();
const Quaternion kJ = Quaternion::j();
const Quaternion kK = Quaternion::k();

}  // namespace

TEST_CASE("Hamilton product on the defining relations", "[quaternion]") {
    CHECK(kI * kJ == kK);
    CHECK(kJ * kK == kI);
    CHECK(kK * kI == kJ);
    CHECK(kJ * kI == -kK);
    CHECK(kI * kI == Quaternion(-1.0));
    CHECK(kI * kJ * kK == Quaternion(-1.0));
    CHECK(Quaternion(1, 1) * Quaternion(1, 0, 1) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("product agrees with Eigen's quaternion product", "[quaternion]") {
    for (int n = 0; n < 1000; ++n) {
        const Quaternion p = test::random_quaternion();
        const Quaternion q = test::random_quaternion();
        const Eigen::Quaterniond ep(p.a, p.b, p.c, p.d), eq(q.a, q.b, q.c, q.d);
        const Eigen::Quaterniond er = ep * eq;
        REQUIRE(max_abs_diff(p * q, Quaternion(er.w(), er.x(), er.y(), er.z())) <= kTol);
    }
}

TEST_CASE("conjugate, modulus and inverse", "[quaternion]") {
    CHECK(conj(Quaternion(1, 1, 1, 1)) == Quaternion(1, -1, -1, -1));
    CHECK(modulus(Quaternion(1, 1, 1, 1)) == 2.0);
    CHECK(inverse(kI) == -kI);
    CHECK_THROWS_AS(inverse(Quaternion()), DomainError);

    for (int n = 0; n < 200; ++n) {
        const Quaternion q = test::random_quaternion();
        CHECK(conj(conj(q)) == q);
        CHECK(norm2(q) == q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
        CHECK(max_abs_diff(q * inverse(q), Quaternion::one()) <= kTol);
        CHECK(max_abs_diff(inverse(q) * q, Quaternion::one()) <= kTol);
    }
}

TEST_CASE("pure unit construction", "[quaternion]") {
    const PureUnit mu = PureUnit::from_vector(3, 0, 4);
    CHECK(mu.value().a == 0.0);
    CHECK_THAT(modulus(mu), WithinAbs(1.0, kTol));
    CHECK(max_abs_diff(mu.value() * mu.value(), Quaternion(-1.0)) <= kTol);
    CHECK_THROWS_AS(PureUnit::from_vector(0, 0, 0), DomainError);
    CHECK_THROWS_AS(PureUnit::from_vector(1e-10, 0, 0), DomainError);

    try {
        (void)PureUnit::exact(Quaternion(0.1, 1, 0, 0));
        FAIL("expected BasisError");
    } catch (const BasisError& e) {
        CHECK(e.kind() == BasisError::Kind::NotPure);
    }
    try {
        (void)PureUnit::exact(Quaternion(0, 2, 0, 0));
        FAIL("expected BasisError");
    } catch (const BasisError& e) {
        CHECK(e.kind() == BasisError::Kind::NotUnit);
    }
}

TEST_CASE("basis validation", "[quaternion]") {
    const QuaternionBasis std_basis = validate_basis(kI, kJ);
    CHECK(std_basis.mu3().value() == kK);
    CHECK(std_basis.is_standard());

    auto kind_of = [](const Quaternion& m1, const Quaternion& m2) {
        try {
            (void)validate_basis(m1, m2);
        } catch (const BasisError& e) {
            return e.kind();
        }
        FAIL("expected BasisError");
        return BasisError::Kind::NotPure;
    };
    CHECK(kind_of(kI, kI) == BasisError::Kind::NotOrthogonal);
    CHECK(kind_of(Quaternion(1, 1, 0, 0) / std::sqrt(2.0), kJ) == BasisError::Kind::NotPure);
    CHECK(kind_of(2.0 * kI, kJ) == BasisError::Kind::NotUnit);
    CHECK(kind_of(kI, Quaternion(0, 0, 3, 0)) == BasisError::Kind::NotUnit);

    const double r = 1.0 / std::sqrt(2.0);
    const QuaternionBasis diag = validate_basis(Quaternion(0, r, r, 0), Quaternion(0, r, -r, 0));
    CHECK(max_abs_diff(diag.mu3(), -kK) <= kTol);
    CHECK_FALSE(diag.is_standard());

    for (int n = 0; n < 200; ++n) {
        const QuaternionBasis b = test::random_basis();
        const Quaternion m1 = b.mu1(), m2 = b.mu2(), m3 = b.mu3();
        CHECK(std::abs((m1 * m2).a) <= kTol);
        CHECK(max_abs_diff(m1 * m2, m3) <= kTol);
        CHECK(max_abs_diff(m2 * m1, -m3) <= kTol);
        const Quaternion q = test::random_quaternion();
        CHECK(max_abs_diff(b.from_coordinates(b.coordinates(q)), q) <= kTol);
    }
}

TEST_CASE("involution examples", "[quaternion]") {
    const Quaternion q(1, 2, 3, 4);
    CHECK(involution(q, PureUnit::i()) == Quaternion(1, 2, -3, -4));
    CHECK(involution(q, PureUnit::j()) == Quaternion(1, -2, 3, -4));
    CHECK(involution(q, PureUnit::k()) == Quaternion(1, -2, -3, 4));
}

TEST_CASE("involution laws on random inputs", "[quaternion][property]") {
    for (int n = 0; n < 1000; ++n) {
        const QuaternionBasis b = test::random_basis();
        const PureUnit mu = b.mu1(), eta = b.mu2();
        const Quaternion p = test::random_quaternion();
        const Quaternion q = test::random_quaternion();
        const Quaternion qm = involution(q, mu);

        REQUIRE(max_abs_diff(involution(qm, mu), q) <= kTol);
        REQUIRE(max_abs_diff(involution(p * q, mu), involution(p, mu) * qm) <= kTol);
        REQUIRE(max_abs_diff(involution(qm, eta), involution(q, b.mu3())) <= kTol);
        REQUIRE(max_abs_diff(conj(qm), involution(conj(q), mu)) <= kTol);
        REQUIRE(std::abs(modulus(qm) - modulus(q)) <= kTol);
        // A half turn of the vector part about mu.
        REQUIRE(max_abs_diff(qm, test::half_turn(q, mu)) <= kTol);
    }
}

TEST_CASE("restriction", "[quaternion]") {
    const Quaternion q(1, 2, 3, 4);
    const QuaternionBasis s = QuaternionBasis::standard();
    CHECK(restrict(q, {Component::Real}, s) == Quaternion(1));
    CHECK(restrict(q, {Component::Mu1, Component::Mu2}, s) == Quaternion(0, 2, 3, 0));
    CHECK(restrict(q, RestrictionMask::full(), s) == q);
    CHECK_THROWS(RestrictionMask({}));
    CHECK_THROWS(RestrictionMask::full().complement());

    const RestrictionMask m{Component::Real, Component::Mu3};
    CHECK(m.contains(Component::Mu3));
    CHECK_FALSE(m.contains(Component::Mu1));
    CHECK(m.complement().bits() == 0x06);

    for (int n = 0; n < 200; ++n) {
        const QuaternionBasis b = test::random_basis();
        const Quaternion x = test::random_quaternion();
        const RestrictionMask mask{Component::Mu1, Component::Real};
        const Quaternion kept = restrict(x, mask, b);
        CHECK(max_abs_diff(kept + restrict(x, mask.complement(), b), x) <= kTol);
        const auto c = b.coordinates(kept);
        CHECK(std::abs(c[2]) <= kTol);
        CHECK(std::abs(c[3]) <= kTol);
    }
    // Exact split in the standard basis.
    const Quaternion x = test::random_quaternion();
    const RestrictionMask mask{Component::Mu2};
    CHECK(restrict(x, mask, s) + restrict(x, mask.complement(), s) == x);
}

TEST_CASE("Euler form", "[quaternion]") {
    const EulerForm ei = euler_form(kI);
    CHECK_THAT(ei.modulus, WithinAbs(1.0, kTol));
    CHECK(ei.axis.value() == kI);
    CHECK_THAT(ei.angle, WithinAbs(std::numbers::pi / 2, kTol));

    const EulerForm e1i = euler_form(Quaternion(1, 1));
    CHECK_THAT(e1i.modulus, WithinAbs(std::sqrt(2.0), kTol));
    CHECK(max_abs_diff(e1i.axis, kI) <= kTol);
    CHECK_THAT(e1i.angle, WithinAbs(std::numbers::pi / 4, kTol));

    const EulerForm back = euler_form(Quaternion(-1, 0, 1e-3, 0));
    CHECK(back.angle > std::numbers::pi / 2);

    CHECK_THROWS_AS(euler_form(Quaternion(2.0)), DegenerateAxisError);
    CHECK_THROWS_AS(euler_form(Quaternion()), DegenerateAxisError);

    for (int n = 0; n < 1000; ++n) {
        const Quaternion q = test::random_quaternion();
        const EulerForm e = euler_form(q);
        REQUIRE(e.angle >= 0.0);
        REQUIRE(e.angle <= std::numbers::pi);
        REQUIRE(max_abs_diff(from_euler(e), q) <= kTol);
    }
    CHECK(max_abs_diff(unit_exp(PureUnit::j(), std::numbers::pi / 2), kJ) <= kTol);
}

TEST_CASE("Cayley-Dickson form", "[quaternion]") {
    const Quaternion q(1, 2, 3, 4);
    const ComplexPair s = cayley_dickson(q, QuaternionBasis::standard());
    CHECK(s.z1 == std::complex<double>(1, 2));
    CHECK(s.z2 == std::complex<double>(3, 4));

    const ComplexPair jk = cayley_dickson(q, validate_basis(kJ, kK));
    CHECK_THAT(jk.z1.real(), WithinAbs(1, kTol));
    CHECK_THAT(jk.z1.imag(), WithinAbs(3, kTol));
    CHECK_THAT(jk.z2.real(), WithinAbs(4, kTol));
    CHECK_THAT(jk.z2.imag(), WithinAbs(2, kTol));

    for (int n = 0; n < 50; ++n) {
        const ComplexPair one = cayley_dickson(Quaternion::one(), test::random_basis());
        CHECK_THAT(std::abs(one.z1 - 1.0), WithinAbs(0.0, kTol));
        CHECK_THAT(std::abs(one.z2), WithinAbs(0.0, kTol));
    }

    for (int n = 0; n < 1000; ++n) {
        const QuaternionBasis b = test::random_basis();
        const Quaternion x = test::random_quaternion();
        const ComplexPair z = cayley_dickson(x, b);
        // Oracle: inner products with the basis elements.
        REQUIRE(std::abs(z.z1.real() - dot(x, Quaternion::one())) <= kTol);
        REQUIRE(std::abs(z.z1.imag() - dot(x, b.mu1())) <= kTol);
        REQUIRE(std::abs(z.z2.real() - dot(x, b.mu2())) <= kTol);
        REQUIRE(std::abs(z.z2.imag() - dot(x, b.mu3())) <= kTol);
        REQUIRE(max_abs_diff(recompose(z), x) <= kTol);
        REQUIRE(max_abs_diff(embed(z.z1, b.mu1()) + embed(z.z2, b.mu1()) * b.mu2().value(), x) <= kTol);
    }
}

TEST_CASE("axis labels", "[quaternion]") {
    CHECK(axis_label(PureUnit::i()) == "i");
    CHECK(axis_label(-PureUnit::j()) == "-j");
    CHECK(axis_label(PureUnit::from_vector(1, 1, 0)).front() == '[');
    std::ostringstream os;
    os << Quaternion(1, -2, 3, -4);
    CHECK_FALSE(os.str().empty());
}
