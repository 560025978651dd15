#include "qprop/covariance.hpp"

#include "qprop/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <sstream>

namespace qprop {

namespace {

using Complex = std::complex<double>;

constexpr std::array<Quaternion, 4> kStandard{Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                              Quaternion::k()};

Matrix4 basis_rows(const QuaternionBasis& basis) {
    Matrix4 p;
    for (int n = 0; n < 4; ++n) {
        p.row(n) = vec(basis.element(n)).transpose();
    }
    return p;
}

// w = J·x' maps basis coordinates (a', b', c', d') to (z1, z1*, z2, z2*).
Eigen::Matrix4cd augmentation() {
    const Complex i1{0.0, 1.0};
    Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
    j(0, 0) = 1.0; j(0, 1) = i1;
    j(1, 0) = 1.0; j(1, 1) = -i1;
    j(2, 2) = 1.0; j(2, 3) = i1;
    j(3, 2) = 1.0; j(3, 3) = -i1;
    return j;
}

Matrix4 symmetrized(const Matrix4& m) { return 0.5 * (m + m.transpose()); }

void require_psd(const Matrix4& g, const char* what) {
    const double lo = min_eigenvalue(g);
    if (lo < kPsdFloor) {
        std::ostringstream os;
        os << what << ": covariance is indefinite (most negative eigenvalue " << lo << ")";
        throw ParameterError(os.str(), lo);
    }
}

void require_finite_variance(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw ParameterError(std::string(name) + " must be a finite non-negative variance");
    }
}

}  // namespace

QuaternionMatrix4 operator*(const QuaternionMatrix4& x, const QuaternionMatrix4& y) {
    QuaternionMatrix4 out{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Quaternion acc;
            for (int k = 0; k < 4; ++k) {
                acc += x[r][k] * y[k][c];
            }
            out[r][c] = acc;
        }
    }
    return out;
}

QuaternionMatrix4 adjoint(const QuaternionMatrix4& x) {
    QuaternionMatrix4 out{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out[r][c] = conj(x[c][r]);
        }
    }
    return out;
}

QuaternionMatrix4 representation_map(const QuaternionBasis& basis) {
    QuaternionMatrix4 t{};
    for (int c = 0; c < 4; ++c) {
        t[0][c] = kStandard[c];
        t[1][c] = involution(kStandard[c], basis.mu1());
        t[2][c] = involution(kStandard[c], basis.mu2());
        t[3][c] = involution(kStandard[c], basis.mu3());
    }
    return t;
}

QuaternionMatrix4 quaternion_to_complex_map(const QuaternionBasis& basis) {
    const Quaternion m2 = 0.5 * basis.mu2().value();
    const Quaternion half(0.5);
    QuaternionMatrix4 m{};
    m[0][0] = half; m[0][1] = half;
    m[1][2] = half; m[1][3] = half;
    m[2][2] = -m2;  m[2][3] = m2;
    m[3][0] = -m2;  m[3][1] = m2;
    return m;
}

CovarianceH to_quaternion(const CovarianceR& g) {
    const QuaternionMatrix4 t = representation_map(g.basis);
    CovarianceH out{{}, g.basis};
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            Quaternion acc;
            for (int c = 0; c < 4; ++c) {
                for (int d = 0; d < 4; ++d) {
                    acc += g.matrix(c, d) * (t[m][c] * conj(t[n][d]));
                }
            }
            out.entries[m][n] = acc;
        }
    }
    return out;
}

CovarianceH to_quaternion(const CovarianceC& g) { return to_quaternion(to_real(g)); }

CovarianceC to_complex(const CovarianceR& g) {
    const Matrix4 p = basis_rows(g.basis);
    const Matrix4 local = p * g.matrix * p.transpose();
    const Eigen::Matrix4cd j = augmentation();
    return {j * local.cast<Complex>() * j.adjoint(), g.basis};
}

CovarianceC to_complex(const CovarianceH& g) {
    const QuaternionMatrix4 m = quaternion_to_complex_map(g.basis);
    const QuaternionMatrix4 full = m * g.entries * adjoint(m);
    CovarianceC out{Eigen::Matrix4cd::Zero(), g.basis};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out.matrix(r, c) = Complex(full[r][c].a, dot(full[r][c], g.basis.mu1()));
        }
    }
    return out;
}

CovarianceR to_real(const CovarianceC& g) {
    const Eigen::Matrix4cd j = augmentation();
    const Matrix4 local = (0.25 * (j.adjoint() * g.matrix * j)).real();
    const Matrix4 p = basis_rows(g.basis);
    return {symmetrized(p.transpose() * local * p), g.basis};
}

CovarianceR to_real(const CovarianceH& g) {
    // Columns: images of the 10 symmetric unit matrices, flattened to 64 reals.
    Eigen::Matrix<double, 64, 10> k;
    std::array<std::pair<int, int>, 10> slots{};
    int col = 0;
    for (int c = 0; c < 4; ++c) {
        for (int d = c; d < 4; ++d) {
            CovarianceR unit{Matrix4::Zero(), g.basis};
            unit.matrix(c, d) = 1.0;
            unit.matrix(d, c) = 1.0;
            const CovarianceH img = to_quaternion(unit);
            for (int m = 0; m < 4; ++m) {
                for (int n = 0; n < 4; ++n) {
                    const auto comps = img.entries[m][n].components();
                    for (int s = 0; s < 4; ++s) {
                        k(16 * m + 4 * n + s, col) = comps[s];
                    }
                }
            }
            slots[col++] = {c, d};
        }
    }
    Eigen::Matrix<double, 64, 1> rhs;
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            const auto comps = g.entries[m][n].components();
            for (int s = 0; s < 4; ++s) {
                rhs(16 * m + 4 * n + s) = comps[s];
            }
        }
    }
    const Eigen::Matrix<double, 10, 1> x = k.colPivHouseholderQr().solve(rhs);
    CovarianceR out{Matrix4::Zero(), g.basis};
    for (int s = 0; s < 10; ++s) {
        const auto [c, d] = slots[s];
        out.matrix(c, d) = x(s);
        out.matrix(d, c) = x(s);
    }
    return out;
}

Covariance convert(const Covariance& g, Face to) {
    return std::visit(
        [to](const auto& src) -> Covariance {
            switch (to) {
                case Face::Real:
                    if constexpr (std::is_same_v<std::decay_t<decltype(src)>, CovarianceR>) {
                        return src;
                    } else {
                        return to_real(src);
                    }
                case Face::Complex:
                    if constexpr (std::is_same_v<std::decay_t<decltype(src)>, CovarianceC>) {
                        return src;
                    } else {
                        return to_complex(src);
                    }
                case Face::Quaternion:
                    if constexpr (std::is_same_v<std::decay_t<decltype(src)>, CovarianceH>) {
                        return src;
                    } else {
                        return to_quaternion(src);
                    }
            }
            return src;
        },
        g);
}

CovarianceH quaternion_template(double sigma2, const Quaternion& A, const Quaternion& B,
                                const Quaternion& C, const QuaternionBasis& basis) {
    const Quaternion s(sigma2);
    const Quaternion c1 = involution(C, basis.mu1());
    const Quaternion b1 = involution(B, basis.mu1());
    const Quaternion a2 = involution(A, basis.mu2());
    CovarianceH out{{}, basis};
    out.entries = {{
        {s, A, B, C},
        {conj(A), s, c1, b1},
        {conj(B), conj(c1), s, a2},
        {conj(C), conj(b1), conj(a2), s},
    }};
    return out;
}

Quaternion project_structural(const Quaternion& gamma, int n, const QuaternionBasis& basis) {
    auto x = basis.coordinates(gamma);
    x[n] = 0.0;
    return basis.from_coordinates(x);
}

double min_eigenvalue(const Matrix4& g) {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(symmetrized(g), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Eigen::Matrix4cd structured_complex_matrix(ClassTag tag, const ClassParams& params) {
    check_params_match(tag, params);
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    switch (tag) {
        case ClassTag::MuMu: {
            const auto& p = std::get<MuMuParams>(params);
            const Complex s = p.sigma2;
            const Complex a = p.alpha;
            const Complex ac = std::conj(p.alpha);
            const Complex m{0.0, p.delta};
            // Row 3/4 pseudo-variance entries carry -alpha / -alpha*, which is what
            // invariance under q -> mu1 q mu2 imposes (E[z2²] = -E[z1²]).
            g << s,  a,  m,   a,
                 ac, s,  ac, -m,
                 -m, a,  s,  -a,
                 ac, m,  -ac, s;
            break;
        }
        case ClassTag::MuOne: {
            const auto& p = std::get<CliffordParams>(params);
            const Complex s = p.sigma2, v = p.varsigma2, w = p.omega, wc = std::conj(p.omega);
            g << s,  0.0, w,   0.0,
                 0.0, s,  0.0, wc,
                 wc, 0.0, v,   0.0,
                 0.0, w,  0.0, v;
            break;
        }
        case ClassTag::OneMu: {
            const auto& p = std::get<CliffordParams>(params);
            const Complex s = p.sigma2, v = p.varsigma2, w = p.omega, wc = std::conj(p.omega);
            g << s,  0.0, 0.0, w,
                 0.0, s,  wc,  0.0,
                 0.0, w,  v,   0.0,
                 wc, 0.0, 0.0, v;
            break;
        }
        case ClassTag::MuSame: {
            const auto& p = std::get<MuSameParams>(params);
            const Complex s = p.sigma2, v = p.varsigma2;
            g << s, p.alpha, 0.0, 0.0,
                 std::conj(p.alpha), s, 0.0, 0.0,
                 0.0, 0.0, v, p.delta,
                 0.0, 0.0, std::conj(p.delta), v;
            break;
        }
        case ClassTag::General:
        case ClassTag::HProper:
            throw ParameterError("structured_complex_matrix: class has no printed complex pattern");
    }
    return g;
}

CovarianceFaces covariance_from_params(const PropernessClass& cls, const ClassParams& params) {
    check_params_match(cls.tag, params);
    const QuaternionBasis& basis = cls.basis;
    switch (cls.tag) {
        case ClassTag::HProper: {
            const double s = std::get<HProperParams>(params).sigma2;
            require_finite_variance(s, "sigma2");
            CovarianceR r{0.25 * s * Matrix4::Identity(), basis};
            return {to_complex(r), r, to_quaternion(r)};
        }
        case ClassTag::General: {
            const auto& p = std::get<GeneralParams>(params);
            require_finite_variance(p.sigma2, "sigma2");
            const double tol = kIdentityTol * std::max(1.0, p.sigma2);
            const std::array<const std::array<double, 4>*, 3> gammas{&p.A, &p.B, &p.C};
            for (int n = 1; n <= 3; ++n) {
                if (std::abs((*gammas[n - 1])[n]) > tol) {
                    throw ParameterError("general: complementary covariance " + std::string(1, "ABC"[n - 1]) +
                                         " must have a zero mu" + std::to_string(n) + "-component");
                }
            }
            const CovarianceH h = quaternion_template(p.sigma2, basis.from_coordinates(p.A),
                                                      basis.from_coordinates(p.B),
                                                      basis.from_coordinates(p.C), basis);
            CovarianceR r = to_real(h);
            require_psd(r.matrix, "general");
            return {to_complex(r), r, h};
        }
        case ClassTag::MuMu:
        case ClassTag::MuOne:
        case ClassTag::OneMu:
        case ClassTag::MuSame: {
            std::visit(
                [](const auto& p) {
                    using P = std::decay_t<decltype(p)>;
                    if constexpr (!std::is_same_v<P, GeneralParams>) {
                        require_finite_variance(p.sigma2, "sigma2");
                    }
                    if constexpr (std::is_same_v<P, CliffordParams> || std::is_same_v<P, MuSameParams>) {
                        require_finite_variance(p.varsigma2, "varsigma2");
                    }
                },
                params);
            CovarianceC c{structured_complex_matrix(cls.tag, params), basis};
            CovarianceR r = to_real(c);
            require_psd(r.matrix, tag_name(cls.tag).data());
            return {c, r, to_quaternion(r)};
        }
    }
    throw ParameterError("unknown class tag");
}

}  // namespace qprop
