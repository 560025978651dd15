#include "qprop/estimation.hpp"

#include "qprop/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qprop {

namespace {

void require_size(const SampleSet& s, std::size_t min_n, const char* what) {
    if (s.size() < min_n) {
        throw DataError(std::string(what) + ": need at least " + std::to_string(min_n) +
                        " samples, got " + std::to_string(s.size()));
    }
}

Quaternion sample_mean(const SampleSet& s) {
    Quaternion m;
    for (const auto& q : s.draws) {
        m += q;
    }
    return m / static_cast<double>(s.size());
}

double max_abs_component(const Quaternion& q) {
    return std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c), std::abs(q.d)});
}

Matrix4 rotated(const Matrix4& g, const Quaternion& u, const Quaternion& v) {
    const Matrix4 r = double_rotation(u, v).matrix();
    return r * g * r.transpose();
}

}  // namespace

ComplementaryCovariances complementary_covariances(const SampleSet& s, const QuaternionBasis& basis,
                                                   const EstimationOptions& opts) {
    require_size(s, 2, "complementary_covariances");
    const Quaternion mean = opts.center ? sample_mean(s) : Quaternion();
    ComplementaryCovariances out;
    out.basis = basis;
    out.n = s.size();
    for (const auto& raw : s.draws) {
        const Quaternion q = raw - mean;
        out.sigma2_hat += norm2(q);
        out.A_hat += q * conj(involution(q, basis.mu1()));
        out.B_hat += q * conj(involution(q, basis.mu2()));
        out.C_hat += q * conj(involution(q, basis.mu3()));
    }
    const double inv_n = 1.0 / static_cast<double>(s.size());
    out.sigma2_hat *= inv_n;
    out.A_hat *= inv_n;
    out.B_hat *= inv_n;
    out.C_hat *= inv_n;
    return out;
}

Matrix4 sample_covariance(const SampleSet& s, bool center) {
    require_size(s, 1, "sample_covariance");
    const Vector4 mean = center ? vec(sample_mean(s)) : Vector4::Zero();
    Matrix4 acc = Matrix4::Zero();
    for (const auto& q : s.draws) {
        const Vector4 x = vec(q) - mean;
        acc.noalias() += x * x.transpose();
    }
    return acc / static_cast<double>(s.size());
}

CovarianceFaces covariance_faces(const SampleSet& s, const QuaternionBasis& basis,
                                 const EstimationOptions& opts) {
    require_size(s, 5, "covariance_faces");
    const ComplementaryCovariances cc = complementary_covariances(s, basis, opts);
    CovarianceH h = quaternion_template(cc.sigma2_hat, project_structural(cc.A_hat, 1, basis),
                                        project_structural(cc.B_hat, 2, basis),
                                        project_structural(cc.C_hat, 3, basis), basis);
    CovarianceR r{sample_covariance(s, opts.center), basis};
    CovarianceC c = to_complex(h);
    return {c, r, h};
}

double symmetry_residual(const CovarianceR& g, const Quaternion& u, const Quaternion& v) {
    const double scale = g.matrix.norm();
    if (scale == 0.0) {
        throw DataError("symmetry_residual: zero covariance");
    }
    return (rotated(g.matrix, u, v) - g.matrix).norm() / scale;
}

double entrywise_symmetry_residual(const CovarianceR& g, const Quaternion& u, const Quaternion& v) {
    const double sigma2 = g.matrix.trace();
    if (!(sigma2 > 0.0)) {
        throw DataError("entrywise_symmetry_residual: zero covariance");
    }
    return (rotated(g.matrix, u, v) - g.matrix).cwiseAbs().maxCoeff() / sigma2;
}

std::vector<PropernessClass> candidate_classes(const QuaternionBasis& basis) {
    const std::array<Quaternion, 3> axes{basis.mu1(), basis.mu2(), basis.mu3()};
    std::vector<PropernessClass> out;
    for (int n = 0; n < 3; ++n) {
        // (mu_n, mu_{n+1}) is oriented: mu1·mu2 = mu3, mu2·mu3 = mu1, mu3·mu1 = mu2.
        const QuaternionBasis local = validate_basis(axes[n], axes[(n + 1) % 3]);
        for (ClassTag tag : {ClassTag::MuOne, ClassTag::OneMu, ClassTag::MuSame}) {
            out.push_back({tag, local});
        }
    }
    for (int l = 0; l < 3; ++l) {
        for (int r = 0; r < 3; ++r) {
            if (l != r) {
                out.push_back({ClassTag::MuMu, validate_basis(axes[l], axes[r])});
            }
        }
    }
    return out;
}

PropernessReport classify(const SampleSet& s, const QuaternionBasis& basis, const TolerancePolicy& policy) {
    require_size(s, 100, "classify");
    const CovarianceR g{sample_covariance(s, policy.center), basis};
    const double sigma2 = g.matrix.trace();
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw DataError("classify: degenerate covariance (all samples zero)");
    }

    PropernessReport report;
    report.n = s.size();
    report.c = policy.c;
    report.tolerance = policy.c / std::sqrt(static_cast<double>(s.size()));
    report.basis = basis;
    report.sigma2_hat = sigma2;

    const ComplementaryCovariances cc = complementary_covariances(s, basis, {policy.center});
    {
        CandidateResult h;
        h.cls = {ClassTag::HProper, basis};
        h.residual = std::max({max_abs_component(cc.A_hat), max_abs_component(cc.B_hat),
                               max_abs_component(cc.C_hat)}) / sigma2;
        h.frobenius_residual =
            (g.matrix - 0.25 * sigma2 * Matrix4::Identity()).norm() / g.matrix.norm();
        report.candidates.push_back(h);
    }
    for (const PropernessClass& cls : candidate_classes(basis)) {
        const auto [u, v] = *cls.rotation();
        CandidateResult r;
        r.cls = cls;
        r.residual = entrywise_symmetry_residual(g, u, v);
        r.frobenius_residual = symmetry_residual(g, u, v);
        report.candidates.push_back(r);
    }

    const CandidateResult* best = nullptr;
    for (auto& cand : report.candidates) {
        cand.passed = cand.residual <= report.tolerance;
        if (!cand.passed) {
            continue;
        }
        if (best == nullptr || specificity(cand.cls.tag) > specificity(best->cls.tag) ||
            (specificity(cand.cls.tag) == specificity(best->cls.tag) && cand.residual < best->residual)) {
            best = &cand;
        }
    }
    report.chosen = best ? best->cls : PropernessClass{ClassTag::General, basis};

    if (report.chosen.tag == ClassTag::OneMu) {
        const Quaternion mean = policy.center ? sample_mean(s) : Quaternion();
        std::complex<double> pseudo{0.0, 0.0};
        for (const auto& q : s.draws) {
            const ComplexPair z = cayley_dickson(q - mean, report.chosen.basis);
            pseudo += z.z1 * z.z2;
        }
        pseudo /= static_cast<double>(s.size());
        report.pseudo_covariance_residual =
            std::max(std::abs(pseudo.real()), std::abs(pseudo.imag())) / sigma2;
    }
    return report;
}

std::string via_class_alias(const PropernessReport& report) {
    switch (report.chosen.tag) {
        case ClassTag::HProper:
            return "ℍ-proper";
        case ClassTag::OneMu:
            if (report.pseudo_covariance_residual && *report.pseudo_covariance_residual <= report.tolerance) {
                return "ℝ-proper";
            }
            return "ℂ^" + axis_label(report.chosen.basis.mu1()) + "-proper";
        default:
            return "outside prior taxonomy";
    }
}

}  // namespace qprop
