#include "qprop/sampling.hpp"

#include "qprop/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <random>
#include <sstream>

namespace qprop {

SampleSet SampleSet::from_draws(std::vector<Quaternion> draws) {
    SampleSet s;
    s.meta.n = draws.size();
    s.draws = std::move(draws);
    return s;
}

Matrix4 sampling_factor(const Matrix4& g) {
    const Matrix4 sym = 0.5 * (g + g.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix4> es(sym);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < kPsdFloor) {
        std::ostringstream os;
        os << "sample: covariance is not positive semidefinite (eigenvalue " << lo << ")";
        throw ParameterError(os.str(), lo);
    }
    Eigen::LLT<Matrix4> llt(sym);
    if (llt.info() == Eigen::Success && lo > 0.0) {
        return llt.matrixL();
    }
    const Vector4 root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * root.asDiagonal();
}

SampleSet sample(const CovarianceR& g, std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw ParameterError("sample: n must be at least 1");
    }
    const Matrix4 f = sampling_factor(g.matrix);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    SampleSet out;
    out.draws.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        Vector4 z;
        for (int c = 0; c < 4; ++c) {
            z[c] = normal(engine);
        }
        out.draws.push_back(from_vec(f * z));
    }
    out.meta.seed = seed;
    out.meta.basis = g.basis;
    out.meta.n = n;
    return out;
}

SampleSet sample_class(const PropernessClass& cls, const ClassParams& params, std::size_t n,
                       std::uint64_t seed) {
    const CovarianceFaces faces = covariance_from_params(cls, params);
    SampleSet out = sample(faces.real, n, seed);
    out.meta.cls = cls;
    out.meta.params = params;
    return out;
}

}  // namespace qprop
