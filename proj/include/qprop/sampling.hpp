#pragma once

#include "qprop/covariance.hpp"
#include "qprop/properness.hpp"
#include "qprop/quaternion.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qprop {

/// What produced a SampleSet. Class and params are absent for raw-covariance draws and
/// for data read from disk.
struct SampleMetadata {
    std::uint64_t seed = 0;
    std::optional<PropernessClass> cls;
    std::optional<ClassParams> params;
    QuaternionBasis basis = QuaternionBasis::standard();
    std::size_t n = 0;
};

struct SampleSet {
    std::vector<Quaternion> draws;
    SampleMetadata meta;

    std::size_t size() const { return draws.size(); }

    /// Wraps externally obtained draws; n is taken from the vector.
    static SampleSet from_draws(std::vector<Quaternion> draws);
};

/// F with F Fᵀ = Γ_R: Cholesky when it succeeds, otherwise eigen-factorization with negative
/// eigenvalues clipped at 0. Throws ParameterError when Γ_R is not PSD to kPsdFloor.
Matrix4 sampling_factor(const Matrix4& g);

/// n i.i.d. zero-mean draws with covariance Γ_R from a generator seeded with `seed`.
/// Identical (Γ_R, n, seed) yield bit-identical draws.
SampleSet sample(const CovarianceR& g, std::size_t n, std::uint64_t seed);

/// covariance_from_params + sample, with the class recorded in the metadata.
SampleSet sample_class(const PropernessClass& cls, const ClassParams& params, std::size_t n,
                       std::uint64_t seed);

}  // namespace qprop
