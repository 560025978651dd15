#pragma once

// Properness classes of a Gaussian quaternion variable and their parameterizations.
//
// Every class is a tag plus a basis whose leading axes are the class axes:
//   MuMu    q =d mu1 q mu2
//   MuOne   q =d mu1 q
//   OneMu   q =d q mu1
//   MuSame  q =d mu1 q mu1
//   HProper all complementary covariances vanish (invariant under every 4D rotation)
//   General no constraint

#include "qprop/quaternion.hpp"
#include "qprop/rotations4d.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace qprop {

enum class ClassTag { General, MuMu, MuOne, OneMu, MuSame, HProper };

std::string_view tag_name(ClassTag tag);

/// Inverse of tag_name; throws ParameterError on unknown names.
ClassTag parse_tag(std::string_view name);

/// Specificity rank: HProper 3, MuMu/MuSame 2, MuOne/OneMu 1, General 0.
int specificity(ClassTag tag);

struct PropernessClass {
    ClassTag tag = ClassTag::General;
    QuaternionBasis basis = QuaternionBasis::standard();

    /// Left and right unit quaternions of the defining rotation; nullopt for General/HProper.
    std::optional<std::pair<Quaternion, Quaternion>> rotation() const;

    /// e.g. "mumu(i,j)", "onemu(j)", "hproper".
    std::string label() const;
};

/// sigma2 = E|q|²; A, B, C are the complementary covariances E[q (q^nu)*] for
/// nu = mu1, mu2, mu3, given as basis coordinates (1, mu1, mu2, mu3). Their structural
/// zeros (A has no mu1-part, B no mu2-part, C no mu3-part) are required.
struct GeneralParams {
    double sigma2 = 1.0;
    // Generic defaults: no candidate rotation leaves the resulting covariance invariant.
    std::array<double, 4> A{0.20, 0.0, 0.10, -0.08};
    std::array<double, 4> B{0.12, 0.09, 0.0, 0.15};
    std::array<double, 4> C{-0.14, 0.07, 0.11, 0.0};
};

/// sigma2 = E|z1|² = E|z2|², alpha = E[z1²] = E[z1 z2], mu1·delta = E[z1 z2*].
struct MuMuParams {
    double sigma2 = 1.0;
    std::complex<double> alpha{0.3, 0.1};
    double delta = 0.2;
};

/// Shared by MuOne (omega = E[z1 z2*]) and OneMu (omega = E[z1 z2]).
/// sigma2 = E|z1|², varsigma2 = E|z2|².
struct CliffordParams {
    double sigma2 = 1.0;
    double varsigma2 = 2.0;
    std::complex<double> omega{0.5, 0.3};
};

/// sigma2 = E|z1|², varsigma2 = E|z2|², alpha = E[z1²], delta = E[z2²].
struct MuSameParams {
    double sigma2 = 1.0;
    double varsigma2 = 2.0;
    std::complex<double> alpha{0.3, 0.1};
    std::complex<double> delta{0.2, -0.1};
};

/// sigma2 = E|q|².
struct HProperParams {
    double sigma2 = 1.0;
};

using ClassParams = std::variant<GeneralParams, MuMuParams, CliffordParams, MuSameParams, HProperParams>;

/// Default parameter set for a tag.
ClassParams default_params(ClassTag tag);

/// Throws ParameterError when the alternative held by `params` does not belong to `tag`.
void check_params_match(ClassTag tag, const ClassParams& params);

}  // namespace qprop
