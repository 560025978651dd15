#include "qprop/properness.hpp"

#include "qprop/errors.hpp"

#include <array>

namespace qprop {

namespace {

constexpr std::array<std::pair<ClassTag, std::string_view>, 6> kNames{{
    {ClassTag::General, "general"},
    {ClassTag::MuMu, "mumu"},
    {ClassTag::MuOne, "muone"},
    {ClassTag::OneMu, "onemu"},
    {ClassTag::MuSame, "musame"},
    {ClassTag::HProper, "hproper"},
}};

}  // namespace

std::string_view tag_name(ClassTag tag) {
    for (const auto& [t, name] : kNames) {
        if (t == tag) {
            return name;
        }
    }
    return "unknown";
}

ClassTag parse_tag(std::string_view name) {
    for (const auto& [t, n] : kNames) {
        if (n == name) {
            return t;
        }
    }
    throw ParameterError("unknown properness class '" + std::string(name) + "'");
}

int specificity(ClassTag tag) {
    switch (tag) {
        case ClassTag::HProper: return 3;
        case ClassTag::MuMu:
        case ClassTag::MuSame: return 2;
        case ClassTag::MuOne:
        case ClassTag::OneMu: return 1;
        case ClassTag::General: return 0;
    }
    return 0;
}

std::optional<std::pair<Quaternion, Quaternion>> PropernessClass::rotation() const {
    const Quaternion m1 = basis.mu1();
    switch (tag) {
        case ClassTag::MuMu: return std::pair{m1, Quaternion(basis.mu2())};
        case ClassTag::MuOne: return std::pair{m1, Quaternion::one()};
        case ClassTag::OneMu: return std::pair{Quaternion::one(), m1};
        case ClassTag::MuSame: return std::pair{m1, m1};
        case ClassTag::General:
        case ClassTag::HProper: return std::nullopt;
    }
    return std::nullopt;
}

std::string PropernessClass::label() const {
    std::string out(tag_name(tag));
    switch (tag) {
        case ClassTag::MuMu:
            return out + "(" + axis_label(basis.mu1()) + "," + axis_label(basis.mu2()) + ")";
        case ClassTag::MuOne:
        case ClassTag::OneMu:
        case ClassTag::MuSame:
            return out + "(" + axis_label(basis.mu1()) + ")";
        case ClassTag::General:
        case ClassTag::HProper:
            break;
    }
    return out;
}

ClassParams default_params(ClassTag tag) {
    switch (tag) {
        case ClassTag::General: return GeneralParams{};
        case ClassTag::MuMu: return MuMuParams{};
        case ClassTag::MuOne:
        case ClassTag::OneMu: return CliffordParams{};
        case ClassTag::MuSame: return MuSameParams{};
        case ClassTag::HProper: return HProperParams{};
    }
    return GeneralParams{};
}

void check_params_match(ClassTag tag, const ClassParams& params) {
    const bool ok = [&] {
        switch (tag) {
            case ClassTag::General: return std::holds_alternative<GeneralParams>(params);
            case ClassTag::MuMu: return std::holds_alternative<MuMuParams>(params);
            case ClassTag::MuOne:
            case ClassTag::OneMu: return std::holds_alternative<CliffordParams>(params);
            case ClassTag::MuSame: return std::holds_alternative<MuSameParams>(params);
            case ClassTag::HProper: return std::holds_alternative<HProperParams>(params);
        }
        return false;
    }();
    if (!ok) {
        throw ParameterError("parameters do not match class '" + std::string(tag_name(tag)) + "'");
    }
}

}  // namespace qprop
