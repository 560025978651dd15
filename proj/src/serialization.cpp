#include "qprop/serialization.hpp"

#include "qprop/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace qprop {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_samples_csv(std::ostream& os, const std::vector<Quaternion>& draws) {
    os << "a,b,c,d\n";
    for (const auto& q : draws) {
        os << format_double(q.a) << ',' << format_double(q.b) << ',' << format_double(q.c) << ','
           << format_double(q.d) << '\n';
    }
}

namespace {

bool parse_field(std::string_view text, double& out) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) {
        return false;
    }
    if (text.front() == '+') text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

std::vector<Quaternion> read_samples_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(is, line)) return false;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };
    if (!next_line()) {
        throw DataError("empty input: expected header a,b,c,d", 1);
    }
    if (line != "a,b,c,d") {
        throw DataError("line 1: expected header a,b,c,d", 1);
    }
    std::vector<Quaternion> out;
    while (next_line()) {
        if (line.empty()) {
            continue;
        }
        std::array<double, 4> v{};
        std::string_view rest(line);
        bool ok = true;
        for (int n = 0; n < 4 && ok; ++n) {
            const auto comma = rest.find(',');
            const bool last = n == 3;
            if (last != (comma == std::string_view::npos)) {
                ok = false;
                break;
            }
            ok = parse_field(last ? rest : rest.substr(0, comma), v[n]);
            if (!last) rest.remove_prefix(comma + 1);
        }
        if (!ok) {
            throw DataError("line " + std::to_string(lineno) + ": malformed row, expected four numbers",
                            lineno);
        }
        out.emplace_back(v[0], v[1], v[2], v[3]);
    }
    return out;
}

json axes_json(const QuaternionBasis& basis) {
    return {{"mu1", basis.mu1().vector3()}, {"mu2", basis.mu2().vector3()}, {"mu3", basis.mu3().vector3()}};
}

namespace {

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json params_json(const ClassParams& params) {
    return std::visit(
        [](const auto& p) -> json {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, GeneralParams>) {
                return {{"sigma2", p.sigma2}, {"A", p.A}, {"B", p.B}, {"C", p.C}};
            } else if constexpr (std::is_same_v<P, MuMuParams>) {
                return {{"sigma2", p.sigma2}, {"alpha", complex_json(p.alpha)}, {"delta", p.delta}};
            } else if constexpr (std::is_same_v<P, CliffordParams>) {
                return {{"sigma2", p.sigma2}, {"varsigma2", p.varsigma2}, {"omega", complex_json(p.omega)}};
            } else if constexpr (std::is_same_v<P, MuSameParams>) {
                return {{"sigma2", p.sigma2},
                        {"varsigma2", p.varsigma2},
                        {"alpha", complex_json(p.alpha)},
                        {"delta", complex_json(p.delta)}};
            } else {
                return {{"sigma2", p.sigma2}};
            }
        },
        params);
}

json metadata_json(const SampleMetadata& meta) {
    json j;
    j["seed"] = meta.seed;
    j["n"] = meta.n;
    if (meta.cls) {
        j["class"] = std::string(tag_name(meta.cls->tag));
        j["label"] = meta.cls->label();
        j["axes"] = axes_json(meta.cls->basis);
    } else {
        j["class"] = nullptr;
        j["axes"] = axes_json(meta.basis);
    }
    j["params"] = meta.params ? params_json(*meta.params) : json(nullptr);
    return j;
}

json covariance_json(const CovarianceR& g) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(g.matrix(r, c));
        rows.push_back(row);
    }
    return rows;
}

json covariance_json(const CovarianceC& g) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(complex_json(g.matrix(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json covariance_json(const CovarianceH& g) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(g.entries[r][c].components());
        rows.push_back(row);
    }
    return rows;
}

json covariance_json(const CovarianceFaces& faces) {
    return {{"axes", axes_json(faces.real.basis)},
            {"real", covariance_json(faces.real)},
            {"complex", covariance_json(faces.complex)},
            {"quaternion", covariance_json(faces.quaternion)}};
}

json report_json(const PropernessReport& report) {
    json cands = json::array();
    for (const auto& c : report.candidates) {
        cands.push_back({{"class", std::string(tag_name(c.cls.tag))},
                         {"label", c.cls.label()},
                         {"axes", axes_json(c.cls.basis)},
                         {"residual", c.residual},
                         {"frobenius_residual", c.frobenius_residual},
                         {"passed", c.passed}});
    }
    json j{{"candidates", cands},
           {"chosen", report.chosen.label()},
           {"chosen_class", std::string(tag_name(report.chosen.tag))},
           {"chosen_axes", axes_json(report.chosen.basis)},
           {"alias", via_class_alias(report)},
           {"tolerance", report.tolerance},
           {"c", report.c},
           {"n", report.n},
           {"sigma2_hat", report.sigma2_hat},
           {"basis", axes_json(report.basis)}};
    if (report.pseudo_covariance_residual) {
        j["pseudo_covariance_residual"] = *report.pseudo_covariance_residual;
    }
    return j;
}

}  // namespace qprop
