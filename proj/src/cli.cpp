#include "qprop/cli.hpp"

#include "qprop/estimation.hpp"
#include "qprop/rotations4d.hpp"
#include "qprop/sampling.hpp"
#include "qprop/serialization.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qprop::cli {

namespace {

constexpr double kUnitInputTol = 1e-6;

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::string_view rest(text);
    while (true) {
        const auto comma = rest.find(',');
        std::string_view field = rest.substr(0, comma);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        if (!field.empty() && field.front() == '+') field.remove_prefix(1);
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(x)) {
            throw UsageError("--" + flag + ": cannot parse '" + text + "' as comma-separated numbers");
        }
        out.push_back(x);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<double> parse_fixed(const std::string& text, const std::string& flag, std::size_t count) {
    auto v = parse_list(text, flag);
    if (v.size() != count) {
        throw UsageError("--" + flag + ": expected " + std::to_string(count) + " comma-separated values");
    }
    return v;
}

std::complex<double> parse_complex(const std::string& text, const std::string& flag) {
    const auto v = parse_list(text, flag);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw UsageError("--" + flag + ": expected re or re,im");
}

std::array<double, 4> parse_quaternion_coords(const std::string& text, const std::string& flag) {
    const auto v = parse_fixed(text, flag, 4);
    return {v[0], v[1], v[2], v[3]};
}

Quaternion parse_unit(const std::string& text, const std::string& flag) {
    const auto x = parse_quaternion_coords(text, flag);
    const Quaternion q(x[0], x[1], x[2], x[3]);
    if (std::abs(modulus(q) - 1.0) > kUnitInputTol) {
        throw UsageError("--" + flag + ": rotation quaternion must have unit modulus");
    }
    return q / modulus(q);
}

struct RawParams {
    std::optional<std::string> sigma2, varsigma2, alpha, delta, omega, A, B, C;
};

ClassParams build_params(ClassTag tag, const RawParams& raw) {
    auto number = [](const std::optional<std::string>& s, const std::string& flag, double fallback) {
        if (!s) return fallback;
        return parse_fixed(*s, flag, 1)[0];
    };
    auto complex = [](const std::optional<std::string>& s, const std::string& flag, std::complex<double> fallback) {
        return s ? parse_complex(*s, flag) : fallback;
    };
    auto forbid = [tag](const std::optional<std::string>& s, const char* flag) {
        if (s) {
            throw UsageError(std::string("--") + flag + " does not apply to class " + std::string(tag_name(tag)));
        }
    };

    switch (tag) {
        case ClassTag::HProper: {
            forbid(raw.varsigma2, "varsigma2"); forbid(raw.alpha, "alpha"); forbid(raw.delta, "delta");
            forbid(raw.omega, "omega"); forbid(raw.A, "A"); forbid(raw.B, "B"); forbid(raw.C, "C");
            return HProperParams{number(raw.sigma2, "sigma2", 1.0)};
        }
        case ClassTag::General: {
            forbid(raw.varsigma2, "varsigma2"); forbid(raw.alpha, "alpha"); forbid(raw.delta, "delta");
            forbid(raw.omega, "omega");
            GeneralParams p;
            p.sigma2 = number(raw.sigma2, "sigma2", p.sigma2);
            if (raw.A) p.A = parse_quaternion_coords(*raw.A, "A");
            if (raw.B) p.B = parse_quaternion_coords(*raw.B, "B");
            if (raw.C) p.C = parse_quaternion_coords(*raw.C, "C");
            return p;
        }
        case ClassTag::MuMu: {
            forbid(raw.varsigma2, "varsigma2"); forbid(raw.omega, "omega");
            forbid(raw.A, "A"); forbid(raw.B, "B"); forbid(raw.C, "C");
            MuMuParams p;
            p.sigma2 = number(raw.sigma2, "sigma2", p.sigma2);
            p.alpha = complex(raw.alpha, "alpha", p.alpha);
            p.delta = number(raw.delta, "delta", p.delta);
            return p;
        }
        case ClassTag::MuOne:
        case ClassTag::OneMu: {
            forbid(raw.alpha, "alpha"); forbid(raw.delta, "delta");
            forbid(raw.A, "A"); forbid(raw.B, "B"); forbid(raw.C, "C");
            CliffordParams p;
            p.sigma2 = number(raw.sigma2, "sigma2", p.sigma2);
            p.varsigma2 = number(raw.varsigma2, "varsigma2", p.varsigma2);
            p.omega = complex(raw.omega, "omega", p.omega);
            return p;
        }
        case ClassTag::MuSame: {
            forbid(raw.omega, "omega"); forbid(raw.A, "A"); forbid(raw.B, "B"); forbid(raw.C, "C");
            MuSameParams p;
            p.sigma2 = number(raw.sigma2, "sigma2", p.sigma2);
            p.varsigma2 = number(raw.varsigma2, "varsigma2", p.varsigma2);
            p.alpha = complex(raw.alpha, "alpha", p.alpha);
            p.delta = complex(raw.delta, "delta", p.delta);
            return p;
        }
    }
    throw UsageError("unknown class");
}

std::array<double, 3> parse_axis(const std::string& text, const std::string& flag) {
    const auto v = parse_fixed(text, flag, 3);
    return {v[0], v[1], v[2]};
}

void add_basis_options(CLI::App* sub, std::string& mu1, std::string& mu2) {
    sub->add_option("--mu1", mu1, "first basis axis as x,y,z (normalized)")->default_str("1,0,0");
    sub->add_option("--mu2", mu2, "second basis axis as x,y,z, orthogonal to mu1")->default_str("0,1,0");
}

std::filesystem::path derived_meta_path(const std::string& out) {
    std::filesystem::path p(out);
    p.replace_extension(".json");
    if (p == std::filesystem::path(out)) {
        p += ".meta.json";
    }
    return p;
}

template <typename Fn>
auto with_input(const RunConfig& cfg, std::istream& fallback, Fn&& fn) {
    if (cfg.in.empty() || cfg.in == "-") {
        return fn(fallback);
    }
    std::ifstream file(cfg.in);
    if (!file) {
        throw DataError("cannot open input file '" + cfg.in + "'");
    }
    return fn(file);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw DataError("cannot open output file '" + path.string() + "'");
    }
    return os;
}

}  // namespace

QuaternionBasis RunConfig::basis() const {
    const PureUnit a = PureUnit::from_vector(mu1[0], mu1[1], mu1[2]);
    const PureUnit b = PureUnit::from_vector(mu2[0], mu2[1], mu2[2]);
    return validate_basis(a, b);
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Gaussian quaternion properness: generate, classify, project, rotate"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string mu1 = "1,0,0", mu2 = "0,1,0";
    std::string cls = "hproper";
    RawParams raw;
    std::string u_text = "1,0,0,0", v_text = "1,0,0,0";
    std::string pairs_text = "all";

    auto opt_string = [](CLI::App* sub, const std::string& name, std::optional<std::string>& slot,
                         const std::string& help) {
        sub->add_option_function<std::string>(name, [&slot](const std::string& s) { slot = s; }, help);
    };

    CLI::App* gen = app.add_subcommand("generate", "sample a Gaussian quaternion variable of a properness class");
    gen->add_option("--class", cls, "general | mumu | muone | onemu | musame | hproper")->default_str("hproper");
    add_basis_options(gen, mu1, mu2);
    opt_string(gen, "--sigma2", raw.sigma2, "sigma^2");
    opt_string(gen, "--varsigma2", raw.varsigma2, "varsigma^2 (muone, onemu, musame)");
    opt_string(gen, "--alpha", raw.alpha, "alpha as re,im (mumu, musame)");
    opt_string(gen, "--delta", raw.delta, "delta: real (mumu) or re,im (musame)");
    opt_string(gen, "--omega", raw.omega, "omega as re,im (muone, onemu)");
    opt_string(gen, "--A", raw.A, "general: gamma_1mu1 as basis coordinates c0,c1,c2,c3");
    opt_string(gen, "--B", raw.B, "general: gamma_1mu2 as basis coordinates");
    opt_string(gen, "--C", raw.C, "general: gamma_1mu3 as basis coordinates");
    gen->add_option("--n", cfg.n, "number of draws")->default_val(50000);
    gen->add_option("--seed", cfg.seed, "64-bit generator seed")->default_val(42);
    gen->add_option("--out", cfg.out, "sample CSV path (standard output when omitted)");
    gen->add_option("--meta", cfg.meta, "metadata JSON path (default: --out with .json extension)");
    gen->add_option("--covariance", cfg.covariance_out, "write the three covariance faces as JSON");

    CLI::App* cla = app.add_subcommand("classify", "estimate and classify properness of samples");
    cla->add_option("--in", cfg.in, "sample CSV path, - for standard input")->required();
    add_basis_options(cla, mu1, mu2);
    cla->add_option("--c", cfg.c, "tolerance constant: tol = c / sqrt(N)")->default_val(5.0);
    cla->add_flag("--center", cfg.center, "subtract the sample mean first");

    CLI::App* proj = app.add_subcommand("project", "split samples into pairs of orthogonal 2D planes");
    proj->add_option("--in", cfg.in, "sample CSV path, - for standard input")->required();
    proj->add_option("--out-dir", cfg.out_dir, "output directory")->default_str(".");
    proj->add_option("--prefix", cfg.prefix, "output file prefix")->default_str("plane");
    proj->add_option("--pairs", pairs_text, "all, or any of i,j,k: x selects {1,x} with its complement")
        ->default_str("all");

    CLI::App* rot = app.add_subcommand("rotate", "apply q -> u q v to every sample");
    rot->add_option("--in", cfg.in, "sample CSV path, - for standard input")->required();
    rot->add_option("--u", u_text, "left unit quaternion a,b,c,d")->default_str("1,0,0,0");
    rot->add_option("--v", v_text, "right unit quaternion a,b,c,d")->default_str("1,0,0,0");
    rot->add_option("--out", cfg.out, "output CSV path (standard output when omitted)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    cfg.mu1 = parse_axis(mu1, "mu1");
    cfg.mu2 = parse_axis(mu2, "mu2");

    if (cfg.subcommand == "generate") {
        try {
            cfg.tag = parse_tag(cls);
        } catch (const ParameterError& e) {
            throw UsageError(e.what());
        }
        cfg.params = build_params(cfg.tag, raw);
        if (cfg.n == 0) throw UsageError("--n must be at least 1");
    } else if (cfg.subcommand == "project") {
        if (pairs_text != "all") {
            cfg.pairs.clear();
            std::string_view rest(pairs_text);
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string_view item = rest.substr(0, comma);
                if (item != "i" && item != "j" && item != "k") {
                    throw UsageError("--pairs: expected all or a list of i, j, k");
                }
                cfg.pairs.push_back(item.front());
                if (comma == std::string_view::npos) break;
                rest.remove_prefix(comma + 1);
            }
        }
    } else if (cfg.subcommand == "rotate") {
        cfg.u = parse_unit(u_text, "u");
        cfg.v = parse_unit(v_text, "v");
    }
    // Surface basis problems (non-orthogonal axes, zero vectors) as usage errors.
    try {
        (void)cfg.basis();
    } catch (const Error& e) {
        throw UsageError(std::string("invalid basis: ") + e.what());
    }
    return cfg;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PropernessClass cls{cfg.tag, cfg.basis()};
    const CovarianceFaces faces = covariance_from_params(cls, cfg.params);
    SampleSet s = sample(faces.real, cfg.n, cfg.seed);
    s.meta.cls = cls;
    s.meta.params = cfg.params;

    if (cfg.out.empty()) {
        write_samples_csv(out, s.draws);
    } else {
        auto os = open_output(cfg.out);
        write_samples_csv(os, s.draws);
    }
    const std::string meta_path = !cfg.meta.empty() ? cfg.meta
                                  : !cfg.out.empty() ? derived_meta_path(cfg.out).string()
                                                     : std::string();
    if (!meta_path.empty()) {
        auto os = open_output(meta_path);
        os << metadata_json(s.meta).dump(2) << '\n';
    }
    if (!cfg.covariance_out.empty()) {
        auto os = open_output(cfg.covariance_out);
        os << covariance_json(faces).dump(2) << '\n';
    }
    err << "generate: " << s.size() << " draws of " << cls.label() << " (seed " << cfg.seed << ")\n";
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto draws = with_input(cfg, in, [](std::istream& is) { return read_samples_csv(is); });
    const SampleSet s = SampleSet::from_draws(draws);
    const PropernessReport report = classify(s, cfg.basis(), {cfg.c, cfg.center});
    out << report_json(report).dump(2) << '\n';
    err << "classify: " << report.chosen.label() << " (" << via_class_alias(report) << "), N=" << report.n
        << ", tol=" << report.tolerance << '\n';
    return kExitOk;
}

int cmd_project(const RunConfig& cfg, std::istream& in, std::ostream& err) {
    const auto draws = with_input(cfg, in, [](std::istream& is) { return read_samples_csv(is); });
    const std::filesystem::path dir(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    // Column indices of a, b, c, d and their names.
    static constexpr char kNames[] = {'1', 'i', 'j', 'k'};
    static constexpr char kCols[] = {'a', 'b', 'c', 'd'};
    auto write_plane = [&](int first, int second) {
        const std::string name = cfg.prefix + "_" + kNames[first] + kNames[second] + ".csv";
        auto os = open_output(dir / name);
        os << kCols[first] << ',' << kCols[second] << '\n';
        for (const auto& q : draws) {
            const auto x = q.components();
            os << format_double(x[first]) << ',' << format_double(x[second]) << '\n';
        }
    };
    for (char axis : cfg.pairs) {
        const int n = axis == 'i' ? 1 : axis == 'j' ? 2 : 3;
        int rest[2];
        int r = 0;
        for (int m = 1; m <= 3; ++m) {
            if (m != n) rest[r++] = m;
        }
        write_plane(0, n);
        write_plane(rest[0], rest[1]);
    }
    err << "project: " << draws.size() << " rows into " << 2 * cfg.pairs.size() << " files in " << dir.string()
        << '\n';
    return kExitOk;
}

int cmd_rotate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    auto draws = with_input(cfg, in, [](std::istream& is) { return read_samples_csv(is); });
    const DoubleRotation rot = double_rotation(cfg.u, cfg.v);
    for (auto& q : draws) {
        q = rot.apply(q);
    }
    if (cfg.out.empty()) {
        write_samples_csv(out, draws);
    } else {
        auto os = open_output(cfg.out);
        write_samples_csv(os, draws);
    }
    err << "rotate: " << draws.size() << " rows\n";
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const CLI::CallForHelp& e) {
        out << e.what();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cfg.subcommand == "generate") return cmd_generate(cfg, out, err);
        if (cfg.subcommand == "classify") return cmd_classify(cfg, in, out, err);
        if (cfg.subcommand == "project") return cmd_project(cfg, in, err);
        if (cfg.subcommand == "rotate") return cmd_rotate(cfg, in, out, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    err << "error: unknown subcommand\n";
    return kExitUsage;
}

}  // namespace qprop::cli
