#include "qprop/cli.hpp"
#include "qprop/serialization.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qprop;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = {}) {
    args.insert(args.begin(), "qprop");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qprop_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("generate", "[cli]") {
    const fs::path dir = scratch("generate");
    const auto csv = (dir / "fig1.csv").string();
    const std::vector<std::string> args{"generate", "--class", "mumu",   "--mu1",   "1,0,0", "--mu2",
                                        "0,1,0",    "--sigma2", "1",      "--alpha", "0.3,0.1", "--delta",
                                        "0.2",      "--n",      "50000",  "--seed",  "42",    "--out", csv};
    const Result r = run_cli(args);
    REQUIRE(r.code == 0);
    const std::string first = slurp(csv);
    CHECK(count_lines(first) == 50001);
    CHECK(fs::exists(dir / "fig1.json"));
    const auto meta = nlohmann::json::parse(slurp(dir / "fig1.json"));
    CHECK(meta["label"] == "mumu(i,j)");
    CHECK(meta["seed"] == 42);

    REQUIRE(run_cli(args).code == 0);
    CHECK(slurp(csv) == first);

    const Result small = run_cli({"generate", "--class", "hproper", "--sigma2", "1", "--n", "10"});
    CHECK(small.code == 0);
    CHECK(count_lines(small.out) == 11);
    CHECK(small.out.rfind("a,b,c,d\n", 0) == 0);
    CHECK_FALSE(small.err.empty());

    const auto cov = (dir / "cov.json").string();
    CHECK(run_cli({"generate", "--class", "musame", "--n", "5", "--covariance", cov}).code == 0);
    CHECK(nlohmann::json::parse(slurp(cov)).contains("complex"));
}

TEST_CASE("generate rejects bad input", "[cli]") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"generate", "--class", "circular"}).code == 1);
    CHECK(run_cli({"generate", "--class", "mumu", "--omega", "0.1"}).code == 1);
    CHECK(run_cli({"generate", "--class", "hproper", "--alpha", "0.1"}).code == 1);
    CHECK(run_cli({"generate", "--class", "mumu", "--delta", "0.1,0.2"}).code == 1);
    CHECK(run_cli({"generate", "--mu1", "1,0,0", "--mu2", "1,1,0"}).code == 1);
    CHECK(run_cli({"generate", "--mu1", "0,0,0"}).code == 1);
    CHECK(run_cli({"generate", "--n", "0"}).code == 1);
    CHECK(run_cli({"generate", "--sigma2", "abc"}).code == 1);
    const Result indefinite = run_cli({"generate", "--class", "muone", "--sigma2", "1", "--varsigma2", "1",
                                       "--omega", "3,0", "--n", "10"});
    CHECK(indefinite.code == 1);
    CHECK(indefinite.err.find("error") != std::string::npos);
    CHECK(indefinite.out.empty());
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("classify", "[cli]") {
    const Result gen = run_cli({"generate", "--class", "onemu", "--mu1", "0,1,0", "--mu2", "0,0,1", "--sigma2", "1",
                                "--varsigma2", "2", "--omega", "0.5,0.3"});
    REQUIRE(gen.code == 0);
    const Result r = run_cli({"classify", "--in", "-"}, gen.out);
    REQUIRE(r.code == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["chosen"] == "onemu(j)");
    CHECK(report["alias"] == "ℂ^j-proper");
    CHECK(report["n"] == 50000);
    CHECK(report["c"] == 5.0);

    const Result zero = run_cli({"classify", "--in", "-"}, "a,b,c,d\n" + [] {
        std::string s;
        for (int n = 0; n < 200; ++n) s += "0,0,0,0\n";
        return s;
    }());
    CHECK(zero.code == 2);
    CHECK(zero.err.find("degenerate covariance") != std::string::npos);

    const Result bad = run_cli({"classify", "--in", "-"}, "a,b,c,d\n1,2,3,4\n1,2,oops,4\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);

    CHECK(run_cli({"classify", "--in", "/nonexistent/file.csv"}).code == 2);
    CHECK(run_cli({"classify"}).code == 1);
}

TEST_CASE("project", "[cli]") {
    const fs::path dir = scratch("project");
    const Result r = run_cli({"project", "--in", "-", "--out-dir", dir.string(), "--prefix", "p"},
                             "a,b,c,d\n1,2,3,4\n");
    REQUIRE(r.code == 0);
    CHECK(slurp(dir / "p_1i.csv") == "a,b\n1,2\n");
    CHECK(slurp(dir / "p_jk.csv") == "c,d\n3,4\n");
    CHECK(slurp(dir / "p_1j.csv") == "a,c\n1,3\n");
    CHECK(slurp(dir / "p_ik.csv") == "b,d\n2,4\n");
    CHECK(slurp(dir / "p_1k.csv") == "a,d\n1,4\n");
    CHECK(slurp(dir / "p_ij.csv") == "b,c\n2,3\n");

    const fs::path sub = scratch("project_pairs");
    const Result gen = run_cli({"generate", "--n", "37"});
    REQUIRE(run_cli({"project", "--in", "-", "--out-dir", sub.string(), "--pairs", "j"}, gen.out).code == 0);
    CHECK(count_lines(slurp(sub / "plane_1j.csv")) == 38);
    CHECK(count_lines(slurp(sub / "plane_ik.csv")) == 38);
    CHECK_FALSE(fs::exists(sub / "plane_1i.csv"));
    CHECK(run_cli({"project", "--in", "-", "--pairs", "x"}, gen.out).code == 1);
}

TEST_CASE("rotate", "[cli]") {
    const Result gen = run_cli({"generate", "--n", "100", "--class", "mumu"});
    REQUIRE(gen.code == 0);
    const Result same = run_cli({"rotate", "--in", "-", "--u", "1,0,0,0", "--v", "1,0,0,0"}, gen.out);
    REQUIRE(same.code == 0);
    CHECK(same.out == gen.out);

    const Result ij = run_cli({"rotate", "--in", "-", "--u", "0,1,0,0", "--v", "0,0,1,0"}, gen.out);
    REQUIRE(ij.code == 0);
    std::istringstream a(gen.out), b(ij.out);
    const auto before = read_samples_csv(a);
    const auto after = read_samples_csv(b);
    REQUIRE(before.size() == after.size());
    for (std::size_t n = 0; n < before.size(); ++n) {
        CHECK(after[n] == Quaternion::i() * before[n] * Quaternion::j());
    }
    CHECK(run_cli({"rotate", "--in", "-", "--u", "1,1,0,0"}, gen.out).code == 1);
    CHECK(run_cli({"rotate", "--in", "-", "--v", "1,0,0"}, gen.out).code == 1);
}

TEST_CASE("generate and classify round trip over seeds", "[cli][property]") {
    for (const std::string cls : {"general", "mumu", "muone", "onemu", "musame", "hproper"}) {
        for (int seed = 100; seed < 110; ++seed) {
            const Result gen = run_cli({"generate", "--class", cls, "--seed", std::to_string(seed)});
            REQUIRE(gen.code == 0);
            const Result r = run_cli({"classify", "--in", "-"}, gen.out);
            REQUIRE(r.code == 0);
            INFO(cls << " seed " << seed);
            CHECK(nlohmann::json::parse(r.out)["chosen_class"] == cls);
        }
    }
}

TEST_CASE("installed tool exit codes", "[cli]") {
    const fs::path dir = scratch("tool");
    const std::string tool = QPROP_TOOL_PATH;
    const std::string csv = (dir / "x.csv").string();
    auto status = [](const std::string& cmd) {
        const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status(tool + " generate --n 200 --out " + csv) == 0);
    CHECK(status(tool + " classify --in " + csv) == 0);
    CHECK(status(tool + " classify --in " + (dir / "missing.csv").string()) == 2);
    CHECK(status(tool + " generate --class nope") == 1);
}
