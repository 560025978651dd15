#pragma once

// Subcommands of the qprop tool: generate | classify | project | rotate.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include "qprop/errors.hpp"
#include "qprop/properness.hpp"
#include "qprop/quaternion.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qprop::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string subcommand;

    // generate
    ClassTag tag = ClassTag::HProper;
    std::array<double, 3> mu1{1.0, 0.0, 0.0};
    std::array<double, 3> mu2{0.0, 1.0, 0.0};
    ClassParams params = HProperParams{};
    std::size_t n = 50000;
    std::uint64_t seed = 42;
    std::string out;       // empty → standard output
    std::string meta;      // empty → derived from `out`
    std::string covariance_out;

    // classify / project / rotate
    std::string in;        // "-" → standard input
    double c = 5.0;
    bool center = false;
    std::string out_dir = ".";
    std::string prefix = "plane";
    std::vector<char> pairs{'i', 'j', 'k'};
    Quaternion u = Quaternion::one();
    Quaternion v = Quaternion::one();

    QuaternionBasis basis() const;
};

/// Parses argv (argv[0] is the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_project(const RunConfig& cfg, std::istream& in, std::ostream& err);
int cmd_rotate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses, dispatches, and maps exceptions to exit codes. `in` serves "--in -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qprop::cli
