// Command-line front end. Exit codes: 0 defined result, 1 usage or input
// error, 2 the requested value is Undefined.

#ifndef STREAMACCEL_CLI_HPP
#define STREAMACCEL_CLI_HPP

#include "streamaccel/estimators.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamaccel::cli {

enum class Command { Accelerate, GrowthCoeff, SumSeries, Table };

struct CliConfig {
    Command command = Command::GrowthCoeff;
    TransformSpec spec;
    std::optional<std::size_t> terms;
    int digits = 10;
    std::optional<std::string> generator;
    std::optional<std::filesystem::path> input;
    EvalMode mode = EvalMode::take_last();
    RatioAlignment alignment = RatioAlignment::DropLeadingZeros;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "take-last" or "at-index:<i>".
EvalMode parse_mode(const std::string& text);

/// Throws UsageError when the combination of flags is not runnable.
void validate(const CliConfig& config);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (args[0] is the program name) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace streamaccel::cli

#endif  // STREAMACCEL_CLI_HPP
