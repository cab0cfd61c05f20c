// Copyright 2026 The sqkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqkc::cli {

inline constexpr const char *kToolVersion = "0.1.0";

enum class Format { Json, Csv, Text };

/// Parsed command line: one subcommand and its parameters.
struct CommandPlan {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    Format format = Format::Json;

    std::optional<std::string> state;
    std::optional<std::string> rho;
    std::optional<std::string> ens;
    std::optional<std::string> code;
    std::vector<std::string> states;
    std::vector<std::string> machines;
    std::vector<std::string> factors;

    std::optional<std::string> x;
    std::optional<std::string> y;
    std::optional<std::string> decode;
    std::vector<double> probabilities;
    std::vector<std::size_t> lengths;
    std::vector<std::size_t> n_values;
    std::vector<double> alpha2_values;
    double delta = 0.0;
    double k = 1.0;
    std::size_t m_block = 0;
    std::size_t dim = 0;
    std::size_t parties = 0;
    std::string inequality;
    std::string mode = "joint";
    std::vector<std::size_t> dims;
    std::optional<std::uint64_t> scan_less;
    std::optional<std::string> ens_out;
};

/// Raised by parse_args. exit_code is 0 for --help, 2 for usage errors;
/// text holds the help or the diagnostic.
class UsageError : public std::runtime_error {
   public:
    UsageError(int exit_code, std::string text)
        : std::runtime_error(text), exit_code_(exit_code), text_(std::move(text)) {
    }
    int exit_code() const noexcept {
        return exit_code_;
    }
    const std::string &text() const noexcept {
        return text_;
    }

   private:
    int exit_code_;
    std::string text_;
};

/// args excludes the program name.
CommandPlan parse_args(const std::vector<std::string> &args);

struct RunOutcome {
    int exit_code = 0;
    std::string report;
};

/// Executes a plan. Exit 0 on success, 1 on domain errors, 3 on IO errors,
/// 4 on malformed input files; the report (or error record) is always filled.
RunOutcome run(const CommandPlan &plan);

/// Full front end: parse, run, write the report to stdout or --output.
int main_entry(int argc, char **argv);

}  // namespace sqkc::cli
