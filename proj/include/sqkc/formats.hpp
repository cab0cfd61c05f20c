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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sqkc/complexity.hpp"
#include "sqkc/experiments.hpp"
#include "sqkc/linalg.hpp"

namespace sqkc {

/// Whole-file read; IOError when the file cannot be opened.
std::string read_text_file(const std::filesystem::path &path);

// QSTR: one "<bitstring> <re> <im>" line per term, "eps" for the empty string,
// '#' starts a comment line. Output is canonically ordered with round-trip precision.
std::string format_qstring(const QString &s);
QString parse_qstring(std::string_view text);

// Inline form "{ 0:0.6,0 ; 11:0.8,0 }" used inside ensemble and machine files.
std::string format_inline_qstring(const QString &s);
QString parse_inline_qstring(std::string_view text);

// Ensemble: one "<p> <path-to-QSTR>" or "<p> { ... }" line per member. Paths
// resolve against base_dir. Output lists members inline, ordered by the
// length-then-lexicographic order of their serialized states.
std::string format_ensemble(const Ensemble &e);
Ensemble parse_ensemble(std::string_view text, const std::filesystem::path &base_dir = {});
Ensemble load_ensemble(const std::filesystem::path &path);

// Machine table: a "prefix: true|false" header, then "<program> -> <state>"
// lines where the state is inline or a QSTR path.
struct ProgramTable {
    bool prefix_free = false;
    std::vector<Program> programs;
};
ProgramTable parse_program_table(std::string_view text, const std::filesystem::path &base_dir = {});
ProgramTable load_program_table(const std::filesystem::path &path);
std::string format_program_table(const ProgramTable &table);

// Inequality: "1:1;2:1;1,2:-1", 1-based party lists with coefficients.
InequalitySpec parse_inequality(std::string_view text, std::size_t n_parties);

}  // namespace sqkc
