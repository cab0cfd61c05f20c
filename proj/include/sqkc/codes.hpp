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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sqkc/fock.hpp"

namespace sqkc {

/// Probabilities below this are rejected by shannon_code.
inline constexpr double kMinCodeProbability = 1e-15;

/// Classical prefix-free code; codeword i encodes source symbol i.
class PrefixCode {
   public:
    /// Rejects tables where some codeword is a prefix of (or equal to) another.
    explicit PrefixCode(std::vector<BitString> codewords);

    const std::vector<BitString> &codewords() const noexcept {
        return codewords_;
    }
    std::size_t size() const noexcept {
        return codewords_.size();
    }
    std::vector<std::size_t> lengths() const;

   private:
    std::vector<BitString> codewords_;
};

/// True when no word is a prefix of another (duplicates count as prefixes).
bool is_prefix_free(std::span<const BitString> words);

/// sum 2^{-l_i}; exact dyadic accumulation for lengths up to 60.
double kraft_sum(std::span<const std::size_t> lengths);

/// Canonical prefix code with lengths ceil(-log2 p_i): symbols sorted by
/// (length, index) receive the lexicographically smallest free codeword.
PrefixCode shannon_code(std::span<const double> p);

/// Canonical codewords for given lengths; NotPrefixFree when Kraft exceeds 1.
PrefixCode canonical_code(std::span<const std::size_t> lengths);

/// sum p_i l(w_i); MissingCodeword if a positive p_i has no codeword.
double expected_length(const PrefixCode &code, std::span<const double> p);

/// Table export: one "<index> <codeword>" line per symbol.
std::string format_code_table(const PrefixCode &code);

}  // namespace sqkc
