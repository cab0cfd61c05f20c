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

#include "sqkc/codes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sqkc/error.hpp"
#include "sqkc/linalg.hpp"
#include "sqkc/numeric.hpp"

namespace sqkc {

bool is_prefix_free(std::span<const BitString> words) {
    std::vector<std::string> sorted;
    sorted.reserve(words.size());
    for (const auto &w : words) {
        sorted.push_back(w.str());
    }
    // In plain lexicographic order a prefix sorts immediately before some extension of it.
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].compare(0, sorted[i - 1].size(), sorted[i - 1]) == 0) {
            return false;
        }
    }
    return true;
}

PrefixCode::PrefixCode(std::vector<BitString> codewords) : codewords_(std::move(codewords)) {
    if (!is_prefix_free(codewords_)) {
        throw Error(ErrorKind::NotPrefixFree, "codeword table is not prefix-free");
    }
}

std::vector<std::size_t> PrefixCode::lengths() const {
    std::vector<std::size_t> out;
    out.reserve(codewords_.size());
    for (const auto &w : codewords_) {
        out.push_back(w.size());
    }
    return out;
}

namespace {

// Kraft sum in units of 2^-60, exact; lengths above 60 are returned separately.
unsigned __int128 dyadic_kraft(std::span<const std::size_t> lengths, double &tail) {
    unsigned __int128 acc = 0;
    tail = 0.0;
    for (std::size_t l : lengths) {
        if (l <= 60) {
            acc += static_cast<unsigned __int128>(1) << (60 - l);
        } else {
            tail += std::ldexp(1.0, -static_cast<int>(l));
        }
    }
    return acc;
}

constexpr unsigned __int128 kDyadicOne = static_cast<unsigned __int128>(1) << 60;

}  // namespace

double kraft_sum(std::span<const std::size_t> lengths) {
    double tail = 0.0;
    const unsigned __int128 acc = dyadic_kraft(lengths, tail);
    const auto whole = static_cast<std::uint64_t>(acc >> 60);
    const auto frac = static_cast<std::uint64_t>(acc & (kDyadicOne - 1));
    return static_cast<double>(whole) + std::ldexp(static_cast<double>(frac), -60) + tail;
}

PrefixCode canonical_code(std::span<const std::size_t> lengths) {
    double tail = 0.0;
    const unsigned __int128 acc = dyadic_kraft(lengths, tail);
    if (acc > kDyadicOne || (acc == kDyadicOne && tail > 0.0)) {
        throw Error(ErrorKind::NotPrefixFree, "lengths violate Kraft's inequality");
    }
    for (std::size_t l : lengths) {
        if (l > 63) {
            throw Error(ErrorKind::LengthCapExceeded, "codeword length " + std::to_string(l) + " exceeds 63");
        }
    }
    std::vector<std::size_t> order(lengths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

    std::vector<BitString> words(lengths.size());
    std::uint64_t code = 0;
    std::size_t prev_len = 0;
    bool first = true;
    for (std::size_t idx : order) {
        const std::size_t len = lengths[idx];
        if (first) {
            code = 0;
            first = false;
        } else {
            code = (code + 1) << (len - prev_len);
        }
        prev_len = len;
        words[idx] = BitString::from_index(code, len);
    }
    return PrefixCode(std::move(words));
}

PrefixCode shannon_code(std::span<const double> p) {
    if (p.empty()) {
        throw Error(ErrorKind::InvalidDistribution, "empty probability vector");
    }
    double total = 0.0;
    for (double x : p) {
        if (!(x >= kMinCodeProbability)) {
            throw Error(ErrorKind::InvalidDistribution,
                        "probability " + std::to_string(x) + " is below the 1e-15 floor");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
    }
    std::vector<std::size_t> lengths;
    lengths.reserve(p.size());
    for (double x : p) {
        lengths.push_back(static_cast<std::size_t>(std::max(0, ceil_neg_log2(x))));
    }
    double tail = 0.0;
    if (dyadic_kraft(lengths, tail) > kDyadicOne) {
        // Snapping pulled a length below the true ceiling; fall back to plain ceilings.
        for (std::size_t i = 0; i < p.size(); ++i) {
            lengths[i] = static_cast<std::size_t>(std::max(0.0, std::ceil(-std::log2(p[i]))));
        }
    }
    return canonical_code(lengths);
}

double expected_length(const PrefixCode &code, std::span<const double> p) {
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) {
            continue;
        }
        if (i >= code.size()) {
            throw Error(ErrorKind::MissingCodeword, "no codeword for symbol " + std::to_string(i));
        }
        total += p[i] * static_cast<double>(code.codewords()[i].size());
    }
    return total;
}

std::string format_code_table(const PrefixCode &code) {
    std::string out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        out += std::to_string(i) + " " + code.codewords()[i].token() + "\n";
    }
    return out;
}

}  // namespace sqkc
