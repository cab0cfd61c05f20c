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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqkc {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 20;

/// A finite classical bitstring, possibly empty.
///
/// Ordering is length-then-lexicographic, which is the canonical order used
/// for every serialized state, basis and table in this library.
class BitString {
   public:
    BitString() = default;
    BitString(std::string_view bits, std::size_t cap = kDefaultLengthCap);
    BitString(const char *bits) : BitString(std::string_view(bits)) {
    }

    /// Minimal binary representation of n, with from_natural(0) = "0".
    static BitString from_natural(std::uint64_t n);
    /// n copies of the given bit.
    static BitString repeat(char bit, std::size_t n);
    /// The index-th string of length width in lexicographic order.
    static BitString from_index(std::uint64_t index, std::size_t width);
    /// Parses a bitstring token, accepting "eps" for the empty string.
    static BitString from_token(std::string_view token);

    std::size_t size() const noexcept {
        return bits_.size();
    }
    bool empty() const noexcept {
        return bits_.empty();
    }
    const std::string &str() const noexcept {
        return bits_;
    }
    char operator[](std::size_t i) const {
        return bits_[i];
    }
    /// Serialization token: the bits, or "eps" for the empty string.
    std::string token() const {
        return bits_.empty() ? std::string("eps") : bits_;
    }

    bool is_prefix_of(const BitString &other) const noexcept {
        return bits_.size() <= other.bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
    }
    BitString substr(std::size_t pos, std::size_t count) const;

    friend BitString operator+(const BitString &a, const BitString &b);
    friend bool operator==(const BitString &a, const BitString &b) = default;
    friend std::strong_ordering operator<=>(const BitString &a, const BitString &b) {
        if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) {
            return c;
        }
        return a.bits_.compare(b.bits_) <=> 0;
    }

   private:
    std::string bits_;
};

struct Term {
    BitString key;
    Complex amplitude;
};

/// A normalized superposition of bitstrings of possibly different lengths.
/// Terms are distinct, nonzero and kept in canonical key order.
class QString {
   public:
    /// |key>
    static QString basis(const BitString &key);

    const std::vector<Term> &terms() const noexcept {
        return terms_;
    }
    std::size_t size() const noexcept {
        return terms_.size();
    }
    /// Amplitude of key, zero when absent.
    Complex amplitude(const BitString &key) const;

   private:
    friend QString make_qstring(std::vector<Term> terms, bool normalize);
    friend QString collect_qstring(const std::map<BitString, Complex> &amplitudes, bool normalize);
    explicit QString(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {
    }

    std::vector<Term> terms_;
};

/// Builds a QString. Exact-zero amplitudes are dropped. Without normalize the
/// squared norm must be within kNormTolerance of 1.
QString make_qstring(std::vector<Term> terms, bool normalize = false);

/// Builds a QString from a linear combination; amplitudes at or below
/// kAmplitudeFloor are dropped before the norm check.
QString collect_qstring(const std::map<BitString, Complex> &amplitudes, bool normalize = false);

/// Sum of |a_i|^2 l(i).
double average_length(const QString &s);

/// Longest basis string carrying nonzero amplitude.
std::size_t base_length(const QString &s);

/// 1^{l(x)} 0 x y
BitString pair_encode(const BitString &x, const BitString &y, std::size_t cap = kDefaultLengthCap);
std::pair<BitString, BitString> pair_decode(const BitString &z);

/// Right-nested fold (x1, (x2, (... (x_{m-1}, x_m)))).
BitString sequence_encode(const std::vector<BitString> &xs, std::size_t cap = kDefaultLengthCap);
std::vector<BitString> sequence_decode(const BitString &z, std::size_t count);

/// x -> 1^{l(x)} 0 x
BitString self_delimit(const BitString &x, std::size_t cap = kDefaultLengthCap);
/// Linear extension of the bitstring map; average length becomes 2 l + 1.
QString self_delimit(const QString &s, std::size_t cap = kDefaultLengthCap);

/// <a|b>, antilinear in a.
Complex inner_product(const QString &a, const QString &b);

/// |a> (x) |b>, keys concatenated. Concatenations that collide (possible when
/// lengths vary) are rejected with DuplicateKey.
QString tensor(const QString &a, const QString &b, std::size_t max_terms = kDefaultLengthCap);
QString tensor_power(const QString &s, std::size_t n, std::size_t max_terms = kDefaultLengthCap);

}  // namespace sqkc
