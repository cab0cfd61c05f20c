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

#include "sqkc/fock.hpp"

#include <algorithm>
#include <cmath>

#include "sqkc/error.hpp"
#include "sqkc/numeric.hpp"

namespace sqkc {

BitString::BitString(std::string_view bits, std::size_t cap) : bits_(bits) {
    if (bits_.size() > cap) {
        throw Error(ErrorKind::LengthCapExceeded,
                    "bitstring of length " + std::to_string(bits_.size()) + " exceeds cap " + std::to_string(cap));
    }
    for (char c : bits_) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::InvalidBitString, "'" + std::string(bits) + "' is not a bitstring");
        }
    }
}

BitString BitString::from_natural(std::uint64_t n) {
    std::string bits(static_cast<std::size_t>(binary_length(n)), '0');
    for (auto it = bits.rbegin(); it != bits.rend(); ++it, n >>= 1) {
        *it = (n & 1) ? '1' : '0';
    }
    return BitString(bits);
}

BitString BitString::repeat(char bit, std::size_t n) {
    return BitString(std::string(n, bit));
}

BitString BitString::from_index(std::uint64_t index, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        if ((index >> k) & 1) {
            bits[width - 1 - k] = '1';
        }
    }
    return BitString(bits);
}

BitString BitString::from_token(std::string_view token) {
    if (token == "eps") {
        return BitString();
    }
    return BitString(token);
}

BitString BitString::substr(std::size_t pos, std::size_t count) const {
    BitString out;
    out.bits_ = bits_.substr(pos, count);
    return out;
}

BitString operator+(const BitString &a, const BitString &b) {
    BitString out;
    out.bits_.reserve(a.size() + b.size());
    out.bits_ = a.bits_;
    out.bits_ += b.bits_;
    return out;
}

QString QString::basis(const BitString &key) {
    return QString({Term{key, Complex(1.0, 0.0)}});
}

Complex QString::amplitude(const BitString &key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term &t, const BitString &k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) {
        return it->amplitude;
    }
    return {};
}

namespace {

void finish_terms(std::vector<Term> &terms, bool normalize) {
    if (terms.empty()) {
        throw Error(ErrorKind::EmptyState, "a quantum string needs at least one term");
    }
    double norm2 = 0.0;
    for (const auto &t : terms) {
        norm2 += std::norm(t.amplitude);
    }
    if (normalize) {
        if (!(norm2 > 0.0)) {
            throw Error(ErrorKind::NotNormalized, "cannot normalize a zero vector");
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto &t : terms) {
            t.amplitude *= scale;
        }
    } else if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw Error(ErrorKind::NotNormalized, "squared norm is " + std::to_string(norm2));
    }
}

}  // namespace

QString make_qstring(std::vector<Term> terms, bool normalize) {
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.key < b.key; });
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].key == terms[i - 1].key) {
            throw Error(ErrorKind::DuplicateKey, "basis string '" + terms[i].key.token() + "' appears twice");
        }
    }
    if (terms.empty()) {
        throw Error(ErrorKind::EmptyState, "a quantum string needs at least one term");
    }
    std::erase_if(terms, [](const Term &t) { return t.amplitude == Complex(0.0, 0.0); });
    finish_terms(terms, normalize);
    return QString(std::move(terms));
}

QString collect_qstring(const std::map<BitString, Complex> &amplitudes, bool normalize) {
    std::vector<Term> terms;
    terms.reserve(amplitudes.size());
    for (const auto &[key, amp] : amplitudes) {
        if (std::abs(amp) > kAmplitudeFloor) {
            terms.push_back({key, amp});
        }
    }
    finish_terms(terms, normalize);
    return QString(std::move(terms));
}

double average_length(const QString &s) {
    double total = 0.0;
    for (const auto &t : s.terms()) {
        total += std::norm(t.amplitude) * static_cast<double>(t.key.size());
    }
    return total;
}

std::size_t base_length(const QString &s) {
    // Terms are length-ordered.
    return s.terms().back().key.size();
}

BitString pair_encode(const BitString &x, const BitString &y, std::size_t cap) {
    const std::size_t total = 2 * x.size() + 1 + y.size();
    if (total > cap) {
        throw Error(ErrorKind::LengthCapExceeded, "pair encoding needs " + std::to_string(total) + " bits");
    }
    std::string out(x.size(), '1');
    out += '0';
    out += x.str();
    out += y.str();
    return BitString(out, cap);
}

std::pair<BitString, BitString> pair_decode(const BitString &z) {
    const std::string &bits = z.str();
    std::size_t ones = 0;
    while (ones < bits.size() && bits[ones] == '1') {
        ++ones;
    }
    if (ones == bits.size() || ones + 1 + ones > bits.size()) {
        throw Error(ErrorKind::InvalidBitString, "'" + z.token() + "' is not a pair encoding");
    }
    return {z.substr(ones + 1, ones), z.substr(2 * ones + 1, bits.size() - (2 * ones + 1))};
}

BitString sequence_encode(const std::vector<BitString> &xs, std::size_t cap) {
    if (xs.empty()) {
        throw Error(ErrorKind::EmptyState, "cannot encode an empty sequence");
    }
    BitString acc = xs.back();
    for (auto it = xs.rbegin() + 1; it != xs.rend(); ++it) {
        acc = pair_encode(*it, acc, cap);
    }
    return acc;
}

std::vector<BitString> sequence_decode(const BitString &z, std::size_t count) {
    if (count == 0) {
        throw Error(ErrorKind::EmptyState, "sequence length must be positive");
    }
    std::vector<BitString> out;
    BitString rest = z;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        auto [head, tail] = pair_decode(rest);
        out.push_back(std::move(head));
        rest = std::move(tail);
    }
    out.push_back(std::move(rest));
    return out;
}

BitString self_delimit(const BitString &x, std::size_t cap) {
    return pair_encode(x, BitString(), cap);
}

QString self_delimit(const QString &s, std::size_t cap) {
    std::vector<Term> terms;
    terms.reserve(s.size());
    for (const auto &t : s.terms()) {
        terms.push_back({self_delimit(t.key, cap), t.amplitude});
    }
    // The map is injective, so no renormalization happens here.
    return make_qstring(std::move(terms), false);
}

Complex inner_product(const QString &a, const QString &b) {
    Complex acc{};
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->key < ib->key) {
            ++ia;
        } else if (ib->key < ia->key) {
            ++ib;
        } else {
            acc += std::conj(ia->amplitude) * ib->amplitude;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

QString tensor(const QString &a, const QString &b, std::size_t max_terms) {
    if (a.size() * b.size() > max_terms) {
        throw Error(ErrorKind::CapExceeded, "tensor product would have " + std::to_string(a.size() * b.size()) + " terms");
    }
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            terms.push_back({ta.key + tb.key, ta.amplitude * tb.amplitude});
        }
    }
    return make_qstring(std::move(terms), false);
}

QString tensor_power(const QString &s, std::size_t n, std::size_t max_terms) {
    QString acc = QString::basis(BitString());
    for (std::size_t i = 0; i < n; ++i) {
        acc = tensor(acc, s, max_terms);
    }
    return acc;
}

}  // namespace sqkc
