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

#include <cmath>

#include "sqkc/fock.hpp"
#include "sqkc/random.hpp"
#include "test_util.hpp"

namespace sqkc {
namespace {

using testing::qs;

const double kRoot2 = 1.0 / std::sqrt(2.0);

TEST(BitString, basics) {
    EXPECT_EQ(BitString().size(), 0u);
    EXPECT_EQ(BitString::from_token("eps"), BitString());
    EXPECT_EQ(BitString("0110").size(), 4u);
    EXPECT_EQ(BitString().token(), "eps");
    EXPECT_EQ(BitString::from_natural(0).str(), "0");
    EXPECT_EQ(BitString::from_natural(1).str(), "1");
    EXPECT_EQ(BitString::from_natural(6).str(), "110");
    EXPECT_EQ(BitString::from_index(5, 4).str(), "0101");
    EXPECT_EQ(BitString::repeat('0', 20).size(), 20u);
    EXPECT_TRUE(BitString("01").is_prefix_of(BitString("011")));
    EXPECT_FALSE(BitString("011").is_prefix_of(BitString("01")));
    EXPECT_TRUE(BitString() < BitString("1"));
    EXPECT_TRUE(BitString("1") < BitString("00"));
}

TEST(BitString, errors) {
    EXPECT_SQKC_ERROR(BitString("012"), InvalidBitString);
    EXPECT_SQKC_ERROR(BitString("11111", 4), LengthCapExceeded);
}

TEST(MakeQString, examples) {
    EXPECT_EQ(make_qstring({{"0", kRoot2}, {"111", kRoot2}}).size(), 2u);
    EXPECT_EQ(make_qstring({{"0", 1.0}}).size(), 1u);
    EXPECT_SQKC_ERROR(make_qstring({{"0", 0.6}, {"1", 0.6}}), NotNormalized);
}

TEST(MakeQString, errors_and_normalize_flag) {
    EXPECT_SQKC_ERROR(make_qstring({}), EmptyState);
    EXPECT_SQKC_ERROR(make_qstring({{"0", 0.6}, {"0", 0.8}}), DuplicateKey);
    const QString s = make_qstring({{"0", 3.0}, {"1", 4.0}}, true);
    EXPECT_NEAR(std::abs(s.amplitude("0")), 0.6, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude("1")), 0.8, 1e-12);
    EXPECT_EQ(s.amplitude("11"), Complex(0.0));
}

TEST(MakeQString, canonical_term_order) {
    const QString s = qs({{"11", 0.6}, {"0", 0.8}});
    EXPECT_EQ(s.terms()[0].key.str(), "0");
    EXPECT_EQ(s.terms()[1].key.str(), "11");
}

TEST(AverageLength, examples) {
    EXPECT_EQ(average_length(qs({{"eps", 1.0}})), 0.0);
    EXPECT_NEAR(average_length(qs({{"0", 0.6}, {"11", 0.8}})), 1.64, 1e-12);
    EXPECT_NEAR(average_length(qs({{"0", kRoot2}, {"111", kRoot2}})), 2.0, 1e-12);
}

TEST(BaseLength, examples) {
    EXPECT_EQ(base_length(qs({{"eps", 1.0}})), 0u);
    EXPECT_EQ(base_length(qs({{"0", 0.6}, {"11", 0.8}})), 2u);
    EXPECT_EQ(base_length(qs({{"0", kRoot2}, {"10110", kRoot2}})), 5u);
}

TEST(PairEncode, examples) {
    EXPECT_EQ(pair_encode("110", "1000").str(), "11101101000");
    EXPECT_EQ(pair_encode(BitString(), "1").str(), "01");
    const auto [x, y] = pair_decode("11101101000");
    EXPECT_EQ(x.str(), "110");
    EXPECT_EQ(y.str(), "1000");
}

TEST(PairEncode, errors) {
    EXPECT_SQKC_ERROR(pair_encode("111", "1", 7), LengthCapExceeded);
    EXPECT_EQ(pair_encode("111", "1", 8).size(), 8u);
    EXPECT_SQKC_ERROR(pair_decode("111"), InvalidBitString);
    EXPECT_SQKC_ERROR(pair_decode("1101"), InvalidBitString);
}

TEST(PairEncode, exhaustive_roundtrip_up_to_length_8) {
    std::vector<BitString> all;
    for (std::size_t len = 0; len <= 8; ++len) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
            all.push_back(BitString::from_index(i, len));
        }
    }
    std::size_t failures = 0;
    for (const auto &x : all) {
        for (const auto &y : all) {
            const BitString z = pair_encode(x, y);
            const auto back = pair_decode(z);
            failures += !(back.first == x && back.second == y && z.size() == 2 * x.size() + 1 + y.size());
        }
    }
    EXPECT_EQ(failures, 0u);
}

TEST(SequenceEncode, right_nested_fold) {
    const std::vector<BitString> xs = {"1", "", "01"};
    const BitString z = sequence_encode(xs);
    EXPECT_EQ(z, pair_encode("1", pair_encode("", "01")));
    EXPECT_EQ(sequence_decode(z, 3), xs);
}

TEST(SelfDelimit, examples) {
    EXPECT_EQ(self_delimit(BitString("101")).str(), "1110101");
    const QString s = self_delimit(qs({{"0", kRoot2}, {"11", kRoot2}}));
    EXPECT_NEAR(std::abs(s.amplitude("100")), kRoot2, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude("11011")), kRoot2, 1e-12);
    EXPECT_NEAR(average_length(s), 4.0, 1e-12);
    EXPECT_EQ(self_delimit(qs({{"eps", 1.0}})).terms()[0].key.str(), "0");
}

TEST(SelfDelimit, length_identity_on_random_states) {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const QString s = random_qstring(rng, 6, 10);
        EXPECT_NEAR(average_length(self_delimit(s)), 2.0 * average_length(s) + 1.0, 1e-9);
        EXPECT_GE(static_cast<double>(base_length(s)), average_length(s) - 1e-12);
    }
}

TEST(SelfDelimit, preserves_inner_products) {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const QString a = random_qstring(rng, 5, 3);
        const QString b = random_qstring(rng, 5, 3);
        EXPECT_NEAR(std::abs(inner_product(self_delimit(a), self_delimit(b)) - inner_product(a, b)), 0.0, 1e-12);
    }
}

TEST(InnerProduct, examples) {
    const QString plus = qs({{"0", kRoot2}, {"1", kRoot2}});
    EXPECT_EQ(inner_product(QString::basis("0"), QString::basis("1")), Complex(0.0));
    EXPECT_NEAR(std::abs(inner_product(plus, plus) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(inner_product(QString::basis("0"), plus).real(), 0.70710678, 1e-8);
}

TEST(InnerProduct, conjugate_symmetric_and_bounded) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const QString a = random_qstring(rng, 6, 3);
        const QString b = random_qstring(rng, 6, 3);
        const Complex ab = inner_product(a, b);
        EXPECT_NEAR(std::abs(ab - std::conj(inner_product(b, a))), 0.0, 1e-12);
        EXPECT_LE(std::abs(ab), 1.0 + 1e-9);
    }
}

TEST(Tensor, concatenates_keys) {
    const QString a = qs({{"0", 0.6}, {"1", 0.8}});
    const QString t = tensor(a, QString::basis("1"));
    EXPECT_NEAR(std::abs(t.amplitude("01")), 0.6, 1e-12);
    EXPECT_NEAR(std::abs(t.amplitude("11")), 0.8, 1e-12);
    EXPECT_EQ(tensor_power(a, 3).size(), 8u);
    EXPECT_SQKC_ERROR(tensor_power(a, 3, 4), CapExceeded);
    // "0"+"01" and "00"+"1" collide.
    EXPECT_SQKC_ERROR(tensor(qs({{"0", 0.6}, {"00", 0.8}}), qs({{"01", 0.6}, {"1", 0.8}})), DuplicateKey);
}

TEST(Pigeonhole, fewer_short_strings_than_strings_of_length_n) {
    for (std::size_t n = 0; n <= 16; ++n) {
        std::uint64_t shorter = 0;
        for (std::size_t len = 0; len < n; ++len) {
            shorter += std::uint64_t{1} << len;
        }
        EXPECT_EQ(shorter, (std::uint64_t{1} << n) - 1);
        EXPECT_LT(shorter, std::uint64_t{1} << n);
    }
}

}  // namespace
}  // namespace sqkc
