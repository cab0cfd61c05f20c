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
#include <functional>

#include "sqkc/complexity.hpp"
#include "sqkc/qcode.hpp"
#include "sqkc/random.hpp"
#include "test_util.hpp"

namespace sqkc {
namespace {

using testing::qs;

const double kRoot2 = 1.0 / std::sqrt(2.0);

DescriberMachine zeros_machine() {
    return DescriberMachine::from_table({{"0", QString::basis(BitString::repeat('0', 20))}}, true);
}

double weight_total(const ComplexityEstimate &e) {
    double total = 0.0;
    for (const auto &w : e.decomposition) {
        total += w.weight;
    }
    return total;
}

// A prefix machine with random orthonormal outputs over three qubits.
DescriberMachine random_table_machine(Rng &rng) {
    static const std::vector<std::vector<BitString>> codes = {
        {"0", "1"}, {"0", "10", "11"}, {"00", "01", "10", "110"}, {"1", "01", "001", "0001", "0000"}};
    const auto &words = codes[rng() % codes.size()];
    const auto outputs = random_orthonormal_family(rng, qubit_basis(3), words.size());
    std::vector<Program> programs;
    for (std::size_t i = 0; i < words.size(); ++i) {
        programs.push_back({words[i], outputs[i]});
    }
    return DescriberMachine::from_table(std::move(programs), true);
}

TEST(IndexCost, values_and_monotone) {
    EXPECT_EQ(MachineCatalog::index_cost(1), 3u);
    EXPECT_EQ(MachineCatalog::index_cost(2), 5u);
    EXPECT_EQ(MachineCatalog::index_cost(3), 5u);
    EXPECT_EQ(MachineCatalog::index_cost(4), 7u);
    for (std::size_t i = 1; i < 2000; ++i) {
        EXPECT_LE(MachineCatalog::index_cost(i), MachineCatalog::index_cost(i + 1));
        EXPECT_EQ(MachineCatalog::index_cost(i), 2 * BitString::from_natural(i).size() + 1);
    }
}

TEST(IdentityMachine, examples) {
    EXPECT_EQ(identity_machine(1).program_count(), 3u);
    EXPECT_EQ(identity_machine(2).program_count(), 7u);
    EXPECT_FALSE(identity_machine(2).prefix_free());
    EXPECT_TRUE(identity_machine(2).self_delimited().prefix_free());
    EXPECT_SQKC_ERROR(identity_machine(21), CapExceeded);
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const QString psi = random_qstring(rng, 5, 6);
        EXPECT_NEAR(machine_complexity(identity_machine(6), psi).value, average_length(psi), 1e-12);
    }
}

TEST(DescriberMachine, validation) {
    EXPECT_SQKC_ERROR(DescriberMachine::from_table({{"0", QString::basis("0")}, {"0", QString::basis("1")}}, false),
                      DuplicateKey);
    EXPECT_SQKC_ERROR(DescriberMachine::from_table({{"0", QString::basis("0")}, {"01", QString::basis("1")}}, true),
                      NotPrefixFree);
    EXPECT_SQKC_ERROR(DescriberMachine::from_table(
                          {{"0", QString::basis("0")}, {"1", qs({{"0", kRoot2}, {"1", kRoot2}})}}, true),
                      NotOrthonormal);
    const auto ok = DescriberMachine::from_table({{"0", QString::basis("0")}, {"01", QString::basis("1")}}, false);
    EXPECT_FALSE(ok.prefix_free());
    EXPECT_EQ(ok.program_count(), 2u);
}

TEST(MachineComplexity, examples) {
    const QString psi = qs({{"0", 0.6}, {"11", 0.8}});
    EXPECT_NEAR(machine_complexity(identity_machine(20), psi).value, average_length(psi), 1e-12);
    EXPECT_NEAR(machine_complexity(zeros_machine(), QString::basis(BitString::repeat('0', 20))).value, 1.0, 1e-12);
    const auto m = DescriberMachine::from_table({{"0", QString::basis("0")}, {"10", QString::basis("1010")}}, true);
    const ComplexityEstimate e = machine_complexity(m, qs({{"0", kRoot2}, {"1010", kRoot2}}));
    EXPECT_NEAR(e.value, 1.5, 1e-12);
    EXPECT_NEAR(weight_total(e), 1.0, 1e-12);
    EXPECT_SQKC_ERROR(machine_complexity(m, QString::basis("1")), OutOfSpan);
}

TEST(MachineComplexity, superposed_outputs_force_amplitudes) {
    const QString plus = qs({{"0", kRoot2}, {"1", kRoot2}});
    const QString minus = qs({{"0", kRoot2}, {"1", -kRoot2}});
    const auto m = DescriberMachine::from_table({{"0", plus}, {"10", minus}}, true);
    const ComplexityEstimate e = machine_complexity(m, QString::basis("0"));
    EXPECT_NEAR(e.value, 0.5 * 1 + 0.5 * 2, 1e-12);
    const auto described = m.describe(QString::basis("1"));
    ASSERT_EQ(described.size(), 2u);
    EXPECT_NEAR(std::abs(described[0].amplitude - kRoot2), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(described[1].amplitude + kRoot2), 0.0, 1e-12);
}

TEST(MachineComplexity, self_delimited_identity_doubles_plus_one) {
    Rng rng(52);
    const DescriberMachine sd = identity_machine(8).self_delimited();
    for (int trial = 0; trial < 100; ++trial) {
        const QString psi = random_qstring(rng, 4, 8);
        EXPECT_NEAR(machine_complexity(sd, psi).value, 2.0 * average_length(psi) + 1.0, 1e-12);
    }
    const auto twice = sd.self_delimited();
    EXPECT_EQ(twice.self_delimit_depth(), 2u);
    EXPECT_NEAR(machine_complexity(twice, QString::basis("1")).value, 2.0 * 3 + 1, 1e-12);
}

TEST(UniversalComplexity, examples) {
    const QString zeros = QString::basis(BitString::repeat('0', 20));
    const MachineCatalog cat({identity_machine(20), zeros_machine()});
    const ComplexityEstimate e = universal_complexity(cat, zeros);
    EXPECT_NEAR(e.value, 6.0, 1e-12);
    EXPECT_EQ(e.machine_index, 2u);
    EXPECT_NEAR(e.index_cost, 5.0, 1e-12);

    const QString psi = qs({{"0", 0.6}, {"11", 0.8}});
    const ComplexityEstimate single = universal_complexity(MachineCatalog({identity_machine(20)}), psi);
    EXPECT_NEAR(single.value, 3.0 + 1.64, 1e-12);
    EXPECT_EQ(single.machine_index, 1u);

    const ComplexityEstimate dup = universal_complexity(MachineCatalog({identity_machine(20), identity_machine(20)}), psi);
    EXPECT_NEAR(dup.value, single.value, 1e-12);
    EXPECT_EQ(dup.machine_index, 1u);
}

TEST(UniversalComplexity, errors) {
    EXPECT_SQKC_ERROR(universal_complexity(MachineCatalog(), QString::basis("0")), NoDescriber);
    EXPECT_SQKC_ERROR(universal_complexity(MachineCatalog({zeros_machine()}), QString::basis("0")), NoDescriber);
}

TEST(UniversalComplexity, upper_bound_lemma) {
    Rng rng(53);
    MachineCatalog cat({identity_machine(12)});
    for (int i = 0; i < 3; ++i) {
        cat.add(random_table_machine(rng));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const QString psi = random_qstring(rng, 6, 12);
        const ComplexityEstimate e = universal_complexity(cat, psi);
        EXPECT_LE(e.value, average_length(psi) + 3.0 + 1e-12);
        EXPECT_NEAR(weight_total(e), 1.0, 1e-8);
    }
}

TEST(UniversalComplexity, invariance_and_monotonicity) {
    Rng rng(54);
    for (int trial = 0; trial < 100; ++trial) {
        MachineCatalog small;
        small.add(identity_machine(3).self_delimited());
        const std::size_t extra_small = rng() % 3;
        for (std::size_t i = 0; i < extra_small; ++i) {
            small.add(random_table_machine(rng));
        }
        MachineCatalog large = small;
        const std::size_t extra_large = 1 + rng() % 3;
        for (std::size_t i = 0; i < extra_large; ++i) {
            large.add(random_table_machine(rng));
        }
        for (int s = 0; s < 5; ++s) {
            const QString psi = random_qstring(rng, 4, 3);
            const double a = universal_complexity(small, psi).value;
            const double b = universal_complexity(large, psi).value;
            EXPECT_LE(b, a + 1e-12);
            for (std::size_t i = 0; i < large.size(); ++i) {
                try {
                    const double direct = MachineCatalog::index_cost(i + 1) +
                                          machine_complexity(large.machines()[i], psi).value;
                    EXPECT_LE(b, direct + 1e-12);
                } catch (const Error &e) {
                    EXPECT_EQ(e.kind(), ErrorKind::OutOfSpan);
                }
            }
        }
    }
}

TEST(BaseLengthComplexity, examples) {
    const QString psi = qs({{"0", kRoot2}, {"1010", kRoot2}});
    EXPECT_EQ(base_length_complexity(identity_machine(20), psi), 4u);
    EXPECT_NEAR(machine_complexity(identity_machine(20), psi).value, 2.5, 1e-12);
    EXPECT_EQ(base_length_complexity(zeros_machine(), QString::basis(BitString::repeat('0', 20))), 1u);

    const BitString long_zeros = BitString::repeat('0', 20);
    for (double beta2 : {0.5, 1e-4}) {
        const QString s = make_qstring({{"0", std::sqrt(1 - beta2)}, {long_zeros, std::sqrt(beta2)}});
        EXPECT_EQ(base_length_complexity(identity_machine(20), s), 20u);
        EXPECT_NEAR(machine_complexity(identity_machine(20), s).value, (1 - beta2) * 1 + beta2 * 20, 1e-12);
    }
}

TEST(FidelityPenalizedComplexity, examples) {
    const std::vector<Program> zero_prog = {{"0", QString::basis("0")}};
    for (std::uint64_t n : {1u, 5u, 1000u, 123456u}) {
        const QString psi = make_qstring({{"0", kRoot2}, {BitString::from_natural(n), kRoot2}});
        EXPECT_NEAR(fidelity_penalized_complexity(zero_prog, psi), 2.0, 1e-12);
    }
    EXPECT_NEAR(fidelity_penalized_complexity({{"101", QString::basis("11")}}, QString::basis("11")), 3.0, 1e-12);
    const std::vector<Program> both = {{"0", QString::basis("0")}, {"1", QString::basis("1")}};
    EXPECT_NEAR(fidelity_penalized_complexity(both, qs({{"0", 0.6}, {"1", 0.8}})), 2.0, 1e-12);
    EXPECT_SQKC_ERROR(fidelity_penalized_complexity(zero_prog, QString::basis("1")), NoOverlap);
}

TEST(PrefixIncompressibility, small_exhaustive_tables) {
    // Every prefix-free set of at most three programs of length <= 3.
    std::vector<BitString> words = {BitString()};
    for (std::size_t len = 1; len <= 3; ++len) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
            words.push_back(BitString::from_index(i, len));
        }
    }
    Rng rng(55);
    std::size_t tables = 0;
    std::vector<BitString> set;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (!set.empty()) {
            ++tables;
            const auto outputs = random_orthonormal_family(rng, index_basis(4), set.size());
            std::vector<Program> programs;
            for (std::size_t i = 0; i < set.size(); ++i) {
                programs.push_back({set[i], outputs[i]});
            }
            const auto m = DescriberMachine::from_table(programs, true);
            const auto family = rotate_family(outputs, random_unitary(rng, set.size()));
            double worst = 0.0;
            for (const auto &psi : family) {
                worst = std::max(worst, machine_complexity(m, psi).value);
            }
            const double s = von_neumann_entropy(density_from_ensemble(Ensemble::uniform(family)));
            EXPECT_GE(worst, s - 1e-6);
        }
        if (set.size() == 3) {
            return;
        }
        for (std::size_t i = from; i < words.size(); ++i) {
            set.push_back(words[i]);
            if (is_prefix_free(set)) {
                extend(i + 1);
            }
            set.pop_back();
        }
    };
    extend(0);
    EXPECT_GT(tables, 50u);
}

}  // namespace
}  // namespace sqkc
