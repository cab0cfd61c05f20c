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

#include "sqkc/experiments.hpp"
#include "sqkc/qcode.hpp"
#include "sqkc/random.hpp"
#include "test_util.hpp"

namespace sqkc {
namespace {

using testing::diag;
using testing::pure;
using testing::qs;

const double kRoot2 = 1.0 / std::sqrt(2.0);

MachineCatalog sd_identity_catalog(std::size_t max_len) {
    return MachineCatalog({identity_machine(max_len).self_delimited()});
}

// Symmetric expansion of n copies of sqrt(a)|1> + sqrt(1-a)|0>, evaluated directly.
struct MultiCopyOracle {
    double z_norm = 0.0;
    double expected_raw = 0.0;
    double expected_normalized = 0.0;
};

MultiCopyOracle multicopy_oracle(double a, std::size_t n) {
    MultiCopyOracle o;
    std::vector<double> p(n + 1), q(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        p[i] = std::pow(a, double(i)) * std::pow(1 - a, double(n - i));
        q[i] = std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0)) * p[i];
        o.z_norm += p[i];
    }
    auto ceil_bits = [](double x) {
        const double bits = -std::log2(x);
        const double r = std::round(bits);
        return std::abs(bits - r) <= 1e-9 ? r : std::ceil(bits);
    };
    for (std::size_t i = 0; i <= n; ++i) {
        o.expected_raw += q[i] * ceil_bits(p[i]);
        o.expected_normalized += q[i] * ceil_bits(p[i] / o.z_norm);
    }
    return o;
}

InequalitySpec subadditivity() {
    return {2, {{{0}, 1.0}, {{1}, 1.0}, {{0, 1}, -1.0}}};
}

InequalitySpec strong_subadditivity() {
    return {3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{1}, -1.0}, {{0, 1, 2}, -1.0}}};
}

TEST(IncompressibilityReport, examples) {
    const QString plus = qs({{"0", kRoot2}, {"1", kRoot2}});
    const QString minus = qs({{"0", kRoot2}, {"1", -kRoot2}});
    const auto four = incompressibility_report({QString::basis("0"), QString::basis("1"), plus, minus},
                                               MachineCatalog({identity_machine(4)}));
    EXPECT_NEAR(four.entropy, 1.0, 1e-12);
    EXPECT_NEAR(four.plain_bound, 0.0, 1e-12);
    EXPECT_NEAR(four.prefix_bound, 1.0, 1e-12);
    EXPECT_FALSE(four.prefix_catalog);
    EXPECT_NEAR(four.applicable_bound, 0.0, 1e-12);
    EXPECT_TRUE(four.verified);

    const auto one = incompressibility_report({QString::basis("0")}, sd_identity_catalog(4));
    EXPECT_NEAR(one.entropy, 0.0, 1e-12);
    EXPECT_LE(one.plain_bound, 0.0);
    EXPECT_LE(one.prefix_bound, 0.0 + 1e-12);
    EXPECT_TRUE(one.verified);

    std::vector<QString> eight;
    for (std::uint64_t i = 0; i < 8; ++i) {
        eight.push_back(QString::basis(BitString::from_index(i, 3)));
    }
    const auto r = incompressibility_report(eight, sd_identity_catalog(4));
    EXPECT_NEAR(r.entropy, 3.0, 1e-12);
    EXPECT_NEAR(r.prefix_bound, 3.0, 1e-12);
    EXPECT_TRUE(r.prefix_catalog);
    EXPECT_NEAR(r.max_description_length, 7.0, 1e-12);
    EXPECT_NEAR(r.max_complexity, 3.0 + 7.0, 1e-12);
    EXPECT_TRUE(r.verified);
}

TEST(IncompressibilityReport, random_families_with_self_delimited_identity) {
    Rng rng(61);
    const MachineCatalog cat = sd_identity_catalog(3);
    const auto basis = qubit_basis(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t size = 2 + trial % 7;
        std::vector<QString> states;
        for (std::size_t i = 0; i < size; ++i) {
            states.push_back(random_orthonormal_family(rng, basis, 1)[0]);
        }
        const auto r = incompressibility_report(states, cat);
        EXPECT_TRUE(r.verified);
        EXPECT_GE(r.max_complexity, r.prefix_bound - 1e-7);
        EXPECT_GE(r.max_description_length, (r.entropy - 1.0) / 2.0 - 1e-7);
    }
}

TEST(IncompressibilityReport, no_describer) {
    EXPECT_SQKC_ERROR(incompressibility_report({QString::basis("0000")}, sd_identity_catalog(2)), NoDescriber);
}

TEST(MultiCopyReport, examples) {
    const MultiCopyReport three = multicopy_report(0.5, 3);
    EXPECT_NEAR(three.z_norm, 0.5, 1e-15);
    EXPECT_EQ(three.normalized_lengths, (std::vector<std::size_t>{2, 2, 2, 2}));
    EXPECT_EQ(three.expected_normalized, 2.0);
    EXPECT_EQ(three.naive, 3u);

    const MultiCopyReport one = multicopy_report(0.5, 1);
    EXPECT_EQ(one.expected_normalized, 1.0);
    EXPECT_EQ(one.naive, 1u);

    const MultiCopyReport r = multicopy_report(0.9, 20);
    const MultiCopyOracle o = multicopy_oracle(0.9, 20);
    const double nh = 20 * shannon_entropy(std::vector<double>{0.9, 0.1});
    EXPECT_NEAR(r.z_norm, o.z_norm, 1e-12);
    EXPECT_NEAR(r.expected_raw, o.expected_raw, 1e-9);
    EXPECT_NEAR(r.expected_normalized, o.expected_normalized, 1e-9);
    EXPECT_GE(r.expected_raw, nh - 1e-9);
    EXPECT_LE(r.expected_raw, nh + 1.0);
    EXPECT_LT(r.expected_normalized, r.expected_raw);
}

TEST(MultiCopyReport, grid_properties) {
    for (int ai = 1; ai <= 9; ++ai) {
        const double a = ai / 10.0;
        for (std::size_t n = 1; n <= 60; ++n) {
            const MultiCopyReport r = multicopy_report(a, n);
            double total = 0.0;
            for (double w : r.weights) {
                total += w;
            }
            EXPECT_NEAR(total, 1.0, 1e-9);
            EXPECT_LE(kraft_sum(r.raw_lengths), 1.0 + 1e-12);
            EXPECT_LE(r.expected_normalized, r.expected_raw + 1e-12);
            EXPECT_LE(r.z_norm, 1.0 + 1e-12);
            const MultiCopyOracle o = multicopy_oracle(a, n);
            EXPECT_NEAR(r.expected_raw, o.expected_raw, 1e-8);
            EXPECT_NEAR(r.expected_normalized, o.expected_normalized, 1e-8);
        }
    }
}

TEST(MultiCopyReport, uniform_case_is_log_of_n_plus_one) {
    for (std::size_t n = 1; n <= 60; ++n) {
        const MultiCopyReport r = multicopy_report(0.5, n);
        const double target = std::log2(double(n + 1));
        EXPECT_GE(r.expected_normalized, target - 1e-12);
        EXPECT_LE(r.expected_normalized, target + 1.0);
    }
}

TEST(MultiCopyReport, errors) {
    EXPECT_SQKC_ERROR(multicopy_report(0.0, 3), InvalidAmplitude);
    EXPECT_SQKC_ERROR(multicopy_report(1.0, 3), InvalidAmplitude);
    EXPECT_SQKC_ERROR(multicopy_report(1.5, 3), InvalidAmplitude);
    EXPECT_SQKC_ERROR(multicopy_report(0.5, 0), CapExceeded);
    EXPECT_SQKC_ERROR(multicopy_report(0.5, 61), CapExceeded);
}

TEST(PhiState, average_length) {
    for (std::uint64_t n : {1u, 2u, 7u, 100u, 65535u}) {
        const double expected = (1.0 + double(BitString::from_natural(n).size())) / 2.0;
        EXPECT_NEAR(average_length(phi_state(n, +1)), expected, 1e-12);
        EXPECT_NEAR(std::abs(inner_product(phi_state(n, +1), phi_state(n, -1))), 0.0, 1e-12);
    }
}

TEST(NonAdditivitySearch, block_four_on_self_delimited_identity) {
    const MachineCatalog cat = sd_identity_catalog(12);
    const auto r = nonadditivity_search(4, cat, 1.0);
    EXPECT_GE(r.n, 16u);
    EXPECT_LT(r.n, 32u);
    EXPECT_GE(r.qk_n, 4.0);
    // Closed forms for the self-delimited identity at index 1 (cost 3).
    const double l_n = double(BitString::from_natural(r.n).size());
    EXPECT_NEAR(r.qk_n, 3 + 2 * l_n + 1, 1e-12);
    EXPECT_NEAR(r.phi_mean, 3 + (1 + l_n) + 1, 1e-12);
    EXPECT_NEAR(r.qk_zero, 3 + 2 + 1, 1e-12);
    EXPECT_NEAR(r.gap_greater, r.qk_n - r.phi_mean, 1e-12);
    EXPECT_NEAR(r.gap_less, r.phi_mean - r.qk_zero, 1e-12);
    EXPECT_TRUE(r.greater_found);
    EXPECT_TRUE(r.less_found);
    EXPECT_NEAR(r.avg_length_phi, (1 + l_n) / 2, 1e-12);
}

TEST(NonAdditivitySearch, witnesses_at_small_parameters) {
    const MachineCatalog cat = sd_identity_catalog(16);
    bool greater = false;
    for (std::size_t m = 1; m <= 12 && !greater; ++m) {
        greater = nonadditivity_search(m, cat, 1.0).greater_found;
    }
    EXPECT_TRUE(greater);
    const auto scan = scan_less_witness(cat, 1.0, 1u << 16);
    EXPECT_TRUE(scan.less_found);
    EXPECT_GT(scan.gap_less, 1.0);
    EXPECT_LE(scan.n, 1u << 16);
}

TEST(NonAdditivitySearch, gap_equal_to_k_is_not_a_witness) {
    // m_block = 1: l(n) = 2, so QK(n) - mean QK(phi) = (3 + 5) - (3 + 3 + 1) = 1 exactly.
    const auto r = nonadditivity_search(1, sd_identity_catalog(4), 1.0);
    EXPECT_NEAR(r.gap_greater, 1.0, 1e-12);
    EXPECT_FALSE(r.greater_found);
    EXPECT_TRUE(nonadditivity_search(1, sd_identity_catalog(4), 0.5).greater_found);
}

TEST(NonAdditivitySearch, errors) {
    EXPECT_SQKC_ERROR(nonadditivity_search(3, MachineCatalog({identity_machine(8)}), 1.0), NotPrefixFree);
    EXPECT_SQKC_ERROR(nonadditivity_search(25, sd_identity_catalog(20), 1.0), BlockTooLargeForCatalog);
    EXPECT_SQKC_ERROR(nonadditivity_search(4, sd_identity_catalog(3), 1.0), BlockTooLargeForCatalog);
}

TEST(EntropySandwich, examples) {
    const Ensemble dyadic({{0.5, QString::basis("00")}, {0.25, QString::basis("01")}, {0.25, QString::basis("10")}});
    MachineCatalog cat;
    cat.add(DescriberMachine::from_code(sw_lossless_code(density_from_ensemble(dyadic)).code));
    const auto r = entropy_sandwich_report(dyadic, cat, std::size_t{1});
    EXPECT_NEAR(r.entropy, 1.5, 1e-12);
    EXPECT_NEAR(r.expected_complexity, 1.5 + 3.0, 1e-12);
    EXPECT_NEAR(r.overhead, 3.0, 1e-12);
    EXPECT_TRUE(r.lower_holds);
    EXPECT_TRUE(*r.upper_holds);

    const QString psi = qs({{"0", 0.6}, {"11", 0.8}});
    const auto p = entropy_sandwich_report(Ensemble({{1.0, psi}}), sd_identity_catalog(4));
    EXPECT_NEAR(p.entropy, 0.0, 1e-12);
    EXPECT_NEAR(p.expected_complexity, 3 + 2 * 1.64 + 1, 1e-12);
    EXPECT_FALSE(p.upper_bound.has_value());

    const auto u = entropy_sandwich_report(Ensemble::uniform({QString::basis("0"), QString::basis("1")}),
                                           sd_identity_catalog(4));
    EXPECT_NEAR(u.entropy, 1.0, 1e-12);
    EXPECT_GE(u.expected_complexity, 1.0);
    EXPECT_TRUE(u.lower_holds);
}

TEST(EntropySandwich, random_ensembles_with_sw_machine) {
    Rng rng(62);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityOperator rho = ginibre_density(rng, 2 + trial % 5);
        const SwCode sw = sw_lossless_code(rho);
        std::vector<EnsembleEntry> entries;
        for (std::size_t k = 0; k < sw.eigenvalues.size(); ++k) {
            entries.push_back({sw.eigenvalues[k], sw.code.source_basis()[k]});
        }
        const Ensemble e(entries);
        MachineCatalog cat;
        cat.add(DescriberMachine::from_code(sw.code));
        cat.add(identity_machine(3).self_delimited());
        const auto r = entropy_sandwich_report(e, cat, std::size_t{1});
        EXPECT_TRUE(r.lower_holds);
        EXPECT_TRUE(*r.upper_holds);
    }
}

TEST(InequalityCheck, examples) {
    const DensityOperator bell = expand_to_basis(pure(qs({{"00", kRoot2}, {"11", kRoot2}})), qubit_basis(2));
    const InequalityResult r = inequality_check(subadditivity(), bell, {2, 2});
    EXPECT_NEAR(r.value, 2.0, 1e-9);

    Rng rng(63);
    const DensityOperator a = ginibre_density(rng, 2);
    const DensityOperator b = ginibre_density(rng, 2);
    EXPECT_NEAR(inequality_check(subadditivity(), tensor_product(a, b), {2, 2}).value, 0.0, 1e-9);
    const InequalityResult prod = inequality_check_product(subadditivity(), {a, b});
    EXPECT_NEAR(prod.value, 0.0, 1e-12);
    EXPECT_TRUE(prod.paths_agree);

    double worst = 1.0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        worst = std::min(worst, inequality_check(strong_subadditivity(), random_density(8, seed), {2, 2, 2}).value);
    }
    EXPECT_GE(worst, -1e-7);
}

TEST(InequalityCheck, product_mode_equals_sum_of_parts) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::vector<DensityOperator> factors = {random_density(2, 3 * seed), random_density(3, 3 * seed + 1),
                                                      random_density(2, 3 * seed + 2)};
        std::vector<double> s;
        for (const auto &f : factors) {
            s.push_back(von_neumann_entropy(f));
        }
        const InequalityResult r = inequality_check_product(strong_subadditivity(), factors);
        const double formula = (s[0] + s[1]) + (s[1] + s[2]) - s[1] - (s[0] + s[1] + s[2]);
        EXPECT_NEAR(r.value, formula, 1e-9);
        ASSERT_TRUE(r.joint_value.has_value());
        EXPECT_NEAR(*r.joint_value, r.value, 1e-9);
        EXPECT_TRUE(r.paths_agree);
    }
}

TEST(InequalityCheck, errors) {
    EXPECT_SQKC_ERROR(InequalitySpec({2, {}}).validate(), InvalidInequality);
    EXPECT_SQKC_ERROR(InequalitySpec({2, {{{0}, 1.0}, {{0}, 1.0}}}).validate(), InvalidInequality);
    EXPECT_SQKC_ERROR(InequalitySpec({2, {{{2}, 1.0}}}).validate(), InvalidInequality);
    EXPECT_SQKC_ERROR(InequalitySpec({2, {{{}, 1.0}}}).validate(), InvalidInequality);
    EXPECT_SQKC_ERROR(inequality_check(subadditivity(), random_density(4, 1), {2, 3}), DimensionMismatch);
    EXPECT_SQKC_ERROR(inequality_check_product(subadditivity(), {random_density(2, 1)}), DimensionMismatch);
}

TEST(RandomDensity, examples) {
    const DensityOperator a = random_density(2, 7);
    EXPECT_NEAR(a.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(eig_hermitian(a).eigenvalues.back(), -1e-9);
    EXPECT_TRUE(random_density(2, 7).matrix() == a.matrix());
    EXPECT_FALSE(random_density(2, 8).matrix() == a.matrix());
    EXPECT_SQKC_ERROR(random_density(1, 0), DimOutOfRange);
    EXPECT_SQKC_ERROR(random_density(65, 0), DimOutOfRange);
    EXPECT_EQ(random_density(64, 0).dimension(), 64u);
}

TEST(RandomDensity, monte_carlo_mean_is_maximally_mixed) {
    Matrix mean(4, 4);
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
        const DensityOperator rho = random_density(4, static_cast<std::uint64_t>(s));
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                mean(r, c) += rho.matrix()(r, c) / double(samples);
            }
        }
    }
    Matrix target = Matrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) {
        target(i, i) = 0.25;
    }
    EXPECT_LT(max_abs(mean - target), 0.02);
}

}  // namespace
}  // namespace sqkc
