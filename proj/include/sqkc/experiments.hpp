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
#include <cstdint>
#include <optional>
#include <vector>

#include "sqkc/complexity.hpp"
#include "sqkc/linalg.hpp"

namespace sqkc {

// ---------------------------------------------------------------------------
// Incompressibility
// ---------------------------------------------------------------------------

struct IncompressibilityReport {
    double entropy = 0.0;
    /// (S - 1) / 2, for catalogs with non-prefix machines.
    double plain_bound = 0.0;
    /// S, for all-prefix catalogs.
    double prefix_bound = 0.0;
    bool prefix_catalog = false;
    double applicable_bound = 0.0;
    std::vector<ComplexityEstimate> per_state;
    double max_complexity = 0.0;
    /// Largest program-only average length (index cost excluded).
    double max_description_length = 0.0;
    bool verified = false;
};

/// Tolerance for the incompressibility and sandwich bound comparisons.
inline constexpr double kBoundTolerance = 1e-7;

/// Catalog complexities of every state against the bound for the uniform mixture.
IncompressibilityReport incompressibility_report(const std::vector<QString> &states, const MachineCatalog &cat);

// ---------------------------------------------------------------------------
// Multiple copies of a qubit
// ---------------------------------------------------------------------------

/// Symmetric expansion of (a|0> + b|1>)^{(x)n}: component i holds the strings
/// with i zeros and has weight Q(i) = C(n,i) |a|^{2i} |b|^{2(n-i)}.
///
/// The literal distribution P(i) = |a|^{2i} |b|^{2(n-i)} does not sum to one;
/// z_norm is its total. Raw lengths use P directly, normalized lengths use P / z_norm.
struct MultiCopyReport {
    double alpha2 = 0.0;
    std::size_t n = 0;
    double z_norm = 0.0;
    std::vector<double> weights;
    std::vector<std::size_t> raw_lengths;
    std::vector<std::size_t> normalized_lengths;
    double expected_raw = 0.0;
    double expected_normalized = 0.0;
    double raw_kraft = 0.0;
    double normalized_entropy = 0.0;
    std::size_t naive = 0;
};

/// InvalidAmplitude unless 0 < alpha2 < 1; CapExceeded unless 1 <= n <= 60.
MultiCopyReport multicopy_report(double alpha2, std::size_t n);

// ---------------------------------------------------------------------------
// Non-additivity of superpositions
// ---------------------------------------------------------------------------

/// (|0> + sign |n>) / sqrt(2), with |n> the minimal binary representation.
QString phi_state(std::uint64_t n, int sign);

struct NonAdditivityReport {
    std::size_t m_block = 0;
    double k = 0.0;
    std::uint64_t n = 0;
    double qk_n = 0.0;
    double qk_phi_plus = 0.0;
    double qk_phi_minus = 0.0;
    double phi_mean = 0.0;
    double avg_length_phi = 0.0;
    /// qk_n - phi_mean
    double gap_greater = 0.0;
    bool greater_found = false;
    double qk_zero = 0.0;
    /// phi_mean - qk_zero
    double gap_less = 0.0;
    bool less_found = false;
};

/// Finds the hardest |n> with 2^m <= n < 2^{m+1} (lowest n on ties) and
/// compares it with the mean complexity of its two halves phi_n^{+-}; also
/// compares |0> with the same mean. Requires a prefix-free catalog spanning
/// every |n> with n < 2^{m+1}, else BlockTooLargeForCatalog.
NonAdditivityReport nonadditivity_search(std::size_t m_block, const MachineCatalog &cat, double k);

/// Smallest n in 1..n_max whose phi mean exceeds QK(|0>) by more than k.
/// less_found is false when none does.
NonAdditivityReport scan_less_witness(const MachineCatalog &cat, double k, std::uint64_t n_max);

// ---------------------------------------------------------------------------
// Entropy sandwich
// ---------------------------------------------------------------------------

struct SandwichReport {
    double entropy = 0.0;
    double expected_complexity = 0.0;
    std::vector<ComplexityEstimate> per_member;
    /// Largest index cost among the witnessing machines.
    double overhead = 0.0;
    std::optional<std::size_t> sw_index;
    bool lower_holds = false;
    /// S + 1 + index_cost(sw_index), when the SW machine is named.
    std::optional<double> upper_bound;
    std::optional<bool> upper_holds;
};

/// S(rho_e) <= sum p_i QK(psi_i) <= S(rho_e) + 1 + c. sw_index names the
/// 1-based position of the lossless code machine of rho_e, when present.
SandwichReport entropy_sandwich_report(const Ensemble &e, const MachineCatalog &cat,
                                       std::optional<std::size_t> sw_index = std::nullopt);

// ---------------------------------------------------------------------------
// Linear entropy inequalities
// ---------------------------------------------------------------------------

struct InequalityTerm {
    std::vector<std::size_t> subset;  // 0-based party indices
    double coefficient;
};

/// sum_W lambda_W S(rho^W) >= 0 over parties 0..n_parties-1.
struct InequalitySpec {
    std::size_t n_parties = 0;
    std::vector<InequalityTerm> terms;

    /// InvalidInequality for empty/repeated subsets, bad indices or no terms.
    void validate() const;
};

struct InequalityResult {
    double value = 0.0;
    std::vector<double> term_entropies;
    /// Product mode: the value recomputed through the joint operator.
    std::optional<double> joint_value;
    bool paths_agree = true;
};

/// Joint mode: marginals by partial trace.
InequalityResult inequality_check(const InequalitySpec &spec, const DensityOperator &rho,
                                  const std::vector<std::size_t> &dims);

/// Product mode: S(rho^W) = sum_{i in W} S(rho_i). When the product fits the
/// dimension cap the joint path is evaluated as well and must agree within 1e-9.
InequalityResult inequality_check_product(const InequalitySpec &spec, const std::vector<DensityOperator> &factors);

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Ginibre density over index_basis(dim); 2 <= dim <= 64 else DimOutOfRange.
DensityOperator random_density(std::size_t dim, std::uint64_t seed);

}  // namespace sqkc
