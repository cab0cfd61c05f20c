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
#include <vector>

#include "sqkc/codes.hpp"
#include "sqkc/linalg.hpp"

namespace sqkc {

/// A variable-length quantum code: prefix-free classical codewords attached to
/// an orthonormal source basis, extended linearly to superpositions.
class CondensableCode {
   public:
    /// NotOrthonormal, NotPrefixFree (via PrefixCode) or ArityMismatch.
    CondensableCode(std::vector<QString> source_basis, PrefixCode words);

    const std::vector<QString> &source_basis() const noexcept {
        return basis_;
    }
    const PrefixCode &words() const noexcept {
        return words_;
    }

   private:
    std::vector<QString> basis_;
    PrefixCode words_;
};

/// Checks pairwise <a|b> = delta_ab within kSpanTolerance.
bool is_orthonormal(const std::vector<QString> &states, double tolerance);

/// sum_k <b_k|s> |w_k>. OutOfSpan when the residual norm exceeds kSpanTolerance.
QString encode_qstring(const CondensableCode &code, const QString &s);

/// Lossless code of rho: eigenvectors (eigenvalues below kEigenFloor dropped)
/// carry canonical codewords of length ceil(-log2 lambda_k).
struct SwCode {
    CondensableCode code;
    std::vector<double> eigenvalues;
};
SwCode sw_lossless_code(const DensityOperator &rho);

struct MemberLength {
    std::size_t id;
    double encoded_average_length;
};

struct CompressionReport {
    double expected_avg_length;
    double entropy;
    double kraft;
    std::vector<MemberLength> per_member;
};

/// Encodes every member of the ensemble with the code; kraft is the
/// condensable Kraft sum over the encoded source basis.
CompressionReport compression_report(const CondensableCode &code, const Ensemble &e);

/// compression_report of the SW code of rho on rho's own eigen-ensemble.
CompressionReport sw_report(const DensityOperator &rho);

/// sum_i 2^{-average_length(psi_i)} over mutually orthogonal strings.
double kraft_condensable_check(const std::vector<QString> &states);

struct TypeClass {
    std::vector<std::uint32_t> counts;  // occurrences of each eigen-symbol
    double string_probability;          // probability of one string in the class
    double class_probability;           // multinomial weight times string_probability
    double strings;                     // class size
    std::size_t codeword_length;
    bool kept;
};

struct LossyReport {
    std::size_t n;
    double delta;
    double entropy;
    std::size_t budget;
    double success_probability;
    double kept_dimension;
    bool budget_covers_input;
    std::vector<double> eigenvalues;
    std::vector<TypeClass> classes;
};

/// Upper limit on enumerated type classes.
inline constexpr std::size_t kMaxTypeClasses = std::size_t{1} << 20;

/// Projection of the block code of rho^{(x)n} onto m = ceil(n(S + delta)) qubits,
/// evaluated over type classes. InvalidDelta for delta <= 0; n must be in 1..64.
LossyReport lossy_typical_projection(const DensityOperator &rho, std::size_t n, double delta);

}  // namespace sqkc
