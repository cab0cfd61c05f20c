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
#include <random>
#include <vector>

#include "sqkc/linalg.hpp"

namespace sqkc {

using Rng = std::mt19937_64;

/// Standard complex normal sample (real and imaginary parts N(0, 1/2)).
Complex complex_normal(Rng &rng);

/// G G^dagger / tr(G G^dagger) with complex normal G, over index_basis(dim).
DensityOperator ginibre_density(Rng &rng, std::size_t dim);

/// Haar-like unitary from Gram-Schmidt on a complex Gaussian matrix.
Matrix random_unitary(Rng &rng, std::size_t n);

/// A random normalized state with 1..max_terms distinct keys of length <= max_len.
QString random_qstring(Rng &rng, std::size_t max_terms, std::size_t max_len);

/// k random orthonormal states supported on the given basis strings.
std::vector<QString> random_orthonormal_family(Rng &rng, const std::vector<BitString> &basis, std::size_t k);

/// The states U|v_j> = sum_k U_jk |v_k> for an orthonormal family v.
std::vector<QString> rotate_family(const std::vector<QString> &family, const Matrix &unitary);

}  // namespace sqkc
