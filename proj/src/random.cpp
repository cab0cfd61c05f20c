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

#include "sqkc/random.hpp"

#include <cmath>
#include <set>

#include "sqkc/error.hpp"

namespace sqkc {

Complex complex_normal(Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

DensityOperator ginibre_density(Rng &rng, std::size_t dim) {
    Matrix g(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            g(r, c) = complex_normal(rng);
        }
    }
    Matrix m = g * g.adjoint();
    const double tr = m.trace().real();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) /= tr;
        }
    }
    // Exact Hermitian symmetry and real diagonal.
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < dim; ++c) {
            m(c, r) = std::conj(m(r, c));
        }
    }
    return DensityOperator(index_basis(dim), std::move(m));
}

Matrix random_unitary(Rng &rng, std::size_t n) {
    Matrix u(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            u(r, c) = complex_normal(rng);
        }
    }
    // Modified Gram-Schmidt on the rows.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t prev = 0; prev < r; ++prev) {
            Complex dot{};
            for (std::size_t c = 0; c < n; ++c) {
                dot += std::conj(u(prev, c)) * u(r, c);
            }
            for (std::size_t c = 0; c < n; ++c) {
                u(r, c) -= dot * u(prev, c);
            }
        }
        double norm2 = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            norm2 += std::norm(u(r, c));
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t c = 0; c < n; ++c) {
            u(r, c) *= inv;
        }
    }
    return u;
}

QString random_qstring(Rng &rng, std::size_t max_terms, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> count_dist(1, max_terms);
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    const std::size_t want = count_dist(rng);
    std::set<BitString> keys;
    // Bounded attempts: short max_len may not offer `want` distinct strings.
    for (std::size_t attempt = 0; keys.size() < want && attempt < 8 * want; ++attempt) {
        const std::size_t len = len_dist(rng);
        std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << len) - 1);
        keys.insert(BitString::from_index(len == 0 ? 0 : bits(rng), len));
    }
    std::vector<Term> terms;
    for (const auto &k : keys) {
        terms.push_back({k, complex_normal(rng)});
    }
    return make_qstring(std::move(terms), true);
}

std::vector<QString> random_orthonormal_family(Rng &rng, const std::vector<BitString> &basis, std::size_t k) {
    if (k > basis.size()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot fit " + std::to_string(k) + " orthonormal states in dimension " +
                                                      std::to_string(basis.size()));
    }
    const Matrix u = random_unitary(rng, basis.size());
    std::vector<QString> out;
    out.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        std::map<BitString, Complex> amps;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            amps.emplace(basis[c], u(r, c));
        }
        out.push_back(collect_qstring(amps, false));
    }
    return out;
}

std::vector<QString> rotate_family(const std::vector<QString> &family, const Matrix &unitary) {
    if (unitary.rows() != family.size() || unitary.cols() != family.size()) {
        throw Error(ErrorKind::DimensionMismatch, "rotation size does not match family size");
    }
    std::vector<QString> out;
    out.reserve(family.size());
    for (std::size_t j = 0; j < family.size(); ++j) {
        std::map<BitString, Complex> amps;
        for (std::size_t k = 0; k < family.size(); ++k) {
            for (const auto &t : family[k].terms()) {
                amps[t.key] += unitary(j, k) * t.amplitude;
            }
        }
        out.push_back(collect_qstring(amps, false));
    }
    return out;
}

}  // namespace sqkc
