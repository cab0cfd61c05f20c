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
#include <span>
#include <vector>

#include "sqkc/fock.hpp"

namespace sqkc {

/// Largest density-operator dimension handled by the dense routines.
inline constexpr std::size_t kMaxDimension = std::size_t{1} << 12;

/// Dense row-major complex matrix.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<Complex> &data() const noexcept {
        return data_;
    }

    Matrix adjoint() const;
    Complex trace() const;
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest absolute entry.
double max_abs(const Matrix &m);

struct EnsembleEntry {
    double probability;
    QString state;
};

/// Mixture {(p_i, |psi_i>)}; the states need not be orthogonal.
class Ensemble {
   public:
    /// Rejects probabilities outside (0, 1] and sums off by more than kProbabilityTolerance.
    explicit Ensemble(std::vector<EnsembleEntry> entries);

    /// Uniform mixture of the given states.
    static Ensemble uniform(const std::vector<QString> &states);

    const std::vector<EnsembleEntry> &entries() const noexcept {
        return entries_;
    }

   private:
    std::vector<EnsembleEntry> entries_;
};

/// Hermitian, trace-one, positive matrix over an explicit ordered basis of bitstrings.
///
/// The constructor checks shape, Hermiticity and trace. Positivity is checked
/// by checked(), which diagonalizes; operators produced by this library are
/// positive by construction and skip that cost.
class DensityOperator {
   public:
    DensityOperator(std::vector<BitString> basis, Matrix matrix);
    static DensityOperator checked(std::vector<BitString> basis, Matrix matrix);

    const std::vector<BitString> &basis() const noexcept {
        return basis_;
    }
    const Matrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dimension() const noexcept {
        return basis_.size();
    }

   private:
    std::vector<BitString> basis_;
    Matrix matrix_;
};

/// Eigenvalues in descending order, eigenvectors as the matching columns.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm drops
/// below 1e-12 (relative to the matrix norm when that exceeds 1); gives up with
/// ConvergenceFailure after 100 d^2 rotations.
SpectralDecomposition eig_hermitian(const Matrix &m);
SpectralDecomposition eig_hermitian(const DensityOperator &rho);

/// -sum p log2 p; eigenvalues in [-1e-9, 0) are clamped to zero.
double spectrum_entropy(std::span<const double> eigenvalues);
double von_neumann_entropy(const DensityOperator &rho);
/// Requires a valid probability vector.
double shannon_entropy(std::span<const double> p);

/// sum p_i |psi_i><psi_i| over the canonically ordered union of term keys.
DensityOperator density_from_ensemble(const Ensemble &e);

/// Kronecker product; basis keys are concatenations in Kronecker order.
DensityOperator tensor_product(const DensityOperator &a, const DensityOperator &b);
DensityOperator tensor_power(const DensityOperator &rho, std::size_t m);

/// Marginal on the subsystems listed in keep (0-based, any order, no repeats).
/// dims lists the subsystem dimensions in Kronecker order. The result basis labels
/// each kept local index with ceil(log2 d_i) bits, concatenated.
DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> dims,
                              std::span<const std::size_t> keep);

/// Re-indexes rho onto a basis containing all of rho's basis strings.
DensityOperator expand_to_basis(const DensityOperator &rho, const std::vector<BitString> &basis);

/// All 2^n strings of length n in lexicographic order.
std::vector<BitString> qubit_basis(std::size_t n);
/// dim labels of width ceil(log2 dim) (zero width for dim 1).
std::vector<BitString> index_basis(std::size_t dim);

/// Column col of m read as a state over basis, dropping negligible amplitudes.
QString column_state(const std::vector<BitString> &basis, const Matrix &m, std::size_t col);

}  // namespace sqkc
