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

#include "sqkc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "sqkc/error.hpp"
#include "sqkc/numeric.hpp"

namespace sqkc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product of incompatible shapes");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex v = a(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix difference of incompatible shapes");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

double max_abs(const Matrix &m) {
    double best = 0.0;
    for (const auto &v : m.data()) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

Ensemble::Ensemble(std::vector<EnsembleEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw Error(ErrorKind::EmptyState, "an ensemble needs at least one member");
    }
    double total = 0.0;
    for (const auto &e : entries_) {
        if (!(e.probability > 0.0) || e.probability > 1.0 + kProbabilityTolerance) {
            throw Error(ErrorKind::ProbabilitiesDontSum,
                        "member probability " + std::to_string(e.probability) + " is outside (0, 1]");
        }
        total += e.probability;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw Error(ErrorKind::ProbabilitiesDontSum, "probabilities sum to " + std::to_string(total));
    }
}

Ensemble Ensemble::uniform(const std::vector<QString> &states) {
    std::vector<EnsembleEntry> entries;
    entries.reserve(states.size());
    for (const auto &s : states) {
        entries.push_back({1.0 / static_cast<double>(states.size()), s});
    }
    return Ensemble(std::move(entries));
}

DensityOperator::DensityOperator(std::vector<BitString> basis, Matrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    const std::size_t d = basis_.size();
    if (d == 0 || matrix_.rows() != d || matrix_.cols() != d) {
        throw Error(ErrorKind::DimensionMismatch, "density matrix shape does not match its basis");
    }
    if (d > kMaxDimension) {
        throw Error(ErrorKind::DimensionCapExceeded, "dimension " + std::to_string(d) + " exceeds 4096");
    }
    std::set<BitString> seen(basis_.begin(), basis_.end());
    if (seen.size() != d) {
        throw Error(ErrorKind::DuplicateKey, "density basis contains a repeated string");
    }
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            if (std::abs(matrix_(r, c) - std::conj(matrix_(c, r))) > kDensityTolerance) {
                throw Error(ErrorKind::NotHermitian, "entries (" + std::to_string(r) + "," + std::to_string(c) +
                                                         ") and its transpose are not conjugate");
            }
        }
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kDensityTolerance) {
        throw Error(ErrorKind::NotNormalized, "trace is " + std::to_string(tr.real()));
    }
}

DensityOperator DensityOperator::checked(std::vector<BitString> basis, Matrix matrix) {
    DensityOperator rho(std::move(basis), std::move(matrix));
    const auto spec = eig_hermitian(rho);
    if (spec.eigenvalues.back() < -kDensityTolerance) {
        throw Error(ErrorKind::InvalidDistribution,
                    "density matrix has eigenvalue " + std::to_string(spec.eigenvalues.back()));
    }
    return rho;
}

SpectralDecomposition eig_hermitian(const Matrix &input) {
    const std::size_t d = input.rows();
    if (input.cols() != d) {
        throw Error(ErrorKind::DimensionMismatch, "eigensolver needs a square matrix");
    }
    const double scale = std::max(1.0, std::sqrt(std::accumulate(
                                           input.data().begin(), input.data().end(), 0.0,
                                           [](double acc, const Complex &v) { return acc + std::norm(v); })));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            if (std::abs(input(r, c) - std::conj(input(c, r))) > kDensityTolerance * scale) {
                throw Error(ErrorKind::NotHermitian, "eigensolver input is not Hermitian");
            }
        }
    }

    Matrix a = input;
    Matrix v = Matrix::identity(d);
    const double threshold = 1e-12 * scale;
    const std::size_t max_rotations = 100 * d * d;
    std::size_t rotations = 0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = r + 1; c < d; ++c) {
                s += std::norm(a(r, c));
            }
        }
        return std::sqrt(2.0 * s);
    };

    while (off_norm() > threshold) {
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex z = a(p, q);
                const double mag = std::abs(z);
                if (mag == 0.0) {
                    continue;
                }
                if (++rotations > max_rotations) {
                    throw Error(ErrorKind::ConvergenceFailure,
                                "Jacobi exceeded " + std::to_string(max_rotations) + " rotations");
                }
                // Phase q so the pivot becomes real, then a real Jacobi rotation.
                const Complex phase = std::conj(z) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // G restricted to (p, q): [[c, s], [-s phase, c phase]].
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * phase;
                const Complex gqq = c * phase;
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    SpectralDecomposition out{std::vector<double>(d), Matrix(d, d)};
    for (std::size_t k = 0; k < d; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < d; ++r) {
            out.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

SpectralDecomposition eig_hermitian(const DensityOperator &rho) {
    return eig_hermitian(rho.matrix());
}

double spectrum_entropy(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(0.0, s);
}

double von_neumann_entropy(const DensityOperator &rho) {
    return spectrum_entropy(eig_hermitian(rho).eigenvalues);
}

double shannon_entropy(std::span<const double> p) {
    if (p.empty()) {
        throw Error(ErrorKind::InvalidDistribution, "empty probability vector");
    }
    double total = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) {
            throw Error(ErrorKind::InvalidDistribution, "negative probability " + std::to_string(x));
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
    }
    return spectrum_entropy(p);
}

DensityOperator density_from_ensemble(const Ensemble &e) {
    std::set<BitString> keys;
    for (const auto &entry : e.entries()) {
        for (const auto &t : entry.state.terms()) {
            keys.insert(t.key);
        }
    }
    if (keys.size() > kMaxDimension) {
        throw Error(ErrorKind::DimensionCapExceeded, "ensemble spans " + std::to_string(keys.size()) + " strings");
    }
    std::vector<BitString> basis(keys.begin(), keys.end());
    const std::size_t d = basis.size();
    Matrix m(d, d);
    for (const auto &entry : e.entries()) {
        std::vector<std::pair<std::size_t, Complex>> idx;
        idx.reserve(entry.state.size());
        for (const auto &t : entry.state.terms()) {
            auto pos = static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), t.key) - basis.begin());
            idx.emplace_back(pos, t.amplitude);
        }
        for (const auto &[r, ar] : idx) {
            for (const auto &[c, ac] : idx) {
                m(r, c) += entry.probability * ar * std::conj(ac);
            }
        }
    }
    return DensityOperator(std::move(basis), std::move(m));
}

DensityOperator tensor_product(const DensityOperator &a, const DensityOperator &b) {
    const std::size_t da = a.dimension();
    const std::size_t db = b.dimension();
    if (da * db > kMaxDimension) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "product dimension " + std::to_string(da * db) + " exceeds 4096");
    }
    std::vector<BitString> basis;
    basis.reserve(da * db);
    for (const auto &ka : a.basis()) {
        for (const auto &kb : b.basis()) {
            basis.push_back(ka + kb);
        }
    }
    Matrix m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex x = a.matrix()(i, j);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    m(i * db + k, j * db + l) = x * b.matrix()(k, l);
                }
            }
        }
    }
    return DensityOperator(std::move(basis), std::move(m));
}

DensityOperator tensor_power(const DensityOperator &rho, std::size_t m) {
    if (m == 0) {
        throw Error(ErrorKind::DimensionMismatch, "tensor power needs at least one copy");
    }
    DensityOperator acc = rho;
    for (std::size_t i = 1; i < m; ++i) {
        acc = tensor_product(acc, rho);
    }
    return acc;
}

namespace {

std::size_t label_width(std::size_t dim) {
    std::size_t w = 0;
    while ((std::size_t{1} << w) < dim) {
        ++w;
    }
    return w;
}

}  // namespace

DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> dims,
                              std::span<const std::size_t> keep) {
    const std::size_t n = dims.size();
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) {
            throw Error(ErrorKind::DimensionMismatch, "subsystem dimension 0");
        }
        total *= d;
    }
    if (n == 0 || total != rho.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "subsystem dimensions multiply to " + std::to_string(total) +
                                                      ", operator has dimension " + std::to_string(rho.dimension()));
    }
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.back() >= n) {
        throw Error(ErrorKind::DimensionMismatch, "kept subsystems must be a non-empty set of valid indices");
    }
    std::vector<bool> is_kept(n, false);
    for (std::size_t k : kept) {
        is_kept[k] = true;
    }

    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t i = 0; i < n; ++i) {
        (is_kept[i] ? kept_dim : traced_dim) *= dims[i];
    }

    // Split every full index into (kept index, traced index); last subsystem fastest.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups(traced_dim);
    for (std::size_t full = 0; full < total; ++full) {
        std::size_t rest = full;
        std::size_t a = 0, a_mul = 1, t = 0, t_mul = 1;
        for (std::size_t i = n; i-- > 0;) {
            const std::size_t digit = rest % dims[i];
            rest /= dims[i];
            if (is_kept[i]) {
                a += digit * a_mul;
                a_mul *= dims[i];
            } else {
                t += digit * t_mul;
                t_mul *= dims[i];
            }
        }
        groups[t].emplace_back(a, full);
    }

    Matrix out(kept_dim, kept_dim);
    for (const auto &group : groups) {
        for (const auto &[a, i] : group) {
            for (const auto &[b, j] : group) {
                out(a, b) += rho.matrix()(i, j);
            }
        }
    }

    std::vector<BitString> basis;
    basis.reserve(kept_dim);
    for (std::size_t a = 0; a < kept_dim; ++a) {
        std::size_t rest = a;
        std::vector<BitString> parts(kept.size());
        for (std::size_t k = kept.size(); k-- > 0;) {
            const std::size_t d = dims[kept[k]];
            parts[k] = BitString::from_index(rest % d, label_width(d));
            rest /= d;
        }
        BitString label;
        for (const auto &p : parts) {
            label = label + p;
        }
        basis.push_back(std::move(label));
    }
    return DensityOperator(std::move(basis), std::move(out));
}

DensityOperator expand_to_basis(const DensityOperator &rho, const std::vector<BitString> &basis) {
    std::map<BitString, std::size_t> position;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        position.emplace(basis[i], i);
    }
    std::vector<std::size_t> map_to(rho.dimension());
    for (std::size_t i = 0; i < rho.dimension(); ++i) {
        auto it = position.find(rho.basis()[i]);
        if (it == position.end()) {
            throw Error(ErrorKind::DimensionMismatch, "target basis lacks '" + rho.basis()[i].token() + "'");
        }
        map_to[i] = it->second;
    }
    Matrix m(basis.size(), basis.size());
    for (std::size_t r = 0; r < rho.dimension(); ++r) {
        for (std::size_t c = 0; c < rho.dimension(); ++c) {
            m(map_to[r], map_to[c]) = rho.matrix()(r, c);
        }
    }
    return DensityOperator(basis, std::move(m));
}

std::vector<BitString> qubit_basis(std::size_t n) {
    if (n > 12) {
        throw Error(ErrorKind::DimensionCapExceeded, "qubit basis beyond 12 qubits");
    }
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        out.push_back(BitString::from_index(i, n));
    }
    return out;
}

std::vector<BitString> index_basis(std::size_t dim) {
    std::vector<BitString> out;
    out.reserve(dim);
    const std::size_t w = label_width(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out.push_back(BitString::from_index(i, w));
    }
    return out;
}

QString column_state(const std::vector<BitString> &basis, const Matrix &m, std::size_t col) {
    std::map<BitString, Complex> amps;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        amps.emplace(basis[r], m(r, col));
    }
    return collect_qstring(amps, false);
}

}  // namespace sqkc
