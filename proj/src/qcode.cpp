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

#include "sqkc/qcode.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sqkc/error.hpp"
#include "sqkc/numeric.hpp"

namespace sqkc {

bool is_orthonormal(const std::vector<QString> &states, double tolerance) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i; j < states.size(); ++j) {
            const Complex g = inner_product(states[i], states[j]);
            const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(g - want) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

CondensableCode::CondensableCode(std::vector<QString> source_basis, PrefixCode words)
    : basis_(std::move(source_basis)), words_(std::move(words)) {
    if (basis_.size() != words_.size()) {
        throw Error(ErrorKind::ArityMismatch, std::to_string(basis_.size()) + " basis states but " +
                                                  std::to_string(words_.size()) + " codewords");
    }
    if (!is_orthonormal(basis_, kSpanTolerance)) {
        throw Error(ErrorKind::NotOrthonormal, "source basis is not orthonormal");
    }
}

QString encode_qstring(const CondensableCode &code, const QString &s) {
    std::map<BitString, Complex> residual;
    for (const auto &t : s.terms()) {
        residual.emplace(t.key, t.amplitude);
    }
    std::map<BitString, Complex> encoded;
    const auto &basis = code.source_basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Complex c = inner_product(basis[k], s);
        if (c == Complex{}) {
            continue;
        }
        for (const auto &t : basis[k].terms()) {
            residual[t.key] -= c * t.amplitude;
        }
        encoded[code.words().codewords()[k]] += c;
    }
    double res2 = 0.0;
    for (const auto &[key, amp] : residual) {
        res2 += std::norm(amp);
    }
    if (std::sqrt(res2) > kSpanTolerance) {
        throw Error(ErrorKind::OutOfSpan,
                    "state leaves the code's source span (residual " + std::to_string(std::sqrt(res2)) + ")");
    }
    return collect_qstring(encoded, false);
}

SwCode sw_lossless_code(const DensityOperator &rho) {
    const auto spec = eig_hermitian(rho);
    std::vector<QString> basis;
    std::vector<double> kept;
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        if (spec.eigenvalues[k] > kEigenFloor) {
            kept.push_back(spec.eigenvalues[k]);
            basis.push_back(column_state(rho.basis(), spec.eigenvectors, k));
        }
    }
    const double total = std::accumulate(kept.begin(), kept.end(), 0.0);
    std::vector<double> p = kept;
    for (auto &x : p) {
        x /= total;
    }
    return SwCode{CondensableCode(std::move(basis), shannon_code(p)), std::move(p)};
}

double kraft_condensable_check(const std::vector<QString> &states) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (std::abs(inner_product(states[i], states[j])) > kSpanTolerance) {
                throw Error(ErrorKind::NotOrthogonal,
                            "states " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
            }
        }
    }
    double total = 0.0;
    for (const auto &s : states) {
        total += std::exp2(-average_length(s));
    }
    return total;
}

CompressionReport compression_report(const CondensableCode &code, const Ensemble &e) {
    CompressionReport report{};
    for (std::size_t i = 0; i < e.entries().size(); ++i) {
        const auto &entry = e.entries()[i];
        const double l = average_length(encode_qstring(code, entry.state));
        report.expected_avg_length += entry.probability * l;
        report.per_member.push_back({i, l});
    }
    report.entropy = von_neumann_entropy(density_from_ensemble(e));
    std::vector<QString> encoded_basis;
    for (const auto &w : code.words().codewords()) {
        encoded_basis.push_back(QString::basis(w));
    }
    report.kraft = kraft_condensable_check(encoded_basis);
    return report;
}

CompressionReport sw_report(const DensityOperator &rho) {
    const SwCode sw = sw_lossless_code(rho);
    std::vector<EnsembleEntry> entries;
    for (std::size_t k = 0; k < sw.eigenvalues.size(); ++k) {
        entries.push_back({sw.eigenvalues[k], sw.code.source_basis()[k]});
    }
    return compression_report(sw.code, Ensemble(std::move(entries)));
}

namespace {

double binomial(std::size_t n, std::size_t k) {
    k = std::min(k, n - k);
    double out = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(out);
}

double count_compositions(std::size_t n, std::size_t parts) {
    return binomial(n + parts - 1, parts - 1);
}

// Visits every vector of `parts` non-negative counts summing to n.
template <typename Visit>
void for_each_composition(std::size_t n, std::size_t parts, Visit &&visit) {
    std::vector<std::uint32_t> counts(parts, 0);
    auto rec = [&](auto &self, std::size_t slot, std::size_t left) -> void {
        if (slot + 1 == parts) {
            counts[slot] = static_cast<std::uint32_t>(left);
            visit(counts);
            return;
        }
        for (std::size_t c = left + 1; c-- > 0;) {
            counts[slot] = static_cast<std::uint32_t>(c);
            self(self, slot + 1, left - c);
        }
    };
    rec(rec, 0, n);
}

}  // namespace

LossyReport lossy_typical_projection(const DensityOperator &rho, std::size_t n, double delta) {
    if (!(delta > 0.0)) {
        throw Error(ErrorKind::InvalidDelta, "delta must be positive");
    }
    if (n == 0 || n > 64) {
        throw Error(ErrorKind::CapExceeded, "copies must be in 1..64");
    }
    const auto spec = eig_hermitian(rho);
    std::vector<double> lambda;
    for (double x : spec.eigenvalues) {
        if (x > kEigenFloor) {
            lambda.push_back(x);
        }
    }
    const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    for (auto &x : lambda) {
        x /= total;
    }
    if (count_compositions(n, lambda.size()) > static_cast<double>(kMaxTypeClasses)) {
        throw Error(ErrorKind::CapExceeded, "too many type classes for this support size and n");
    }

    LossyReport report{};
    report.n = n;
    report.delta = delta;
    report.entropy = spectrum_entropy(lambda);
    report.budget = static_cast<std::size_t>(std::max(0, snapped_ceil(static_cast<double>(n) * (report.entropy + delta))));
    report.budget_covers_input =
        static_cast<double>(report.budget) >= static_cast<double>(n) * std::log2(static_cast<double>(rho.dimension()));
    report.eigenvalues = lambda;

    std::vector<double> log2_lambda(lambda.size());
    std::transform(lambda.begin(), lambda.end(), log2_lambda.begin(), [](double x) { return std::log2(x); });

    for_each_composition(n, lambda.size(), [&](const std::vector<std::uint32_t> &counts) {
        TypeClass tc;
        tc.counts = counts;
        double neg_log2 = 0.0;
        double size = 1.0;
        std::size_t left = n;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            neg_log2 -= counts[j] * log2_lambda[j];
            size *= binomial(left, counts[j]);
            left -= counts[j];
        }
        tc.string_probability = std::exp2(-neg_log2);
        tc.strings = size;
        tc.class_probability = size * tc.string_probability;
        tc.codeword_length = static_cast<std::size_t>(std::max(0, snapped_ceil(neg_log2)));
        tc.kept = tc.codeword_length <= report.budget;
        if (tc.kept) {
            report.success_probability += tc.class_probability;
            report.kept_dimension += tc.strings;
        }
        report.classes.push_back(std::move(tc));
    });
    report.success_probability = std::min(1.0, report.success_probability);
    return report;
}

}  // namespace sqkc
