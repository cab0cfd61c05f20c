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

#include "sqkc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sqkc/codes.hpp"
#include "sqkc/error.hpp"
#include "sqkc/numeric.hpp"
#include "sqkc/random.hpp"

namespace sqkc {

IncompressibilityReport incompressibility_report(const std::vector<QString> &states, const MachineCatalog &cat) {
    if (states.empty()) {
        throw Error(ErrorKind::EmptyState, "incompressibility needs at least one state");
    }
    IncompressibilityReport r;
    r.entropy = von_neumann_entropy(density_from_ensemble(Ensemble::uniform(states)));
    r.plain_bound = (r.entropy - 1.0) / 2.0;
    r.prefix_bound = r.entropy;
    r.prefix_catalog = cat.all_prefix_free();
    r.applicable_bound = r.prefix_catalog ? r.prefix_bound : r.plain_bound;
    for (const auto &s : states) {
        r.per_state.push_back(universal_complexity(cat, s));
        r.max_complexity = std::max(r.max_complexity, r.per_state.back().value);
        r.max_description_length = std::max(r.max_description_length, r.per_state.back().description_length);
    }
    r.verified = r.max_complexity >= r.applicable_bound - kBoundTolerance;
    return r;
}

MultiCopyReport multicopy_report(double alpha2, std::size_t n) {
    if (!(alpha2 > 0.0 && alpha2 < 1.0)) {
        throw Error(ErrorKind::InvalidAmplitude, "|alpha|^2 must lie strictly between 0 and 1");
    }
    if (n == 0 || n > 60) {
        throw Error(ErrorKind::CapExceeded, "copies must be in 1..60");
    }
    const double beta2 = 1.0 - alpha2;
    const double la = std::log2(alpha2);
    const double lb = std::log2(beta2);

    MultiCopyReport r;
    r.alpha2 = alpha2;
    r.n = n;
    r.naive = n;
    std::vector<double> neg_log2_p(n + 1);
    double binom = 1.0;  // C(n, i), updated incrementally
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) {
            binom = std::round(binom * static_cast<double>(n - i + 1) / static_cast<double>(i));
        }
        const double ni = static_cast<double>(n - i);
        const double ii = static_cast<double>(i);
        neg_log2_p[i] = -(ii * la + ni * lb);
        r.weights.push_back(binom * std::exp2(-neg_log2_p[i]));
        r.z_norm += std::exp2(-neg_log2_p[i]);
    }
    const double log2_z = std::log2(r.z_norm);
    std::vector<double> normalized(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        r.raw_lengths.push_back(static_cast<std::size_t>(std::max(0, snapped_ceil(neg_log2_p[i]))));
        r.normalized_lengths.push_back(static_cast<std::size_t>(std::max(0, snapped_ceil(neg_log2_p[i] + log2_z))));
        r.expected_raw += r.weights[i] * static_cast<double>(r.raw_lengths[i]);
        r.expected_normalized += r.weights[i] * static_cast<double>(r.normalized_lengths[i]);
        normalized[i] = std::exp2(-(neg_log2_p[i] + log2_z));
    }
    r.raw_kraft = kraft_sum(r.raw_lengths);
    r.normalized_entropy = spectrum_entropy(normalized);
    return r;
}

QString phi_state(std::uint64_t n, int sign) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidAmplitude, "phi_n needs n >= 1 so that |n> differs from |0>");
    }
    const double h = 1.0 / std::sqrt(2.0);
    return make_qstring({{BitString("0"), Complex(h, 0.0)},
                         {BitString::from_natural(n), Complex(sign >= 0 ? h : -h, 0.0)}});
}

namespace {

ComplexityEstimate catalog_value(const MachineCatalog &cat, const QString &psi) {
    try {
        return universal_complexity(cat, psi);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NoDescriber) {
            throw Error(ErrorKind::BlockTooLargeForCatalog, "catalog does not span the block's states");
        }
        throw;
    }
}

void require_prefix_catalog(const MachineCatalog &cat) {
    if (cat.size() == 0 || !cat.all_prefix_free()) {
        throw Error(ErrorKind::NotPrefixFree, "this experiment needs a non-empty, all-prefix-free catalog");
    }
}

void fill_phi(NonAdditivityReport &r, const MachineCatalog &cat) {
    r.qk_phi_plus = catalog_value(cat, phi_state(r.n, +1)).value;
    r.qk_phi_minus = catalog_value(cat, phi_state(r.n, -1)).value;
    r.phi_mean = 0.5 * (r.qk_phi_plus + r.qk_phi_minus);
    r.avg_length_phi = average_length(phi_state(r.n, +1));
}

}  // namespace

NonAdditivityReport nonadditivity_search(std::size_t m_block, const MachineCatalog &cat, double k) {
    require_prefix_catalog(cat);
    if (!(k > 0.0)) {
        throw Error(ErrorKind::InvalidAmplitude, "k must be positive");
    }
    if (m_block > 24) {
        throw Error(ErrorKind::BlockTooLargeForCatalog, "block sizes above 24 are not enumerated");
    }
    NonAdditivityReport r;
    r.m_block = m_block;
    r.k = k;
    const std::uint64_t lo = std::uint64_t{1} << m_block;
    const std::uint64_t hi = lo << 1;
    r.qk_n = -1.0;
    for (std::uint64_t n = lo; n < hi; ++n) {
        const double v = catalog_value(cat, QString::basis(BitString::from_natural(n))).value;
        if (v > r.qk_n) {
            r.qk_n = v;
            r.n = n;
        }
    }
    fill_phi(r, cat);
    r.gap_greater = r.qk_n - r.phi_mean;
    r.greater_found = r.gap_greater > k + kBoundTolerance;
    r.qk_zero = catalog_value(cat, QString::basis(BitString("0"))).value;
    r.gap_less = r.phi_mean - r.qk_zero;
    r.less_found = r.gap_less > k + kBoundTolerance;
    return r;
}

NonAdditivityReport scan_less_witness(const MachineCatalog &cat, double k, std::uint64_t n_max) {
    require_prefix_catalog(cat);
    NonAdditivityReport r;
    r.k = k;
    r.qk_zero = catalog_value(cat, QString::basis(BitString("0"))).value;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        r.n = n;
        fill_phi(r, cat);
        r.gap_less = r.phi_mean - r.qk_zero;
        if (r.gap_less > k + kBoundTolerance) {
            r.less_found = true;
            break;
        }
    }
    r.qk_n = catalog_value(cat, QString::basis(BitString::from_natural(r.n))).value;
    r.gap_greater = r.qk_n - r.phi_mean;
    r.greater_found = r.gap_greater > k + kBoundTolerance;
    return r;
}

SandwichReport entropy_sandwich_report(const Ensemble &e, const MachineCatalog &cat,
                                       std::optional<std::size_t> sw_index) {
    require_prefix_catalog(cat);
    if (sw_index && (*sw_index == 0 || *sw_index > cat.size())) {
        throw Error(ErrorKind::DimensionMismatch, "SW machine index outside the catalog");
    }
    SandwichReport r;
    r.entropy = von_neumann_entropy(density_from_ensemble(e));
    for (const auto &entry : e.entries()) {
        r.per_member.push_back(universal_complexity(cat, entry.state));
        r.expected_complexity += entry.probability * r.per_member.back().value;
        r.overhead = std::max(r.overhead, r.per_member.back().index_cost);
    }
    r.sw_index = sw_index;
    r.lower_holds = r.entropy <= r.expected_complexity + kBoundTolerance;
    if (sw_index) {
        r.upper_bound = r.entropy + 1.0 + static_cast<double>(MachineCatalog::index_cost(*sw_index));
        r.upper_holds = r.expected_complexity <= *r.upper_bound + kBoundTolerance;
    }
    return r;
}

void InequalitySpec::validate() const {
    if (n_parties == 0 || terms.empty()) {
        throw Error(ErrorKind::InvalidInequality, "an inequality needs parties and at least one term");
    }
    std::set<std::vector<std::size_t>> seen;
    for (const auto &t : terms) {
        std::vector<std::size_t> s = t.subset;
        std::sort(s.begin(), s.end());
        if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= n_parties) {
            throw Error(ErrorKind::InvalidInequality, "subsets must be non-empty sets of valid party indices");
        }
        if (!seen.insert(s).second) {
            throw Error(ErrorKind::InvalidInequality, "subset listed twice");
        }
    }
}

InequalityResult inequality_check(const InequalitySpec &spec, const DensityOperator &rho,
                                  const std::vector<std::size_t> &dims) {
    spec.validate();
    if (dims.size() != spec.n_parties) {
        throw Error(ErrorKind::DimensionMismatch, "one dimension per party is required");
    }
    InequalityResult r;
    for (const auto &t : spec.terms) {
        const double s = von_neumann_entropy(partial_trace(rho, dims, t.subset));
        r.term_entropies.push_back(s);
        r.value += t.coefficient * s;
    }
    return r;
}

InequalityResult inequality_check_product(const InequalitySpec &spec, const std::vector<DensityOperator> &factors) {
    spec.validate();
    if (factors.size() != spec.n_parties) {
        throw Error(ErrorKind::DimensionMismatch, "one factor per party is required");
    }
    std::vector<double> party_entropy;
    std::vector<std::size_t> dims;
    std::size_t total = 1;
    for (const auto &f : factors) {
        party_entropy.push_back(von_neumann_entropy(f));
        dims.push_back(f.dimension());
        total *= f.dimension();
    }
    InequalityResult r;
    for (const auto &t : spec.terms) {
        double s = 0.0;
        for (std::size_t i : t.subset) {
            s += party_entropy[i];
        }
        r.term_entropies.push_back(s);
        r.value += t.coefficient * s;
    }
    if (total <= kMaxDimension) {
        DensityOperator joint = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) {
            joint = tensor_product(joint, factors[i]);
        }
        r.joint_value = inequality_check(spec, joint, dims).value;
        r.paths_agree = std::abs(*r.joint_value - r.value) <= 1e-9;
    }
    return r;
}

DensityOperator random_density(std::size_t dim, std::uint64_t seed) {
    if (dim < 2 || dim > 64) {
        throw Error(ErrorKind::DimOutOfRange, "dimension must be in 2..64");
    }
    Rng rng(seed);
    return ginibre_density(rng, dim);
}

}  // namespace sqkc
