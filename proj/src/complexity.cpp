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

#include "sqkc/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sqkc/codes.hpp"
#include "sqkc/error.hpp"
#include "sqkc/numeric.hpp"

namespace sqkc {

namespace {

bool outputs_are_basis_states(const std::vector<Program> &programs) {
    return std::all_of(programs.begin(), programs.end(), [](const Program &p) {
        return p.output.size() == 1 && std::abs(std::abs(p.output.terms()[0].amplitude) - 1.0) <= kSpanTolerance;
    });
}

}  // namespace

DescriberMachine DescriberMachine::from_table(std::vector<Program> programs, bool prefix_free) {
    std::vector<BitString> words;
    words.reserve(programs.size());
    for (const auto &p : programs) {
        words.push_back(p.program);
    }
    std::vector<BitString> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::DuplicateKey, "machine lists a program twice");
    }
    if (prefix_free && !is_prefix_free(words)) {
        throw Error(ErrorKind::NotPrefixFree, "machine claims prefix-free programs but they are not");
    }
    if (outputs_are_basis_states(programs)) {
        std::vector<BitString> keys;
        for (const auto &p : programs) {
            keys.push_back(p.output.terms()[0].key);
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
            throw Error(ErrorKind::NotOrthonormal, "two programs produce the same output");
        }
    } else {
        std::vector<QString> outputs;
        for (const auto &p : programs) {
            outputs.push_back(p.output);
        }
        if (!is_orthonormal(outputs, kSpanTolerance)) {
            throw Error(ErrorKind::NotOrthonormal, "machine outputs are not orthonormal");
        }
    }

    auto table = std::make_shared<Table>();
    table->programs = std::move(programs);
    for (std::size_t i = 0; i < table->programs.size(); ++i) {
        for (const auto &t : table->programs[i].output.terms()) {
            table->by_key[t.key].emplace_back(i, t.amplitude);
        }
    }
    DescriberMachine m;
    m.table_ = std::move(table);
    m.prefix_free_ = prefix_free;
    return m;
}

DescriberMachine DescriberMachine::from_code(const CondensableCode &code) {
    std::vector<Program> programs;
    for (std::size_t k = 0; k < code.source_basis().size(); ++k) {
        programs.push_back({code.words().codewords()[k], code.source_basis()[k]});
    }
    return from_table(std::move(programs), true);
}

DescriberMachine DescriberMachine::identity(std::size_t max_len) {
    if (max_len > 20) {
        throw Error(ErrorKind::CapExceeded, "identity machine is limited to strings of length 20");
    }
    DescriberMachine m;
    m.identity_max_len_ = max_len;
    return m;
}

DescriberMachine identity_machine(std::size_t max_len) {
    return DescriberMachine::identity(max_len);
}

DescriberMachine DescriberMachine::self_delimited() const {
    DescriberMachine m = *this;
    ++m.wraps_;
    m.prefix_free_ = true;
    return m;
}

std::size_t DescriberMachine::program_count() const {
    if (table_) {
        return table_->programs.size();
    }
    return (std::size_t{1} << (identity_max_len_ + 1)) - 1;
}

BitString DescriberMachine::wrap(const BitString &p) const {
    BitString out = p;
    for (std::size_t i = 0; i < wraps_; ++i) {
        out = self_delimit(out);
    }
    return out;
}

std::vector<Program> DescriberMachine::programs() const {
    std::vector<Program> out;
    if (table_) {
        for (const auto &p : table_->programs) {
            out.push_back({wrap(p.program), p.output});
        }
    }
    return out;
}

std::vector<ProgramAmplitude> DescriberMachine::describe(const QString &psi) const {
    std::vector<ProgramAmplitude> out;
    double residual2 = 0.0;
    if (!table_) {
        for (const auto &t : psi.terms()) {
            if (t.key.size() <= identity_max_len_) {
                out.push_back({wrap(t.key), t.amplitude});
            } else {
                residual2 += std::norm(t.amplitude);
            }
        }
    } else {
        std::map<std::size_t, Complex> coeff;
        for (const auto &t : psi.terms()) {
            auto it = table_->by_key.find(t.key);
            if (it == table_->by_key.end()) {
                continue;
            }
            for (const auto &[idx, amp] : it->second) {
                coeff[idx] += std::conj(amp) * t.amplitude;
            }
        }
        std::map<BitString, Complex> residual;
        for (const auto &t : psi.terms()) {
            residual.emplace(t.key, t.amplitude);
        }
        for (const auto &[idx, c] : coeff) {
            for (const auto &t : table_->programs[idx].output.terms()) {
                residual[t.key] -= c * t.amplitude;
            }
            if (c != Complex{}) {
                out.push_back({wrap(table_->programs[idx].program), c});
            }
        }
        for (const auto &[key, amp] : residual) {
            residual2 += std::norm(amp);
        }
    }
    if (std::sqrt(residual2) > kSpanTolerance) {
        throw Error(ErrorKind::OutOfSpan,
                    "state is not in the machine's output span (residual " + std::to_string(std::sqrt(residual2)) + ")");
    }
    return out;
}

std::size_t MachineCatalog::index_cost(std::size_t index) {
    return 2 * static_cast<std::size_t>(binary_length(index)) + 1;
}

bool MachineCatalog::all_prefix_free() const {
    return std::all_of(machines_.begin(), machines_.end(), [](const DescriberMachine &m) { return m.prefix_free(); });
}

ComplexityEstimate machine_complexity(const DescriberMachine &m, const QString &psi) {
    ComplexityEstimate est;
    for (const auto &pa : m.describe(psi)) {
        const double w = std::norm(pa.amplitude);
        est.value += w * static_cast<double>(pa.program.size());
        est.decomposition.push_back({pa.program, w});
    }
    est.description_length = est.value;
    return est;
}

ComplexityEstimate universal_complexity(const MachineCatalog &cat, const QString &psi) {
    std::optional<ComplexityEstimate> best;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const std::size_t index = i + 1;
        const double cost = static_cast<double>(MachineCatalog::index_cost(index));
        if (best && cost >= best->value) {
            // Index costs never decrease, so no later machine can win.
            break;
        }
        ComplexityEstimate est;
        try {
            est = machine_complexity(cat.machines()[i], psi);
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::OutOfSpan) {
                continue;
            }
            throw;
        }
        est.machine_index = index;
        est.index_cost = cost;
        est.value = cost + est.description_length;
        if (!best || est.value < best->value) {
            best = std::move(est);
        }
    }
    if (!best) {
        throw Error(ErrorKind::NoDescriber, "no machine in the catalog describes the state");
    }
    return *best;
}

std::size_t base_length_complexity(const DescriberMachine &m, const QString &psi) {
    std::size_t longest = 0;
    for (const auto &pa : m.describe(psi)) {
        if (std::abs(pa.amplitude) > kSpanTolerance) {
            longest = std::max(longest, pa.program.size());
        }
    }
    return longest;
}

double fidelity_penalized_complexity(const std::vector<Program> &programs, const QString &psi) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &p : programs) {
        const double overlap = std::abs(inner_product(psi, p.output));
        if (overlap <= kAmplitudeFloor) {
            continue;
        }
        const double fidelity = std::min(1.0, overlap * overlap);
        const double cost = static_cast<double>(p.program.size()) + std::max(0, ceil_neg_log2(fidelity));
        best = std::min(best, cost);
    }
    if (std::isinf(best)) {
        throw Error(ErrorKind::NoOverlap, "no program output overlaps the state");
    }
    return best;
}

}  // namespace sqkc
