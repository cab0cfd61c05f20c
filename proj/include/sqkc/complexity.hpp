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
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sqkc/fock.hpp"
#include "sqkc/qcode.hpp"

namespace sqkc {

struct Program {
    BitString program;
    QString output;
};

/// One program of a forced description and its amplitude.
struct ProgramAmplitude {
    BitString program;
    Complex amplitude;
};

/// A finite describer: programs mapped to pairwise orthonormal output states,
/// so the machine is an isometry on the span of its programs and the minimal
/// description of any state in the output span is forced by linearity.
///
/// Two backings exist: an explicit program table, and the implicit identity
/// family over all strings up to some length. Either can be composed with the
/// self-delimiting transform any number of times.
class DescriberMachine {
   public:
    /// DuplicateKey for repeated programs, NotPrefixFree when prefix_free is
    /// claimed but violated, NotOrthonormal for overlapping outputs.
    static DescriberMachine from_table(std::vector<Program> programs, bool prefix_free);
    /// Codewords as programs, source basis as outputs.
    static DescriberMachine from_code(const CondensableCode &code);
    /// Every string of length <= max_len (at most 20) describes itself.
    static DescriberMachine identity(std::size_t max_len);

    /// The same machine reading programs 1^{l(p)} 0 p; always prefix-free.
    DescriberMachine self_delimited() const;

    bool prefix_free() const noexcept {
        return prefix_free_;
    }
    bool is_identity() const noexcept {
        return table_ == nullptr;
    }
    std::size_t identity_max_length() const noexcept {
        return identity_max_len_;
    }
    std::size_t self_delimit_depth() const noexcept {
        return wraps_;
    }
    std::size_t program_count() const;
    /// Explicit programs (after self-delimiting), empty for the identity family.
    std::vector<Program> programs() const;

    /// The unique program superposition mapped to psi; OutOfSpan when psi
    /// leaves the output span by more than kSpanTolerance.
    std::vector<ProgramAmplitude> describe(const QString &psi) const;

   private:
    struct Table {
        std::vector<Program> programs;
        // output key -> (program index, amplitude of that key in the output)
        std::map<BitString, std::vector<std::pair<std::size_t, Complex>>> by_key;
    };

    BitString wrap(const BitString &p) const;

    std::shared_ptr<const Table> table_;
    std::size_t identity_max_len_ = 0;
    std::size_t wraps_ = 0;
    bool prefix_free_ = false;
};

/// identity_machine(max_len) as named in the docs; CapExceeded above 20.
DescriberMachine identity_machine(std::size_t max_len);

struct ProgramWeight {
    BitString program;
    double weight;
};

struct ComplexityEstimate {
    double value = 0.0;
    /// 1-based catalog index of the witnessing machine; 0 outside a catalog.
    std::size_t machine_index = 0;
    double index_cost = 0.0;
    /// Average length of the program superposition alone.
    double description_length = 0.0;
    std::vector<ProgramWeight> decomposition;
};

/// Ordered machines T_1, T_2, ...; machine i costs 2 l(bin(i)) + 1 bits to name.
class MachineCatalog {
   public:
    MachineCatalog() = default;
    explicit MachineCatalog(std::vector<DescriberMachine> machines) : machines_(std::move(machines)) {
    }

    static std::size_t index_cost(std::size_t index);

    const std::vector<DescriberMachine> &machines() const noexcept {
        return machines_;
    }
    std::size_t size() const noexcept {
        return machines_.size();
    }
    void add(DescriberMachine m) {
        machines_.push_back(std::move(m));
    }
    bool all_prefix_free() const;

   private:
    std::vector<DescriberMachine> machines_;
};

/// Average length of the forced description: sum_p |<v_p|psi>|^2 l(p).
ComplexityEstimate machine_complexity(const DescriberMachine &m, const QString &psi);

/// min_i index_cost(i) + machine_complexity(T_i, psi), lowest index on ties;
/// NoDescriber when no machine spans psi.
ComplexityEstimate universal_complexity(const MachineCatalog &cat, const QString &psi);

/// Longest program with amplitude above kSpanTolerance in the forced description.
std::size_t base_length_complexity(const DescriberMachine &m, const QString &psi);

/// min_p l(p) + ceil(-log2 |<psi|phi_p>|^2) over programs with nonzero overlap.
double fidelity_penalized_complexity(const std::vector<Program> &programs, const QString &psi);

}  // namespace sqkc
