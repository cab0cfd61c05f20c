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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqkc {

enum class ErrorKind {
    EmptyState,
    NotNormalized,
    DuplicateKey,
    LengthCapExceeded,
    InvalidBitString,
    ProbabilitiesDontSum,
    NotHermitian,
    ConvergenceFailure,
    InvalidDistribution,
    DimensionCapExceeded,
    DimensionMismatch,
    MissingCodeword,
    NotOrthonormal,
    NotPrefixFree,
    ArityMismatch,
    OutOfSpan,
    NotOrthogonal,
    InvalidDelta,
    NoDescriber,
    NoOverlap,
    CapExceeded,
    InvalidAmplitude,
    BlockTooLargeForCatalog,
    DimOutOfRange,
    InvalidInequality,
    FormatError,
    IOError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Domain error raised by every library operation. The kind is stable and is
/// what the command line front end reports in its error records.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace sqkc
