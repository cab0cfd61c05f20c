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

#include "sqkc/error.hpp"

namespace sqkc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyState: return "EmptyState";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::DuplicateKey: return "DuplicateKey";
        case ErrorKind::LengthCapExceeded: return "LengthCapExceeded";
        case ErrorKind::InvalidBitString: return "InvalidBitString";
        case ErrorKind::ProbabilitiesDontSum: return "ProbabilitiesDontSum";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::InvalidDistribution: return "InvalidDistribution";
        case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MissingCodeword: return "MissingCodeword";
        case ErrorKind::NotOrthonormal: return "NotOrthonormal";
        case ErrorKind::NotPrefixFree: return "NotPrefixFree";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::OutOfSpan: return "OutOfSpan";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::InvalidDelta: return "InvalidDelta";
        case ErrorKind::NoDescriber: return "NoDescriber";
        case ErrorKind::NoOverlap: return "NoOverlap";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::InvalidAmplitude: return "InvalidAmplitude";
        case ErrorKind::BlockTooLargeForCatalog: return "BlockTooLargeForCatalog";
        case ErrorKind::DimOutOfRange: return "DimOutOfRange";
        case ErrorKind::InvalidInequality: return "InvalidInequality";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

}  // namespace sqkc
