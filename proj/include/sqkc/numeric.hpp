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

#include <cmath>
#include <cstdint>

namespace sqkc {

/// Amplitude normalization tolerance for QString.
inline constexpr double kNormTolerance = 1e-9;
/// Probability-vector sum tolerance.
inline constexpr double kProbabilityTolerance = 1e-9;
/// Hermiticity / trace / positivity tolerance for density operators.
inline constexpr double kDensityTolerance = 1e-9;
/// Orthonormality and span-membership tolerance.
inline constexpr double kSpanTolerance = 1e-8;
/// Amplitudes at or below this magnitude are dropped from computed states.
inline constexpr double kAmplitudeFloor = 1e-12;
/// Eigenvalues below this are treated as outside the support.
inline constexpr double kEigenFloor = 1e-12;
/// Slack when taking ceilings of computed code lengths and budgets.
inline constexpr double kCeilSnap = 1e-9;

/// ceil(x), except that x within kCeilSnap of an integer rounds to it.
inline int snapped_ceil(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= kCeilSnap) {
        return static_cast<int>(r);
    }
    return static_cast<int>(std::ceil(x));
}

/// ceil(-log2 p) with snapping, so dyadic p carrying round-off in the last few
/// ulps still gets its exact length.
inline int ceil_neg_log2(double p) {
    return snapped_ceil(-std::log2(p));
}

/// Number of bits of the minimal binary representation of n; bits(0) = 1.
inline int binary_length(std::uint64_t n) {
    int len = 1;
    while (n >>= 1) {
        ++len;
    }
    return len;
}

}  // namespace sqkc
