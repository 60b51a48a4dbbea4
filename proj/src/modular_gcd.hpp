#pragma once

#include <optional>

#include "trisum/multipoly.hpp"

namespace trisum::detail {

/// Gcd of two integer-primitive polynomials by modular images, evaluation and
/// interpolation, and Chinese remaindering. The result is normalized and has
/// been trial-divided into both inputs; nullopt when max_primes is exhausted.
std::optional<MultiPoly> modular_gcd(const MultiPoly& a, const MultiPoly& b, int max_primes = 64);

}  // namespace trisum::detail
