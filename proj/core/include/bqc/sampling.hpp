#pragma once

#include <random>

#include "bqc/fock.hpp"

namespace bqc {

/// Haar-random single-qubit state alpha|0> + beta|1>, redrawn until both
/// |alpha| and |beta| are at least `min_magnitude`.
Vector random_qubit(std::mt19937_64& rng, double min_magnitude = 0.0);

}  // namespace bqc
