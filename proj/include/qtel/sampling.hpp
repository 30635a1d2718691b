// SPDX-License-Identifier: Apache-2.0
//
// Seeded random inputs for the property suite: Hermitian matrices, Haar
// pure states, induced-measure density operators and input amplitudes.
// Everything is driven by a caller-owned std::mt19937_64 so identical seeds
// reproduce identical runs.
#pragma once

#include <random>

#include "qtel/pipeline.hpp"

namespace qtel {

/// Hermitian matrix (M + M^dagger)/2 with iid standard complex Gaussian M.
ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng);

/// Haar-uniform pure state: iid complex Gaussian amplitudes, normalized.
PureState random_pure(int qubit_count, std::mt19937_64& rng);

/// Induced-measure mixed state: a uniform pure state on a doubled register
/// with half traced out, computed in its equivalent Ginibre form
/// G G^dagger / Tr(G G^dagger).
DensityOperator random_density(const Register& reg, std::mt19937_64& rng);

/// Uniform random teleportation input (Haar on one qubit).
InputAmplitudes random_amplitudes(std::mt19937_64& rng);

} // namespace qtel
