#pragma once

#include <optional>
#include <string>

#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

namespace numrad {

enum class Ensemble { ginibre, hermitian, normal, nilpotent, contraction, psd };

std::optional<Ensemble> parse_ensemble(const std::string& name);
const char* ensemble_name(Ensemble e);

// Draws one matrix from the ensemble:
//   ginibre      independent standard complex Gaussian entries
//   hermitian    (G + G*) / 2
//   normal       V diag(complex Gaussians) V*, V unitary from a ginibre QR
//   nilpotent    strictly upper-triangular ginibre
//   contraction  ginibre scaled to operator norm <= 1
//   psd          G*G
ComplexMatrix random_matrix(Rng& rng, std::size_t dim, Ensemble ensemble);

// Unit vector with complex Gaussian direction.
cvec random_unit_vector(Rng& rng, std::size_t dim);

} // namespace numrad
