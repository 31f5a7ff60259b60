#pragma once

// The built-in algebras, embedded so that no file access is needed.
//
//   ALG-A   two layers of three arrows with six quadratic relations
//   ALG-B   1 <- 2 <- 3 modulo ab
//   ALG-B0  1 <- 2 <- 3, no relations
//   ALG-C   a: 1 -> 2, b, c: 2 -> 1, all paths of length 2 vanish
//   ALG-K   Kronecker quiver

#include "taureg/algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace taureg {

std::vector<std::string> fixture_names();

/// .qa source of a fixture; throws std::out_of_range for unknown names.
std::string_view fixture_source(std::string_view name);

/// "alg_a.qa" for "ALG-A".
std::string fixture_file_name(std::string_view name);

template <typename Scalar>
AlgebraPtr<Scalar> fixture_algebra(std::string_view name) {
  return build_algebra<Scalar>(parse_quiver(fixture_source(name)));
}

}  // namespace taureg
