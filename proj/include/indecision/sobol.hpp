// Copyright 2026 The Indecision Modeling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INDECISION_SOBOL_HPP_
#define INDECISION_SOBOL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "indecision/random.hpp"
#include "indecision/sobol_directions.hpp"
#include "indecision/types.hpp"

namespace indecision {

// Sobol low-discrepancy sequence with 32-bit resolution, addressable by
// index (Gray-code order, as produced by the Antonov-Saleev recurrence).
// A nonzero seed applies a random digital shift per dimension, which keeps
// the (t, s)-net structure.
class SobolSequence {
 public:
  static constexpr int kBits = 32;

  SobolSequence(std::size_t dim, std::uint64_t seed) : seed_(seed) {
    if (dim == 0) throw ValidationError("Sobol dimension must be >= 1");
    if (dim > detail::kMaxSobolDimension) {
      throw ValidationError("Sobol dimension " + std::to_string(dim) +
                            " exceeds the supported maximum of " +
                            std::to_string(detail::kMaxSobolDimension));
    }
    directions_.resize(dim);
    shifts_.assign(dim, 0);
    for (std::size_t d = 0; d < dim; ++d) {
      directions_[d] = make_directions(detail::kSobolPolynomials[d]);
      if (seed != 0) {
        shifts_[d] = static_cast<std::uint32_t>(derive_seed(seed, d) >> 32);
      }
    }
  }

  std::size_t dimension() const { return directions_.size(); }
  std::uint64_t seed() const { return seed_; }

  // Point number `index` (index 0 is the origin before shifting).
  void point(std::uint64_t index, std::span<double> out) const {
    if (index > UINT32_MAX) throw ValidationError("Sobol index out of range");
    const std::uint32_t gray =
        static_cast<std::uint32_t>(index ^ (index >> 1));
    for (std::size_t d = 0; d < directions_.size(); ++d) {
      std::uint32_t x = shifts_[d];
      std::uint32_t g = gray;
      for (int k = 0; g != 0; ++k, g >>= 1) {
        if (g & 1u) x ^= directions_[d][k];
      }
      out[d] = static_cast<double>(x) * 0x1.0p-32;
    }
  }

  std::vector<double> point(std::uint64_t index) const {
    std::vector<double> out(dimension());
    point(index, out);
    return out;
  }

 private:
  using Directions = std::array<std::uint32_t, kBits>;

  static Directions make_directions(const detail::SobolPolynomial& poly) {
    Directions v{};
    if (poly.degree == 0) {
      for (int k = 0; k < kBits; ++k) v[k] = 1u << (kBits - 1 - k);
      return v;
    }
    const int s = static_cast<int>(poly.degree);
    for (int k = 0; k < s && k < kBits; ++k) {
      v[k] = poly.m[k] << (kBits - 1 - k);
    }
    for (int k = s; k < kBits; ++k) {
      std::uint32_t next = v[k - s] ^ (v[k - s] >> s);
      for (int l = 1; l < s; ++l) {
        if ((poly.a >> (s - 1 - l)) & 1u) next ^= v[k - l];
      }
      v[k] = next;
    }
    return v;
  }

  std::uint64_t seed_;
  std::vector<Directions> directions_;
  std::vector<std::uint32_t> shifts_;
};

// The first n points after the origin (indices 1..n), each in [0, 1)^dim.
inline std::vector<std::vector<double>> sobol_points(std::size_t dim,
                                                     std::size_t n,
                                                     std::uint64_t seed) {
  if (n == 0) throw ValidationError("Sobol point count must be >= 1");
  const SobolSequence seq(dim, seed);
  std::vector<std::vector<double>> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(seq.point(i));
  return out;
}

}  // namespace indecision

#endif  // INDECISION_SOBOL_HPP_
