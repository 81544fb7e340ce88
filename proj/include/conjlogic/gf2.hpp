// Copyright 2026 The conjlogic Authors
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conjlogic/pauli.hpp"

namespace conjlogic {

/// Rank over GF(2) of the stacked (x | z) rows of the given strings. Signs are
/// ignored.
inline std::size_t symplectic_rank(std::span<const Proposition> props) {
  if (props.empty()) {
    return 0;
  }
  const std::size_t n = props.front().size();
  const std::size_t half = Proposition::words_for(n);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(props.size());
  for (const auto &p : props) {
    if (p.size() != n) {
      throw DimensionMismatch(n, p.size());
    }
    std::vector<std::uint64_t> row(p.x_words().begin(), p.x_words().end());
    row.insert(row.end(), p.z_words().begin(), p.z_words().end());
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t w = 0; w < 2 * half && rank < rows.size(); ++w) {
    for (unsigned b = 0; b < 64 && rank < rows.size(); ++b) {
      const std::uint64_t mask = std::uint64_t{1} << b;
      std::size_t pivot = rank;
      while (pivot < rows.size() && (rows[pivot][w] & mask) == 0) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[pivot], rows[rank]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && (rows[r][w] & mask) != 0) {
          for (std::size_t k = w; k < 2 * half; ++k) {
            rows[r][k] ^= rows[rank][k];
          }
        }
      }
      ++rank;
    }
  }
  return rank;
}

}  // namespace conjlogic
