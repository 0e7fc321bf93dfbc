#pragma once

#include <stdexcept>

namespace tcg {

template <class Visit>
void for_each_window_residue(const SNFDecomposition& decomposition, Visit&& visit) {
  const std::size_t n = decomposition.ambient_rank();
  if (decomposition.rank() != n) throw std::invalid_argument("for_each_window_residue: lattice is not full rank");
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [l, h] = residue_window(decomposition.diag[i]);
    lo[i] = l;
    hi[i] = h;
  }
  IntVector coords = lo;
  for (;;) {
    visit(decomposition.P.apply(coords));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (coords[i] < hi[i]) {
        ++coords[i];
        break;
      }
      coords[i] = lo[i];
    }
    if (i == n) return;
  }
}

}  // namespace tcg
