#pragma once

#include "tsym/decomposition.hpp"
#include "tsym/sampling.hpp"

namespace tsym::test {

inline Scalar random_nonzero(Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

/// A random element of Q(w) with all four coordinates populated.
inline Scalar random_full(Rng& rng) {
  auto q = [&] { return Rational(rng.uniform(-9, 9), rng.uniform(1, 5)); };
  return Scalar(q(), q(), q(), q());
}

inline GElem random_g(Rng& rng) {
  return group_elements()[static_cast<std::size_t>(rng.uniform(0, 143))];
}

}  // namespace tsym::test
