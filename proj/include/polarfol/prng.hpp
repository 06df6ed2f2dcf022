#ifndef POLARFOL_PRNG_HPP
#define POLARFOL_PRNG_HPP

#include <cstdint>

#include "polarfol/matrix.hpp"
#include "polarfol/subspace.hpp"

namespace polarfol {

/// splitmix64. Self-contained so seeded runs are bit-identical across
/// platforms and standard-library versions.
class Prng {
 public:
  explicit Prng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; fine for parameter sampling.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Small rational with numerator in [-3,3] and denominator in {1,2}.
  Scalar small_scalar() { return Scalar(range(-3, 3), range(1, 2)); }

  /// Nonzero vector in a subspace, with small rational coordinates on its
  /// canonical basis.
  Vec nonzero_in(const Subspace& s) {
    if (s.is_zero()) throw Error("Prng::nonzero_in: zero subspace");
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vec v(s.ambient_dim());
      for (size_t i = 0; i < s.dim(); ++i) vec_axpy(v, small_scalar(), s.basis_vector(i));
      if (!vec_is_zero(v)) return v;
    }
    return s.basis_vector(0);
  }

 private:
  uint64_t state_;
};

}  // namespace polarfol

#endif  // POLARFOL_PRNG_HPP
