#ifndef POLARFOL_EIGEN_HPP
#define POLARFOL_EIGEN_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "polarfol/matrix.hpp"
#include "polarfol/subspace.hpp"

namespace polarfol {

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

/// Horner evaluation of an integer polynomial mod p.
inline uint64_t horner_mod(const std::vector<uint64_t>& coeffs_mod, uint64_t z_mod, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = coeffs_mod.size(); i-- > 0;) {
    acc = mulmod_u64(acc, z_mod, p);
    acc += coeffs_mod[i];
    if (acc >= p) acc -= p;
  }
  return acc;
}

}  // namespace detail

/// All distinct rational eigenvalues of m with their eigenspaces, in
/// ascending order of eigenvalue.
///
/// Requires an all-rational, diagonalizable spectrum: denominators are
/// cleared so eigenvalues of the resulting integer matrix are integers,
/// candidates are bounded by the Gershgorin radius and screened against the
/// characteristic polynomial modulo two primes before an exact confirmation;
/// every surviving value is certified by an eigenspace (kernel) computation.
/// If eigenspace dimensions do not add up to the ambient dimension the
/// spectrum was not rational-diagonalizable and an error is raised.
inline std::vector<std::pair<Scalar, Subspace>> rational_eigenvalues(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("rational_eigenvalues: not square");
  const size_t n = m.rows();
  if (n == 0) return {};

  mpz_class d(1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d = lcm(d, m(i, j).den());
  const Scalar ds{d};

  Mat dm(n, n);
  mpz_class radius(0);
  for (size_t i = 0; i < n; ++i) {
    mpz_class row_sum(0);
    for (size_t j = 0; j < n; ++j) {
      dm(i, j) = ds * m(i, j);
      row_sum += abs(dm(i, j).num());
    }
    radius = std::max(radius, row_sum);
  }
  if (!radius.fits_slong_p() || radius.get_si() > 100000000L)
    throw Error("rational_eigenvalues: eigenvalue bound too large");
  const long bound = radius.get_si();

  const std::vector<Scalar> poly = charpoly(dm);
  std::vector<mpz_class> c(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].is_integer()) throw Error("rational_eigenvalues: non-integer charpoly");
    c[i] = poly[i].num();
  }

  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;

  std::vector<long> roots;
  if (low > 0) roots.push_back(0);

  const uint64_t primes[2] = {1000003ull, 998244353ull};
  std::vector<uint64_t> cmod[2];
  for (int k = 0; k < 2; ++k) {
    cmod[k].resize(c.size() - low);
    for (size_t i = low; i < c.size(); ++i)
      cmod[k][i - low] = mpz_fdiv_ui(c[i].get_mpz_t(), primes[k]);
  }

  for (long z = -bound; z <= bound; ++z) {
    if (z == 0) continue;
    bool pass = true;
    for (int k = 0; k < 2 && pass; ++k) {
      const uint64_t p = primes[k];
      const uint64_t zm = static_cast<uint64_t>(((z % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p));
      pass = detail::horner_mod(cmod[k], zm, p) == 0;
    }
    if (!pass) continue;
    mpz_class acc(0);
    for (size_t i = c.size(); i-- > low;) {
      acc *= z;
      acc += c[i];
    }
    if (acc == 0) roots.push_back(z);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<std::pair<Scalar, Subspace>> out;
  size_t total = 0;
  for (long z : roots) {
    const Scalar lambda = Scalar(z) / ds;
    Mat shifted = m;
    for (size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Subspace space = kernel(shifted);
    if (space.is_zero()) continue;
    total += space.dim();
    out.emplace_back(lambda, std::move(space));
  }
  if (total != n) throw Error("non-rational or non-semisimple spectrum");
  return out;
}

}  // namespace polarfol

#endif  // POLARFOL_EIGEN_HPP
