#ifndef POLARFOL_CATALOG_HPP
#define POLARFOL_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "polarfol/lie_algebra.hpp"

namespace polarfol {

namespace catalog_detail {

/// Gaussian-rational scalar, for complex matrix families realified over {1, i}.
struct CScalar {
  Scalar re, im;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CScalar conj() const { return {re, -im}; }
  friend CScalar operator+(const CScalar& a, const CScalar& b) { return {a.re + b.re, a.im + b.im}; }
  friend CScalar operator-(const CScalar& a, const CScalar& b) { return {a.re - b.re, a.im - b.im}; }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

struct CMat {
  size_t n = 0;
  std::vector<CScalar> d;
  explicit CMat(size_t n_) : n(n_), d(n_ * n_) {}
  CScalar& at(size_t i, size_t j) { return d[i * n + j]; }
  const CScalar& at(size_t i, size_t j) const { return d[i * n + j]; }

  CMat conj_transpose() const {
    CMat r(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) r.at(i, j) = at(j, i).conj();
    return r;
  }

  CMat negated() const {
    CMat r(n);
    for (size_t i = 0; i < n * n; ++i) r.d[i] = CScalar{-d[i].re, -d[i].im};
    return r;
  }

  friend CMat commutator(const CMat& a, const CMat& b) {
    CMat r(a.n);
    for (size_t i = 0; i < a.n; ++i)
      for (size_t k = 0; k < a.n; ++k) {
        if (!a.at(i, k).is_zero())
          for (size_t j = 0; j < a.n; ++j)
            if (!b.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        if (!b.at(i, k).is_zero())
          for (size_t j = 0; j < a.n; ++j)
            if (!a.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) - b.at(i, k) * a.at(k, j);
      }
    return r;
  }

  Vec flatten() const {
    Vec v(2 * n * n);
    for (size_t i = 0; i < n * n; ++i) {
      v[2 * i] = d[i].re;
      v[2 * i + 1] = d[i].im;
    }
    return v;
  }
};

inline CMat unit(size_t n, size_t i, size_t j, bool imaginary = false) {
  CMat m(n);
  (imaginary ? m.at(i, j).im : m.at(i, j).re) = Scalar(1);
  return m;
}

inline CMat add(const CMat& a, const CMat& b) {
  CMat r(a.n);
  for (size_t i = 0; i < a.n * a.n; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

struct RawBasis {
  size_t matrix_size = 0;
  std::vector<CMat> mats;
  std::vector<std::string> labels;
  std::vector<size_t> a_indices;
};

}  // namespace catalog_detail

/// One of the classical families, or a direct sum of two of them.
struct FamilySpec {
  enum class Kind { SL_R, SU, SO, SP_R, Sum } kind = Kind::SL_R;
  int n = 0;  // SL_R(n), SP_R(2n) block size n
  int p = 0, q = 0;
  std::vector<FamilySpec> summands;

  std::string name() const;
  static FamilySpec parse(const std::string& name);
  void validate() const;
};

struct BuiltAlgebra {
  std::string name;
  LieAlgebraData g;
  Subspace canonical_a;
};

namespace catalog_detail {

/// Turns a raw matrix basis into coordinate structure constants, Cartan
/// involution theta(X) = -X^* (conjugate transpose), Killing form from
/// ad-traces, and the inner product G = -B theta.
inline BuiltAlgebra finish(const std::string& name, const RawBasis& rb) {
  const size_t dim = rb.mats.size();
  const size_t flat = 2 * rb.matrix_size * rb.matrix_size;

  Mat basis_cols(flat, dim);
  for (size_t j = 0; j < dim; ++j) {
    const Vec f = rb.mats[j].flatten();
    for (size_t i = 0; i < flat; ++i) basis_cols(i, j) = f[i];
  }
  Mat gram(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      Scalar s;
      for (size_t k = 0; k < flat; ++k)
        if (!basis_cols(k, i).is_zero() && !basis_cols(k, j).is_zero())
          s += basis_cols(k, i) * basis_cols(k, j);
      gram(i, j) = s;
    }
  const Mat gram_inv = inverse(gram);

  const auto coords_of = [&](const CMat& m) {
    const Vec f = m.flatten();
    Vec rhs(dim);
    for (size_t j = 0; j < dim; ++j) {
      Scalar s;
      for (size_t k = 0; k < flat; ++k)
        if (!basis_cols(k, j).is_zero() && !f[k].is_zero()) s += basis_cols(k, j) * f[k];
      rhs[j] = s;
    }
    const Vec c = gram_inv * rhs;
    if (basis_cols * c != f) throw Error("catalog: matrix not in the span of the basis");
    return c;
  };

  LieAlgebraData g;
  g.dim = dim;
  g.basis_labels = rb.labels;
  g.table.assign(dim, std::vector<Vec>(dim, Vec(dim)));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j) {
      const Vec c = coords_of(commutator(rb.mats[i], rb.mats[j]));
      g.table[i][j] = c;
      for (size_t k = 0; k < dim; ++k) g.table[j][i][k] = -c[k];
    }

  g.theta = Mat(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    const Vec c = coords_of(rb.mats[j].conj_transpose().negated());
    for (size_t i = 0; i < dim; ++i) g.theta(i, j) = c[i];
  }

  g.killing = Mat(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i; j < dim; ++j) {
      Scalar tr;
      for (size_t k = 0; k < dim; ++k)
        for (size_t l = 0; l < dim; ++l) {
          const Scalar& a = g.table[i][l][k];
          if (a.is_zero()) continue;
          const Scalar& b = g.table[j][k][l];
          if (!b.is_zero()) tr += a * b;
        }
      g.killing(i, j) = tr;
      g.killing(j, i) = tr;
    }

  g.metric = Scalar(-1) * (g.killing * g.theta);
  g.k_space = kernel(g.theta - Mat::identity(dim));
  g.p_space = kernel(g.theta + Mat::identity(dim));

  std::vector<Vec> a_rows;
  for (size_t idx : rb.a_indices) a_rows.push_back(unit_vec(dim, idx));
  Subspace a = Subspace::span_of(a_rows, dim);

  // Construction-time certificates: semisimplicity, the involution, and
  // maximality of a as an abelian subspace of p.
  if (det(g.killing).is_zero()) throw Error("catalog: degenerate Killing form");
  if (g.theta * g.theta != Mat::identity(dim)) throw Error("catalog: theta not an involution");
  if (!check_metric_positive_definite(g)) throw Error("catalog: metric not positive definite");
  if (!g.p_space.contains(a)) throw Error("catalog: a not contained in p");
  if (!is_abelian(g, a)) throw Error("catalog: a not abelian");
  if (centralizer_in(g, a, g.p_space) != a) throw Error("catalog: a not maximal abelian in p");

  return BuiltAlgebra{name, std::move(g), std::move(a)};
}

inline RawBasis basis_sl(int n) {
  RawBasis rb;
  rb.matrix_size = static_cast<size_t>(n);
  for (int i = 0; i + 1 < n; ++i) {
    CMat h = add(unit(n, i, i), unit(n, i + 1, i + 1).negated());
    rb.a_indices.push_back(rb.mats.size());
    rb.mats.push_back(std::move(h));
    rb.labels.push_back("H" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rb.mats.push_back(unit(n, i, j));
      rb.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return rb;
}

inline RawBasis basis_su(int p, int q) {
  const int n = p + q;
  RawBasis rb;
  rb.matrix_size = static_cast<size_t>(n);
  // Off-diagonal block (the p part): real and imaginary unit entries.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      CMat re = add(unit(n, i, p + j), unit(n, p + j, i));
      if (i == j) rb.a_indices.push_back(rb.mats.size());
      rb.mats.push_back(std::move(re));
      rb.labels.push_back("P" + std::to_string(i + 1) + std::to_string(j + 1));
      CMat im = add(unit(n, i, p + j, true), unit(n, p + j, i, true).negated());
      rb.mats.push_back(std::move(im));
      rb.labels.push_back("Q" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  // Traceless imaginary diagonals.
  for (int k = 0; k + 1 < n; ++k) {
    rb.mats.push_back(add(unit(n, k, k, true), unit(n, k + 1, k + 1, true).negated()));
    rb.labels.push_back("T" + std::to_string(k + 1));
  }
  // Anti-hermitian off-diagonals inside each diagonal block.
  const auto block = [&](int lo, int hi, const char* tag) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) {
        rb.mats.push_back(add(unit(n, i, j), unit(n, j, i).negated()));
        rb.labels.push_back(std::string(tag) + "r" + std::to_string(i + 1) + std::to_string(j + 1));
        rb.mats.push_back(add(unit(n, i, j, true), unit(n, j, i, true)));
        rb.labels.push_back(std::string(tag) + "i" + std::to_string(i + 1) + std::to_string(j + 1));
      }
  };
  block(0, p, "U");
  block(p, n, "V");
  return rb;
}

inline RawBasis basis_so(int p, int q) {
  const int n = p + q;
  RawBasis rb;
  rb.matrix_size = static_cast<size_t>(n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      if (i == j) rb.a_indices.push_back(rb.mats.size());
      rb.mats.push_back(add(unit(n, i, p + j), unit(n, p + j, i)));
      rb.labels.push_back("P" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const auto rot_block = [&](int lo, int hi, const char* tag) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) {
        rb.mats.push_back(add(unit(n, i, j), unit(n, j, i).negated()));
        rb.labels.push_back(std::string(tag) + std::to_string(i + 1) + std::to_string(j + 1));
      }
  };
  rot_block(0, p, "R");
  rot_block(p, n, "S");
  return rb;
}

inline RawBasis basis_sp(int n) {
  const int m = 2 * n;
  RawBasis rb;
  rb.matrix_size = static_cast<size_t>(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) rb.a_indices.push_back(rb.mats.size());
      rb.mats.push_back(add(unit(m, i, j), unit(m, n + j, n + i).negated()));
      rb.labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      CMat b = i == j ? unit(m, i, n + i) : add(unit(m, i, n + j), unit(m, j, n + i));
      rb.mats.push_back(std::move(b));
      rb.labels.push_back("B" + std::to_string(i + 1) + std::to_string(j + 1));
      CMat c = i == j ? unit(m, n + i, i) : add(unit(m, n + i, j), unit(m, n + j, i));
      rb.mats.push_back(std::move(c));
      rb.labels.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return rb;
}

inline BuiltAlgebra direct_sum(const std::string& name, const BuiltAlgebra& x, const BuiltAlgebra& y) {
  const size_t d1 = x.g.dim, d2 = y.g.dim, dim = d1 + d2;
  LieAlgebraData g;
  g.dim = dim;
  for (const auto& l : x.g.basis_labels) g.basis_labels.push_back("l." + l);
  for (const auto& l : y.g.basis_labels) g.basis_labels.push_back("r." + l);
  g.table.assign(dim, std::vector<Vec>(dim, Vec(dim)));
  for (size_t i = 0; i < d1; ++i)
    for (size_t j = 0; j < d1; ++j)
      for (size_t k = 0; k < d1; ++k) g.table[i][j][k] = x.g.table[i][j][k];
  for (size_t i = 0; i < d2; ++i)
    for (size_t j = 0; j < d2; ++j)
      for (size_t k = 0; k < d2; ++k) g.table[d1 + i][d1 + j][d1 + k] = y.g.table[i][j][k];

  const auto embed_block = [&](Mat& dst, const Mat& a, const Mat& b) {
    for (size_t i = 0; i < d1; ++i)
      for (size_t j = 0; j < d1; ++j) dst(i, j) = a(i, j);
    for (size_t i = 0; i < d2; ++i)
      for (size_t j = 0; j < d2; ++j) dst(d1 + i, d1 + j) = b(i, j);
  };
  g.theta = Mat(dim, dim);
  embed_block(g.theta, x.g.theta, y.g.theta);
  g.killing = Mat(dim, dim);
  embed_block(g.killing, x.g.killing, y.g.killing);
  g.metric = Scalar(-1) * (g.killing * g.theta);
  g.k_space = kernel(g.theta - Mat::identity(dim));
  g.p_space = kernel(g.theta + Mat::identity(dim));

  std::vector<Vec> a_rows;
  const auto embed_rows = [&](const Subspace& s, size_t offset) {
    for (size_t r = 0; r < s.dim(); ++r) {
      Vec v(dim);
      const Vec src = s.basis_vector(r);
      for (size_t k = 0; k < src.size(); ++k) v[offset + k] = src[k];
      a_rows.push_back(std::move(v));
    }
  };
  embed_rows(x.canonical_a, 0);
  embed_rows(y.canonical_a, d1);
  Subspace a = Subspace::span_of(a_rows, dim);
  if (centralizer_in(g, a, g.p_space) != a) throw Error("catalog: a not maximal abelian in p");
  return BuiltAlgebra{name, std::move(g), std::move(a)};
}

}  // namespace catalog_detail

inline void FamilySpec::validate() const {
  switch (kind) {
    case Kind::SL_R:
      if (n < 2) throw Error("invalid family: sl(n,R) needs n >= 2");
      break;
    case Kind::SU:
      if (p < 1 || p > q || p + q < 3) throw Error("invalid family: su(p,q) needs 1 <= p <= q, p+q >= 3");
      break;
    case Kind::SO:
      if (p < 1 || p > q || p + q < 3) throw Error("invalid family: so(p,q) needs 1 <= p <= q, p+q >= 3");
      break;
    case Kind::SP_R:
      if (n < 1) throw Error("invalid family: sp(2n,R) needs n >= 1");
      break;
    case Kind::Sum:
      if (summands.size() != 2) throw Error("invalid family: sum needs two summands");
      for (const auto& s : summands) s.validate();
      break;
  }
}

inline std::string FamilySpec::name() const {
  switch (kind) {
    case Kind::SL_R: return "sl" + std::to_string(n) + "r";
    case Kind::SU: return "su" + std::to_string(p) + std::to_string(q);
    case Kind::SO:
      if (p == 1) return "so1n:" + std::to_string(q);
      return "so" + std::to_string(p) + std::to_string(q);
    case Kind::SP_R: return "sp" + std::to_string(2 * n) + "r";
    case Kind::Sum: return "sum:" + summands[0].name() + "+" + summands[1].name();
  }
  throw Error("unreachable");
}

inline FamilySpec FamilySpec::parse(const std::string& name) {
  FamilySpec s;
  const auto fixed = [&](Kind k, int n, int p, int q) {
    s.kind = k;
    s.n = n;
    s.p = p;
    s.q = q;
    return s;
  };
  if (name == "sl2r") return fixed(Kind::SL_R, 2, 0, 0);
  if (name == "sl3r") return fixed(Kind::SL_R, 3, 0, 0);
  if (name == "sl4r") return fixed(Kind::SL_R, 4, 0, 0);
  if (name == "su21") return fixed(Kind::SU, 0, 1, 2);  // su(2,1) ~ su(1,2)
  if (name == "su22") return fixed(Kind::SU, 0, 2, 2);
  if (name == "su31") return fixed(Kind::SU, 0, 1, 3);  // su(3,1) ~ su(1,3)
  if (name == "so23") return fixed(Kind::SO, 0, 2, 3);
  if (name == "so24") return fixed(Kind::SO, 0, 2, 4);
  if (name == "so25") return fixed(Kind::SO, 0, 2, 5);
  if (name == "sp4r") return fixed(Kind::SP_R, 2, 0, 0);
  if (name.rfind("so1n:", 0) == 0) {
    const int nn = std::stoi(name.substr(5));
    return fixed(Kind::SO, 0, 1, nn);
  }
  if (name.rfind("sum:", 0) == 0) {
    const std::string rest = name.substr(4);
    const size_t plus = rest.find('+');
    if (plus == std::string::npos) throw Error("unknown family '" + name + "'");
    s.kind = Kind::Sum;
    s.summands.push_back(parse(rest.substr(0, plus)));
    s.summands.push_back(parse(rest.substr(plus + 1)));
    return s;
  }
  throw Error("unknown family '" + name + "'");
}

/// The production catalog: every family the verification suites run over.
inline const std::vector<std::string>& catalog_family_names() {
  static const std::vector<std::string> names = {
      "sl2r", "sl3r", "sl4r", "su21", "su22", "su31", "so23",
      "so24", "so25", "so1n:2", "so1n:3", "so1n:4", "sp4r"};
  return names;
}

inline BuiltAlgebra build(const FamilySpec& spec) {
  spec.validate();
  using namespace catalog_detail;
  switch (spec.kind) {
    case FamilySpec::Kind::SL_R: return finish(spec.name(), basis_sl(spec.n));
    case FamilySpec::Kind::SU: return finish(spec.name(), basis_su(spec.p, spec.q));
    case FamilySpec::Kind::SO: return finish(spec.name(), basis_so(spec.p, spec.q));
    case FamilySpec::Kind::SP_R: return finish(spec.name(), basis_sp(spec.n));
    case FamilySpec::Kind::Sum: {
      const BuiltAlgebra a = build(spec.summands[0]);
      const BuiltAlgebra b = build(spec.summands[1]);
      return direct_sum(spec.name(), a, b);
    }
  }
  throw Error("unreachable");
}

inline BuiltAlgebra build(const std::string& family_name) {
  BuiltAlgebra b = build(FamilySpec::parse(family_name));
  b.name = family_name;  // keep the requested spelling (e.g. su31 ~ su13)
  return b;
}

}  // namespace polarfol

#endif  // POLARFOL_CATALOG_HPP
