#ifndef POLARFOL_MATRIX_HPP
#define POLARFOL_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "polarfol/rational.hpp"

namespace polarfol {

using Vec = std::vector<Scalar>;

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vec_add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vec_sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// a += c*b
inline void vec_axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw Error("vec_axpy: size mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

/// Dense matrix of exact rationals, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    d_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("Mat: ragged initializer");
      for (const auto& x : r) d_.push_back(x);
    }
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("Mat: ragged rows");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

  Vec row(size_t i) const { return Vec(d_.begin() + i * cols_, d_.begin() + (i + 1) * cols_); }

  void set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) throw Error("Mat: row size mismatch");
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void swap_rows(size_t i, size_t k) {
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  void swap_cols(size_t j, size_t k) {
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Scalar trace() const {
    if (rows_ != cols_) throw Error("trace: not square");
    Scalar t;
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Mat+: shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Mat-: shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
    return r;
  }

  friend Mat operator*(const Scalar& c, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = c * a.d_[i];
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error("Mat*: shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  /// Matrix-vector product M*v.
  friend Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols_ != v.size()) throw Error("Mat*Vec: shape mismatch");
    Vec r(a.rows_);
    for (size_t i = 0; i < a.rows_; ++i) {
      Scalar s;
      for (size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) s += a(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

 private:
  size_t rows_, cols_;
  std::vector<Scalar> d_;
};

/// x^T G y for a bilinear form G.
inline Scalar form_apply(const Mat& g, const Vec& x, const Vec& y) {
  if (g.rows() != x.size() || g.cols() != y.size()) throw Error("form_apply: shape mismatch");
  Scalar s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar row;
    for (size_t j = 0; j < y.size(); ++j)
      if (!g(i, j).is_zero() && !y[j].is_zero()) row += g(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

/// Reduced row-echelon form. Preserves the row space; pivot entries are 1 and
/// are the only nonzero entries in their columns. Zero rows sink to the bottom.
/// Optionally reports the pivot column of each nonzero row.
inline Mat rref(Mat m, std::vector<size_t>* pivot_cols = nullptr) {
  const size_t rows = m.rows(), cols = m.cols();
  if (pivot_cols) pivot_cols->clear();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv == rows) continue;
    if (piv != r) m.swap_rows(piv, r);
    const Scalar inv = m(r, c).inverse();
    for (size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

inline size_t rank(const Mat& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv.size();
}

/// Basis of {v : m v = 0}, one kernel vector per row. Rows are the standard
/// free-variable solutions read off the RREF, so the result is canonical.
inline Mat kernel_basis(const Mat& m) {
  std::vector<size_t> piv;
  const Mat r = rref(m, &piv);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n);
    v[c] = Scalar(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, c);
    out.push_back(std::move(v));
  }
  return Mat::from_rows(out);
}

/// Solves A x = b. Returns nullopt when inconsistent; for underdetermined
/// systems returns the solution with all free variables set to zero.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw Error("solve: shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<size_t> piv;
  const Mat r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

/// Determinant by exact Gaussian elimination with row swaps.
inline Scalar det(Mat m) {
  if (m.rows() != m.cols()) throw Error("det: not square");
  const size_t n = m.rows();
  Scalar d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv == n) return Scalar(0);
    if (piv != c) {
      m.swap_rows(piv, c);
      d = -d;
    }
    d *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

/// Sylvester criterion: every leading principal minor positive. Elimination
/// without row swaps; a nonpositive pivot ends the test.
inline bool is_positive_definite(Mat m) {
  if (m.rows() != m.cols()) throw Error("is_positive_definite: not square");
  const size_t n = m.rows();
  for (size_t c = 0; c < n; ++c) {
    if (m(c, c).sign() <= 0) return false;
    const Scalar inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return true;
}

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("inverse: not square");
  const size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  std::vector<size_t> piv;
  const Mat r = rref(aug, &piv);
  if (piv.size() != n || piv[n - 1] != n - 1) throw Error("inverse: singular matrix");
  Mat out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

/// Coefficients of det(x I - m), degree-ascending (size n+1, monic).
/// Similarity reduction to upper Hessenberg form, then the standard
/// leading-principal-minor recurrence.
inline std::vector<Scalar> charpoly(Mat m) {
  if (m.rows() != m.cols()) throw Error("charpoly: not square");
  const size_t n = m.rows();
  if (n == 0) return {Scalar(1)};

  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = n;
    for (size_t i = j + 1; i < n; ++i)
      if (!m(i, j).is_zero()) { piv = i; break; }
    if (piv == n) continue;
    if (piv != j + 1) {
      m.swap_rows(piv, j + 1);
      m.swap_cols(piv, j + 1);
    }
    const Scalar inv = m(j + 1, j).inverse();
    for (size_t i = j + 2; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      const Scalar f = m(i, j) * inv;
      for (size_t c = 0; c < n; ++c) m(i, c) -= f * m(j + 1, c);
      for (size_t r = 0; r < n; ++r) m(r, j + 1) += f * m(r, i);
    }
  }

  // p[k] = charpoly of the leading k x k block of the Hessenberg matrix.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar(1)};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<Scalar> pk(k + 1);
    // (x - m[k-1][k-1]) * p[k-1]
    for (size_t i = 0; i < p[k - 1].size(); ++i) {
      pk[i + 1] += p[k - 1][i];
      pk[i] -= m(k - 1, k - 1) * p[k - 1][i];
    }
    Scalar subdiag_prod(1);
    for (size_t mm = 1; mm < k; ++mm) {
      subdiag_prod *= m(k - mm, k - mm - 1);
      if (subdiag_prod.is_zero()) break;
      const Scalar coef = m(k - mm - 1, k - 1) * subdiag_prod;
      if (coef.is_zero()) continue;
      for (size_t i = 0; i < p[k - mm - 1].size(); ++i) pk[i] -= coef * p[k - mm - 1][i];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

}  // namespace polarfol

#endif  // POLARFOL_MATRIX_HPP
