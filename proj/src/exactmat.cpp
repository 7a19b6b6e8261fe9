#include "k3lat/exactmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace k3lat {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw MathError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw MathError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw MathError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <class T>
void Matrix<T>::set_column(std::size_t j, const std::vector<T>& v) {
  if (v.size() != rows_) throw MathError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw MathError("matrix product dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const T& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

template <class T>
Matrix<T> Matrix<T>::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix sum dimension mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

template <class T>
Matrix<T> Matrix<T>::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix difference dimension mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

template <class T>
std::vector<T> Matrix<T>::operator*(const std::vector<T>& v) const {
  if (v.size() != cols_) throw MathError("matrix-vector dimension mismatch");
  std::vector<T> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

template <class T>
bool Matrix<T>::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

template <class T>
Matrix<T> Matrix<T>::columns(std::size_t first, std::size_t count) const {
  Matrix r(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

template <class T>
Matrix<T> Matrix<T>::hstack(const Matrix& other) const {
  if (rows_ != other.rows_ && !(cols_ == 0 || other.cols_ == 0))
    throw MathError("hstack row mismatch");
  std::size_t rows = cols_ == 0 ? other.rows_ : rows_;
  Matrix r(rows, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
  }
  return r;
}

template <class T>
bool Matrix<T>::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template class Matrix<Int>;
template class Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw MathError("non-integral entry " + m(i, j).get_str());
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix m(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

Int bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y) {
  Int s = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (y[j] != 0) row += gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Rat bilinear(const RatMatrix& gram, const RatVector& x, const RatVector& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (y[j] != 0) row += gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const Int& d) { return d != 0; }));
}

IntVector SnfResult::nontrivial() const {
  IntVector out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += k * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += k * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SnfResult snf(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    // Global pivot: smallest nonzero |entry| in the trailing block.
    std::size_t pi = m, pj = n;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (pi == m || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    a.swap_rows(t, pi);
    left.swap_rows(t, pi);
    a.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);  // truncating
        add_row_multiple(a, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        add_col_multiple(a, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Re-pivot on the smallest remainder in row t / column t.
        std::size_t bi = t, bj = t;
        Int b = abs(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < b) {
            b = abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < b) {
            b = abs(a(t, j));
            bi = t;
            bj = j;
          }
        if (bi != t) {
          a.swap_rows(t, bi);
          left.swap_rows(t, bi);
        }
        if (bj != t) {
          a.swap_cols(t, bj);
          right.swap_cols(t, bj);
        }
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row_multiple(a, t, bad, Int(1));
      add_row_multiple(left, t, bad, Int(1));
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }

  SnfResult r{std::move(left), std::move(right), IntVector(steps)};
  for (std::size_t i = 0; i < steps; ++i) r.diag[i] = a(i, i);
  return r;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HnfResult hnf(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      Int a = h(row, col), b = h(i, col), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int ag = a / g, bg = b / g;
      for (IntMatrix* mat : {&h, &u}) {
        for (std::size_t j = 0; j < mat->cols(); ++j) {
          Int x = (*mat)(row, j), y = (*mat)(i, j);
          (*mat)(row, j) = s * x + t * y;
          (*mat)(i, j) = ag * y - bg * x;
        }
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      if (q == 0) continue;
      add_row_multiple(h, i, row, -q);
      add_row_multiple(u, i, row, -q);
    }
    ++row;
  }
  return {std::move(h), std::move(u), row};
}

IntMatrix kernel_saturated(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  SnfResult s = snf(a);
  std::size_t r = s.rank();
  if (r == n) return IntMatrix(n, 0);
  IntMatrix k = s.right.columns(r, n - r);
  // Echelonize for a stable, small representative of the same saturated span.
  HnfResult h = hnf(k.transpose());
  return h.hermite.transpose();
}

// ---------------------------------------------------------------------------
// Signature, determinant, rank

Signature signature_symmetric(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw MathError("signature of a non-symmetric matrix");
  RatMatrix g = to_rational(gram);
  const std::size_t n = g.rows();
  Signature sig;
  std::size_t t = 0;
  while (t < n) {
    std::size_t p = n;
    for (std::size_t i = t; i < n; ++i)
      if (g(i, i) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: look for an off-diagonal entry and replace e_i by e_i + e_j.
      std::size_t oi = n, oj = n;
      for (std::size_t i = t; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (g(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += static_cast<int>(n - t);
        break;
      }
      for (std::size_t k = 0; k < n; ++k) g(oi, k) += g(oj, k);
      for (std::size_t k = 0; k < n; ++k) g(k, oi) += g(k, oj);
      p = oi;
    }
    g.swap_rows(t, p);
    g.swap_cols(t, p);
    const Rat piv = g(t, t);
    if (piv > 0)
      ++sig.plus;
    else
      ++sig.minus;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (g(i, t) == 0) continue;
      Rat f = g(i, t) / piv;
      for (std::size_t j = t; j < n; ++j) g(i, j) -= f * g(t, j);
      for (std::size_t j = t; j < n; ++j) g(j, i) = g(i, j);
    }
    ++t;
  }
  return sig;
}

Int det_exact(const IntMatrix& input) {
  if (!input.is_square()) throw MathError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    Rat inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rat det_rational(const RatMatrix& input) {
  if (!input.is_square()) throw MathError("determinant of a non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank_of(const RatMatrix& a) {
  RatMatrix c = a;
  return rref(c, c.cols()).size();
}

std::size_t rank_of(const IntMatrix& a) { return snf(a).rank(); }

RatMatrix rational_solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw MathError("rational_solve: row mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug = a.hstack(b);
  auto pivots = rref(aug, aug.cols());
  for (std::size_t p : pivots)
    if (p >= n) throw MathError("inconsistent system");
  if (pivots.size() < n) throw MathError("non-square ambiguous solve");
  RatMatrix x(n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, n + j);
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw MathError("inverse of a non-square matrix");
  try {
    return rational_solve(a, RatMatrix::identity(a.rows()));
  } catch (const MathError&) {
    throw MathError("singular matrix");
  }
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace k3lat
