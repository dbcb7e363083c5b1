#ifndef SPINORLAB_MATRIX_HPP
#define SPINORLAB_MATRIX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>

#include "spinorlab/error.hpp"

namespace spinorlab {

using complex = std::complex<double>;

inline constexpr complex I_unit{0.0, 1.0};

template <std::size_t N>
class Vector;

/// Dense N×N complex matrix, row-major. Only N = 2 and N = 4 are used.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only 2x2 and 4x4 matrices are supported");

 public:
  static constexpr std::size_t size = N;

  Matrix() { data_.fill(complex{}); }

  Matrix(std::initializer_list<std::initializer_list<complex>> rows) {
    data_.fill(complex{});
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (const auto& v : row) {
        if (i < N && j < N) (*this)(i, j) = v;
        ++j;
      }
      ++i;
    }
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  complex trace() const {
    complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, complex s) { return a *= s; }
  friend Matrix operator/(Matrix a, complex s) { return a *= (1.0 / s); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  /// Frobenius norm.
  double norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// Induced 1-norm (max column sum).
  double norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < N; ++i) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  bool is_finite() const {
    for (const auto& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

 private:
  std::array<complex, N * N> data_;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// Column vector of N complex entries.
template <std::size_t N>
class Vector {
 public:
  Vector() { data_.fill(complex{}); }
  Vector(std::initializer_list<complex> v) {
    data_.fill(complex{});
    std::size_t i = 0;
    for (const auto& x : v)
      if (i < N) data_[i++] = x;
  }
  explicit Vector(const std::array<complex, N>& v) : data_(v) {}

  complex& operator[](std::size_t i) { return data_[i]; }
  const complex& operator[](std::size_t i) const { return data_[i]; }
  const std::array<complex, N>& array() const { return data_; }

  Vector& operator+=(const Vector& o) {
    for (std::size_t i = 0; i < N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    for (std::size_t i = 0; i < N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vector& operator*=(complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(complex s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, complex s) { return a *= s; }

  friend Vector operator*(const Matrix<N>& m, const Vector& v) {
    Vector r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
    return r;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

 private:
  std::array<complex, N> data_;
};

using Vector2 = Vector<2>;
using Vector4 = Vector<4>;

/// Hermitian inner product a†b.
template <std::size_t N>
complex inner(const Vector<N>& a, const Vector<N>& b) {
  complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Outer product a b†.
template <std::size_t N>
Matrix<N> outer(const Vector<N>& a, const Vector<N>& b) {
  Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
Matrix<N> anticommutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b + b * a;
}

/// Assemble [[a, b], [c, d]] from 2×2 blocks.
inline Matrix4 from_blocks(const Matrix2& a, const Matrix2& b, const Matrix2& c,
                           const Matrix2& d) {
  Matrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

inline Matrix4 block_diag(const Matrix2& a, const Matrix2& d) {
  return from_blocks(a, Matrix2{}, Matrix2{}, d);
}

inline Matrix4 block_offdiag(const Matrix2& upper, const Matrix2& lower) {
  return from_blocks(Matrix2{}, upper, lower, Matrix2{});
}

/// 2×2 block (r, c) of a 4×4 matrix, r, c ∈ {0, 1}.
inline Matrix2 block(const Matrix4& m, std::size_t r, std::size_t c) {
  Matrix2 b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(2 * r + i, 2 * c + j);
  return b;
}

inline Vector4 stack(const Vector2& upper, const Vector2& lower) {
  return Vector4{upper[0], upper[1], lower[0], lower[1]};
}

/// Solve A X = B by LU with partial pivoting. Throws numerical_error on a
/// singular pivot.
template <std::size_t N>
Matrix<N> solve(Matrix<N> a, Matrix<N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) == 0.0) throw numerical_error("solve: singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(b(k, j), b(piv, j));
      }
    for (std::size_t i = k + 1; i < N; ++i) {
      const complex f = a(i, k) / a(k, k);
      if (f == complex{}) continue;
      for (std::size_t j = k; j < N; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < N; ++j) b(i, j) -= f * b(k, j);
    }
  }
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t ii = N; ii-- > 0;) {
      complex s = b(ii, c);
      for (std::size_t j = ii + 1; j < N; ++j) s -= a(ii, j) * b(j, c);
      b(ii, c) = s / a(ii, ii);
    }
  return b;
}

template <std::size_t N>
complex determinant(Matrix<N> a) {
  complex det{1.0};
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) == 0.0) return complex{};
    if (piv != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < N; ++i) {
      const complex f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < N; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Matrix<N>& m) {
  for (std::size_t i = 0; i < N; ++i) {
    os << (i == 0 ? "[[" : " [");
    for (std::size_t j = 0; j < N; ++j) os << m(i, j) << (j + 1 < N ? ", " : "");
    os << (i + 1 < N ? "]\n" : "]]");
  }
  return os;
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Vector<N>& v) {
  os << '(';
  for (std::size_t i = 0; i < N; ++i) os << v[i] << (i + 1 < N ? ", " : "");
  return os << ')';
}

}  // namespace spinorlab

#endif  // SPINORLAB_MATRIX_HPP
