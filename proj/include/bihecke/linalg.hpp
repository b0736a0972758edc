#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bihecke/errors.hpp"

namespace bihecke {

// Field policies used by the generic elimination code below.
struct RationalField {
  using value_type = mpq_class;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return mpq_class(mpz_class(std::to_string(x))); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  // acc -= c * x
  void sub_mul(value_type& acc, const value_type& c, const value_type& x) const { acc -= c * x; }
};

struct PrimeField {
  using value_type = std::uint64_t;
  std::uint64_t p;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const {
    long long r = x % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const { return pow(a, p - 2); }
  void sub_mul(value_type& acc, value_type c, value_type x) const { acc = sub(acc, mul(c, x)); }
  // Representative in (-p/2, p/2].
  long long to_signed(value_type v) const {
    return v > p / 2 ? -static_cast<long long>(p - v) : static_cast<long long>(v);
  }
};

// Fixed primes below 2^61 for modular mode.
inline constexpr std::uint64_t kModularPrimes[3] = {2305843009213693951ull, 2305843009213693921ull,
                                                    2305843009213693907ull};

// Dense row-major matrix.
template <class T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  Matrix transposed() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols != o.rows) throw DomainError("matrix product: dimension mismatch");
    Matrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const T& x = (*this)(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
};

using RationalMatrix = Matrix<mpq_class>;
using IntegerMatrix = Matrix<mpz_class>;

// Subspace of F^n kept in fully reduced row echelon form.
template <class F>
class EchelonBasis {
 public:
  using V = typename F::value_type;
  EchelonBasis(F f, std::size_t n) : f_(f), n_(n) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::vector<V>>& vectors() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // Reduce v against the basis in place.
  void reduce(std::vector<V>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      V c = v[piv_[i]];
      if (f_.is_zero(c)) continue;
      const auto& r = rows_[i];
      for (std::size_t j = 0; j < n_; ++j)
        if (!f_.is_zero(r[j])) f_.sub_mul(v[j], c, r[j]);
    }
  }
  bool contains(std::vector<V> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }
  // Adds v if it is independent of the basis; returns whether it was added.
  bool insert(std::vector<V> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && f_.is_zero(v[p])) ++p;
    if (p == n_) return false;
    V inv = f_.inv(v[p]);
    for (auto& x : v)
      if (!f_.is_zero(x)) x = f_.mul(x, inv);
    for (auto& r : rows_) {
      V c = r[p];
      if (f_.is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!f_.is_zero(v[j])) f_.sub_mul(r[j], c, v[j]);
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  // Basis of the complement coordinates: solutions x of <row_i, x> = 0 for all i.
  std::vector<std::vector<V>> kernel() const {
    std::vector<bool> is_piv(n_, false);
    for (auto p : piv_) is_piv[p] = true;
    std::vector<std::vector<V>> out;
    for (std::size_t free = 0; free < n_; ++free) {
      if (is_piv[free]) continue;
      std::vector<V> x(n_, f_.zero());
      x[free] = f_.one();
      for (std::size_t i = 0; i < rows_.size(); ++i) x[piv_[i]] = f_.sub(f_.zero(), rows_[i][free]);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  F f_;
  std::size_t n_;
  std::vector<std::vector<V>> rows_;
  std::vector<std::size_t> piv_;
};

// Right kernel {x : A x = 0} of a list of rows, each of length n.
template <class F>
std::vector<std::vector<typename F::value_type>> nullspace(F f, const std::vector<std::vector<typename F::value_type>>& rows,
                                                            std::size_t n) {
  EchelonBasis<F> e(f, n);
  for (const auto& r : rows) e.insert(r);
  return e.kernel();
}

template <class F>
std::size_t rank_of_rows(F f, const std::vector<std::vector<typename F::value_type>>& rows, std::size_t n) {
  EchelonBasis<F> e(f, n);
  for (const auto& r : rows) e.insert(r);
  return e.dimension();
}

// Inverse of a square matrix given as rows; nullopt if singular.
template <class F>
std::optional<std::vector<std::vector<typename F::value_type>>> inverse(
    F f, const std::vector<std::vector<typename F::value_type>>& m) {
  using V = typename F::value_type;
  const std::size_t n = m.size();
  std::vector<std::vector<V>> a(n, std::vector<V>(2 * n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = f.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && f.is_zero(a[r][c])) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[r], a[c]);
    V inv = f.inv(a[c][c]);
    for (auto& x : a[c]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(a[i][c])) continue;
      V k = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) f.sub_mul(a[i][j], k, a[c][j]);
    }
  }
  std::vector<std::vector<V>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + std::ptrdiff_t(n), a[i].end());
  return out;
}

// Fraction-free (Bareiss) elimination on integer matrices.
std::size_t bareiss_rank(IntegerMatrix m);
mpz_class bareiss_determinant(IntegerMatrix m);
// Determinant of a rational matrix via cleared denominators.
mpq_class determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

}  // namespace bihecke
