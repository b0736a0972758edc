#include "bihecke/linalg.hpp"

#include <utility>

namespace bihecke {

namespace {

// Eliminates in place; returns the rank and the determinant sign changes.
std::size_t bareiss(IntegerMatrix& m, int& sign) {
  const std::size_t R = m.rows, C = m.cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && m(p, c) == 0) ++p;
    if (p == R) continue;
    if (p != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t bareiss_rank(IntegerMatrix m) {
  int sign;
  return bareiss(m, sign);
}

mpz_class bareiss_determinant(IntegerMatrix m) {
  if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
  if (m.rows == 0) return 1;
  int sign;
  // Bareiss skips zero columns, so a deficient rank means a zero determinant.
  if (bareiss(m, sign) < m.rows) return 0;
  return sign * m(m.rows - 1, m.cols - 1);
}

mpq_class determinant(const RationalMatrix& m) {
  if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
  IntegerMatrix z(m.rows, m.cols);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < m.rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < m.cols; ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpq_class d(bareiss_determinant(std::move(z)), scale);
  d.canonicalize();
  return d;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) rows[i].assign(m.a.begin() + std::ptrdiff_t(i * m.cols), m.a.begin() + std::ptrdiff_t((i + 1) * m.cols));
  return rank_of_rows(RationalField{}, rows, m.cols);
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  EchelonBasis<RationalField> e(RationalField{}, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    e.insert(std::vector<mpq_class>(m.a.begin() + std::ptrdiff_t(i * m.cols), m.a.begin() + std::ptrdiff_t((i + 1) * m.cols)));
  // sort rows by pivot column
  std::vector<std::size_t> order(e.dimension());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e.pivots()[a] < e.pivots()[b]; });
  RationalMatrix out(m.rows, m.cols);
  std::vector<std::size_t> piv;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < m.cols; ++j) out(k, j) = e.vectors()[order[k]][j];
    piv.push_back(e.pivots()[order[k]]);
  }
  m = std::move(out);
  return piv;
}

}  // namespace bihecke
