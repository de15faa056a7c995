#include "torbiv/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torbiv {

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Rational(m(i, j));
  return out;
}

IntMatrix from_columns(const std::vector<std::vector<Integer>> &columns,
                       std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = columns[j][i];
  }
  return m;
}

namespace {

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix &m, std::size_t dst, std::size_t src,
             const Integer &factor) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix &m, std::size_t dst, std::size_t src,
             const Integer &factor) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) += factor * m(i, src);
}

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix &d = f.d;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // least |entry| in the trailing block, row-major tie-break
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0)
            continue;
          if (pi == rows || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows)
        return f; // trailing block is zero

      swap_rows(d, t, pi);
      swap_rows(f.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(f.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        Integer q = -floor_div(d(i, t), d(t, t));
        add_row(d, i, t, q);
        add_row(f.u, i, t, q);
        if (d(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        Integer q = -floor_div(d(t, j), d(t, t));
        add_col(d, j, t, q);
        add_col(f.v, j, t, q);
        if (d(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // divisibility chain: fold an offending row into the pivot row
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, Integer(1));
            add_row(f.u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j)
        d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j)
        f.u(t, j) = -f.u(t, j);
    }
  }
  return f;
}

std::vector<Integer> invariant_factors(const IntMatrix &m) {
  const SmithForm f = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (f.d(i, i) != 0)
      out.push_back(f.d(i, i));
  return out;
}

Integer determinant(const IntMatrix &m) {
  if (!m.is_square())
    throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix &m) {
  return m.is_square() && abs(determinant(m)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix &r) {
  if (!r.is_square())
    throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  if (abs(determinant(r)) != 1)
    throw Error(ErrorCode::NotUnimodular,
                "determinant is not +-1: " + to_string(r));
  // u r v = I, hence r^-1 = v u
  const SmithForm f = smith_normal_form(r);
  return f.v * f.u;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix &a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0)
      ++p;
    if (p == a.rows())
      continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(p, j), a(row, j));
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j)
      a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0)
        continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rational_rank(const RatMatrix &m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::size_t integer_rank(const IntMatrix &m) {
  return rational_rank(to_rational(m));
}

std::vector<std::vector<Rational>> rational_kernel(const RatMatrix &m) {
  RatMatrix a = m;
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots)
    is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = -a(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

Integer gcd_of(const std::vector<Integer> &v) {
  Integer g = 0;
  for (const auto &x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::vector<Integer> primitive_integer(const std::vector<Rational> &v) {
  Integer lcm = 1;
  for (const auto &x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto &x : v) {
    Rational scaled = x * lcm;
    out.push_back(scaled.get_num());
  }
  const Integer g = gcd_of(out);
  if (g > 1)
    for (auto &x : out)
      x /= g;
  return out;
}

namespace {

template <class T> std::string matrix_string(const Matrix<T> &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace

std::string to_string(const IntMatrix &m) { return matrix_string(m); }
std::string to_string(const RatMatrix &m) { return matrix_string(m); }

} // namespace torbiv
