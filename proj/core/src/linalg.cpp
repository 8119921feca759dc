#include "cks/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace cks {

namespace {
int cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}
}  // namespace

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat zero_matrix(std::size_t rows, std::size_t cols) {
  return IntMat(rows, IntVec(cols, 0));
}

IntVec mat_vec_mul(const IntMat& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

IntVec vec_mat_mul(const IntVec& v, const IntMat& m) {
  if (m.empty()) return {};
  IntVec out(m[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat out = zero_matrix(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool mat_eq(const IntMat& a, const IntMat& b) { return a == b; }

Int det(IntMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int trace(const IntMat& m) {
  Int t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

namespace {

// floor division with remainder in [0, |b|)
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMat hnf(IntMat m) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // Euclidean elimination below `row` in this column.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = row; i < m.size(); ++i) {
        if (m[i][col] != 0 &&
            (best == m.size() || cmpabs(m[i][col], m[best][col]) < 0))
          best = i;
      }
      if (best == m.size()) break;  // column is zero below `row`
      std::swap(m[row], m[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Int q = floor_div(m[i][col], m[row][col]);
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (row < m.size() && m[row][col] != 0) {
      if (m[row][col] < 0)
        for (std::size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
      for (std::size_t i = 0; i < row; ++i) {
        Int q = floor_div(m[i][col], m[row][col]);
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
      }
      ++row;
    }
  }
  m.resize(row);
  return m;
}

bool lattice_solve(const IntMat& h, const IntVec& target, IntVec* coeffs) {
  const std::size_t n = h.size();
  IntVec rem = target;
  IntVec x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i][i] == 0) return false;
    if (rem[i] % h[i][i] != 0) return false;
    x[i] = rem[i] / h[i][i];
    if (x[i] != 0)
      for (std::size_t j = i; j < n; ++j) rem[j] -= x[i] * h[i][j];
  }
  for (std::size_t j = 0; j < n; ++j)
    if (rem[j] != 0) return false;
  if (coeffs) *coeffs = std::move(x);
  return true;
}

IntVec lattice_reduce(const IntMat& h, IntVec v) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    Int q = floor_div(v[i], h[i][i]);
    if (q != 0)
      for (std::size_t j = i; j < v.size(); ++j) v[j] -= q * h[i][j];
  }
  return v;
}

IntVec char_poly(const IntMat& m) {
  const std::size_t n = m.size();
  // Interpolate p(x) = det(xI - M) at x = 0..n, then recover coefficients
  // by exact divided differences (all values are integers, the polynomial
  // is monic of degree n, so the rational intermediates cancel).
  std::vector<Rat> nodes(n + 1), values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    IntMat t = m;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i][j] = -t[i][j];
      t[i][i] += Int(k);
    }
    nodes[k] = Rat(Int(k));
    values[k] = Rat(det(std::move(t)));
  }
  // Newton form, then expand.
  std::vector<Rat> coeff = values;
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i)
      coeff[i] = (coeff[i] - coeff[i - 1]) / (nodes[i] - nodes[i - level]);
  std::vector<Rat> poly(n + 1, Rat(0));
  std::vector<Rat> basis(n + 1, Rat(0));
  basis[0] = 1;
  std::size_t deg = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j <= deg; ++j) poly[j] += coeff[k] * basis[j];
    if (k == n) break;
    // basis *= (x - nodes[k])
    for (std::size_t j = deg + 1; j > 0; --j)
      basis[j] = basis[j - 1] - nodes[k] * basis[j];
    basis[0] = -nodes[k] * basis[0];
    ++deg;
  }
  IntVec out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    poly[j].canonicalize();
    if (poly[j].get_den() != 1)
      throw std::logic_error("char_poly: interpolation produced a non-integer");
    out[j] = poly[j].get_num();
  }
  return out;
}

IntMat kronecker_product(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMat out = zero_matrix(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          out[i * m + k][j * m + l] = a[i][j] * b[k][l];
    }
  return out;
}

RatMat rat_inverse(RatMat m) {
  const std::size_t n = m.size();
  RatMat inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("rat_inverse: singular matrix");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rat p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RatVec rat_vec_mat_mul(const RatVec& v, const RatMat& m) {
  if (m.empty()) return {};
  RatVec out(m[0].size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

}  // namespace cks
