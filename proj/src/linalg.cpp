#include "stratkit/linalg.hpp"

#include <algorithm>

namespace stratkit::linalg {

QMat zeros(size_t rows, size_t cols) { return QMat(rows, QVec(cols, Q(0))); }

QMat identity(size_t n) {
  QMat m = zeros(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat t = zeros(a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMat mul(const QMat& a, const QMat& b) {
  if (a.empty()) return {};
  size_t inner = b.size();
  size_t cols = b.empty() ? 0 : b[0].size();
  QMat c = zeros(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QVec mul(const QMat& a, const QVec& x) {
  QVec y(a.size(), Q(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

Rref rref(QMat a) {
  Rref out;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Q inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Q f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.r = std::move(a);
  return out;
}

size_t rank(const QMat& a) { return rref(a).pivots.size(); }

Q det(QMat a) {
  size_t n = a.size();
  Q d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Q f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  QMat aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  Rref rr = rref(aug);
  QVec x(cols, Q(0));
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == cols) return std::nullopt;
    x[rr.pivots[i]] = rr.r[i][cols];
  }
  return x;
}

std::optional<QMat> inverse(const QMat& a) {
  size_t n = a.size();
  QMat aug = a;
  for (size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Q(0));
    aug[i][n + i] = 1;
  }
  Rref rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] >= n) return std::nullopt;
  QMat inv = zeros(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = rr.r[i][n + j];
  return inv;
}

std::vector<QVec> nullspace(const QMat& a, size_t cols) {
  Rref rr = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Q(0));
    v[f] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Hnf hnf(const ZMat& a) {
  Hnf out;
  out.h = a;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  out.u.assign(rows, ZVec(rows, Z(0)));
  for (size_t i = 0; i < rows; ++i) out.u[i][i] = 1;
  auto& h = out.h;
  auto& u = out.u;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c over rows r..end, accumulating into row r.
    for (size_t i = r + 1; i < rows; ++i) {
      if (h[i][c] == 0) continue;
      Z g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[r][c].get_mpz_t(), h[i][c].get_mpz_t());
      Z a1 = h[r][c] / g, b1 = h[i][c] / g;
      // [s t; -b1 a1] has determinant s*a1 + t*b1 = 1.
      for (size_t j = 0; j < cols; ++j) {
        Z x = h[r][j], y = h[i][j];
        h[r][j] = s * x + t * y;
        h[i][j] = a1 * y - b1 * x;
      }
      for (size_t j = 0; j < rows; ++j) {
        Z x = u[r][j], y = u[i][j];
        u[r][j] = s * x + t * y;
        u[i][j] = a1 * y - b1 * x;
      }
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (size_t i = 0; i < r; ++i) {
      Z q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      if (q == 0) continue;
      for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
      for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
    }
    ++r;
  }
  out.rank = r;
  return out;
}

Z lcm_den(const QVec& v) {
  Z l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

namespace {

Z common_den(const std::vector<QVec>& rows) {
  Z l = 1;
  for (const auto& r : rows) {
    Z d = lcm_den(r);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

ZMat scale_to_int(const std::vector<QVec>& rows, const Z& n) {
  ZMat m;
  for (const auto& r : rows) {
    ZVec zr;
    for (const auto& q : r) {
      Q s = q * n;
      zr.push_back(s.get_num());
    }
    m.push_back(std::move(zr));
  }
  return m;
}

}  // namespace

std::vector<QVec> lattice_basis(const std::vector<QVec>& gens, size_t dim) {
  if (gens.empty()) return {};
  Z n = common_den(gens);
  Hnf h = hnf(scale_to_int(gens, n));
  std::vector<QVec> basis;
  for (size_t i = 0; i < h.rank; ++i) {
    QVec v(dim);
    for (size_t j = 0; j < dim; ++j) {
      v[j] = Q(h.h[i][j]) / Q(n);
      v[j].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ZVec> integer_combination(const std::vector<QVec>& rows, const QVec& target) {
  size_t k = rows.size();
  std::vector<QVec> all = rows;
  all.push_back(target);
  Z n = common_den(all);
  ZMat a = scale_to_int(rows, n);
  ZVec t;
  for (const auto& q : target) t.push_back(Q(q * n).get_num());
  Hnf h = hnf(a);
  size_t cols = target.size();
  // Solve y * H = t with H in echelon form, y integral on the first rank rows.
  ZVec y(k, Z(0));
  ZVec rest = t;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < h.rank; ++c) {
    if (h.h[row][c] == 0) continue;  // no pivot here; checked below
    if (rest[c] % h.h[row][c] != 0) return std::nullopt;
    y[row] = rest[c] / h.h[row][c];
    for (size_t j = 0; j < cols; ++j) rest[j] -= y[row] * h.h[row][j];
    ++row;
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  ZVec c(k, Z(0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) c[j] += y[i] * h.u[i][j];
  return c;
}

std::vector<ZVec> integer_left_kernel(const std::vector<QVec>& rows) {
  if (rows.empty()) return {};
  Z n = common_den(rows);
  Hnf h = hnf(scale_to_int(rows, n));
  std::vector<ZVec> ker;
  for (size_t i = h.rank; i < rows.size(); ++i) ker.push_back(h.u[i]);
  return ker;
}

}  // namespace stratkit::linalg
