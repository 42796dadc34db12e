#include "stratkit/pluecker.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "stratkit/linalg.hpp"

namespace stratkit {

namespace {

bool column_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

Q minor(const QMat& M, const std::vector<int>& rows) {
  size_t k = rows.size();
  QMat sub = linalg::zeros(k, k);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) sub[r][c] = M[rows[r] - 1][c];
  return linalg::det(sub);
}

}  // namespace

PlueckerMonomial PlueckerMonomial::make(std::vector<std::vector<int>> columns) {
  for (auto& c : columns) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw DomainError("repeated entry in a Pluecker column");
  }
  std::sort(columns.begin(), columns.end(), column_less);
  return PlueckerMonomial{std::move(columns)};
}

PlueckerMonomial PlueckerMonomial::from_tableau(const Tableau& t) { return make(t.columns); }

std::string PlueckerMonomial::str() const {
  if (columns.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) s += "*";
    s += "p[";
    for (size_t j = 0; j < columns[i].size(); ++j) s += (j ? "," : "") + std::to_string(columns[i][j]);
    s += "]";
  }
  return s;
}

void PlueckerExpr::add(const PlueckerMonomial& mono, const Q& c) {
  for (const auto& col : mono.columns) {
    if (std::find(k.begin(), k.end(), static_cast<int>(col.size())) == k.end())
      throw DomainError("column length " + std::to_string(col.size()) + " is not among the k_i");
    if (col.front() < 1 || col.back() > n) throw DomainError("column entry outside 1.." + std::to_string(n));
  }
  Q v = terms[mono] + c;
  if (v == 0) terms.erase(mono);
  else terms[mono] = v;
}

std::vector<int> PlueckerExpr::degree() const {
  std::optional<std::vector<int>> d;
  for (const auto& [mono, c] : terms) {
    std::vector<int> e = degree_of_tableau(mono.tableau(), k);
    if (d && *d != e) throw DomainError("Pluecker expression is not multihomogeneous");
    d = e;
  }
  if (!d) throw DomainError("zero expression has no degree");
  return *d;
}

std::string PlueckerExpr::str() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    Q a = abs(c);
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (a != 1) s += to_string(a) + " ";
    s += mono.str();
    first = false;
  }
  return s;
}

PlueckerExpr parse_pluecker(const std::string& text, int n, const std::vector<int>& k) {
  check_k_list(n, k);
  PlueckerExpr e{n, k, {}};
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw DomainError("cannot parse Pluecker expression at position " + std::to_string(i) + ": " + what);
  };
  auto number = [&]() {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("number expected");
    return text.substr(start, i - start);
  };
  skip();
  if (i == text.size()) fail("empty expression");
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') neg = text[i++] == '-';
  while (true) {
    skip();
    Q coef = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string c = number();
      if (i < text.size() && text[i] == '/') {
        ++i;
        c += "/" + number();
      }
      coef = parse_q(c);
      skip();
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::vector<std::vector<int>> cols;
    while (true) {
      skip();
      if (i >= text.size() || text[i] != 'p') break;
      ++i;
      skip();
      if (i >= text.size() || text[i] != '[') fail("'[' expected");
      ++i;
      std::vector<std::string> parts;
      while (true) {
        skip();
        parts.push_back(number());
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        fail("',' or ']' expected");
      }
      std::vector<int> col;
      if (parts.size() == 1 && parts[0].size() > 1 && n <= 9) {
        for (char ch : parts[0]) col.push_back(ch - '0');
      } else {
        for (const auto& p : parts) col.push_back(std::stoi(p));
      }
      int power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        power = std::stoi(number());
      }
      for (int r = 0; r < power; ++r) cols.push_back(col);
      skip();
      if (i < text.size() && text[i] == '*') ++i;
    }
    if (cols.empty()) fail("Pluecker coordinate expected");
    e.add(PlueckerMonomial::make(cols), neg ? Q(-coef) : coef);
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') fail("'+' or '-' expected");
    neg = text[i++] == '-';
  }
  return e;
}

Q evaluate(const PlueckerMonomial& mono, const QMat& M) {
  Q v = 1;
  for (const auto& col : mono.columns) {
    if (col.back() > static_cast<int>(M.size())) throw ShapeError("matrix too small for the column");
    v *= minor(M, col);
    if (v == 0) break;
  }
  return v;
}

Q evaluate(const PlueckerExpr& e, const QMat& M) {
  Q v = 0;
  for (const auto& [mono, c] : e.terms) v += c * evaluate(mono, M);
  return v;
}

QMat random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-10, 10);
  QMat M = linalg::zeros(n, n);
  for (auto& row : M)
    for (auto& x : row) x = dist(rng);
  return M;
}

namespace {

using u64 = std::uint64_t;
using ModMat = std::vector<std::vector<u64>>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 invmod(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 reduce(const Z& z, u64 p) {
  Z r = z % Z(std::to_string(p));
  if (r < 0) r += Z(std::to_string(p));
  return std::stoull(r.get_str());
}

u64 minor_mod(const ModMat& M, const std::vector<int>& rows, u64 p) {
  size_t k = rows.size();
  ModMat a(k, std::vector<u64>(k));
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) a[r][c] = M[rows[r] - 1][c];
  u64 d = 1;
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = p - d;
    }
    d = mulmod(d, a[c][c], p);
    u64 inv = invmod(a[c][c], p);
    for (size_t i = c + 1; i < k; ++i) {
      u64 f = mulmod(a[i][c], inv, p);
      for (size_t j = c; j < k; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[c][j], p)) % p;
    }
  }
  return d;
}

u64 evaluate_mod(const PlueckerMonomial& mono, const ModMat& M, u64 p) {
  u64 v = 1;
  for (const auto& col : mono.columns) v = mulmod(v, minor_mod(M, col, p), p);
  return v;
}

// Unique solution of a x = b mod p, or nothing when a has a rank deficit.
std::optional<std::vector<u64>> solve_mod(ModMat a, std::vector<u64> b, u64 p) {
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  for (size_t c = 0; c < cols; ++c) {
    size_t piv = c;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    u64 inv = invmod(a[c][c], p);
    for (size_t j = c; j < cols; ++j) a[c][j] = mulmod(a[c][j], inv, p);
    b[c] = mulmod(b[c], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == c || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[c][j], p)) % p;
      b[i] = (b[i] + p - mulmod(f, b[c], p)) % p;
    }
  }
  for (size_t i = cols; i < rows; ++i)
    if (b[i] != 0) throw DomainError("inconsistent straightening system");
  b.resize(cols);
  return b;
}

}  // namespace

Straightening straighten(const PlueckerExpr& e, std::uint64_t seed, int verify_points) {
  Straightening out;
  out.result = PlueckerExpr{e.n, e.k, {}};
  if (e.is_zero()) return out;
  std::vector<int> d = e.degree();
  std::vector<Tableau> basis = enumerate_ssyt(e.n, e.k, d);
  std::vector<PlueckerMonomial> monos;
  for (const auto& t : basis) monos.push_back(PlueckerMonomial::from_tableau(t));
  const size_t N = monos.size();

  // Standard monomials are a Z-basis, so after clearing denominators the
  // coefficients are integers: solve modulo primes, lift by CRT until stable,
  // then check exactly.
  Z scale = 1;
  for (const auto& [m, c] : e.terms) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<PlueckerMonomial, Z>> target;
  for (const auto& [m, c] : e.terms) target.emplace_back(m, Z(c * scale));

  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 8;
  constexpr int kMaxPrimes = 24;
  Z prime = Z(1) << 61, modulus = 1;
  std::vector<Z> residue(N, Z(0));
  std::optional<std::vector<Z>> previous;
  for (int round = 0; round < kMaxPrimes; ++round) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    u64 p = std::stoull(prime.get_str());
    std::uniform_int_distribution<u64> dist(0, p - 1);
    std::optional<std::vector<u64>> x;
    for (int attempt = 0; attempt < kMaxAttempts && !x; ++attempt) {
      ++out.attempts;
      ModMat A;
      std::vector<u64> b;
      // A few spare rows make a rank deficit unlikely on the first try.
      for (size_t r = 0; r < N + 2; ++r) {
        ModMat M(e.n, std::vector<u64>(e.n));
        for (auto& row : M)
          for (auto& v : row) v = dist(rng);
        std::vector<u64> row;
        for (const auto& m : monos) row.push_back(evaluate_mod(m, M, p));
        A.push_back(std::move(row));
        u64 rhs = 0;
        for (const auto& [m, c] : target) rhs = (rhs + mulmod(reduce(c, p), evaluate_mod(m, M, p), p)) % p;
        b.push_back(rhs);
      }
      x = solve_mod(std::move(A), std::move(b), p);
    }
    if (!x) throw std::logic_error("straightening system stayed rank deficient");
    // residue += modulus * ((x - residue) / modulus mod p)
    u64 inv = invmod(reduce(modulus, p), p);
    for (size_t j = 0; j < N; ++j) {
      u64 diff = ((*x)[j] + p - reduce(residue[j], p)) % p;
      residue[j] += modulus * Z(std::to_string(mulmod(diff, inv, p)));
    }
    modulus *= prime;
    std::vector<Z> lifted(N);
    for (size_t j = 0; j < N; ++j) lifted[j] = 2 * residue[j] > modulus ? Z(residue[j] - modulus) : residue[j];
    if (previous && *previous == lifted) {
      PlueckerExpr candidate{e.n, e.k, {}};
      for (size_t j = 0; j < N; ++j)
        if (lifted[j] != 0) candidate.add(monos[j], Q(lifted[j]) / scale);
      bool ok = true;
      for (int r = 0; r < verify_points && ok; ++r) {
        QMat M = random_matrix(e.n, rng);
        ok = evaluate(candidate, M) == evaluate(e, M);
      }
      if (ok) {
        out.result = std::move(candidate);
        return out;
      }
    }
    previous = std::move(lifted);
  }
  throw std::logic_error("straightening failed re-evaluation");
}

QVector quasi_valuation_pluecker(const PlueckerExpr& e, const UnderlineW& uw, const TotalOrder& order,
                                 std::uint64_t seed) {
  if (e.is_zero()) throw DomainError("quasi-valuation of zero");
  PlueckerExpr st = straighten(e, seed).result;
  if (st.is_zero()) throw DomainError("expression is zero in the coordinate ring");
  std::optional<QVector> best;
  for (const auto& [mono, c] : st.terms) {
    QVector v = tableau_to_gamma(mono.tableau(), uw);
    if (!best || lex_compare(v, *best, order) < 0) best = v;
  }
  return *best;
}

bool vanishes_on_stratum(const UnderlineW& uw, const std::vector<int>& phi, int j, int p) {
  int i = uw.index[p];
  if (j < i) return true;
  Coset kappa = project(uw.max_q_i(p), {uw.k[j - 1]});
  return !bruhat_leq(Coset::column(uw.n, uw.k[j - 1], phi), kappa);
}

bool vanishes_on_schubert(const std::vector<int>& phi, const Coset& tau) {
  int k = static_cast<int>(phi.size());
  Coset top = project(tau, {k});
  return !bruhat_leq(Coset::column(tau.n, k, phi), top);
}

long long nonvanishing_schubert_count(int n, const std::vector<int>& k, const std::vector<int>& d,
                                      const Coset& tau) {
  long long count = 0;
  for (const auto& t : enumerate_ssyt(n, k, d))
    if (std::none_of(t.columns.begin(), t.columns.end(),
                     [&](const std::vector<int>& c) { return vanishes_on_schubert(c, tau); }))
      ++count;
  return count;
}

long long standard_on_stratum_count(const StratData& s, const Fan& fan, int p, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != s.m) throw ShapeError("degree has wrong length");
  int bound = 0;
  for (int x : d) {
    if (x < 0) throw ShapeError("negative degree");
    bound += x;
  }
  QVec target(d.begin(), d.end());
  std::set<QVector> found;
  for (const auto& mon : fan.monoids) {
    if (std::none_of(mon.chain.begin(), mon.chain.end(), [&](int q) { return s.poset.leq(q, p); })) continue;
    for (const auto& v : monoid_elements(mon, s, bound)) {
      if (degree_map(v, s) != target) continue;
      auto supp = v.support();
      if (std::all_of(supp.begin(), supp.end(), [&](int q) { return s.poset.leq(q, p); })) found.insert(v);
    }
  }
  return static_cast<long long>(found.size());
}

}  // namespace stratkit
