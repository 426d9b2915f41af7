#include "nbspectra/charpoly.hpp"

#include <sstream>

namespace nbspectra {

Rat CharPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int CharPoly::root_multiplicity(const Rat& r) const {
  std::vector<Rat> cur = c;
  int mult = 0;
  while (cur.size() > 1) {
    // Synthetic division of cur by (x - r): quotient q, remainder rem.
    std::vector<Rat> q(cur.size() - 1);
    q.back() = cur.back();
    for (int j = static_cast<int>(q.size()) - 2; j >= 0; --j) q[j] = cur[j + 1] + r * q[j + 1];
    Rat rem = cur[0] + r * q[0];
    if (rem != 0) break;
    ++mult;
    cur = std::move(q);
  }
  return mult;
}

bool CharPoly::divisible_by_x_pow_k_minus_1(int k) const {
  if (k < 1) throw domain_error("divisor exponent must be >= 1");
  if (degree() < k) return false;
  std::vector<Rat> fold(k, Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) fold[i % k] += c[i];
  for (const Rat& f : fold)
    if (f != 0) return false;
  return true;
}

std::string CharPoly::integer_key() const {
  Int den = 1;
  for (const Rat& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  std::ostringstream os;
  os << "deg" << degree() << ";den" << den.get_str() << ";";
  for (const Rat& x : c) {
    Rat scaled = x * den;
    os << scaled.get_num().get_str() << ",";
  }
  return os.str();
}

Int bareiss_determinant(std::vector<Int> m, int n) {
  if (n == 0) return 1;
  auto at = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * n + j]; };
  Int prev = 1;
  int sign = 1;
  mpz_class t1, t2;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          r = i;
          break;
        }
      if (r < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_mul(t1.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  Int det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

CharPoly char_poly(const RationalMatrix& m) {
  if (m.rows != m.cols) throw domain_error("characteristic polynomial needs a square matrix");
  int n = m.rows;
  if (n == 0) return CharPoly{{Rat(1)}};

  // Clear denominators row by row: L[i] = lcm of row i denominators, so
  // N = diag(L) * m is integral and det(x I - m) = det(x diag(L) - N) / prod L.
  std::vector<Int> L(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mpz_lcm(L[i].get_mpz_t(), L[i].get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
  std::vector<Int> N(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = m.at(i, j) * L[i];
      v.canonicalize();
      N[static_cast<std::size_t>(i) * n + j] = v.get_num();
    }
  Int lead = 1;
  for (int i = 0; i < n; ++i) lead *= L[i];

  // Evaluate q(t) = det(t diag(L) - N) at t = 0..n.
  std::vector<Rat> xs(n + 1), ys(n + 1);
  std::vector<Int> work(static_cast<std::size_t>(n) * n);
  for (int t = 0; t <= n; ++t) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int v = -N[static_cast<std::size_t>(i) * n + j];
        if (i == j) v += t * L[i];
        work[static_cast<std::size_t>(i) * n + j] = v;
      }
    xs[t] = t;
    ys[t] = Rat(bareiss_determinant(work, n));
  }

  // Newton divided differences, then expansion to coefficients.
  std::vector<Rat> dd = ys;
  for (int k = 1; k <= n; ++k)
    for (int j = n; j >= k; --j) dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - k]);
  std::vector<Rat> coeff(1, dd[n]);
  for (int j = n - 1; j >= 0; --j) {
    coeff.insert(coeff.begin(), Rat(0));
    for (std::size_t i = 0; i + 1 < coeff.size(); ++i) coeff[i] -= xs[j] * coeff[i + 1];
    coeff[0] += dd[j];
  }
  coeff.resize(n + 1, Rat(0));
  CharPoly p;
  p.c.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    p.c[i] = coeff[i] / lead;
    p.c[i].canonicalize();
  }
  if (p.c[n] != 1) throw numeric_error("characteristic polynomial is not monic (internal)");
  return p;
}

CharPoly char_poly_faddeev_leverrier(const RationalMatrix& m) {
  if (m.rows != m.cols) throw domain_error("characteristic polynomial needs a square matrix");
  int n = m.rows;
  CharPoly p;
  p.c.assign(n + 1, Rat(0));
  p.c[n] = 1;
  RationalMatrix mk = RationalMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    Rat ck = -tr / k;
    p.c[n - k] = ck;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return p;
}

namespace {

Rat det_rec(const RationalMatrix& m, std::vector<int>& cols, int row) {
  int n = m.rows;
  if (row == n) return Rat(1);
  Rat acc = 0;
  int sign = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    int j = cols[idx];
    if (m.at(row, j) != 0) {
      std::vector<int> rest;
      rest.reserve(cols.size() - 1);
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (t != idx) rest.push_back(cols[t]);
      Rat sub = det_rec(m, rest, row + 1);
      if (sign > 0)
        acc += m.at(row, j) * sub;
      else
        acc -= m.at(row, j) * sub;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Rat determinant_cofactor(const RationalMatrix& m) {
  if (m.rows != m.cols) throw domain_error("determinant needs a square matrix");
  if (m.rows > 9) throw capability_error("cofactor determinant oracle capped at n <= 9");
  std::vector<int> cols(m.cols);
  for (int j = 0; j < m.cols; ++j) cols[j] = j;
  return det_rec(m, cols, 0);
}

}  // namespace nbspectra
