#include "nbspectra/rational.hpp"

#include <sstream>

namespace nbspectra {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols != o.rows) throw domain_error("matrix product dimension mismatch");
  RationalMatrix r(rows, o.cols);
  Rat acc, term;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      acc = 0;
      for (int k = 0; k < cols; ++k) {
        const Rat& x = at(i, k);
        if (x == 0) continue;
        term = x * o.at(k, j);
        acc += term;
      }
      r.at(i, j) = acc;
    }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw domain_error("matrix sum dimension mismatch");
  RationalMatrix r(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw domain_error("matrix difference dimension mismatch");
  RationalMatrix r(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rat& s) const {
  RationalMatrix r(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

std::vector<double> RationalMatrix::to_double_rowmajor() const {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i].get_d();
  return d;
}

std::string RationalMatrix::to_matrix_market() const {
  std::ostringstream os;
  os << "%%MatrixMarket matrix array real general\n";
  os << rows << " " << cols << "\n";
  os.precision(17);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) os << at(i, j).get_d() << "\n";
  return os.str();
}

std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace nbspectra
