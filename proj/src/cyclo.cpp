#include "moncentre/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace moncentre {

struct CycNumber::Modulus {
  int n = 1;
  int degree = 1;
  std::vector<mpq_class> phi;  // monic, size degree + 1
};

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    q[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (long r : num)
    if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<long>>& poly_cache() {
  static std::map<int, std::vector<long>> c;
  return c;
}

std::map<int, std::unique_ptr<CycNumber::Modulus>>& modulus_cache() {
  static std::map<int, std::unique_ptr<CycNumber::Modulus>> c;
  return c;
}

std::vector<long> cyclotomic_locked(int n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long> p(n + 1, 0);  // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, cyclotomic_locked(d));
  cache[n] = p;
  return p;
}

const CycNumber::Modulus* modulus(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& cache = modulus_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second.get();
  auto m = std::make_unique<CycNumber::Modulus>();
  m->n = n;
  for (long v : cyclotomic_locked(n)) m->phi.emplace_back(v);
  m->degree = static_cast<int>(m->phi.size()) - 1;
  const CycNumber::Modulus* out = m.get();
  cache[n] = std::move(m);
  return out;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  Poly bb = b;
  trim(bb);
  q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, mpq_class(0));
  const mpq_class lead = bb.back();
  while (!r.empty() && r.size() >= bb.size()) {
    const std::size_t shift = r.size() - bb.size();
    const mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
    r.pop_back();
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cyclotomic_locked(n);
}

CycNumber::CycNumber(int n) : m_(modulus(n)), c_(m_->degree, mpq_class(0)) {}

void CycNumber::reduce(Poly& p) const {
  const int d = m_->degree;
  for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
    if (sgn(p[k]) == 0) continue;
    const mpq_class c = p[k];
    for (int i = 0; i <= d; ++i) p[k - d + i] -= c * m_->phi[i];
  }
  p.resize(d, mpq_class(0));
}

CycNumber CycNumber::rational(int n, const mpq_class& q) {
  CycNumber x(n);
  x.c_[0] = q;
  return x;
}

CycNumber CycNumber::zeta(int n, long k) {
  CycNumber x(n);
  const long e = ((k % n) + n) % n;
  Poly p(e + 1, mpq_class(0));
  p[e] = 1;
  x.reduce(p);
  x.c_ = std::move(p);
  return x;
}

CycNumber CycNumber::from_coefficients(int n, std::vector<mpq_class> coeffs) {
  CycNumber x(n);
  x.reduce(coeffs);
  x.c_ = std::move(coeffs);
  return x;
}

int CycNumber::order() const { return m_->n; }
int CycNumber::degree() const { return m_->degree; }

bool CycNumber::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

bool CycNumber::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycNumber CycNumber::promote(int m) const {
  if (m == order()) return *this;
  if (m % order() != 0) throw std::invalid_argument("promotion target is not a multiple of the order");
  const int step = m / order();
  Poly p(static_cast<std::size_t>(c_.size() - 1) * step + 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return from_coefficients(m, std::move(p));
}

namespace {
int common_order(const CycNumber& a, const CycNumber& b) { return std::lcm(a.order(), b.order()); }
}  // namespace

CycNumber CycNumber::operator+(const CycNumber& o) const {
  if (o.order() != order()) {
    const int m = common_order(*this, o);
    return promote(m) + o.promote(m);
  }
  CycNumber out = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
  return out;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
  if (o.order() != order()) {
    const int m = common_order(*this, o);
    return promote(m) * o.promote(m);
  }
  Poly p = poly_mul(c_, o.c_);
  if (p.empty()) return CycNumber(order());
  reduce(p);
  return CycNumber(m_, std::move(p));
}

bool CycNumber::operator==(const CycNumber& o) const {
  if (o.order() != order()) {
    const int m = common_order(*this, o);
    return promote(m) == o.promote(m);
  }
  return c_ == o.c_;
}

bool CycNumber::operator<(const CycNumber& o) const {
  if (order() != o.order()) return order() < o.order();
  return c_ < o.c_;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in a cyclotomic field");
  Poly r0 = m_->phi, r1 = c_;
  trim(r1);
  Poly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Φ_n is irreducible
  for (auto& v : s0) v /= r0[0];
  return from_coefficients(order(), std::move(s0));
}

CycNumber CycNumber::conj() const {
  const int n = order();
  Poly p(n, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[(n - static_cast<int>(i)) % n] += c_[i];
  return from_coefficients(n, std::move(p));
}

CycNumber CycNumber::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycNumber result = integer(order(), 1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    mpq_class v = c_[i];
    if (!first) {
      os << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    } else if (sgn(v) < 0 && i > 0 && v == -1) {
      os << "-";
      v = 1;
    }
    if (i == 0)
      os << v.get_str();
    else {
      if (v != 1) os << v.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> CycNumber::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& v : c_) out.push_back(v.get_str());
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------

CycMatrix::CycMatrix(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(static_cast<std::size_t>(rows) * cols, CycNumber(order)) {}

CycMatrix CycMatrix::identity(int n, int order) {
  CycMatrix m(n, n, order);
  for (int i = 0; i < n; ++i) m(i, i) = CycNumber::integer(order, 1);
  return m;
}

CycMatrix CycMatrix::scalar(int n, const CycNumber& s) {
  CycMatrix m(n, n, s.order());
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimensions do not match");
  CycMatrix out(rows_, o.cols_, std::lcm(order_, o.order_));
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycNumber& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimensions do not match");
  CycMatrix out(rows_, cols_, std::lcm(order_, o.order_));
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const { return *this + o.scaled(CycNumber::integer(o.order_, -1)); }

CycMatrix CycMatrix::scaled(const CycNumber& s) const {
  CycMatrix out(rows_, cols_, std::lcm(order_, s.order()));
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_, order_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool CycMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), std::lcm(a.order(), b.order()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

namespace {

/// Reduced row echelon form of the augmented matrix, returning pivot columns.
std::vector<int> rref(std::vector<std::vector<CycNumber>>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c].is_zero()) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[r], rows[p]);
    const CycNumber inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v = v * inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const CycNumber f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(const CycMatrix& m, const std::vector<CycNumber>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  const int order = m.order();
  std::vector<std::vector<CycNumber>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
    rows[i].push_back(b[i]);
  }
  const std::vector<int> pivots = rref(rows, m.cols());
  LinearSolution out;
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (!rows[i][m.cols()].is_zero()) return out;
  out.consistent = true;
  out.particular.assign(m.cols(), CycNumber(order));
  for (std::size_t k = 0; k < pivots.size(); ++k) out.particular[pivots[k]] = rows[k][m.cols()];
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycNumber> v(m.cols(), CycNumber(order));
    v[f] = CycNumber::integer(order, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][f];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<CycNumber>> kernel_basis(const CycMatrix& m) {
  return solve_linear(m, std::vector<CycNumber>(m.rows(), CycNumber(m.order()))).kernel;
}

int rank(const CycMatrix& m) { return m.cols() - static_cast<int>(kernel_basis(m).size()); }

CycMatrix inverse(const CycMatrix& m) {
  if (m.rows() != m.cols()) return {};
  const int n = m.rows();
  std::vector<std::vector<CycNumber>> rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i].push_back(m(i, j));
    for (int j = 0; j < n; ++j) rows[i].push_back(CycNumber::integer(m.order(), i == j ? 1 : 0));
  }
  if (static_cast<int>(rref(rows, n).size()) != n) return {};
  CycMatrix out(n, n, m.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = rows[i][n + j];
  return out;
}

}  // namespace moncentre
