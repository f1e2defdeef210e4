#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace moncentre {

/// Element of ℚ(ζ_n), stored as a polynomial in ζ_n of degree < φ(n).
class CycNumber {
 public:
  /// Zero of ℚ(ζ_1) = ℚ.
  CycNumber() : CycNumber(1) {}
  /// Zero of ℚ(ζ_n).
  explicit CycNumber(int n);

  static CycNumber rational(int n, const mpq_class& q);
  static CycNumber integer(int n, long v) { return rational(n, mpq_class(v)); }
  /// ζ_n^k (k may be negative).
  static CycNumber zeta(int n, long k = 1);
  /// Reduces arbitrary coefficients of 1, ζ, ζ², … modulo Φ_n.
  static CycNumber from_coefficients(int n, std::vector<mpq_class> coeffs);

  int order() const;
  int degree() const;  // φ(n)
  const std::vector<mpq_class>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  /// The same number in ℚ(ζ_m); m must be a multiple of the order.
  CycNumber promote(int m) const;

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber operator*(const CycNumber& o) const;
  /// Throws std::domain_error when dividing by zero.
  CycNumber operator/(const CycNumber& o) const { return *this * o.inverse(); }
  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }
  /// Total order on the canonical representation (same field only); for canonical sorting.
  bool operator<(const CycNumber& o) const;

  /// Inverse via the extended Euclidean algorithm against Φ_n. Throws std::domain_error on zero.
  CycNumber inverse() const;
  /// Complex conjugation ζ ↦ ζ⁻¹.
  CycNumber conj() const;
  CycNumber pow(long k) const;

  /// e.g. "1 - 2/3*z + z^2" where z = ζ_n.
  std::string to_string() const;
  /// Coefficient strings as stored.
  std::vector<std::string> coefficient_strings() const;

  struct Modulus;

 private:
  CycNumber(const Modulus* m, std::vector<mpq_class> c) : m_(m), c_(std::move(c)) {}
  void reduce(std::vector<mpq_class>& p) const;

  const Modulus* m_;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Dense matrix of CycNumbers in a single field.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int rows, int cols, int order);
  static CycMatrix identity(int n, int order);
  static CycMatrix scalar(int n, const CycNumber& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int order() const { return order_; }
  CycNumber& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const CycNumber& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix scaled(const CycNumber& s) const;
  CycMatrix transpose() const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int order_ = 1;
  std::vector<CycNumber> data_;
};

/// Kronecker product A ⊗ B.
CycMatrix kron(const CycMatrix& a, const CycMatrix& b);

struct LinearSolution {
  bool consistent = false;
  std::vector<CycNumber> particular;
  std::vector<std::vector<CycNumber>> kernel;  // basis of {x : M x = 0}
};

/// All solutions of M x = b by exact Gauss–Jordan elimination.
LinearSolution solve_linear(const CycMatrix& m, const std::vector<CycNumber>& b);
std::vector<std::vector<CycNumber>> kernel_basis(const CycMatrix& m);
int rank(const CycMatrix& m);
/// Inverse, or an empty matrix when singular.
CycMatrix inverse(const CycMatrix& m);

}  // namespace moncentre
