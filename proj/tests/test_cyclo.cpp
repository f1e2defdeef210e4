#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moncentre/cyclo.hpp"

using namespace moncentre;

namespace {

/// Φ_n = (xⁿ − 1) / ∏_{d | n, d < n} Φ_d by exact long division over ℤ.
std::vector<long> phi_oracle(int n) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const std::vector<long> den = phi_oracle(d);
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      q[i] = num[i + den.size() - 1];  // monic divisor
      for (std::size_t k = 0; k < den.size(); ++k) num[i + k] -= q[i] * den[k];
    }
    num = q;
  }
  return num;
}

CycNumber random_element(int n, std::mt19937& rng) {
  std::vector<mpq_class> c;
  for (int i = 0; i < n; ++i) c.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  for (auto& q : c) q.canonicalize();
  return CycNumber::from_coefficients(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match long division") {
  for (int n = 1; n <= 30; ++n) CHECK(cyclotomic_polynomial(n) == phi_oracle(n));
}

TEST_CASE("euler phi is the degree") {
  for (int n = 1; n <= 30; ++n) CHECK(euler_phi(n) == static_cast<int>(phi_oracle(n).size()) - 1);
}

TEST_CASE("small identities") {
  CHECK((CycNumber::zeta(4) * CycNumber::zeta(4)) == CycNumber::integer(4, -1));
  CHECK((CycNumber::zeta(2) + CycNumber::integer(2, 1)).is_zero());
  const CycNumber z3 = CycNumber::zeta(3);
  const CycNumber w = CycNumber::integer(3, 1) + z3;
  // 1 + ζ3 = −ζ3², so its inverse is −ζ3
  CHECK(w == -(z3 * z3));
  CHECK(w.inverse() == -z3);
  CHECK((w * w.inverse()).is_one());
  CHECK_THROWS_AS(CycNumber(5).inverse(), std::domain_error);
}

TEST_CASE("roots of unity have the right order") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12, 16}) {
    const CycNumber z = CycNumber::zeta(n);
    CHECK(z.pow(n).is_one());
    for (int k = 1; k < n; ++k) CHECK_FALSE(z.pow(k).is_one());
    CHECK(z.conj() == CycNumber::zeta(n, -1));
    CHECK((z * z.conj()).is_one());
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(42);
  for (int n : {3, 4, 5, 7, 8, 12}) {
    for (int t = 0; t < 20; ++t) {
      const CycNumber a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }
}

TEST_CASE("mixed orders are promoted to the common field") {
  const CycNumber s = CycNumber::zeta(3) * CycNumber::zeta(4);
  CHECK(s.order() % 12 == 0);
  CHECK(s == CycNumber::zeta(12, 7));
  std::mt19937 rng(3);
  const CycNumber a = random_element(6, rng);
  CHECK(a.promote(12) == a);
  CHECK(a.promote(12).promote(24) * CycNumber::integer(1, 2) == a + a);
}

TEST_CASE("linear algebra") {
  std::mt19937 rng(17);
  for (int n : {1, 3, 4, 8}) {
    for (int t = 0; t < 5; ++t) {
      const int size = 2 + t % 3;
      CycMatrix m(size, size, n);
      for (int i = 0; i < size; ++i)
        for (int k = 0; k < size; ++k) m(i, k) = random_element(n, rng);
      std::vector<CycNumber> b;
      for (int i = 0; i < size; ++i) b.push_back(random_element(n, rng));
      const LinearSolution s = solve_linear(m, b);
      if (rank(m) == size) {
        REQUIRE(s.consistent);
        CHECK(s.kernel.empty());
        for (int i = 0; i < size; ++i) {
          CycNumber row(n);
          for (int k = 0; k < size; ++k) row += m(i, k) * s.particular[k];
          CHECK(row == b[i]);
        }
        const CycMatrix inv = inverse(m);
        CHECK(inv * m == CycMatrix::identity(size, n));
        CHECK(m * inv == CycMatrix::identity(size, n));
      }
    }
  }
}

TEST_CASE("kernels of singular matrices") {
  std::mt19937 rng(23);
  const int n = 5;
  CycMatrix m(3, 4, n);
  for (int k = 0; k < 4; ++k) {
    m(0, k) = random_element(n, rng);
    m(1, k) = random_element(n, rng);
    m(2, k) = m(0, k) * CycNumber::zeta(n, 2) - m(1, k);  // dependent row
  }
  const auto ker = kernel_basis(m);
  CHECK(rank(m) == 2);
  CHECK(ker.size() == 2);
  for (const auto& v : ker)
    for (int i = 0; i < 3; ++i) {
      CycNumber s(n);
      for (int k = 0; k < 4; ++k) s += m(i, k) * v[k];
      CHECK(s.is_zero());
    }
  CycMatrix sq(2, 2, n);
  sq(0, 0) = CycNumber::integer(n, 1);
  sq(0, 1) = CycNumber::zeta(n);
  sq(1, 0) = CycNumber::zeta(n);
  sq(1, 1) = CycNumber::zeta(n, 2);
  CHECK(inverse(sq).rows() == 0);
  std::vector<CycNumber> rhs{CycNumber::integer(n, 1), CycNumber::integer(n, 0)};
  CHECK_FALSE(solve_linear(sq, rhs).consistent);
}

TEST_CASE("kronecker product is bilinear and multiplicative") {
  std::mt19937 rng(29);
  const int n = 4;
  auto rnd = [&](int r, int c) {
    CycMatrix m(r, c, n);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < c; ++k) m(i, k) = random_element(n, rng);
    return m;
  };
  const CycMatrix a = rnd(2, 2), b = rnd(3, 3), c = rnd(2, 2), d = rnd(3, 3);
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  CHECK(kron(a + c, b) == kron(a, b) + kron(c, b));
}

TEST_CASE("string forms") {
  CHECK(CycNumber::integer(3, 0).to_string() == "0");
  CHECK(CycNumber::zeta(4).to_string() == "z");
  CHECK(CycNumber::rational(1, mpq_class(-2, 3)).to_string() == "-2/3");
}
