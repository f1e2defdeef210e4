#include "moncentre/veck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "moncentre/centre.hpp"
#include "moncentre/fincat.hpp"

namespace moncentre {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    s += (first ? "" : ", ") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

CycNumber one(int n) { return CycNumber::integer(n, 1); }

}  // namespace

Cocycle3 trivial_cocycle(const Group& g) {
  const int n = g.order();
  return Cocycle3{g, std::vector<CycNumber>(static_cast<std::size_t>(n) * n * n, one(1))};
}

Cocycle3 z2_nontrivial_cocycle() {
  Cocycle3 w = trivial_cocycle(cyclic_group(2));
  w.at(1, 1, 1) = CycNumber::integer(2, -1);
  return w;
}

Cocycle3 twist_by_coboundary(const Cocycle3& w, const std::vector<CycNumber>& mu) {
  const Group& g = w.group;
  const int n = g.order();
  if (static_cast<int>(mu.size()) != n * n) throw std::invalid_argument("2-cochain must have |G|² values");
  auto m = [&](int a, int b) { return mu[a * n + b]; };
  Cocycle3 out = w;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        out.at(a, b, c) = w.at(a, b, c) * m(b, c) * m(a, g.mul(b, c)) / (m(g.mul(a, b), c) * m(a, b));
  return out;
}

Report check_cocycle(const Cocycle3& w) {
  Report r;
  const Group& g = w.group;
  const int n = g.order();
  if (static_cast<int>(w.omega.size()) != n * n * n) {
    r.add("structural: ω needs |G|³ values");
    return r;
  }
  const int e = g.identity();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (w.at(a, b, c).is_zero()) r.add("ω" + tuple_str({a, b, c}) + " is zero");
        if ((a == e || b == e || c == e) && !w.at(a, b, c).is_one())
          r.add("normalization fails at " + tuple_str({a, b, c}));
      }
  if (!r.ok()) return r;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const CycNumber lhs = w.at(b, c, d) * w.at(a, g.mul(b, c), d) * w.at(a, b, c);
          const CycNumber rhs = w.at(g.mul(a, b), c, d) * w.at(a, b, g.mul(c, d));
          if (lhs != rhs) r.add("cocycle identity fails at " + tuple_str({a, b, c, d}));
        }
  return r;
}

int cocycle_order(const Cocycle3& w) {
  int m = 1;
  for (const auto& v : w.omega) {
    // the order of a root of unity in ℚ(ζ_k) divides 2k
    const int bound = 2 * v.order();
    int k = 1;
    CycNumber p = v;
    while (k <= bound && !p.is_one()) {
      p *= v;
      ++k;
    }
    if (k > bound) return 0;
    m = std::lcm(m, k);
  }
  return m;
}

int field_order(const Cocycle3& w) {
  const int m = cocycle_order(w);
  return m == 0 ? 0 : w.group.exponent() * m;
}

CycNumber multiplicativity_scalar(const Cocycle3& w, int g, int x, int y) {
  const Group& G = w.group;
  const int g1 = G.conjugate(g, x);
  const int g2 = G.conjugate(g1, y);
  return w.at(x, g1, y) / (w.at(g, x, y) * w.at(x, y, g2));
}

std::vector<int> GradedObject::dimension_vector(int group_order) const {
  std::vector<int> d(group_order, 0);
  for (int g : grades) ++d[g];
  return d;
}

GradedObject GradedObject::from_dimensions(const std::vector<int>& dims) {
  GradedObject v;
  for (std::size_t g = 0; g < dims.size(); ++g)
    for (int i = 0; i < dims[g]; ++i) v.grades.push_back(static_cast<int>(g));
  return v;
}

namespace {

/// diag(s(grade_i, x, y)) over the basis.
CycMatrix twist_diagonal(const HalfBraidingLin& v, const Cocycle3& w, int x, int y, int order) {
  CycMatrix d(v.carrier.dim(), v.carrier.dim(), order);
  for (int i = 0; i < v.carrier.dim(); ++i) d(i, i) = multiplicativity_scalar(w, v.carrier.grades[i], x, y);
  return d;
}

}  // namespace

Report check_half_braiding(const HalfBraidingLin& v, const Cocycle3& w) {
  Report r;
  const Group& G = w.group;
  const int n = G.order();
  const int d = v.carrier.dim();
  if (static_cast<int>(v.beta.size()) != n) {
    r.add("structural: one β per group element required");
    return r;
  }
  for (int g : v.carrier.grades)
    if (g < 0 || g >= n) {
      r.add("structural: grade out of range");
      return r;
    }
  for (int x = 0; x < n; ++x)
    if (v.beta[x].rows() != d || v.beta[x].cols() != d) {
      r.add("structural: β_" + std::to_string(x) + " has the wrong size");
      return r;
    }
  const int order = v.beta.empty() ? 1 : v.beta[0].order();
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (!v.beta[x](k, i).is_zero() && v.carrier.grades[k] != G.conjugate(v.carrier.grades[i], x))
          r.add("grading: β_" + std::to_string(x) + " sends grade " + std::to_string(v.carrier.grades[i]) +
                " outside grade x⁻¹gx");
  if (!r.ok()) return r;
  if (v.beta[G.identity()] != CycMatrix::identity(d, order)) r.add("β at the unit is not the identity");
  for (int x = 0; x < n; ++x)
    if (inverse(v.beta[x]).rows() != d) r.add("β_" + std::to_string(x) + " is not invertible");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const CycMatrix rhs = v.beta[y] * v.beta[x] * twist_diagonal(v, w, x, y, order);
      const CycMatrix& lhs = v.beta[G.mul(x, y)];
      if (lhs == rhs) continue;
      int col = 0;
      for (int i = 0; i < d && col == 0; ++i)
        for (int k = 0; k < d; ++k)
          if (lhs(k, i) != rhs(k, i)) {
            col = i + 1;
            break;
          }
      r.add("multiplicativity fails at (x, y, g) = " +
            tuple_str({x, y, col > 0 ? v.carrier.grades[col - 1] : -1}));
    }
  return r;
}

HalfBraidingLin tensor(const HalfBraidingLin& v, const HalfBraidingLin& w, const Cocycle3& om) {
  const Group& G = om.group;
  const int n = G.order();
  const int dv = v.carrier.dim(), dw = w.carrier.dim();
  const int order = std::lcm(v.beta.empty() ? 1 : v.beta[0].order(), w.beta.empty() ? 1 : w.beta[0].order());
  HalfBraidingLin out;
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) out.carrier.grades.push_back(G.mul(v.carrier.grades[i], w.carrier.grades[j]));
  for (int x = 0; x < n; ++x) {
    CycMatrix t(dv * dw, dv * dw, order);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dw; ++j) {
        const int g = v.carrier.grades[i], h = w.carrier.grades[j];
        const int g1 = G.conjugate(g, x), h1 = G.conjugate(h, x);
        const CycNumber s = om.at(g, h, x) * om.at(x, g1, h1) / om.at(g, x, h1);
        for (int i2 = 0; i2 < dv; ++i2) {
          if (v.beta[x](i2, i).is_zero()) continue;
          for (int j2 = 0; j2 < dw; ++j2)
            if (!w.beta[x](j2, j).is_zero()) t(i2 * dw + j2, i * dw + j) = s * v.beta[x](i2, i) * w.beta[x](j2, j);
        }
      }
    out.beta.push_back(std::move(t));
  }
  return out;
}

HalfBraidingLin unit_object(const Cocycle3& w) {
  HalfBraidingLin u;
  u.carrier.grades = {w.group.identity()};
  for (int x = 0; x < w.group.order(); ++x) u.beta.push_back(CycMatrix::identity(1, 1));
  return u;
}

Report check_intertwiner(const CycMatrix& t, const HalfBraidingLin& v, const HalfBraidingLin& w) {
  Report r;
  if (t.rows() != w.carrier.dim() || t.cols() != v.carrier.dim()) {
    r.add("mismatched endpoints");
    return r;
  }
  for (int i = 0; i < t.cols(); ++i)
    for (int k = 0; k < t.rows(); ++k)
      if (!t(k, i).is_zero() && w.carrier.grades[k] != v.carrier.grades[i]) {
        r.add("map does not preserve grades at column " + std::to_string(i));
        return r;
      }
  for (std::size_t x = 0; x < v.beta.size(); ++x) {
    const CycMatrix lhs = w.beta[x] * t;
    const CycMatrix rhs = t * v.beta[x];
    for (int i = 0; i < t.cols(); ++i) {
      bool same = true;
      for (int k = 0; k < t.rows() && same; ++k) same = lhs(k, i) == rhs(k, i);
      if (!same) {
        r.add("half-braiding compatibility fails at (x, g) = " +
              tuple_str({static_cast<int>(x), v.carrier.grades[i]}));
        break;
      }
    }
  }
  return r;
}

std::vector<CycMatrix> intertwiners(const HalfBraidingLin& v, const HalfBraidingLin& w, int order) {
  const int dv = v.carrier.dim(), dw = w.carrier.dim();
  std::vector<std::pair<int, int>> unknowns;  // (k, i) with matching grades
  std::map<std::pair<int, int>, int> pos;
  for (int k = 0; k < dw; ++k)
    for (int i = 0; i < dv; ++i)
      if (w.carrier.grades[k] == v.carrier.grades[i]) {
        pos[{k, i}] = static_cast<int>(unknowns.size());
        unknowns.push_back({k, i});
      }
  if (unknowns.empty()) return {};
  const int nx = static_cast<int>(v.beta.size());
  CycMatrix m(nx * dw * dv, static_cast<int>(unknowns.size()), order);
  for (int x = 0; x < nx; ++x)
    for (int k2 = 0; k2 < dw; ++k2)
      for (int i = 0; i < dv; ++i) {
        const int row = (x * dw + k2) * dv + i;
        // (β^W_x T)[k2, i] − (T β^V_x)[k2, i]
        for (int k = 0; k < dw; ++k)
          if (auto it = pos.find({k, i}); it != pos.end() && !w.beta[x](k2, k).is_zero())
            m(row, it->second) += w.beta[x](k2, k);
        for (int i2 = 0; i2 < dv; ++i2)
          if (auto it = pos.find({k2, i2}); it != pos.end() && !v.beta[x](i2, i).is_zero())
            m(row, it->second) -= v.beta[x](i2, i);
      }
  std::vector<CycMatrix> out;
  for (const auto& vec : kernel_basis(m)) {
    CycMatrix t(dw, dv, order);
    for (std::size_t u = 0; u < unknowns.size(); ++u) t(unknowns[u].first, unknowns[u].second) = vec[u];
    out.push_back(std::move(t));
  }
  return out;
}

CycMatrix braiding_matrix(const HalfBraidingLin& v, const HalfBraidingLin& w, int order) {
  const int dv = v.carrier.dim(), dw = w.carrier.dim();
  CycMatrix c(dw * dv, dv * dw, order);
  for (int i = 0; i < dv; ++i)
    for (int k = 0; k < dw; ++k) {
      const CycMatrix& b = v.beta[w.carrier.grades[k]];
      for (int i2 = 0; i2 < dv; ++i2)
        if (!b(i2, i).is_zero()) c(k * dv + i2, i * dw + k) = b(i2, i);
    }
  return c;
}

// ---------------------------------------------------------------------------

HalfBraidingSpace half_braiding_space(const GradedObject& v, const Cocycle3& w) {
  const Group& G = w.group;
  const int n = G.order();
  HalfBraidingSpace out;
  const std::vector<int> dims = v.dimension_vector(n);
  std::vector<int> support;
  for (int g = 0; g < n; ++g)
    if (dims[g] > 0) support.push_back(g);
  for (int x = 0; x < n && out.witness.empty(); ++x)
    for (int g : support)
      if (dims[G.conjugate(g, x)] != dims[g]) {
        out.witness = "β_" + std::to_string(x) + " must map grade " + std::to_string(g) + " (dim " +
                      std::to_string(dims[g]) + ") invertibly onto grade " + std::to_string(G.conjugate(g, x)) +
                      " (dim " + std::to_string(dims[G.conjugate(g, x)]) + ")";
        break;
      }
  if (!out.witness.empty()) return out;
  out.feasible = true;
  std::vector<int> span{G.identity()};
  for (int x = 0; x < n && static_cast<int>(span.size()) < n; ++x)
    if (std::find(span.begin(), span.end(), x) == span.end()) {
      out.generators.push_back(x);
      std::vector<int> gens = out.generators;
      span = G.generated(gens);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int g : support) out.equations.push_back({x, y, g, multiplicativity_scalar(w, g, x, y)});

  if (std::any_of(support.begin(), support.end(), [&](int g) { return dims[g] > 1; })) return out;
  const int order = field_order(w);
  if (order == 0) return out;
  const int ns = static_cast<int>(support.size());
  const int slots = static_cast<int>(out.generators.size()) * ns;
  double combos = 1;
  for (int s = 0; s < slots; ++s) combos *= order;
  if (combos > 1e6) return out;
  out.enumerated = true;
  std::map<int, int> where;
  for (int s = 0; s < ns; ++s) where[support[s]] = s;
  std::vector<CycNumber> roots;
  for (int k = 0; k < order; ++k) roots.push_back(CycNumber::zeta(order, k));

  std::vector<int> choice(slots, 0);
  while (true) {
    // b[x][s] = β_x at grade support[s]
    std::vector<std::vector<std::optional<CycNumber>>> b(n, std::vector<std::optional<CycNumber>>(ns));
    for (int s = 0; s < ns; ++s) b[G.identity()][s] = one(order);
    for (std::size_t q = 0; q < out.generators.size(); ++q)
      for (int s = 0; s < ns; ++s) b[out.generators[q]][s] = roots[choice[q * ns + s]];
    bool ok = true;
    std::vector<int> frontier{G.identity()};
    std::vector<bool> reached(n, false);
    reached[G.identity()] = true;
    while (!frontier.empty() && ok) {
      std::vector<int> next;
      for (int u : frontier)
        for (int x : out.generators) {
          const int ux = G.mul(u, x);
          for (int s = 0; s < ns && ok; ++s) {
            const int g = support[s];
            const CycNumber val =
                multiplicativity_scalar(w, g, u, x) * *b[x][where[G.conjugate(g, u)]] * *b[u][s];
            if (b[ux][s] && *b[ux][s] != val) ok = false;
            b[ux][s] = val;
          }
          if (!reached[ux]) {
            reached[ux] = true;
            next.push_back(ux);
          }
        }
      frontier = std::move(next);
    }
    if (ok) {
      HalfBraidingLin h;
      h.carrier.grades = support;
      for (int x = 0; x < n; ++x) {
        CycMatrix m(ns, ns, order);
        for (int s = 0; s < ns; ++s) m(where[G.conjugate(support[s], x)], s) = *b[x][s];
        h.beta.push_back(std::move(m));
      }
      if (check_half_braiding(h, w).ok()) out.solutions.push_back(std::move(h));
    }
    int k = 0;
    while (k < slots && ++choice[k] == order) choice[k++] = 0;
    if (k == slots) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simple objects. For a class with representative r and centralizer H, the
// blocks ρ(h) = β_h|r satisfy ρ(hk) = c(h,k) ρ(k) ρ(h) with c(h,k) = s(r,h,k),
// so π = ρᵀ is a projective representation with π(hk) = c(h,k) π(h) π(k).
// Irreducible ones are found among representations induced from
// one-dimensional ones of subgroups, and each is lifted to the whole class.

namespace {

struct ClassResult {
  std::vector<SimpleObject> simples;
  bool closed = false;
  std::string note;
};

using Rep = std::vector<CycMatrix>;  // indexed by position in H

/// Dimension of {X : b(h) X = X a(h) for all h}.
int hom_dimension(const Rep& a, const Rep& b, int order) {
  const int da = a[0].rows(), db = b[0].rows();
  CycMatrix m(static_cast<int>(a.size()) * db * da, db * da, order);
  for (std::size_t h = 0; h < a.size(); ++h)
    for (int p = 0; p < db; ++p)
      for (int q = 0; q < da; ++q) {
        const int row = (static_cast<int>(h) * db + p) * da + q;
        for (int k = 0; k < db; ++k) m(row, k * da + q) += b[h](p, k);
        for (int k = 0; k < da; ++k) m(row, p * da + k) -= a[h](k, q);
      }
  return static_cast<int>(kernel_basis(m).size());
}

ClassResult simples_for_class(const Cocycle3& w, const std::vector<int>& cls, int dim_bound, int order) {
  const Group& G = w.group;
  ClassResult out;
  const int r = cls.front();
  const std::vector<int> H = G.centralizer(r);
  const int nh = static_cast<int>(H.size());
  std::map<int, int> hpos;
  for (int i = 0; i < nh; ++i) hpos[H[i]] = i;
  auto c = [&](int h, int k) { return multiplicativity_scalar(w, r, h, k); };
  std::vector<CycNumber> roots;
  for (int k = 0; k < order; ++k) roots.push_back(CycNumber::zeta(order, k));

  std::vector<Rep> found;
  int total = 0;
  bool bound_hit = false;
  for (const auto& K : G.subgroups(H)) {
    if (total == nh) break;
    const int index = nh / static_cast<int>(K.size());
    if (static_cast<int>(cls.size()) * index > dim_bound) {
      bound_hit = true;
      continue;
    }
    // left transversal of K in H, starting at the unit
    std::vector<int> t{G.identity()};
    std::set<int> covered;
    for (int k : K) covered.insert(k);
    for (int h : H)
      if (!covered.count(h)) {
        t.push_back(h);
        for (int k : K) covered.insert(G.mul(h, k));
      }
    // one-dimensional λ on K with λ(hk) = c(h,k) λ(h) λ(k)
    std::vector<int> kel{G.identity()};
    for (int k : K)
      if (k != G.identity()) kel.push_back(k);
    std::map<int, int> kpos;
    for (std::size_t i = 0; i < kel.size(); ++i) kpos[kel[i]] = static_cast<int>(i);
    std::vector<std::vector<CycNumber>> lambdas;
    std::vector<std::optional<CycNumber>> lam(kel.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == kel.size()) {
        std::vector<CycNumber> v;
        for (auto& x : lam) v.push_back(*x);
        lambdas.push_back(std::move(v));
        return;
      }
      for (const auto& z : (i == 0 ? std::vector<CycNumber>{one(order)} : roots)) {
        lam[i] = z;
        bool ok = true;
        for (std::size_t a = 0; a <= i && ok; ++a)
          for (std::size_t b = 0; b <= i && ok; ++b) {
            const int ab = G.mul(kel[a], kel[b]);
            const std::size_t p = kpos[ab];
            if (p > i || (a != i && b != i && p != i)) continue;
            ok = *lam[p] == c(kel[a], kel[b]) * *lam[a] * *lam[b];
          }
        if (ok) self(self, i + 1);
      }
      lam[i].reset();
    };
    rec(rec, 0);

    const int d = static_cast<int>(t.size());
    for (const auto& l : lambdas) {
      if (total == nh) break;
      Rep pi;
      for (int h : H) {
        CycMatrix m(d, d, order);
        for (int i = 0; i < d; ++i) {
          const int ht = G.mul(h, t[i]);
          for (int j = 0; j < d; ++j) {
            const int k = G.mul(G.inverse(t[j]), ht);
            if (!kpos.count(k)) continue;
            m(j, i) = c(t[j], k) / c(h, t[i]) * l[kpos[k]];
          }
        }
        pi.push_back(std::move(m));
      }
      for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b)
          if (pi[hpos[G.mul(H[a], H[b])]] != pi[a] * pi[b] * CycMatrix::scalar(d, c(H[a], H[b])))
            throw std::logic_error("induced representation is not projective for the class cocycle");
      if (hom_dimension(pi, pi, order) != 1) continue;
      bool fresh = true;
      for (const auto& f : found)
        if (f[0].rows() == d && hom_dimension(f, pi, order) != 0) fresh = false;
      if (!fresh) continue;
      found.push_back(std::move(pi));
      total += d * d;
    }
  }
  out.closed = total == nh;
  if (!out.closed)
    out.note = "class of " + std::to_string(r) + ": found Σd² = " + std::to_string(total) + " of " +
               std::to_string(nh) + (bound_hit ? " (dimension bound reached)" : "");

  // lift to the class: x_g with x_g⁻¹ r x_g = g, x_r = e
  const int nc = static_cast<int>(cls.size());
  std::map<int, int> cpos;
  std::vector<int> xg(nc);
  for (int i = 0; i < nc; ++i) cpos[cls[i]] = i;
  for (int i = 0; i < nc; ++i) {
    if (cls[i] == r) {
      xg[i] = G.identity();
      continue;
    }
    for (int x = 0; x < G.order(); ++x)
      if (G.conjugate(r, x) == cls[i]) {
        xg[i] = x;
        break;
      }
  }
  for (const auto& pi : found) {
    const int d = pi[0].rows();
    SimpleObject s;
    s.class_rep = r;
    s.projective_dim = d;
    for (int g : cls)
      for (int i = 0; i < d; ++i) s.object.carrier.grades.push_back(g);
    s.dimensions = s.object.carrier.dimension_vector(G.order());
    for (int x = 0; x < G.order(); ++x) {
      CycMatrix b(nc * d, nc * d, order);
      for (int gi = 0; gi < nc; ++gi) {
        const int g1 = G.conjugate(cls[gi], x);
        const int gj = cpos[g1];
        const int h = G.mul(G.mul(xg[gi], x), G.inverse(xg[gj]));
        const CycNumber scalar = multiplicativity_scalar(w, r, h, xg[gj]) / multiplicativity_scalar(w, r, xg[gi], x);
        const CycMatrix& p = pi[hpos.at(h)];
        for (int i = 0; i < d; ++i)
          for (int k = 0; k < d; ++k) b(gj * d + k, gi * d + i) = scalar * p(i, k);  // ρ = πᵀ
      }
      s.object.beta.push_back(std::move(b));
    }
    out.simples.push_back(std::move(s));
  }
  // canonical order inside the class: total dimension, then β at the representative
  auto key_less = [&](const SimpleObject& a, const SimpleObject& b) {
    if (a.object.carrier.dim() != b.object.carrier.dim()) return a.object.carrier.dim() < b.object.carrier.dim();
    for (int h : H) {
      const CycMatrix& x = a.object.beta[h];
      const CycMatrix& y = b.object.beta[h];
      for (int i = 0; i < a.projective_dim; ++i)
        for (int k = 0; k < a.projective_dim; ++k)
          if (x(k, i) != y(k, i)) return x(k, i) < y(k, i);
    }
    return false;
  };
  std::sort(out.simples.begin(), out.simples.end(), key_less);
  return out;
}

}  // namespace

SimpleList centre_simples(const Cocycle3& w, int dim_bound, ExecPolicy policy, int max_group_order) {
  const Group& G = w.group;
  if (G.order() > max_group_order)
    throw GuardExceeded("group order " + std::to_string(G.order()) + " exceeds the limit of " +
                        std::to_string(max_group_order));
  if (Report r = check_cocycle(w); !r.ok()) throw std::invalid_argument("not a normalized 3-cocycle: " + r.first());
  const int order = field_order(w);
  if (order == 0) throw std::invalid_argument("cocycle values must be roots of unity");

  const auto classes = G.conjugacy_classes();
  std::vector<ClassResult> per_class(classes.size());
  for_each_index(policy, classes.size(),
                 [&](std::size_t i) { per_class[i] = simples_for_class(w, classes[i], dim_bound, order); });

  SimpleList out;
  out.complete = true;
  for (auto& cr : per_class) {
    out.complete = out.complete && cr.closed;
    if (!cr.note.empty()) out.notes.push_back(cr.note);
    for (auto& s : cr.simples) out.simples.push_back(std::move(s));
  }
  const int ns = static_cast<int>(out.simples.size());
  for (int i = 0; i < ns; ++i) {
    const auto& v = out.simples[i].object;
    out.certificate.merge(check_half_braiding(v, w), "simple " + std::to_string(i) + ": ");
    for (int j = 0; j < ns; ++j) {
      const auto& u = out.simples[j].object;
      if (out.simples[i].class_rep != out.simples[j].class_rep) continue;  // disjoint supports
      const std::size_t dim = intertwiners(v, u, order).size();
      if (i == j && dim != 1)
        out.certificate.add("simple " + std::to_string(i) + " has " + std::to_string(dim) + " endomorphisms");
      if (i != j && dim != 0)
        out.certificate.add("simples " + std::to_string(i) + " and " + std::to_string(j) + " are not disjoint");
    }
  }
  long sum = 0;
  for (const auto& s : out.simples) sum += static_cast<long>(s.object.carrier.dim()) * s.object.carrier.dim();
  out.sum_rule = sum == static_cast<long>(G.order()) * G.order();
  return out;
}

namespace {

CycMatrix associator_diagonal(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c,
                              const Cocycle3& w, int order, bool inverse_values) {
  const int n = static_cast<int>(a.size() * b.size() * c.size());
  CycMatrix d(n, n, order);
  int idx = 0;
  for (int x : a)
    for (int y : b)
      for (int z : c) {
        d(idx, idx) = inverse_values ? w.at(x, y, z).inverse() : w.at(x, y, z);
        ++idx;
      }
  return d;
}

}  // namespace

std::vector<Certificate> certify_linear_centre(const std::vector<SimpleObject>& simples, const Cocycle3& w,
                                               bool include_products) {
  std::vector<Certificate> certs;
  const Group& G = w.group;
  const int n = G.order();
  const int order = std::max(1, field_order(w));
  const int e = G.identity();

  certs.push_back(make_certificate("cocycle identity (pentagon of Vec_G^ω)", check_cocycle(w)));
  Report tri;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!w.at(a, e, b).is_one()) tri.add("ω(g, e, h) ≠ 1 at " + tuple_str({a, b}));
  certs.push_back(make_certificate("triangle (ω(g, e, h) = 1)", tri));

  std::vector<const HalfBraidingLin*> objs;
  for (const auto& s : simples) objs.push_back(&s.object);
  const int ns = static_cast<int>(objs.size());

  Report axiom;
  for (int i = 0; i < ns; ++i) axiom.merge(check_half_braiding(*objs[i], w), "simple " + std::to_string(i) + ": ");
  certs.push_back(make_certificate("every simple satisfies the half-braiding axiom", axiom));

  std::vector<std::vector<HalfBraidingLin>> prod(ns, std::vector<HalfBraidingLin>(ns));
  Report closure;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      prod[i][j] = tensor(*objs[i], *objs[j], w);
      closure.merge(check_half_braiding(prod[i][j], w), "tensor " + tuple_str({i, j}) + ": ");
    }
  certs.push_back(make_certificate("tensor of half-braidings is a half-braiding", closure));

  Report assoc;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (int k = 0; k < ns; ++k) {
        const HalfBraidingLin left = tensor(prod[i][j], *objs[k], w);
        const HalfBraidingLin right = tensor(*objs[i], prod[j][k], w);
        const CycMatrix a =
            associator_diagonal(objs[i]->carrier.grades, objs[j]->carrier.grades, objs[k]->carrier.grades, w, order, false);
        for (int x = 0; x < n; ++x)
          if (right.beta[x] * a != a * left.beta[x]) {
            assoc.add("associator at " + tuple_str({i, j, k}) + " fails at x = " + std::to_string(x));
            break;
          }
      }
  certs.push_back(make_certificate("associator is a centre morphism", assoc));

  Report unitors;
  const HalfBraidingLin u = unit_object(w);
  unitors.merge(check_half_braiding(u, w), "unit: ");
  for (int i = 0; i < ns; ++i) {
    const HalfBraidingLin l = tensor(u, *objs[i], w), r = tensor(*objs[i], u, w);
    for (int x = 0; x < n; ++x)
      if (l.beta[x] != objs[i]->beta[x] || r.beta[x] != objs[i]->beta[x]) {
        unitors.add("unitor at simple " + std::to_string(i) + " fails at x = " + std::to_string(x));
        break;
      }
  }
  certs.push_back(make_certificate("unit object and unitors lie in the centre", unitors));

  std::vector<std::vector<CycMatrix>> br(ns, std::vector<CycMatrix>(ns));
  Report braid;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      br[i][j] = braiding_matrix(*objs[i], *objs[j], order);
      if (inverse(br[i][j]).rows() != br[i][j].rows()) braid.add("braiding " + tuple_str({i, j}) + " not invertible");
      for (int x = 0; x < n; ++x)
        if (prod[j][i].beta[x] * br[i][j] != br[i][j] * prod[i][j].beta[x]) {
          braid.add("braiding " + tuple_str({i, j}) + " fails to commute with half-braidings at x = " +
                    std::to_string(x));
          break;
        }
    }
  certs.push_back(make_certificate("braiding is an invertible centre morphism", braid));

  Report natural;
  std::vector<const HalfBraidingLin*> pool = objs;
  if (include_products)
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j) pool.push_back(&prod[i][j]);
  for (std::size_t p = 0; p < pool.size(); ++p)
    for (std::size_t q = 0; q < pool.size(); ++q) {
      if (pool[p]->carrier.dimension_vector(n) != pool[q]->carrier.dimension_vector(n)) continue;
      for (const CycMatrix& f : intertwiners(*pool[p], *pool[q], order))
        for (int k = 0; k < ns; ++k) {
          const HalfBraidingLin& y = *objs[k];
          const CycMatrix iy = CycMatrix::identity(y.carrier.dim(), order);
          const CycMatrix c1 = braiding_matrix(*pool[p], y, order), c2 = braiding_matrix(*pool[q], y, order);
          const CycMatrix d1 = braiding_matrix(y, *pool[p], order), d2 = braiding_matrix(y, *pool[q], order);
          if (c2 * kron(f, iy) != kron(iy, f) * c1 || d2 * kron(iy, f) != kron(f, iy) * d1)
            natural.add("naturality fails for a map " + tuple_str({static_cast<int>(p), static_cast<int>(q)}) +
                        " against simple " + std::to_string(k));
        }
    }
  certs.push_back(make_certificate("braiding natural", natural));

  Report h1, h2;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (int k = 0; k < ns; ++k) {
        const auto& a = objs[i]->carrier.grades;
        const auto& b = objs[j]->carrier.grades;
        const auto& c = objs[k]->carrier.grades;
        const CycMatrix ia = CycMatrix::identity(objs[i]->carrier.dim(), order);
        const CycMatrix ib = CycMatrix::identity(objs[j]->carrier.dim(), order);
        const CycMatrix ic = CycMatrix::identity(objs[k]->carrier.dim(), order);
        const CycMatrix lhs1 = associator_diagonal(b, c, a, w, order, false) *
                               braiding_matrix(*objs[i], prod[j][k], order) *
                               associator_diagonal(a, b, c, w, order, false);
        const CycMatrix rhs1 =
            kron(ib, br[i][k]) * associator_diagonal(b, a, c, w, order, false) * kron(br[i][j], ic);
        if (lhs1 != rhs1) h1.add("first hexagon fails at " + tuple_str({i, j, k}));
        const CycMatrix lhs2 = associator_diagonal(c, a, b, w, order, true) *
                               braiding_matrix(prod[i][j], *objs[k], order) *
                               associator_diagonal(a, b, c, w, order, true);
        const CycMatrix rhs2 =
            kron(br[i][k], ib) * associator_diagonal(a, c, b, w, order, true) * kron(ia, br[j][k]);
        if (lhs2 != rhs2) h2.add("second hexagon fails at " + tuple_str({i, j, k}));
      }
  certs.push_back(make_certificate("first hexagon", h1));
  certs.push_back(make_certificate("second hexagon", h2));

  Report forget;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      std::vector<int> expected;
      for (int g : objs[i]->carrier.grades)
        for (int h : objs[j]->carrier.grades) expected.push_back(G.mul(g, h));
      if (prod[i][j].carrier.grades != expected) forget.add("tensor grading differs at " + tuple_str({i, j}));
    }
  certs.push_back(make_certificate("forgetful functor is strict monoidal and faithful", forget));
  return certs;
}

CrossBackendVerdict verify_linear_against_bruteforce(const Group& g) {
  CrossBackendVerdict out;
  CentreCategory z = compute_centre(discrete_group_monoidal(g));
  for (const auto& o : z.objects) out.set_level.push_back(o.a);
  std::sort(out.set_level.begin(), out.set_level.end());
  const Cocycle3 w = trivial_cocycle(g);
  for (int x = 0; x < g.order(); ++x) {
    HalfBraidingSpace s = half_braiding_space(GradedObject{{x}}, w);
    if (s.feasible && s.enumerated && !s.solutions.empty()) out.linear.push_back(x);
  }
  out.match = out.set_level == out.linear;
  if (!out.match) {
    for (int x = 0; x < g.order(); ++x) {
      const bool a = std::count(out.set_level.begin(), out.set_level.end(), x) > 0;
      const bool b = std::count(out.linear.begin(), out.linear.end(), x) > 0;
      if (a != b) {
        out.witness = "element " + std::to_string(x) + (a ? " is central at set level but has no linear half-braiding"
                                                           : " has a linear half-braiding but is not central");
        break;
      }
    }
  }
  return out;
}

}  // namespace moncentre
