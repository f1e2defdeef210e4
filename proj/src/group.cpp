#include "moncentre/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace moncentre {

Group::Group(std::vector<std::vector<int>> table) : n_(static_cast<int>(table.size())) {
  if (n_ == 0) throw std::invalid_argument("group must be non-empty");
  table_.reserve(n_ * n_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n_) throw std::invalid_argument("multiplication table entry out of range");
      table_.push_back(v);
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ", " + std::to_string(c) + ")");
  identity_ = -1;
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool unit = true;
    for (int a = 0; a < n_ && unit; ++a) unit = mul(e, a) == a && mul(a, e) == a;
    if (unit) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("table has no unit");
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inverse_[a] < 0) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
}

int Group::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int Group::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> Group::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<std::vector<int>> Group::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n_, false);
  for (int g = 0; g < n_; ++g) {
    if (seen[g]) continue;
    std::set<int> cls;
    for (int x = 0; x < n_; ++x) cls.insert(conjugate(g, x));
    for (int c : cls) seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<int> Group::centralizer(int g) const {
  std::vector<int> h;
  for (int x = 0; x < n_; ++x)
    if (mul(g, x) == mul(x, g)) h.push_back(x);
  return h;
}

std::vector<int> Group::centre() const {
  std::vector<int> z;
  for (int g = 0; g < n_; ++g)
    if (static_cast<int>(centralizer(g).size()) == n_) z.push_back(g);
  return z;
}

std::vector<int> Group::generated(const std::vector<int>& gens) const {
  std::set<int> sub{identity_};
  std::vector<int> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        const int y = mul(x, g);
        if (sub.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {sub.begin(), sub.end()};
}

std::vector<std::vector<int>> Group::subgroups(const std::vector<int>& within) const {
  std::vector<int> ambient = within;
  if (ambient.empty()) {
    ambient.resize(n_);
    std::iota(ambient.begin(), ambient.end(), 0);
  }
  std::set<std::vector<int>> found;
  // groups of order ≤ 8 are generated by at most three elements
  for (int a : ambient)
    for (int b : ambient)
      for (int c : ambient) found.insert(generated({a, b, c}));
  found.insert(generated({}));
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return out;
}

Group cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group(std::move(t));
}

Group symmetric_group_3() {
  // permutations of {0,1,2} as images
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                               {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> p(3);
      for (int i = 0; i < 3; ++i) p[i] = perms[a][perms[b][i]];  // a∘b
      t[a][b] = index(p);
    }
  return Group(std::move(t));
}

}  // namespace moncentre
