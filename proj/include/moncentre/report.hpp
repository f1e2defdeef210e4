#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace moncentre {

/// Accumulates violated invariants. Empty means every checked property held.
class Report {
 public:
  static constexpr std::size_t kMaxStored = 64;

  void add(std::string violation) {
    ++count_;
    if (violations_.size() < kMaxStored) violations_.push_back(std::move(violation));
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations_) add(prefix + v);
    count_ += other.count_ - other.violations_.size();
  }

  bool ok() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& violations() const { return violations_; }
  std::string first() const { return violations_.empty() ? std::string{} : violations_.front(); }

 private:
  std::vector<std::string> violations_;
  std::size_t count_ = 0;
};

/// One named pass/fail line of a certificate block.
struct Certificate {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline Certificate make_certificate(std::string name, const Report& r) {
  return {std::move(name), r.ok(), r.ok() ? std::string{} : r.first()};
}

inline bool all_pass(const std::vector<Certificate>& certs) {
  for (const auto& c : certs)
    if (!c.pass) return false;
  return true;
}

}  // namespace moncentre
