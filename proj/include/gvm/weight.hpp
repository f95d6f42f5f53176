#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvm/rational.hpp"

namespace gvm {

// Weight in the epsilon-basis. Every in-scope value is a half-integer, so a
// coordinate is stored as its double (an exact int64); this gives exact
// equality and cheap hashing for orbit sets.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : d_(rank, 0) {}
  static Weight from_doubled(std::vector<long long> doubled) {
    Weight w;
    w.d_ = std::move(doubled);
    return w;
  }
  static Weight from_ints(const std::vector<long long>& v) {
    Weight w;
    w.d_.reserve(v.size());
    for (auto x : v) w.d_.push_back(2 * x);
    return w;
  }

  std::size_t rank() const { return d_.size(); }
  // doubled coordinate (2 * a_i), 0-based
  long long dbl(std::size_t i) const { return d_[i]; }
  long long& dbl(std::size_t i) { return d_[i]; }
  const std::vector<long long>& doubled() const { return d_; }
  Rat coord(std::size_t i) const { return rat(d_[i], 2); }

  bool is_zero() const {
    for (auto x : d_)
      if (x != 0) return false;
    return true;
  }

  Weight operator+(const Weight& o) const {
    check_rank(o);
    Weight r = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    check_rank(o);
    Weight r = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= o.d_[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (auto& x : r.d_) x = -x;
    return r;
  }
  bool operator==(const Weight& o) const { return d_ == o.d_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return d_ < o.d_; }  // lex, for maps

  // Standard inner product in the epsilon-basis, exact.
  Rat inner(const Weight& o) const {
    check_rank(o);
    Rat s = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) s += rat(d_[i], 2) * rat(o.d_[i], 2);
    return s;
  }

  // Sum of the first k coordinates: the grading-element evaluation for a
  // single crossed node at position k.
  Rat eval_E(std::size_t k) const {
    long long s = 0;
    for (std::size_t i = 0; i < k && i < d_.size(); ++i) s += d_[i];
    return rat(s, 2);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) s += ",";
      s += rat_str(rat(d_[i], 2));
    }
    return s + "]";
  }
  // Paper-style rendering with the bar after position k: [a_1,..,a_k|b_1,..].
  std::string str_bar(std::size_t k) const {
    std::string s = "[";
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) s += (i == k) ? "|" : ",";
      s += rat_str(rat(d_[i], 2));
    }
    return s + "]";
  }

 private:
  void check_rank(const Weight& o) const {
    if (o.d_.size() != d_.size()) throw std::invalid_argument("weight rank mismatch");
  }
  std::vector<long long> d_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.doubled()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// 2(w,g)/(g,g); g must be nonzero.
inline Rat coroot_pairing(const Weight& w, const Weight& g) {
  Rat gg = g.inner(g);
  if (gg == 0) throw std::invalid_argument("coroot pairing against zero");
  return 2 * w.inner(g) / gg;
}

}  // namespace gvm
