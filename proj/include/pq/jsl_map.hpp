#pragma once

// Join-continuous maps between finite chains I_n = {0,...,n}.
//
// On a finite chain a map is join-continuous exactly when it is monotone
// and sends 0 to 0.  Such maps from I_n to I_m are in bijection with
// P(n,m): the value at i >= 1 is the number of y's preceding the i-th x.

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pq/path.hpp"

namespace pq {

class JoinContMap {
 public:
  JoinContMap() : values_{0} {}

  // Throws InvalidMap unless values[0] == 0, values is nondecreasing and
  // bounded by `codomain`.
  JoinContMap(std::vector<std::size_t> values, std::size_t codomain);

  static JoinContMap identity(std::size_t n);
  static JoinContMap zero(std::size_t n, std::size_t m);

  // "v0,v1,...,vn / m"; whitespace is ignored.
  static JoinContMap parse(std::string_view text);

  std::size_t domain() const noexcept { return values_.size() - 1; }
  std::size_t codomain() const noexcept { return codomain_; }
  bool is_square() const noexcept { return domain() == codomain_; }

  std::size_t operator()(std::size_t i) const { return values_.at(i); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  std::string str() const;

  friend bool operator==(const JoinContMap&, const JoinContMap&) = default;
  friend auto operator<=>(const JoinContMap&, const JoinContMap&) = default;

 private:
  std::vector<std::size_t> values_;
  std::size_t codomain_ = 0;
};

// Monotone map I_m -> I_n with no basepoint condition.  Right adjoints of
// join-continuous maps live here.
class MonotoneMap {
 public:
  MonotoneMap() : values_{0} {}
  MonotoneMap(std::vector<std::size_t> values, std::size_t codomain);

  static MonotoneMap parse(std::string_view text);

  std::size_t domain() const noexcept { return values_.size() - 1; }
  std::size_t codomain() const noexcept { return codomain_; }

  std::size_t operator()(std::size_t j) const { return values_.at(j); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  std::string str() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  std::vector<std::size_t> values_;
  std::size_t codomain_ = 0;
};

std::ostream& operator<<(std::ostream& os, const JoinContMap& f);
std::ostream& operator<<(std::ostream& os, const MonotoneMap& g);

JoinContMap path_to_map(const Path& w);
Path map_to_path(const JoinContMap& f);

// g after f.  Requires f.codomain() == g.domain().
JoinContMap compose(const JoinContMap& g, const JoinContMap& f);

// g(y) = max{ x : f(x) <= y }.
MonotoneMap right_adjoint(const JoinContMap& f);

bool pointwise_leq(const JoinContMap& f1, const JoinContMap& f2);
JoinContMap pointwise_join(const JoinContMap& f1, const JoinContMap& f2);
JoinContMap pointwise_meet(const JoinContMap& f1, const JoinContMap& f2);

// { i < n : f(i) < f(i+1) } for square f.
std::set<std::size_t> increases(const JoinContMap& f);

std::set<std::size_t> image(const JoinContMap& f);
std::set<std::size_t> image(const MonotoneMap& g);

bool is_idempotent_map(const JoinContMap& f);
bool is_nilpotent_map(const JoinContMap& f);

// Least k >= 1 with f^{k+1} == f^k.
std::size_t aperiodicity_index(const JoinContMap& f);

void require_square(const JoinContMap& f);

}  // namespace pq
