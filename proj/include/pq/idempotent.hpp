#pragma once

// Idempotents of Q(I_n) and the paths that represent them.
//
// An emmentaler of the chain I_n is a family of disjoint intervals
// [y_0,x_0], ..., [y_k,x_k] with 0 = y_0 <= x_0 < y_1 <= ... <= x_k = n.
// Idempotent join-continuous endomaps of I_n correspond one-to-one with
// emmentalers, and the square paths of idempotents are exactly the upper
// zigzags: every NE turn (a,b) has a < b, every EN turn has b <= a.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pq/jsl_map.hpp"
#include "pq/path.hpp"

namespace pq {

struct Interval {
  std::size_t lo = 0;  // y_i, in J(E)
  std::size_t hi = 0;  // x_i, in M(E)

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

class Emmentaler {
 public:
  // Throws InvalidEmmentaler if the intervals do not form an alternating
  // sequence 0 = y_0 <= x_0 < y_1 <= ... <= x_k = n.
  Emmentaler(std::vector<Interval> intervals, std::size_t n);

  // "y0-x0;y1-x1;..."; n is the last upper endpoint.
  static Emmentaler parse(std::string_view text);

  // {[i,i] : i in I_n}, whose maps are the identity.
  static Emmentaler discrete(std::size_t n);
  // {[0,n]}, whose f is constant 0.
  static Emmentaler whole(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  // J(E), the lower endpoints, sorted.
  std::vector<std::size_t> lower() const;
  // M(E), the upper endpoints, sorted.
  std::vector<std::size_t> upper() const;

  std::string str() const;

  friend bool operator==(const Emmentaler&, const Emmentaler&) = default;
  friend auto operator<=>(const Emmentaler&, const Emmentaler&) = default;

 private:
  std::vector<Interval> intervals_;
  std::size_t n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Emmentaler& e);

enum class ZigzagLetter : char { One = '1', MBar = 'm', Zero = '0' };

// w_0 ... w_n over {1, m, 0} with w_0 = 1, w_n != 0 and no factor m 0* m.
class ZigzagWord {
 public:
  explicit ZigzagWord(std::vector<ZigzagLetter> letters);

  // Characters '1', 'm', '0'.
  static ZigzagWord parse(std::string_view text);

  // Whether `letters` satisfies the constraints, without throwing.
  static bool is_valid(const std::vector<ZigzagLetter>& letters) noexcept;

  const std::vector<ZigzagLetter>& letters() const noexcept { return letters_; }
  std::size_t n() const noexcept { return letters_.size() - 1; }
  std::string str() const;

  friend bool operator==(const ZigzagWord&, const ZigzagWord&) = default;

 private:
  std::vector<ZigzagLetter> letters_;
};

bool is_upper_zigzag(const Path& w);

// w ⊗ w == w, computed by the product.
bool is_idempotent_path(const Path& w);

// j_E(z) = min{ x in M(E) : z <= x }.
std::size_t closure(const Emmentaler& e, std::size_t z);
// o_E(z) = max{ y in J(E) : y <= z }.
std::size_t interior(const Emmentaler& e, std::size_t z);

struct EmmentalerMaps {
  JoinContMap f;  // o_E ∘ j_E
  MonotoneMap g;  // j_E ∘ o_E, the right adjoint of f
};

EmmentalerMaps map_from_emmentaler(const Emmentaler& e);

// E_f = { [y, g(y)] : y in Img(f) }.  Throws NotIdempotent for non-idempotent
// f; callers must check first.
Emmentaler emmentaler_from_map(const JoinContMap& f);

ZigzagWord encode_word(const Emmentaler& e);
Emmentaler decode_word(const ZigzagWord& z);

bool is_nilpotent_path(const Path& w);

// Every emmentaler of I_n, in lexicographic order of their intervals.
std::vector<Emmentaler> all_emmentalers(std::size_t n);

}  // namespace pq
