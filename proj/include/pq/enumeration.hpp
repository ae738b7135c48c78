#pragma once

// Generators and exact counters for the path families, each count paired
// with an exhaustive oracle.

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pq/arith.hpp"
#include "pq/path.hpp"

namespace pq {

// Restartable range over P(n,m) in lexicographic order (x < y).  A prefix
// restricts the range to completions of that prefix, so the ranges for all
// prefixes of a fixed length partition P(n,m).
class PathRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Path;
    using difference_type = std::ptrdiff_t;
    using pointer = const Path*;
    using reference = const Path&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class PathRange;
    iterator(std::string word, std::size_t fixed);

    Path current_;
    std::string word_;
    std::size_t fixed_ = 0;
    bool done_ = true;
  };

  PathRange(std::size_t n, std::size_t m, std::string prefix = {});

  iterator begin() const;
  iterator end() const { return {}; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::string prefix_;
  bool feasible_;
};

PathRange enumerate_paths(std::size_t n, std::size_t m);

// All valid prefixes of length t of words in P(n,m), in lexicographic order.
std::vector<std::string> split_prefixes(std::size_t n, std::size_t m,
                                        std::size_t t);

// Idempotents of P(n,n), built from the emmentalers of I_n rather than by
// filtering.
std::vector<Path> enumerate_idempotents(std::size_t n);

enum class Family {
  Idempotents,
  MonotoneIdempotents,
  IdempotentsByTop,
  Nilpotents,
  Descents,
  ImageSize,
  MaxImage,
  IdentityRect,
  IdentitySquare,
  PhiRecurrence,
  PsiRecurrence,
  ClipBijection,
  ClipBijectionNorthStart,
  ReflectionBijection,
  ClipShiftTransposeBijection,
};

const char* to_string(Family f) noexcept;

struct CountReport {
  Family family;
  std::vector<long long> params;
  BigInt formula;
  std::optional<BigInt> oracle;
  // Second, independently computed oracle where one exists.
  std::optional<BigInt> cross_oracle;

  bool agree() const {
    return (!oracle || *oracle == formula)
           && (!cross_oracle || *cross_oracle == formula);
  }

  // {"family", "params", "formula", "oracle", "agree"}; integers that do not
  // fit in 64 bits are written as decimal strings.
  nlohmann::json to_json() const;
};

// Oracle ranges.  `enumeration` bounds oracles that walk single paths,
// `pairwise` bounds those that compute products.
struct OracleCaps {
  std::size_t enumeration = 10;
  std::size_t pairwise = 6;
};

// psi_n = f_{2n+1}.
CountReport count_idempotents(std::size_t n, const OracleCaps& caps = {});
// phi_n = f_{2n}: idempotents whose path starts with a North step.  n >= 1.
CountReport count_monotone_idempotents(std::size_t n,
                                       const OracleCaps& caps = {});
// Idempotents with f(n) = k: f_{2k} for k >= 1 and exactly 1 (the bottom)
// for k = 0.
CountReport count_idempotents_by_top(std::size_t n, std::size_t k,
                                     const OracleCaps& caps = {});
CountReport count_nilpotents(std::size_t n, const OracleCaps& caps = {});
// Words of P(n,k) with i descents.
CountReport count_by_descents(std::size_t n, std::size_t k, std::size_t i,
                              const OracleCaps& caps = {});
// f in Q(I_n) with |Img f| = k+1.
CountReport count_by_image_size(std::size_t n, std::size_t k,
                                const OracleCaps& caps = {});
// f in Q(I_n) with f(n) = k.  n >= 1.
CountReport count_by_max_image(std::size_t n, std::size_t k,
                               const OracleCaps& caps = {});

// formula = C(n+m,n) C(m+k,k), oracle = sum over descents i.
CountReport verify_identity_rect(std::size_t n, std::size_t m, std::size_t k);
CountReport verify_identity_square(std::size_t n);

// From an idempotent in P(n+1,n+1) ending with y, delete the last x and the
// final y.
Path clip_last_north(const Path& w);
// From an idempotent in P(n+1,n+1) starting with y and ending with x, drop
// both ends and exchange the letters.
Path clip_shift_transpose(const Path& w);

// Both recurrences phi_{n+1} = psi_n + phi_n and psi_{n+1} = phi_{n+1} + psi_n
// for n+1 <= n_max, plus the clipping, reflection and clip-shift-transpose
// bijections at every size up to n_max.
std::vector<CountReport> verify_recurrences(std::size_t n_max);

// Closed form for psi_n in floating point; valid for n <= 30.
double psi_closed_form(std::size_t n);

}  // namespace pq
