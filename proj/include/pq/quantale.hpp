#pragma once

// The path-level algebra on P(n,m): the product, its traced form, the dual
// product, the dominance lattice, residuals and the epi-mono factorisation.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pq/arith.hpp"
#include "pq/path.hpp"

namespace pq {

// w ⊗ u with its block boundaries marked.  Bars are gap indices in
// [0, word.size()]; a gap may carry several bars.
struct TracedProduct {
  Path word;
  std::vector<std::size_t> bars;  // sorted

  // Delete y's, rename bars to y.
  Path left() const;
  // Delete x's, rename bars to x.
  Path right() const;
  // The barred word, e.g. "|xxy|xyy|".
  std::string str() const;
};

struct Factorization {
  Path left;   // in P(n,d), surjective map
  Path right;  // in P(d,k), injective map
  std::size_t d = 0;
};

// Concatenates the x-blocks of w with the y-blocks of u.  Requires
// w.m() == u.n().
Path product(const Path& w, const Path& u);
TracedProduct product_traced(const Path& w, const Path& u);

// The product where y's precede x's in each block: (u* ⊗ w*)*.
Path oplus(const Path& w, const Path& u);

Path identity_path(std::size_t n);
Path bottom_path(std::size_t n, std::size_t m);
Path top_path(std::size_t n, std::size_t m);

// Dominance lattice, transported from the pointwise order on maps.
Path join(const Path& w, const Path& u);
Path meet(const Path& w, const Path& u);
bool leq(const Path& w, const Path& u);

// Largest r in P(n,m) with r ⊗ f <= h, for h in P(n,k) and f in P(m,k).
Path residual_right(const Path& h, const Path& f);
// Largest r in P(m,k) with f ⊗ r <= h, for f in P(n,m) and h in P(n,k).
Path residual_left(const Path& f, const Path& h);

Factorization factorize(const Path& w);

// NE-turn points (i,j) of a square path; the join of the atomic paths
// e_{i,j} over this list is w.  Empty for the bottom.
std::vector<std::pair<std::size_t, std::size_t>> join_irreducible_decomposition(
    const Path& w);

// Number of pairs (a,b) in P(n,m) x P(m,k) with a ⊗ b == w.
BigInt preimage_count(const Path& w, std::size_t m);

}  // namespace pq
