#include "pq/quantale.hpp"

#include <algorithm>

#include "pq/error.hpp"
#include "pq/jsl_map.hpp"

namespace pq {

namespace {

void require_composable(const Path& w, const Path& u) {
  if (w.m() != u.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + w.str() + " in P(" + std::to_string(w.n())
                    + "," + std::to_string(w.m()) + ") by " + u.str()
                    + " in P(" + std::to_string(u.n()) + ","
                    + std::to_string(u.m()) + "): " + std::to_string(w.m())
                    + " != " + std::to_string(u.n()));
  }
}

void require_same_dims(const Path& w, const Path& u) {
  if (w.dims() != u.dims()) {
    throw Error(ErrorCode::DimensionMismatch,
                "paths " + w.str() + " and " + u.str()
                    + " do not lie in the same P(n,m)");
  }
}

// Walks the word and bars together; `keep` is the letter retained and `bar`
// the letter bars turn into.
Path project(const TracedProduct& t, char keep, char bar) {
  std::string s;
  std::size_t next_bar = 0;
  const std::string& word = t.word.str();
  for (std::size_t gap = 0; gap <= word.size(); ++gap) {
    while (next_bar < t.bars.size() && t.bars[next_bar] == gap) {
      s.push_back(bar);
      ++next_bar;
    }
    if (gap < word.size() && word[gap] == keep) s.push_back(keep);
  }
  return Path(std::move(s));
}

}  // namespace

Path TracedProduct::left() const { return project(*this, 'x', 'y'); }

Path TracedProduct::right() const { return project(*this, 'y', 'x'); }

std::string TracedProduct::str() const {
  std::string s;
  std::size_t next_bar = 0;
  const std::string& w = word.str();
  for (std::size_t gap = 0; gap <= w.size(); ++gap) {
    while (next_bar < bars.size() && bars[next_bar] == gap) {
      s.push_back('|');
      ++next_bar;
    }
    if (gap < w.size()) s.push_back(w[gap]);
  }
  return s;
}

TracedProduct product_traced(const Path& w, const Path& u) {
  require_composable(w, u);
  const auto xb = blocks(w).x_blocks;
  const auto yb = blocks(u).y_blocks;
  const std::size_t m = w.m();
  TracedProduct t;
  std::string s;
  s.reserve(w.n() + u.m());
  for (std::size_t i = 0; i <= m; ++i) {
    s.append(xb[i], 'x').append(yb[i], 'y');
    if (i < m) t.bars.push_back(s.size());
  }
  t.word = Path(std::move(s));
  return t;
}

Path product(const Path& w, const Path& u) {
  return product_traced(w, u).word;
}

Path oplus(const Path& w, const Path& u) {
  require_composable(w, u);
  return swap_letters(product(swap_letters(u), swap_letters(w)));
}

Path identity_path(std::size_t n) {
  std::string s;
  s.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) s += "yx";
  return Path(std::move(s));
}

Path bottom_path(std::size_t n, std::size_t m) {
  return Path(std::string(n, 'x') + std::string(m, 'y'));
}

Path top_path(std::size_t n, std::size_t m) {
  return Path(std::string(m, 'y') + std::string(n, 'x'));
}

Path join(const Path& w, const Path& u) {
  require_same_dims(w, u);
  return map_to_path(pointwise_join(path_to_map(w), path_to_map(u)));
}

Path meet(const Path& w, const Path& u) {
  require_same_dims(w, u);
  return map_to_path(pointwise_meet(path_to_map(w), path_to_map(u)));
}

bool leq(const Path& w, const Path& u) {
  require_same_dims(w, u);
  return pointwise_leq(path_to_map(w), path_to_map(u));
}

Path residual_right(const Path& h, const Path& f) {
  // B(r ⊗ f) = B_f ∘ B_r, and B_f(x) <= y iff x <= g_f(y).
  if (h.m() != f.m()) {
    throw Error(ErrorCode::DimensionMismatch,
                "residual_right needs h in P(n,k) and f in P(m,k); got "
                    + h.str() + " and " + f.str());
  }
  const auto bh = path_to_map(h);
  const auto gf = right_adjoint(path_to_map(f));
  std::vector<std::size_t> r(h.n() + 1, 0);
  for (std::size_t i = 1; i <= h.n(); ++i) r[i] = gf(bh(i));
  return map_to_path(JoinContMap(std::move(r), f.n()));
}

Path residual_left(const Path& f, const Path& h) {
  if (f.n() != h.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "residual_left needs f in P(n,m) and h in P(n,k); got "
                    + f.str() + " and " + h.str());
  }
  const auto bf = path_to_map(f);
  const auto bh = path_to_map(h);
  const std::size_t m = f.m();
  const std::size_t k = h.m();
  // r(j) = min{ h(i) : f(i) >= j }, empty min = k.
  std::vector<std::size_t> r(m + 1, k);
  for (std::size_t i = 0; i <= f.n(); ++i) {
    for (std::size_t j = 0; j <= bf(i); ++j) r[j] = std::min(r[j], bh(i));
  }
  return map_to_path(JoinContMap(std::move(r), k));
}

Factorization factorize(const Path& w) {
  TracedProduct t;
  t.word = w;
  for (const Turn& turn : ne_turns(w)) t.bars.push_back(turn.position);
  return {t.left(), t.right(), t.bars.size()};
}

std::vector<std::pair<std::size_t, std::size_t>> join_irreducible_decomposition(
    const Path& w) {
  require_square(w);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Turn& t : ne_turns(w)) out.emplace_back(t.a, t.b);
  return out;
}

BigInt preimage_count(const Path& w, std::size_t m) {
  const auto i = static_cast<long long>(descent_count(w));
  const auto mm = static_cast<long long>(m);
  const auto len = static_cast<long long>(w.size());
  return binomial(len + mm - i, mm - i);
}

}  // namespace pq
