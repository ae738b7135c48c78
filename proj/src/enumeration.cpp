#include "pq/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "pq/error.hpp"
#include "pq/idempotent.hpp"
#include "pq/jsl_map.hpp"
#include "pq/quantale.hpp"

namespace pq {

PathRange::iterator::iterator(std::string word, std::size_t fixed)
    : current_(word), word_(std::move(word)), fixed_(fixed), done_(false) {}

PathRange::iterator& PathRange::iterator::operator++() {
  if (std::next_permutation(word_.begin() + static_cast<std::ptrdiff_t>(fixed_),
                            word_.end())) {
    current_ = Path(word_);
  } else {
    done_ = true;
  }
  return *this;
}

PathRange::PathRange(std::size_t n, std::size_t m, std::string prefix)
    : n_(n), m_(m), prefix_(std::move(prefix)) {
  const Path p = parse_path(prefix_);
  prefix_ = p.str();
  feasible_ = p.n() <= n_ && p.m() <= m_;
}

PathRange::iterator PathRange::begin() const {
  if (!feasible_) return end();
  const std::size_t xs = n_ - Path(prefix_).n();
  const std::size_t ys = m_ - Path(prefix_).m();
  return iterator(prefix_ + std::string(xs, 'x') + std::string(ys, 'y'),
                  prefix_.size());
}

PathRange enumerate_paths(std::size_t n, std::size_t m) { return {n, m}; }

std::vector<std::string> split_prefixes(std::size_t n, std::size_t m,
                                        std::size_t t) {
  std::vector<std::string> out;
  if (t > n + m) return out;
  std::function<void(std::string&, std::size_t, std::size_t)> grow =
      [&](std::string& s, std::size_t xs, std::size_t ys) {
        if (s.size() == t) {
          out.push_back(s);
          return;
        }
        if (xs < n) {
          s.push_back('x');
          grow(s, xs + 1, ys);
          s.pop_back();
        }
        if (ys < m) {
          s.push_back('y');
          grow(s, xs, ys + 1);
          s.pop_back();
        }
      };
  std::string s;
  grow(s, 0, 0);
  return out;
}

std::vector<Path> enumerate_idempotents(std::size_t n) {
  std::vector<Path> out;
  for (const auto& e : all_emmentalers(n)) {
    out.push_back(map_to_path(map_from_emmentaler(e).f));
  }
  return out;
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::Idempotents: return "idempotents";
    case Family::MonotoneIdempotents: return "monotone-idempotents";
    case Family::IdempotentsByTop: return "idempotents-by-top";
    case Family::Nilpotents: return "nilpotents";
    case Family::Descents: return "descents";
    case Family::ImageSize: return "image-size";
    case Family::MaxImage: return "max-image";
    case Family::IdentityRect: return "identity-rect";
    case Family::IdentitySquare: return "identity-square";
    case Family::PhiRecurrence: return "phi-recurrence";
    case Family::PsiRecurrence: return "psi-recurrence";
    case Family::ClipBijection: return "clip-bijection";
    case Family::ClipBijectionNorthStart: return "clip-bijection-north-start";
    case Family::ReflectionBijection: return "reflection-bijection";
    case Family::ClipShiftTransposeBijection:
      return "clip-shift-transpose-bijection";
  }
  return "unknown";
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

template <typename Pred>
BigInt count_paths_if(std::size_t n, std::size_t m, Pred pred) {
  BigInt c = 0;
  for (const Path& w : enumerate_paths(n, m)) {
    if (pred(w)) ++c;
  }
  return c;
}

template <typename Pred>
BigInt count_idempotents_if(std::size_t n, Pred pred) {
  BigInt c = 0;
  for (const Path& w : enumerate_idempotents(n)) {
    if (pred(w)) ++c;
  }
  return c;
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

void require_range(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IndexOutOfRange, what);
}

}  // namespace

nlohmann::json CountReport::to_json() const {
  nlohmann::json j;
  j["family"] = to_string(family);
  j["params"] = params;
  j["formula"] = big_to_json(formula);
  j["oracle"] = oracle ? big_to_json(*oracle) : nlohmann::json(nullptr);
  if (cross_oracle) j["cross_oracle"] = big_to_json(*cross_oracle);
  j["agree"] = agree();
  return j;
}

CountReport count_idempotents(std::size_t n, const OracleCaps& caps) {
  CountReport r{Family::Idempotents, {ll(n)}, fibonacci(2 * n + 1), {}, {}};
  if (n <= caps.enumeration) r.oracle = enumerate_idempotents(n).size();
  if (n <= caps.pairwise) {
    r.cross_oracle = count_paths_if(n, n, is_idempotent_path);
  }
  return r;
}

CountReport count_monotone_idempotents(std::size_t n, const OracleCaps& caps) {
  require_range(n >= 1, "monotone idempotents are counted for n >= 1");
  const auto north_first = [](const Path& w) {
    return !w.empty() && w.front() == Step::North;
  };
  CountReport r{Family::MonotoneIdempotents, {ll(n)}, fibonacci(2 * n), {}, {}};
  if (n <= caps.enumeration) r.oracle = count_idempotents_if(n, north_first);
  if (n <= caps.pairwise) {
    r.cross_oracle = count_paths_if(n, n, [&](const Path& w) {
      return north_first(w) && is_idempotent_path(w);
    });
  }
  return r;
}

CountReport count_idempotents_by_top(std::size_t n, std::size_t k,
                                     const OracleCaps& caps) {
  require_range(k <= n, "need 0 <= k <= n");
  CountReport r{Family::IdempotentsByTop, {ll(n), ll(k)},
                k == 0 ? BigInt(1) : fibonacci(2 * k), {}, {}};
  if (n <= caps.enumeration) {
    r.oracle = count_idempotents_if(
        n, [&](const Path& w) { return path_to_map(w)(n) == k; });
  }
  return r;
}

CountReport count_nilpotents(std::size_t n, const OracleCaps& caps) {
  CountReport r{Family::Nilpotents, {ll(n)}, catalan(n), {}, {}};
  if (n <= caps.enumeration) r.oracle = count_paths_if(n, n, is_nilpotent_path);
  return r;
}

CountReport count_by_descents(std::size_t n, std::size_t k, std::size_t i,
                              const OracleCaps& caps) {
  CountReport r{Family::Descents, {ll(n), ll(k), ll(i)},
                binomial(ll(n), ll(i)) * binomial(ll(k), ll(i)), {}, {}};
  if (std::max(n, k) <= caps.enumeration) {
    r.oracle = count_paths_if(
        n, k, [&](const Path& w) { return descent_count(w) == i; });
  }
  return r;
}

CountReport count_by_image_size(std::size_t n, std::size_t k,
                                const OracleCaps& caps) {
  const BigInt c = binomial(ll(n), ll(k));
  CountReport r{Family::ImageSize, {ll(n), ll(k)}, c * c, {}, {}};
  if (n <= caps.enumeration) {
    r.oracle = count_paths_if(n, n, [&](const Path& w) {
      return image(path_to_map(w)).size() == k + 1;
    });
  }
  return r;
}

CountReport count_by_max_image(std::size_t n, std::size_t k,
                               const OracleCaps& caps) {
  require_range(n >= 1 && k <= n, "need n >= 1 and 0 <= k <= n");
  CountReport r{Family::MaxImage, {ll(n), ll(k)},
                binomial(ll(n + k) - 1, ll(k)), {}, {}};
  if (n <= caps.enumeration) {
    r.oracle = count_paths_if(
        n, n, [&](const Path& w) { return path_to_map(w)(n) == k; });
  }
  return r;
}

CountReport verify_identity_rect(std::size_t n, std::size_t m, std::size_t k) {
  const long long N = ll(n), M = ll(m), K = ll(k);
  CountReport r{Family::IdentityRect, {N, M, K},
                binomial(N + M, N) * binomial(M + K, K), {}, {}};
  BigInt sum = 0;
  for (long long i = 0; i <= M; ++i) {
    sum += binomial(N + M + K - i, M - i) * binomial(N, i) * binomial(K, i);
  }
  r.oracle = sum;
  return r;
}

CountReport verify_identity_square(std::size_t n) {
  const long long N = ll(n);
  const BigInt c = binomial(2 * N, N);
  CountReport r{Family::IdentitySquare, {N}, c * c, {}, {}};
  BigInt sum = 0;
  for (long long i = 0; i <= N; ++i) {
    const BigInt b = binomial(N, i);
    sum += binomial(3 * N - i, N - i) * b * b;
  }
  r.oracle = sum;
  return r;
}

Path clip_last_north(const Path& w) {
  const std::string& s = w.str();
  const auto last_x = s.rfind('x');
  if (s.empty() || s.back() != 'y' || last_x == std::string::npos) {
    throw Error(ErrorCode::InvalidWord,
                "clip_last_north needs a path ending with y that has an x");
  }
  std::string out = s;
  out.pop_back();
  out.erase(last_x, 1);
  return Path(std::move(out));
}

Path clip_shift_transpose(const Path& w) {
  const std::string& s = w.str();
  if (s.size() < 2 || s.front() != 'y' || s.back() != 'x') {
    throw Error(ErrorCode::InvalidWord,
                "clip_shift_transpose needs a path starting with y and "
                "ending with x");
  }
  return swap_letters(Path(s.substr(1, s.size() - 2)));
}

namespace {

// formula = |codomain|; oracle = codomain elements hit exactly once, minus
// domain elements that stray outside the codomain or collide.  The two agree
// exactly when `map` is a bijection from `domain` onto `codomain`.
CountReport bijection_report(Family family, std::size_t size,
                             const std::vector<Path>& domain,
                             const std::vector<Path>& codomain,
                             const std::function<Path(const Path&)>& map) {
  std::map<Path, std::size_t> hits;
  for (const Path& c : codomain) hits[c] = 0;
  long long stray = 0;
  for (const Path& d : domain) {
    auto it = hits.find(map(d));
    if (it == hits.end()) {
      ++stray;
    } else {
      ++it->second;
    }
  }
  long long unique = 0;
  for (const auto& [path, count] : hits) {
    if (count == 1) {
      ++unique;
    } else if (count > 1) {
      stray += static_cast<long long>(count) - 1;
    }
  }
  return {family, {ll(size)}, BigInt(codomain.size()), BigInt(unique - stray),
          {}};
}

std::vector<Path> filter(const std::vector<Path>& v,
                         const std::function<bool(const Path&)>& pred) {
  std::vector<Path> out;
  std::copy_if(v.begin(), v.end(), std::back_inserter(out), pred);
  return out;
}

bool starts_north(const Path& w) { return !w.empty() && w.front() == Step::North; }
bool ends_north(const Path& w) { return !w.empty() && w.back() == Step::North; }
bool ends_east(const Path& w) { return !w.empty() && w.back() == Step::East; }

}  // namespace

std::vector<CountReport> verify_recurrences(std::size_t n_max) {
  require_range(n_max >= 1, "verify_recurrences needs n_max >= 1");
  std::vector<std::vector<Path>> idem(n_max + 1);
  std::vector<BigInt> psi(n_max + 1), phi(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    idem[n] = enumerate_idempotents(n);
    psi[n] = idem[n].size();
    phi[n] = filter(idem[n], starts_north).size();
  }

  std::vector<CountReport> out;
  for (std::size_t n = 0; n + 1 <= n_max; ++n) {
    out.push_back({Family::PhiRecurrence, {ll(n)}, phi[n + 1],
                   phi[n] + psi[n], {}});
    out.push_back({Family::PsiRecurrence, {ll(n)}, psi[n + 1],
                   phi[n + 1] + psi[n], {}});
  }
  for (std::size_t s = 1; s <= n_max; ++s) {
    const auto& big = idem[s];
    const auto& small = idem[s - 1];
    out.push_back(bijection_report(Family::ClipBijection, s,
                                   filter(big, ends_north), small,
                                   clip_last_north));
    out.push_back(bijection_report(
        Family::ClipBijectionNorthStart, s,
        filter(big, [](const Path& w) { return ends_north(w) && starts_north(w); }),
        filter(small, starts_north), clip_last_north));
    out.push_back(bijection_report(Family::ReflectionBijection, s,
                                   filter(big, ends_east),
                                   filter(big, starts_north),
                                   reflect_antidiagonal));
    out.push_back(bijection_report(
        Family::ClipShiftTransposeBijection, s,
        filter(big, [](const Path& w) { return ends_east(w) && starts_north(w); }),
        small, clip_shift_transpose));
  }
  return out;
}

double psi_closed_form(std::size_t n) {
  require_range(n <= 30, "psi_closed_form is accurate for n <= 30 only");
  const double r5 = std::sqrt(5.0);
  const double nn = static_cast<double>(n);
  const double num = std::pow(3.0 + r5, nn) * (1.0 + r5)
                     - std::pow(3.0 - r5, nn) * (1.0 - r5);
  return num / (std::pow(2.0, nn + 1.0) * r5);
}

}  // namespace pq
