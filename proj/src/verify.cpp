#include "pq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "pq/error.hpp"
#include "pq/idempotent.hpp"
#include "pq/jsl_map.hpp"
#include "pq/quantale.hpp"

namespace pq {

nlohmann::json CheckResult::to_json() const {
  return {{"id", id}, {"title", title}, {"passed", passed}, {"detail", detail}};
}

namespace {

using Values = std::vector<std::size_t>;

// Counts cases and keeps the first counterexample.
class Tally {
 public:
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }

  CheckResult result(std::string id, std::string title) const {
    CheckResult r{std::move(id), std::move(title), failures_ == 0, {}};
    std::ostringstream os;
    os << cases_ << " cases";
    if (failures_ > 0) os << ", " << failures_ << " failed; first: " << first_;
    r.detail = os.str();
    return r;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

// Brute-force generators, written against raw strings and vectors so they
// share no code with the enumerators under test.

void words_rec(std::size_t n, std::size_t m, std::string& cur,
               std::vector<Path>& out) {
  if (n == 0 && m == 0) {
    out.emplace_back(cur);
    return;
  }
  if (n > 0) {
    cur.push_back('x');
    words_rec(n - 1, m, cur, out);
    cur.pop_back();
  }
  if (m > 0) {
    cur.push_back('y');
    words_rec(n, m - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Path> words(std::size_t n, std::size_t m) {
  std::vector<Path> out;
  std::string cur;
  words_rec(n, m, cur, out);
  return out;
}

std::vector<Values> maps(std::size_t n, std::size_t m) {
  std::vector<Values> out;
  Values v(n + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i > n) {
      out.push_back(v);
      return;
    }
    for (std::size_t x = v[i - 1]; x <= m; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  if (n == 0) {
    out.push_back(v);
  } else {
    rec(1);
  }
  return out;
}

Values raw_compose(const Values& g, const Values& f) {
  Values r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

// Number of y's before each x, with 0 prepended.
Values heights(const std::string& w) {
  Values v{0};
  std::size_t ys = 0;
  for (char c : w) {
    if (c == 'x') {
      v.push_back(ys);
    } else {
      ++ys;
    }
  }
  return v;
}

// Every prefix of u has at least as many y's as the same prefix of w.
bool never_below(const std::string& w, const std::string& u) {
  std::size_t yw = 0, yu = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    yw += w[t] == 'y';
    yu += u[t] == 'y';
    if (yw > yu) return false;
  }
  return true;
}

// Lengths of the runs of `c` separated by the other letter.
Values runs(const std::string& w, char c) {
  Values out{0};
  for (char d : w) {
    if (d == c) {
      ++out.back();
    } else {
      out.push_back(0);
    }
  }
  return out;
}

std::string oplus_by_blocks(const std::string& w, const std::string& u) {
  const auto xb = runs(w, 'x');
  const auto yb = runs(u, 'y');
  std::string out;
  for (std::size_t i = 0; i < xb.size(); ++i) {
    out += std::string(yb[i], 'y') + std::string(xb[i], 'x');
  }
  return out;
}

std::string dims(std::size_t n, std::size_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string dims(std::size_t n, std::size_t m, std::size_t k) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," +
         std::to_string(k) + ")";
}

std::string describe(const CountReport& r) {
  std::ostringstream os;
  os << r.to_json().dump();
  return os.str();
}

// ---- numbered criteria ----------------------------------------------------

CheckResult psi_counts(const OracleCaps& caps) {
  static const unsigned long long expected[] = {1,   2,    5,    13,   34,   89,
                                                233, 610, 1597, 4181, 10946};
  Tally t;
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto r = count_idempotents(n, caps);
    const bool has_oracle = n > caps.enumeration || r.oracle.has_value();
    const bool has_cross = n > caps.pairwise || r.cross_oracle.has_value();
    t.expect(r.agree() && has_oracle && has_cross && r.formula == expected[n],
             [&] { return describe(r); });
  }
  return t.result("C1", "idempotent counts psi_n = f(2n+1), n <= 10");
}

CheckResult phi_counts(const OracleCaps& caps) {
  static const unsigned long long expected[] = {0,   1,   3,   8,    21,  55,
                                                144, 377, 987, 2584, 6765};
  Tally t;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto r = count_monotone_idempotents(n, caps);
    const bool has_oracle =
        n > std::min<std::size_t>(6, caps.enumeration) || r.oracle.has_value();
    t.expect(r.agree() && has_oracle && r.formula == expected[n],
             [&] { return describe(r); });
  }
  return t.result("C2", "monotone idempotent counts phi_n = f(2n), n <= 10");
}

CheckResult idempotent_iff_zigzag() {
  Tally t;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& w : words(n, n)) {
      t.expect(is_idempotent_path(w) == is_upper_zigzag(w),
               [&] { return w.str(); });
    }
  }
  return t.result("C3", "idempotent iff upper zigzag on P(n,n), n <= 6");
}

CheckResult emmentaler_round_trips() {
  Tally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto es = all_emmentalers(n);
    t.expect(es.size() == fibonacci(2 * n + 1),
             [&] { return "emmentaler count at n=" + std::to_string(n); });
    for (const auto& e : es) {
      const auto [f, g] = map_from_emmentaler(e);
      bool ok = emmentaler_from_map(f) == e && is_idempotent_map(f) &&
                g == right_adjoint(f);
      for (std::size_t x = 0; x <= n && ok; ++x) {
        for (std::size_t y = 0; y <= n && ok; ++y) {
          ok = (f(x) <= y) == (x <= g(y));
        }
      }
      t.expect(ok, [&] { return e.str(); });
    }
    for (const auto& v : maps(n, n)) {
      if (raw_compose(v, v) != v) continue;
      const JoinContMap f(v, n);
      t.expect(map_from_emmentaler(emmentaler_from_map(f)).f == f,
               [&] { return f.str(); });
    }
  }
  return t.result("C4", "emmentaler <-> idempotent round trips, n <= 8");
}

CheckResult functoriality(std::uint64_t seed) {
  Tally t;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto ws = words(n, m);
        const auto us = words(m, k);
        for (const auto& w : ws) {
          for (const auto& u : us) {
            t.expect(path_to_map(product(w, u)).values() ==
                         raw_compose(heights(u.str()), heights(w.str())),
                     [&] { return w.str() + " (x) " + u.str(); });
          }
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(0, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = dim(rng), m = dim(rng), k = dim(rng);
    std::string a = std::string(n, 'x') + std::string(m, 'y');
    std::string b = std::string(m, 'x') + std::string(k, 'y');
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    t.expect(path_to_map(product(Path(a), Path(b))).values() ==
                 raw_compose(heights(b), heights(a)),
             [&] { return a + " (x) " + b; });
  }
  return t.result("C5", "product is composition of maps");
}

CheckResult binomial_identities() {
  Tally t;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= 6; ++m) {
      for (std::size_t k = 0; k <= 6; ++k) {
        const auto r = verify_identity_rect(n, m, k);
        t.expect(r.agree() && r.oracle.has_value(),
                 [&] { return describe(r); });
      }
    }
    const auto sq = verify_identity_square(n);
    t.expect(sq.agree() && sq.oracle.has_value(), [&] { return describe(sq); });
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t m = 0; m <= 4; ++m) {
        const auto as = words(n, m);
        const auto bs = words(m, k);
        std::map<Path, long long> hits;
        for (const auto& a : as) {
          for (const auto& b : bs) ++hits[product(a, b)];
        }
        for (const auto& w : words(n, k)) {
          const auto i = static_cast<long long>(descent_count(w));
          const auto expected = binomial(
              static_cast<long long>(n + k + m) - i,
              static_cast<long long>(m) - i);
          const BigInt brute = hits.count(w) ? hits[w] : 0;
          t.expect(brute == expected && preimage_count(w, m) == expected,
                   [&] { return w.str() + " m=" + std::to_string(m); });
        }
      }
    }
  }
  return t.result("C6", "binomial identities and preimage counts");
}

CheckResult nilpotents() {
  Tally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto r = count_nilpotents(n);
    t.expect(r.agree() && r.formula == catalan(n) &&
                 (n > 6 || r.oracle.has_value()),
             [&] { return describe(r); });
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& v : maps(n, n)) {
      const JoinContMap f(v, n);
      t.expect(aperiodicity_index(f) <= n, [&] { return f.str(); });
    }
  }
  return t.result("C7", "nilpotents are Catalan; aperiodicity index <= n");
}

CheckResult residuals() {
  Tally t;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto nm = words(n, m), mk = words(m, k), nk = words(n, k);
        // Largest r in P(n,m) with r (x) f <= h.
        for (const auto& h : nk) {
          for (const auto& f : mk) {
            std::vector<Path> ok;
            for (const auto& r : nm) {
              if (never_below(product(r, f).str(), h.str())) ok.push_back(r);
            }
            const auto r = residual_right(h, f);
            bool good = std::find(ok.begin(), ok.end(), r) != ok.end();
            for (const auto& s : ok) good = good && never_below(s.str(), r.str());
            t.expect(good, [&] { return "right " + h.str() + " / " + f.str(); });
          }
        }
        // Largest r in P(m,k) with f (x) r <= h.
        for (const auto& f : nm) {
          for (const auto& h : nk) {
            std::vector<Path> ok;
            for (const auto& r : mk) {
              if (never_below(product(f, r).str(), h.str())) ok.push_back(r);
            }
            const auto r = residual_left(f, h);
            bool good = std::find(ok.begin(), ok.end(), r) != ok.end();
            for (const auto& s : ok) good = good && never_below(s.str(), r.str());
            t.expect(good, [&] { return "left " + f.str() + " \\ " + h.str(); });
          }
        }
      }
    }
  }
  return t.result("C8", "residuals are brute-force maxima, dims <= 3");
}

CheckResult recurrences(const OracleCaps& caps) {
  Tally t;
  const std::size_t top = std::min<std::size_t>(7, caps.enumeration);
  if (top >= 1) {
    for (const auto& r : verify_recurrences(top)) {
      t.expect(r.agree() && r.oracle.has_value(), [&] { return describe(r); });
    }
  }
  return t.result("C9", "phi/psi recurrences and their proof bijections");
}

CheckResult idempotents_by_top(const OracleCaps& caps) {
  Tally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto r = count_idempotents_by_top(n, k, caps);
      const BigInt expected = k == 0 ? BigInt(1) : fibonacci(2 * k);
      t.expect(r.agree() && r.formula == expected &&
                   (n > caps.enumeration || r.oracle.has_value()),
               [&] { return describe(r); });
    }
  }
  return t.result("C10", "idempotents with f(n) = k number f(2k)");
}

CheckResult zigzag_words() {
  Tally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& e : all_emmentalers(n)) {
      const auto z = encode_word(e);
      t.expect(decode_word(z) == e && ZigzagWord::is_valid(z.letters()),
               [&] { return e.str(); });
    }
  }
  static const ZigzagLetter alphabet[] = {ZigzagLetter::One, ZigzagLetter::MBar,
                                          ZigzagLetter::Zero};
  for (std::size_t n = 0; n <= 10; ++n) {
    std::vector<ZigzagLetter> w(n + 1, ZigzagLetter::One);
    std::vector<int> digits(n + 1, 0);
    BigInt valid = 0;
    while (true) {
      for (std::size_t i = 0; i <= n; ++i) w[i] = alphabet[digits[i]];
      if (ZigzagWord::is_valid(w)) ++valid;
      std::size_t i = 0;
      while (i <= n && digits[i] == 2) digits[i++] = 0;
      if (i > n) break;
      ++digits[i];
    }
    t.expect(valid == fibonacci(2 * n + 1),
             [&] { return "n=" + std::to_string(n) + " valid=" + valid.str(); });
  }
  return t.result("C11", "zigzag word encoding and counts");
}

CheckResult closed_form() {
  Tally t;
  for (std::size_t n = 0; n <= 25; ++n) {
    const double exact = fibonacci(2 * n + 1).convert_to<double>();
    const double approx = psi_closed_form(n);
    t.expect(std::abs(approx - exact) < 0.5 && std::llround(approx) == std::llround(exact),
             [&] { return "n=" + std::to_string(n); });
  }
  return t.result("C12", "closed form for psi_n, n <= 25");
}

// ---- module properties, each bounded by opts.n ------------------------------

CheckResult path_properties(std::size_t cap) {
  Tally t;
  const std::size_t c5 = std::min<std::size_t>(5, cap);
  for (std::size_t len = 0; len <= std::min<std::size_t>(10, 2 * cap); ++len) {
    for (std::size_t n = 0; n <= len; ++n) {
      for (const auto& w : words(n, len - n)) {
        t.expect(parse_path(w.str()) == w, [&] { return w.str(); });
      }
    }
  }
  for (std::size_t n = 0; n <= c5; ++n) {
    for (std::size_t m = 0; m <= c5; ++m) {
      for (const auto& w : words(n, m)) {
        const auto b = blocks(w);
        std::string from_x, from_y;
        for (std::size_t i = 0; i <= m; ++i) {
          from_x += std::string(b.x_blocks[i], 'x');
          if (i < m) from_x += 'y';
        }
        for (std::size_t j = 0; j <= n; ++j) {
          from_y += std::string(b.y_blocks[j], 'y');
          if (j < n) from_y += 'x';
        }
        t.expect(from_x == w.str() && from_y == w.str(),
                 [&] { return "blocks " + w.str(); });

        const auto ts = turns(w);
        bool alternates = true;
        for (std::size_t i = 1; i < ts.size(); ++i) {
          alternates = alternates && ts[i].kind != ts[i - 1].kind;
        }
        t.expect(alternates, [&] { return "turns " + w.str(); });
        t.expect(descent_count(w) <= std::min(n, m),
                 [&] { return "descents " + w.str(); });
        t.expect(swap_letters(swap_letters(w)) == w && reverse(reverse(w)) == w,
                 [&] { return "involution " + w.str(); });
        if (n == m) {
          t.expect(reflect_antidiagonal(reflect_antidiagonal(w)) == w,
                   [&] { return "reflection " + w.str(); });
        }
      }
    }
  }
  return t.result("path.properties",
                  "round trip, blocks, turn alternation, involutions");
}

CheckResult map_properties(std::size_t cap) {
  Tally t;
  const std::size_t c5 = std::min<std::size_t>(5, cap);
  const std::size_t c4 = std::min<std::size_t>(4, cap);
  for (std::size_t n = 0; n <= c5; ++n) {
    for (std::size_t m = 0; m <= c5; ++m) {
      for (const auto& w : words(n, m)) {
        const auto f = path_to_map(w);
        t.expect(f.values() == heights(w.str()) && map_to_path(f) == w,
                 [&] { return "bijection " + w.str(); });
      }
      for (const auto& v : maps(n, m)) {
        t.expect(path_to_map(map_to_path(JoinContMap(v, m))).values() == v,
                 [&] { return "bijection " + JoinContMap(v, m).str(); });
      }
    }
  }
  for (std::size_t n = 0; n <= c4; ++n) {
    for (std::size_t m = 0; m <= c4; ++m) {
      for (const auto& v : maps(n, m)) {
        const JoinContMap f(v, m);
        const auto g = right_adjoint(f);
        bool ok = true;
        for (std::size_t x = 0; x <= n; ++x) {
          for (std::size_t y = 0; y <= m; ++y) ok = ok && ((f(x) <= y) == (x <= g(y)));
          ok = ok && f(g(f(x))) == f(x);
        }
        for (std::size_t y = 0; y <= m; ++y) ok = ok && g(f(g(y))) == g(y);
        t.expect(ok, [&] { return "adjunction " + f.str(); });
      }
      const auto ws = words(n, m);
      for (const auto& a : ws) {
        for (const auto& b : ws) {
          t.expect(pointwise_leq(path_to_map(a), path_to_map(b)) ==
                       never_below(a.str(), b.str()),
                   [&] { return "dominance " + a.str() + " " + b.str(); });
        }
      }
    }
  }
  return t.result("map.properties", "bijection, adjunction, dominance order");
}

CheckResult quantale_properties(std::size_t cap, std::uint64_t seed) {
  Tally t;
  const std::size_t c2 = std::min<std::size_t>(2, cap);
  const std::size_t c3 = std::min<std::size_t>(3, cap);
  const std::size_t c4 = std::min<std::size_t>(4, cap);
  const std::size_t c5 = std::min<std::size_t>(5, cap);

  for (std::size_t n = 0; n <= c2; ++n)
    for (std::size_t m = 0; m <= c2; ++m)
      for (std::size_t k = 0; k <= c2; ++k)
        for (std::size_t l = 0; l <= c2; ++l)
          for (const auto& a : words(n, m))
            for (const auto& b : words(m, k))
              for (const auto& c : words(k, l)) {
                t.expect(product(product(a, b), c) == product(a, product(b, c)),
                         [&] { return "assoc " + a.str() + " " + b.str() + " " + c.str(); });
              }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(0, c5);
  auto random_path = [&](std::size_t n, std::size_t m) {
    std::string s = std::string(n, 'x') + std::string(m, 'y');
    std::shuffle(s.begin(), s.end(), rng);
    return Path(s);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = dim(rng), m = dim(rng), k = dim(rng), l = dim(rng);
    const auto a = random_path(n, m), b = random_path(m, k), c = random_path(k, l);
    t.expect(product(product(a, b), c) == product(a, product(b, c)) &&
                 product(identity_path(n), a) == a && product(a, identity_path(m)) == a,
             [&] { return "assoc/unit " + a.str() + " " + b.str() + " " + c.str(); });
  }

  for (std::size_t n = 0; n <= c3; ++n) {
    const auto ws = words(n, n);
    for (const auto& g1 : ws)
      for (const auto& g2 : ws)
        for (const auto& f : ws) {
          const auto j = join(g1, g2);
          t.expect(product(j, f) == join(product(g1, f), product(g2, f)) &&
                       product(f, j) == join(product(f, g1), product(f, g2)),
                   [&] { return "distributivity " + g1.str() + " " + g2.str() + " " + f.str(); });
        }
  }

  for (std::size_t n = 1; n <= c4; ++n)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 1; b <= n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 1; d <= n; ++d) {
            const auto expected = c < b ? atomic_path(a, d, n) : bottom_path(n, n);
            t.expect(product(atomic_path(a, b, n), atomic_path(c, d, n)) == expected,
                     [&] { return "atomic " + dims(a, b) + dims(c, d); });
          }

  for (std::size_t n = 0; n <= c3; ++n)
    for (std::size_t m = 0; m <= c3; ++m)
      for (std::size_t k = 0; k <= c3; ++k)
        for (const auto& w : words(n, m))
          for (const auto& u : words(m, k)) {
            t.expect(oplus(w, u).str() == oplus_by_blocks(w.str(), u.str()),
                     [&] { return "oplus " + w.str() + " " + u.str(); });
          }

  for (std::size_t n = 0; n <= c5; ++n)
    for (std::size_t m = 0; m <= c5; ++m)
      for (std::size_t k = 0; k <= c5; ++k) {
        BigInt sum = 0;
        for (const auto& w : words(n, k)) sum += preimage_count(w, m);
        t.expect(sum == binomial(n + m, n) * binomial(m + k, k),
                 [&] { return "preimage sum " + dims(n, m, k); });
      }

  for (std::size_t n = 0; n <= c4; ++n)
    for (std::size_t k = 0; k <= c4; ++k)
      for (const auto& w : words(n, k)) {
        const auto fz = factorize(w);
        const auto left = path_to_map(fz.left), right = path_to_map(fz.right);
        const auto img = image(left);
        bool surjective = img.size() == fz.d + 1;
        bool injective = image(right).size() == fz.d + 1;
        t.expect(product(fz.left, fz.right) == w && surjective && injective,
                 [&] { return "factorize " + w.str(); });
      }
  return t.result("quantale.properties",
                  "associativity, units, distributivity, atomic products, "
                  "oplus, preimage sums, factorization");
}

CheckResult idempotent_properties(std::size_t cap) {
  Tally t;
  for (std::size_t n = 0; n <= std::min<std::size_t>(6, cap); ++n) {
    for (const auto& e : all_emmentalers(n)) {
      const auto w = map_to_path(map_from_emmentaler(e).f);
      const auto& iv = e.intervals();
      std::vector<std::pair<std::size_t, std::size_t>> ne, en, got_ne, got_en;
      for (std::size_t l = 0; l + 1 < iv.size(); ++l) ne.emplace_back(iv[l].hi, iv[l + 1].lo);
      for (const auto& i : iv) {
        if (i.hi > 0 && i.lo < n) en.emplace_back(i.hi, i.lo);
      }
      for (const auto& tn : ne_turns(w)) got_ne.emplace_back(tn.a, tn.b);
      for (const auto& tn : en_turns(w)) got_en.emplace_back(tn.a, tn.b);
      t.expect(ne == got_ne && en == got_en, [&] { return e.str(); });
    }
  }
  return t.result("idempotent.turns", "turns of idempotent paths");
}

CheckResult enumeration_properties(std::size_t cap, const OracleCaps& caps) {
  Tally t;
  for (std::size_t n = 0; n <= std::min<std::size_t>(6, cap); ++n) {
    std::vector<Path> filtered;
    for (const auto& w : words(n, n)) {
      if (product(w, w) == w) filtered.push_back(w);
    }
    auto gen = enumerate_idempotents(n);
    std::sort(gen.begin(), gen.end());
    t.expect(gen == filtered, [&] { return "idempotents n=" + std::to_string(n); });
  }
  const std::size_t c6 = std::min<std::size_t>(6, cap);
  for (std::size_t n = 0; n <= std::min<std::size_t>(10, cap); ++n) {
    BigInt by_size = 0, by_max = 0, by_top = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const auto a = count_by_image_size(n, k, caps);
      t.expect(a.agree(), [&] { return describe(a); });
      by_size += a.formula;
      if (n >= 1) {
        const auto b = count_by_max_image(n, k, caps);
        t.expect(b.agree(), [&] { return describe(b); });
        by_max += b.formula;
      }
      by_top += k == 0 ? BigInt(1) : fibonacci(2 * k);
    }
    t.expect(by_size == binomial(2 * n, n) && (n == 0 || by_max == binomial(2 * n, n)) &&
                 by_top == fibonacci(2 * n + 1),
             [&] { return "sums n=" + std::to_string(n); });
  }
  for (std::size_t n = 0; n <= c6; ++n)
    for (std::size_t k = 0; k <= c6; ++k)
      for (std::size_t i = 0; i <= std::min(n, k); ++i) {
        const auto r = count_by_descents(n, k, i, caps);
        t.expect(r.agree(), [&] { return describe(r); });
      }
  return t.result("enumeration.properties",
                  "generated idempotents, refined counts and their sums");
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(psi_counts(opts.caps));
  out.push_back(phi_counts(opts.caps));
  out.push_back(idempotent_iff_zigzag());
  out.push_back(emmentaler_round_trips());
  out.push_back(functoriality(opts.seed));
  out.push_back(binomial_identities());
  out.push_back(nilpotents());
  out.push_back(residuals());
  out.push_back(recurrences(opts.caps));
  out.push_back(idempotents_by_top(opts.caps));
  out.push_back(zigzag_words());
  out.push_back(closed_form());
  out.push_back(path_properties(opts.n));
  out.push_back(map_properties(opts.n));
  out.push_back(quantale_properties(opts.n, opts.seed));
  out.push_back(idempotent_properties(opts.n));
  out.push_back(enumeration_properties(opts.n, opts.caps));
  return out;
}

}  // namespace pq
