#pragma once

// Brute-force reference routines for the test suites.  Nothing here calls
// into the code paths it is used to check: words are generated by plain
// recursion, maps as raw vectors, and dominance is read off prefix heights.

#include <cstddef>
#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <regex>
#include <string>
#include <vector>

namespace oracle {

using Values = std::vector<std::size_t>;

inline void words_rec(std::size_t n, std::size_t m, std::string& cur,
                      std::vector<std::string>& out) {
  if (n == 0 && m == 0) {
    out.push_back(cur);
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

// Every word with n x's and m y's, lexicographic.
inline std::vector<std::string> words(std::size_t n, std::size_t m) {
  std::vector<std::string> out;
  std::string cur;
  words_rec(n, m, cur, out);
  return out;
}

// Every monotone v[0..n] into {0..m} with v[0] = 0.
inline std::vector<Values> maps(std::size_t n, std::size_t m) {
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

inline Values compose(const Values& g, const Values& f) {
  Values r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

// Heights of the x's: the number of y's before each x, with 0 prepended.
inline Values heights(const std::string& w) {
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

// u never dips below w: every prefix of u has at least as many y's.
inline bool dominated(const std::string& w, const std::string& u) {
  std::size_t yw = 0, yu = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    yw += w[t] == 'y';
    yu += u[t] == 'y';
    if (yw > yu) return false;
  }
  return true;
}

inline std::size_t count_char(const std::string& w, char c) {
  std::size_t k = 0;
  for (char d : w) k += d == c;
  return k;
}

// The unique word among `candidates` that dominates all others, if any.
inline std::optional<std::string> maximum(
    const std::vector<std::string>& candidates) {
  for (const auto& c : candidates) {
    bool top = true;
    for (const auto& d : candidates) {
      if (!dominated(d, c)) {
        top = false;
        break;
      }
    }
    if (top) return c;
  }
  return std::nullopt;
}

inline std::string random_word(std::size_t n, std::size_t m,
                               std::mt19937_64& rng) {
  std::string s = std::string(n, 'x') + std::string(m, 'y');
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

// Words w_0..w_n over {1,m,0} with w_0 = 1, w_n != 0, avoiding m 0* m.
inline bool zigzag_word_ok(const std::string& s) {
  static const std::regex forbidden("m0*m");
  return !s.empty() && s.front() == '1' && s.back() != '0'
         && !std::regex_search(s, forbidden);
}

inline std::vector<std::string> all_ternary(std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : {'1', 'm', '0'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

inline std::size_t idempotent_maps(std::size_t n) {
  std::size_t c = 0;
  for (const auto& f : maps(n, n)) c += compose(f, f) == f;
  return c;
}

inline unsigned long long binom(unsigned a, unsigned b) {
  if (b > a) return 0;
  unsigned long long r = 1;
  for (unsigned i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline unsigned long long fib(unsigned k) {
  unsigned long long a = 0, b = 1;
  for (unsigned i = 0; i < k; ++i) {
    auto t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Word of the map v: I_n -> I_m, placing the i-th x after v[i] y's.
inline std::string word_of(const Values& v, std::size_t m) {
  std::string w;
  std::size_t ys = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    w += std::string(v[i] - ys, 'y') + 'x';
    ys = v[i];
  }
  return w + std::string(m - ys, 'y');
}

// Idempotent monotone endomaps of {1..n}, with no basepoint condition.
inline std::size_t monotone_idempotents(std::size_t n) {
  if (n == 0) return 1;
  std::size_t c = 0;
  Values v(n + 1, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i > n) {
      bool idem = true;
      for (std::size_t j = 1; j <= n && idem; ++j) idem = v[v[j]] == v[j];
      c += idem;
      return;
    }
    for (std::size_t x = i == 1 ? 1 : v[i - 1]; x <= n; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(1);
  return c;
}

// Alternating sequences 0 = y0 <= x0 < y1 <= x1 < ... <= xk = n.
inline void emmentaler_rec(std::size_t n, std::vector<std::size_t>& seq,
                           std::vector<std::vector<std::size_t>>& out) {
  const std::size_t y = seq.back();
  for (std::size_t x = y; x <= n; ++x) {
    seq.push_back(x);
    if (x == n) {
      out.push_back(seq);
    } else {
      for (std::size_t ny = x + 1; ny <= n; ++ny) {
        seq.push_back(ny);
        emmentaler_rec(n, seq, out);
        seq.pop_back();
      }
    }
    seq.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> emmentaler_sequences(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> seq{0};
  emmentaler_rec(n, seq, out);
  return out;
}

}  // namespace oracle
