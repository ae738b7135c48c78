#include "pq/jsl_map.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "pq/error.hpp"

namespace pq {

namespace {

std::string join_values(const std::vector<std::size_t>& values,
                        std::size_t codomain) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(values[i]);
  }
  return s + " / " + std::to_string(codomain);
}

struct ParsedMap {
  std::vector<std::size_t> values;
  std::size_t codomain = 0;
};

std::size_t parse_number(std::string_view token, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::InvalidMap,
                "malformed map '" + std::string(whole)
                    + "', expected 'v0,v1,...,vn / m'");
  }
  return v;
}

ParsedMap parse_values(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact.push_back(c);
  }
  auto slash = compact.find('/');
  if (slash == std::string::npos) {
    throw Error(ErrorCode::InvalidMap,
                "map '" + std::string(text) + "' lacks the '/ m' codomain");
  }
  ParsedMap out;
  std::string_view body(compact.data(), slash);
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto token = body.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    out.values.push_back(parse_number(token, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  out.codomain =
      parse_number(std::string_view(compact).substr(slash + 1), text);
  return out;
}

void check_monotone(const std::vector<std::size_t>& values,
                    std::size_t codomain) {
  if (values.empty()) {
    throw Error(ErrorCode::InvalidMap, "a map needs at least the value at 0");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > codomain) {
      throw Error(ErrorCode::InvalidMap,
                  "value " + std::to_string(values[i]) + " at "
                      + std::to_string(i) + " exceeds codomain bound "
                      + std::to_string(codomain));
    }
    if (i > 0 && values[i - 1] > values[i]) {
      throw Error(ErrorCode::InvalidMap,
                  "map is not monotone at " + std::to_string(i));
    }
  }
}

void require_same_dims(const JoinContMap& f1, const JoinContMap& f2) {
  if (f1.domain() != f2.domain() || f1.codomain() != f2.codomain()) {
    throw Error(ErrorCode::DimensionMismatch,
                "maps " + f1.str() + " and " + f2.str()
                    + " have different dimensions");
  }
}

}  // namespace

JoinContMap::JoinContMap(std::vector<std::size_t> values, std::size_t codomain)
    : values_(std::move(values)), codomain_(codomain) {
  check_monotone(values_, codomain_);
  if (values_[0] != 0) {
    throw Error(ErrorCode::InvalidMap,
                "join-continuous map must send 0 to 0, got "
                    + std::to_string(values_[0]));
  }
}

JoinContMap JoinContMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = i;
  return JoinContMap(std::move(v), n);
}

JoinContMap JoinContMap::zero(std::size_t n, std::size_t m) {
  return JoinContMap(std::vector<std::size_t>(n + 1, 0), m);
}

JoinContMap JoinContMap::parse(std::string_view text) {
  auto p = parse_values(text);
  return JoinContMap(std::move(p.values), p.codomain);
}

std::string JoinContMap::str() const { return join_values(values_, codomain_); }

MonotoneMap::MonotoneMap(std::vector<std::size_t> values, std::size_t codomain)
    : values_(std::move(values)), codomain_(codomain) {
  check_monotone(values_, codomain_);
}

MonotoneMap MonotoneMap::parse(std::string_view text) {
  auto p = parse_values(text);
  return MonotoneMap(std::move(p.values), p.codomain);
}

std::string MonotoneMap::str() const { return join_values(values_, codomain_); }

std::ostream& operator<<(std::ostream& os, const JoinContMap& f) {
  return os << f.str();
}

std::ostream& operator<<(std::ostream& os, const MonotoneMap& g) {
  return os << g.str();
}

JoinContMap path_to_map(const Path& w) {
  std::vector<std::size_t> v;
  v.reserve(w.n() + 1);
  v.push_back(0);
  std::size_t height = 0;
  for (char c : w.str()) {
    if (c == 'x') {
      v.push_back(height);
    } else {
      ++height;
    }
  }
  return JoinContMap(std::move(v), w.m());
}

Path map_to_path(const JoinContMap& f) {
  // |y-block i| = f(i+1) - f(i), with f(n+1) := m.
  const std::size_t n = f.domain();
  std::string s;
  s.reserve(n + f.codomain());
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t next = i < n ? f(i + 1) : f.codomain();
    s.append(next - f(i), 'y');
    if (i < n) s.push_back('x');
  }
  return Path(std::move(s));
}

JoinContMap compose(const JoinContMap& g, const JoinContMap& f) {
  if (f.codomain() != g.domain()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot compose: codomain of " + f.str()
                    + " differs from domain of " + g.str());
  }
  std::vector<std::size_t> v(f.domain() + 1);
  for (std::size_t i = 0; i <= f.domain(); ++i) v[i] = g(f(i));
  return JoinContMap(std::move(v), g.codomain());
}

MonotoneMap right_adjoint(const JoinContMap& f) {
  const std::size_t n = f.domain();
  std::vector<std::size_t> g(f.codomain() + 1);
  std::size_t x = 0;
  for (std::size_t y = 0; y <= f.codomain(); ++y) {
    while (x < n && f(x + 1) <= y) ++x;
    g[y] = x;
  }
  return MonotoneMap(std::move(g), n);
}

bool pointwise_leq(const JoinContMap& f1, const JoinContMap& f2) {
  require_same_dims(f1, f2);
  return std::ranges::equal(f1.values(), f2.values(), std::less_equal<>{});
}

JoinContMap pointwise_join(const JoinContMap& f1, const JoinContMap& f2) {
  require_same_dims(f1, f2);
  std::vector<std::size_t> v(f1.domain() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(f1(i), f2(i));
  return JoinContMap(std::move(v), f1.codomain());
}

JoinContMap pointwise_meet(const JoinContMap& f1, const JoinContMap& f2) {
  require_same_dims(f1, f2);
  std::vector<std::size_t> v(f1.domain() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(f1(i), f2(i));
  return JoinContMap(std::move(v), f1.codomain());
}

void require_square(const JoinContMap& f) {
  if (!f.is_square()) {
    throw Error(ErrorCode::NotSquare,
                "map " + f.str() + " is not an endomap of a chain");
  }
}

std::set<std::size_t> increases(const JoinContMap& f) {
  require_square(f);
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < f.domain(); ++i) {
    if (f(i) < f(i + 1)) out.insert(i);
  }
  return out;
}

std::set<std::size_t> image(const JoinContMap& f) {
  return {f.values().begin(), f.values().end()};
}

std::set<std::size_t> image(const MonotoneMap& g) {
  return {g.values().begin(), g.values().end()};
}

bool is_idempotent_map(const JoinContMap& f) {
  require_square(f);
  return compose(f, f) == f;
}

bool is_nilpotent_map(const JoinContMap& f) {
  require_square(f);
  for (std::size_t x = 1; x <= f.domain(); ++x) {
    if (f(x) >= x) return false;
  }
  return true;
}

std::size_t aperiodicity_index(const JoinContMap& f) {
  require_square(f);
  // Q(I_n) is finite and aperiodic, so the powers stabilise.
  JoinContMap power = f;
  std::size_t k = 1;
  while (true) {
    JoinContMap next = compose(f, power);
    if (next == power) return k;
    power = std::move(next);
    ++k;
  }
}

}  // namespace pq
