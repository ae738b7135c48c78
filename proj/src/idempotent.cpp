#include "pq/idempotent.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "pq/error.hpp"
#include "pq/quantale.hpp"

namespace pq {

namespace {

[[noreturn]] void invalid_emmentaler(const std::string& why) {
  throw Error(ErrorCode::InvalidEmmentaler, "invalid emmentaler: " + why);
}

std::size_t parse_endpoint(std::string_view token, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    invalid_emmentaler("cannot read '" + std::string(whole)
                       + "', expected 'y0-x0;y1-x1;...'");
  }
  return v;
}

}  // namespace

Emmentaler::Emmentaler(std::vector<Interval> intervals, std::size_t n)
    : intervals_(std::move(intervals)), n_(n) {
  if (intervals_.empty()) invalid_emmentaler("no intervals");
  if (intervals_.front().lo != 0) invalid_emmentaler("y_0 must be 0");
  if (intervals_.back().hi != n_) {
    invalid_emmentaler("x_k must be n = " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (iv.lo > iv.hi) {
      invalid_emmentaler("interval " + std::to_string(iv.lo) + "-"
                         + std::to_string(iv.hi) + " is empty");
    }
    if (i > 0 && intervals_[i - 1].hi >= iv.lo) {
      invalid_emmentaler("intervals must be disjoint and increasing");
    }
  }
}

Emmentaler Emmentaler::parse(std::string_view text) {
  std::vector<Interval> out;
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact.push_back(c);
  }
  std::string_view rest(compact);
  while (true) {
    auto semi = rest.find(';');
    auto item = rest.substr(0, semi);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      invalid_emmentaler("cannot read '" + std::string(text)
                         + "', expected 'y0-x0;y1-x1;...'");
    }
    out.push_back({parse_endpoint(item.substr(0, dash), text),
                   parse_endpoint(item.substr(dash + 1), text)});
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  const std::size_t n = out.back().hi;
  return Emmentaler(std::move(out), n);
}

Emmentaler Emmentaler::discrete(std::size_t n) {
  std::vector<Interval> v;
  for (std::size_t i = 0; i <= n; ++i) v.push_back({i, i});
  return Emmentaler(std::move(v), n);
}

Emmentaler Emmentaler::whole(std::size_t n) { return Emmentaler({{0, n}}, n); }

std::vector<std::size_t> Emmentaler::lower() const {
  std::vector<std::size_t> out;
  for (const auto& iv : intervals_) out.push_back(iv.lo);
  return out;
}

std::vector<std::size_t> Emmentaler::upper() const {
  std::vector<std::size_t> out;
  for (const auto& iv : intervals_) out.push_back(iv.hi);
  return out;
}

std::string Emmentaler::str() const {
  std::string s;
  for (const auto& iv : intervals_) {
    if (!s.empty()) s += ';';
    s += std::to_string(iv.lo) + "-" + std::to_string(iv.hi);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Emmentaler& e) {
  return os << e.str();
}

ZigzagWord::ZigzagWord(std::vector<ZigzagLetter> letters)
    : letters_(std::move(letters)) {
  if (!is_valid(letters_)) {
    throw Error(ErrorCode::InvalidWord,
                "'" + str() + "' is not a valid zigzag word");
  }
}

bool ZigzagWord::is_valid(const std::vector<ZigzagLetter>& letters) noexcept {
  if (letters.empty() || letters.front() != ZigzagLetter::One
      || letters.back() == ZigzagLetter::Zero) {
    return false;
  }
  // No m 0* m: between two m's there must be a 1.
  bool open_mbar = false;
  for (ZigzagLetter c : letters) {
    if (c == ZigzagLetter::MBar) {
      if (open_mbar) return false;
      open_mbar = true;
    } else if (c == ZigzagLetter::One) {
      open_mbar = false;
    }
  }
  return true;
}

ZigzagWord ZigzagWord::parse(std::string_view text) {
  std::vector<ZigzagLetter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '1': letters.push_back(ZigzagLetter::One); break;
      case 'm': case 'M': letters.push_back(ZigzagLetter::MBar); break;
      case '0': letters.push_back(ZigzagLetter::Zero); break;
      default: throw IllegalCharacterError(i, text[i]);
    }
  }
  return ZigzagWord(std::move(letters));
}

std::string ZigzagWord::str() const {
  std::string s;
  for (ZigzagLetter c : letters_) s.push_back(static_cast<char>(c));
  return s;
}

bool is_upper_zigzag(const Path& w) {
  require_square(w);
  return std::ranges::all_of(turns(w), [](const Turn& t) {
    return t.kind == TurnKind::NE ? t.a < t.b : t.b <= t.a;
  });
}

bool is_idempotent_path(const Path& w) {
  require_square(w);
  return product(w, w) == w;
}

std::size_t closure(const Emmentaler& e, std::size_t z) {
  if (z > e.n()) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::to_string(z) + " is outside I_" + std::to_string(e.n()));
  }
  for (const auto& iv : e.intervals()) {
    if (z <= iv.hi) return iv.hi;
  }
  return e.n();  // unreachable: x_k = n
}

std::size_t interior(const Emmentaler& e, std::size_t z) {
  if (z > e.n()) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::to_string(z) + " is outside I_" + std::to_string(e.n()));
  }
  std::size_t best = 0;
  for (const auto& iv : e.intervals()) {
    if (iv.lo > z) break;
    best = iv.lo;
  }
  return best;
}

EmmentalerMaps map_from_emmentaler(const Emmentaler& e) {
  const std::size_t n = e.n();
  std::vector<std::size_t> f(n + 1), g(n + 1);
  for (std::size_t z = 0; z <= n; ++z) {
    f[z] = interior(e, closure(e, z));
    g[z] = closure(e, interior(e, z));
  }
  return {JoinContMap(std::move(f), n), MonotoneMap(std::move(g), n)};
}

Emmentaler emmentaler_from_map(const JoinContMap& f) {
  require_square(f);
  if (!is_idempotent_map(f)) {
    throw Error(ErrorCode::NotIdempotent,
                "map " + f.str() + " is not idempotent");
  }
  const auto g = right_adjoint(f);
  std::vector<Interval> out;
  for (std::size_t y : image(f)) out.push_back({y, g(y)});
  return Emmentaler(std::move(out), f.domain());
}

ZigzagWord encode_word(const Emmentaler& e) {
  std::vector<ZigzagLetter> letters(e.n() + 1, ZigzagLetter::Zero);
  for (const auto& iv : e.intervals()) {
    letters[iv.hi] = ZigzagLetter::MBar;
  }
  // A point in both J and M gets 1.
  for (const auto& iv : e.intervals()) {
    letters[iv.lo] = ZigzagLetter::One;
  }
  return ZigzagWord(std::move(letters));
}

Emmentaler decode_word(const ZigzagWord& z) {
  const auto& letters = z.letters();
  std::vector<Interval> out;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    switch (letters[p]) {
      case ZigzagLetter::One: out.push_back({p, p}); break;
      case ZigzagLetter::MBar: out.back().hi = p; break;
      case ZigzagLetter::Zero: break;
    }
  }
  return Emmentaler(std::move(out), z.n());
}

bool is_nilpotent_path(const Path& w) {
  require_square(w);
  return is_nilpotent_map(path_to_map(w));
}

namespace {

void extend_emmentalers(std::size_t n, std::vector<Interval>& prefix,
                        std::vector<Emmentaler>& out) {
  // prefix.back().lo is fixed; choose its upper endpoint, then the next lo.
  const std::size_t lo = prefix.back().lo;
  for (std::size_t hi = lo; hi <= n; ++hi) {
    prefix.back().hi = hi;
    if (hi == n) {
      out.emplace_back(prefix, n);
      continue;
    }
    for (std::size_t next = hi + 1; next <= n; ++next) {
      prefix.push_back({next, next});
      extend_emmentalers(n, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Emmentaler> all_emmentalers(std::size_t n) {
  std::vector<Emmentaler> out;
  std::vector<Interval> prefix{{0, 0}};
  extend_emmentalers(n, prefix, out);
  return out;
}

}  // namespace pq
