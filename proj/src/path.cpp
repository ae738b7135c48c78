#include "pq/path.hpp"

#include <algorithm>
#include <ostream>

#include "pq/error.hpp"

namespace pq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::InvalidEmmentaler: return "InvalidEmmentaler";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::InvalidWord: return "InvalidWord";
  }
  return "Unknown";
}

IllegalCharacterError::IllegalCharacterError(std::size_t position, char c)
    : Error(ErrorCode::IllegalCharacter,
            "illegal character '" + std::string(1, c) + "' at position "
                + std::to_string(position)),
      position_(position) {}

Path::Path(std::string word) : word_(std::move(word)) {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] == 'x') {
      ++n_;
    } else if (word_[i] != 'y') {
      throw IllegalCharacterError(i, word_[i]);
    }
  }
}

Path::Path(const std::vector<Step>& steps) {
  word_.reserve(steps.size());
  for (Step s : steps) {
    word_.push_back(static_cast<char>(s));
    n_ += s == Step::East;
  }
}

std::ostream& operator<<(std::ostream& os, const Path& w) {
  return os << (w.empty() ? std::string("ε") : w.str());
}

Path parse_path(std::string_view text, std::optional<Dimensions> expect) {
  std::string word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'x': case 'X': case 'e': case 'E': word.push_back('x'); break;
      case 'y': case 'Y': case 'n': case 'N': word.push_back('y'); break;
      default: throw IllegalCharacterError(i, text[i]);
    }
  }
  Path w(std::move(word));
  if (expect && w.dims() != *expect) {
    throw Error(ErrorCode::DimensionMismatch,
                "path " + w.str() + " lies in P(" + std::to_string(w.n()) + ","
                    + std::to_string(w.m()) + "), expected P("
                    + std::to_string(expect->n) + ","
                    + std::to_string(expect->m) + ")");
  }
  return w;
}

BlockProfile blocks(const Path& w) {
  BlockProfile p;
  p.x_blocks.assign(w.m() + 1, 0);
  p.y_blocks.assign(w.n() + 1, 0);
  std::size_t xs = 0, ys = 0;
  for (char c : w.str()) {
    if (c == 'x') {
      ++p.x_blocks[ys];
      ++xs;
    } else {
      ++p.y_blocks[xs];
      ++ys;
    }
  }
  return p;
}

std::vector<Turn> turns(const Path& w) {
  std::vector<Turn> out;
  std::size_t a = 0, b = 0;
  const std::string& s = w.str();
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (l > 0 && s[l - 1] != s[l]) {
      out.push_back({a, b, s[l] == 'x' ? TurnKind::NE : TurnKind::EN, l});
    }
    (s[l] == 'x' ? a : b) += 1;
  }
  return out;
}

namespace {
std::vector<Turn> turns_of_kind(const Path& w, TurnKind kind) {
  auto all = turns(w);
  std::erase_if(all, [kind](const Turn& t) { return t.kind != kind; });
  return all;
}
}  // namespace

std::vector<Turn> ne_turns(const Path& w) { return turns_of_kind(w, TurnKind::NE); }
std::vector<Turn> en_turns(const Path& w) { return turns_of_kind(w, TurnKind::EN); }

std::size_t descent_count(const Path& w) {
  const std::string& s = w.str();
  std::size_t d = 0;
  for (std::size_t l = 1; l < s.size(); ++l) {
    d += s[l - 1] == 'y' && s[l] == 'x';
  }
  return d;
}

Path swap_letters(const Path& w) {
  std::string s = w.str();
  for (char& c : s) c = c == 'x' ? 'y' : 'x';
  return Path(std::move(s));
}

Path reverse(const Path& w) {
  return Path(std::string(w.str().rbegin(), w.str().rend()));
}

void require_square(const Path& w) {
  if (!w.is_square()) {
    throw Error(ErrorCode::NotSquare,
                "path " + w.str() + " is not square (n=" + std::to_string(w.n())
                    + ", m=" + std::to_string(w.m()) + ")");
  }
}

Path reflect_antidiagonal(const Path& w) {
  require_square(w);
  return reverse(swap_letters(w));
}

Path atomic_path(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= n || j < 1 || j > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "atomic path e_{" + std::to_string(i) + "," + std::to_string(j)
                    + "} needs 0 <= i < n and 1 <= j <= n with n="
                    + std::to_string(n));
  }
  std::string s;
  s.reserve(2 * n);
  s.append(i, 'x').append(j, 'y').append(n - i, 'x').append(n - j, 'y');
  return Path(std::move(s));
}

std::string render_ascii(const Path& w) {
  const std::size_t width = 2 * w.n() + 1;
  std::vector<std::string> rows(w.m() + 1, std::string(width, ' '));
  for (auto& row : rows) {
    for (std::size_t a = 0; a <= w.n(); ++a) row[2 * a] = '.';
  }
  std::size_t a = 0, b = 0;
  for (char c : w.str()) {
    if (c == 'x') {
      rows[b][2 * a + 1] = '_';
      ++a;
    } else {
      ++b;
      rows[b][2 * a] = '|';
    }
  }
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out += *it;
    out += '\n';
  }
  return out;
}

}  // namespace pq
