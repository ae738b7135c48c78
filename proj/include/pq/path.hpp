#pragma once

// Discrete lattice paths with East (x) and North (y) unit steps.
//
// A Path in P(n,m) is a word over {x,y} with n letters x and m letters y,
// read as a walk from (0,0) to (n,m).  Turn points are stored as the
// letter counts of the prefix ending at the turn, so every geometric test
// against a diagonal line becomes an integer comparison.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pq {

enum class Step : char { East = 'x', North = 'y' };

struct Dimensions {
  std::size_t n = 0;  // East steps
  std::size_t m = 0;  // North steps

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

class Path {
 public:
  Path() = default;

  // Builds a path from a word that is already over {x,y}.  Throws
  // IllegalCharacterError otherwise; use parse_path for the lenient alphabet.
  explicit Path(std::string word);
  explicit Path(const std::vector<Step>& steps);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return word_.size() - n_; }
  Dimensions dims() const noexcept { return {n(), m()}; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  bool is_square() const noexcept { return n() == m(); }

  Step operator[](std::size_t i) const noexcept {
    return static_cast<Step>(word_[i]);
  }
  Step front() const noexcept { return static_cast<Step>(word_.front()); }
  Step back() const noexcept { return static_cast<Step>(word_.back()); }

  // The canonical word, lowercase x/y.
  const std::string& str() const noexcept { return word_; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::string word_;
  std::size_t n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Path& w);

enum class TurnKind { NE, EN };

// A turn at word position `position` (the index of its second letter); the
// point is the (x-count, y-count) of the prefix before that letter.
struct Turn {
  std::size_t a = 0;
  std::size_t b = 0;
  TurnKind kind = TurnKind::NE;
  std::size_t position = 0;

  friend bool operator==(const Turn&, const Turn&) = default;
};

struct BlockProfile {
  std::vector<std::size_t> x_blocks;  // m+1 entries
  std::vector<std::size_t> y_blocks;  // n+1 entries
};

// Accepts x/y and the aliases E/N, case-insensitively.
Path parse_path(std::string_view text,
                std::optional<Dimensions> expect = std::nullopt);

BlockProfile blocks(const Path& w);

// All turns in word order.
std::vector<Turn> turns(const Path& w);
std::vector<Turn> ne_turns(const Path& w);
std::vector<Turn> en_turns(const Path& w);

std::size_t descent_count(const Path& w);

// w*, exchanging x and y.  Lands in P(m,n).
Path swap_letters(const Path& w);
Path reverse(const Path& w);

// Reflection of a square path along the anti-diagonal: (a,b) -> (n-b,n-a).
Path reflect_antidiagonal(const Path& w);

// e_{i,j} = x^i y^j x^{n-i} y^{n-j}, the square path whose only
// North-East turn sits at (i,j).  Requires 0 <= i < n and 1 <= j <= n.
Path atomic_path(std::size_t i, std::size_t j, std::size_t n);

// Dot grid with m+1 rows, top row first.  Columns alternate lattice points
// and gaps: an East step from (a,b) puts '_' in the gap after point a of
// row b, a North step arriving at (a,b) replaces that point with '|'.
std::string render_ascii(const Path& w);

// Throws NotSquare unless n == m.
void require_square(const Path& w);

}  // namespace pq

template <>
struct std::hash<pq::Path> {
  std::size_t operator()(const pq::Path& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
