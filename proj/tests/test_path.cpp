#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pq/error.hpp"
#include "pq/path.hpp"

using namespace pq;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PQ_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Point = std::pair<std::size_t, std::size_t>;

std::vector<Point> points(const std::vector<Turn>& ts) {
  std::vector<Point> out;
  for (const auto& t : ts) out.emplace_back(t.a, t.b);
  return out;
}

}  // namespace

TEST_SUITE("path_core") {
  TEST_CASE("parse_path") {
    auto w = parse_path("yxxxyxyyxy");
    CHECK(w.n() == 5);
    CHECK(w.m() == 5);

    auto e = parse_path("");
    CHECK(e.empty());
    CHECK(e.dims() == Dimensions{0, 0});

    try {
      parse_path("xz");
      FAIL("expected IllegalCharacter");
    } catch (const IllegalCharacterError& err) {
      CHECK(err.code() == ErrorCode::IllegalCharacter);
      CHECK(err.position() == 1);
    }

    CHECK(parse_path("ENne").str() == "xyyx");
    CHECK(parse_path("XY", Dimensions{1, 1}).str() == "xy");
    try {
      parse_path("xxy", Dimensions{1, 2});
      FAIL("expected DimensionMismatch");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("blocks") {
    CHECK(blocks(Path("yxxyxy")).x_blocks == std::vector<std::size_t>{0, 2, 1, 0});
    CHECK(blocks(Path("xyxyyx")).y_blocks == std::vector<std::size_t>{0, 1, 2, 0});
    auto b = blocks(Path("xxx"));
    CHECK(b.x_blocks == std::vector<std::size_t>{3});
    CHECK(b.y_blocks == std::vector<std::size_t>{0, 0, 0, 0});
  }

  TEST_CASE("blocks reconstruct the word") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (std::size_t m = 0; m <= 5; ++m) {
        for (const auto& s : oracle::words(n, m)) {
          auto b = blocks(Path(s));
          REQUIRE(b.x_blocks.size() == m + 1);
          REQUIRE(b.y_blocks.size() == n + 1);
          std::string viax, viay;
          for (std::size_t j = 0; j <= m; ++j) {
            viax += std::string(b.x_blocks[j], 'x');
            if (j < m) viax += 'y';
          }
          for (std::size_t i = 0; i <= n; ++i) {
            viay += std::string(b.y_blocks[i], 'y');
            if (i < n) viay += 'x';
          }
          CHECK(viax == s);
          CHECK(viay == s);
        }
      }
    }
  }

  TEST_CASE("turns") {
    auto w = Path("yxxxyxyyxy");
    CHECK(points(ne_turns(w)) == std::vector<Point>{{0, 1}, {3, 2}, {4, 4}});
    CHECK(points(en_turns(w)) == std::vector<Point>{{3, 1}, {4, 2}, {5, 4}});

    auto corner = Path("xxxyy");
    CHECK(ne_turns(corner).empty());
    REQUIRE(en_turns(corner).size() == 1);
    CHECK(points(en_turns(corner))[0] == Point{3, 0});

    auto yxyx = Path("yxyx");
    CHECK(points(ne_turns(yxyx)) == std::vector<Point>{{0, 1}, {1, 2}});
    CHECK(points(en_turns(yxyx)) == std::vector<Point>{{1, 1}});
  }

  TEST_CASE("turns alternate and sit where the word says") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (std::size_t m = 0; m <= 5; ++m) {
        for (const auto& s : oracle::words(n, m)) {
          auto ts = turns(Path(s));
          for (std::size_t i = 1; i < ts.size(); ++i) {
            CHECK(ts[i].kind != ts[i - 1].kind);
          }
          for (const auto& t : ts) {
            const std::string prefix = s.substr(0, t.position);
            CHECK(t.a == oracle::count_char(prefix, 'x'));
            CHECK(t.b == oracle::count_char(prefix, 'y'));
            CHECK(s[t.position - 1] == (t.kind == TurnKind::NE ? 'y' : 'x'));
            CHECK(s[t.position] == (t.kind == TurnKind::NE ? 'x' : 'y'));
          }
          CHECK(descent_count(Path(s)) == ne_turns(Path(s)).size());
          CHECK(descent_count(Path(s)) <= std::min(n, m));
        }
      }
    }
  }

  TEST_CASE("descent_count") {
    CHECK(descent_count(Path("xxyxyy")) == 1);
    CHECK(descent_count(Path("xxxyyyy")) == 0);
    CHECK(descent_count(Path("yxxxyxyyxy")) == 3);
  }

  TEST_CASE("swap_letters, reverse, reflect_antidiagonal") {
    CHECK(swap_letters(Path("yxxyxy")).str() == "xyyxyx");
    CHECK(swap_letters(Path()).empty());
    CHECK(swap_letters(Path("xxxyyy")).str() == "yyyxxx");
    CHECK(swap_letters(Path("xxy")).dims() == Dimensions{1, 2});

    CHECK(reverse(Path("xxyxyy")).str() == "yyxyxx");
    CHECK(reverse(Path()).empty());
    CHECK(reverse(Path("yxyxyx")).str() == "xyxyxy");

    CHECK(reflect_antidiagonal(Path("yxyx")).str() == "yxyx");
    CHECK(reflect_antidiagonal(Path("xxxyyy")).str() == "xxxyyy");
    CHECK(reflect_antidiagonal(Path("xyyxyxxy")).str() == "xyyxyxxy");
    CHECK_THROWS_AS(reflect_antidiagonal(Path("xyy")), Error);

    for (std::size_t n = 0; n <= 5; ++n) {
      for (const auto& s : oracle::words(n, n)) {
        Path w(s);
        CHECK(swap_letters(swap_letters(w)) == w);
        CHECK(reverse(reverse(w)) == w);
        auto r = reflect_antidiagonal(w);
        CHECK(reflect_antidiagonal(r) == w);
        // NE turn (a,b) -> (n-b, n-a).
        std::vector<Point> expect;
        for (const auto& t : ne_turns(w)) expect.emplace_back(n - t.b, n - t.a);
        std::sort(expect.begin(), expect.end());
        CHECK(points(ne_turns(r)) == expect);
      }
    }
  }

  TEST_CASE("atomic_path") {
    CHECK(atomic_path(0, 1, 1).str() == "yx");
    CHECK(atomic_path(1, 2, 3).str() == "xyyxxy");
    CHECK_THROWS_AS(atomic_path(3, 1, 3), Error);
    CHECK_THROWS_AS(atomic_path(0, 0, 3), Error);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          auto e = atomic_path(i, j, n);
          REQUIRE(ne_turns(e).size() == 1);
          CHECK(points(ne_turns(e))[0] == Point{i, j});
        }
      }
    }
  }

  TEST_CASE("render_ascii") {
    CHECK(render_ascii(Path()) == ".\n");
    CHECK(render_ascii(Path("xy")) == golden("render_xy.txt"));
    CHECK(render_ascii(Path("yxxxyxyyxy")) == golden("render_yxxxyxyyxy.txt"));
  }

  TEST_CASE("word round trip") {
    for (std::size_t len = 0; len <= 10; ++len) {
      for (std::size_t n = 0; n <= len; ++n) {
        for (const auto& s : oracle::words(n, len - n)) {
          CHECK(parse_path(Path(s).str()) == Path(s));
        }
      }
    }
  }
}
