#include "doctest.h"

#include "latf4/monoid.hpp"
#include "support.hpp"

using namespace latf4;
using namespace latf4::test;

namespace {

  // Naive scan: compare every window letter by letter.
  std::vector<Position> brute_occurrences(Word const& w, Word const& u) {
    std::vector<Position> out;
    auto const            ls = w.letters();
    auto const            us = u.letters();
    for (std::size_t n = 0; n + us.size() <= ls.size(); ++n) {
      bool ok = true;
      for (std::size_t j = 0; j < us.size(); ++j) {
        ok = ok && ls[n + j] == us[j];
      }
      if (ok) {
        out.push_back({n, ls.size() - n - us.size()});
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({}), Error);
  CHECK_THROWS_AS(Alphabet({"x", "y", "x"}), Error);
  Alphabet a({"x", "yy"});
  CHECK(a.find("yy") == 1u);
  CHECK_FALSE(a.find("y").has_value());
  CHECK_FALSE(a.single_characters());
  CHECK(xyz().single_characters());
}

TEST_CASE("concat") {
  CHECK(concat(w("yz"), w("x")) == w("yzx"));
  CHECK(concat(Word{}, w("yxy")) == w("yxy"));
  CHECK(concat(w("yx"), w("yz")) == w("yxyz"));
  CHECK(concat(w("yx"), w("yz")).size() == 4);
}

TEST_CASE("deglex compare") {
  auto const& o = deglex();
  CHECK(o.compare(w("xx"), w("yxy")) < 0);
  CHECK(o.compare(w("yxy"), w("yzx")) < 0);
  CHECK(o.compare(w("xxz"), w("yxx")) < 0);
  CHECK(o.compare(w("yxx"), w("xxxy")) < 0);
  CHECK(o.compare(w("xxxy"), w("yxxx")) < 0);
  CHECK(o.compare(w("yzx"), w("yzx")) == 0);
  CHECK(o.compare(w("z"), w("xx")) < 0);
}

TEST_CASE("deglex is a monomial order on random samples") {
  Random      rng(11);
  auto const& o = deglex();
  for (int i = 0; i < 300; ++i) {
    Word a = rng.word(3, 0, 5), b = rng.word(3, 0, 5), c = rng.word(3, 0, 5);
    // antisymmetry and transitivity
    CHECK((o.compare(a, b) < 0) == (o.compare(b, a) > 0));
    if (o.less(a, b) && o.less(b, c)) {
      CHECK(o.less(a, c));
    }
    if (!a.empty()) {
      CHECK(o.less(Word{}, a));
    }
    // compatibility with two-sided multiplication
    if (o.less(a, b)) {
      Word l = rng.word(3, 0, 3), r = rng.word(3, 0, 3);
      CHECK(o.less(concat(l, a, r), concat(l, b, r)));
    }
  }
}

TEST_CASE("factor_occurrences") {
  CHECK(factor_occurrences(w("yzx"), w("yz")) == std::vector<Position>{{0, 1}});
  CHECK(factor_occurrences(w("yxyxy"), w("yxy"))
        == std::vector<Position>{{0, 2}, {2, 0}});
  CHECK(factor_occurrences(w("xx"), w("yz")).empty());
  CHECK_THROWS_AS((void) factor_occurrences(w("xx"), Word{}), Error);
}

TEST_CASE("factor_occurrences agrees with a naive scan") {
  Random rng(5);
  for (int i = 0; i < 500; ++i) {
    Word big = rng.word(2, 0, 8), small = rng.word(2, 1, 3);
    CHECK(factor_occurrences(big, small) == brute_occurrences(big, small));
  }
}

TEST_CASE("overlaps") {
  CHECK(overlaps(w("yz"), w("zx")) == std::vector<Overlap>{{w("y"), w("z"), w("x")}});
  CHECK(overlaps(w("yxy"), w("yz"))
        == std::vector<Overlap>{{w("yx"), w("y"), w("z")}});
  CHECK(overlaps(w("yz"), w("yz")).empty());
  CHECK(overlaps(w("xx"), w("xx"))
        == std::vector<Overlap>{{w("x"), w("x"), w("x")}});
  CHECK(overlaps(w("yxy"), w("yxy"))
        == std::vector<Overlap>{{w("yx"), w("y"), w("xy")}});
}

TEST_CASE("overlap triples factor both words") {
  Random rng(7);
  for (int i = 0; i < 500; ++i) {
    Word u = rng.word(2, 1, 5), v = rng.word(2, 1, 5);
    for (auto const& o : overlaps(u, v)) {
      CHECK_FALSE(o.middle.empty());
      CHECK(concat(o.prefix, o.middle) == u);
      CHECK(concat(o.middle, o.suffix) == v);
    }
  }
}
