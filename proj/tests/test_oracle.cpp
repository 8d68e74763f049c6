#include "doctest.h"

#include "latf4/completion.hpp"
#include "latf4/oracle.hpp"
#include "support.hpp"

using namespace latf4;
using namespace latf4::test;
using namespace latf4::oracle;

namespace {

  RuleSet rule_set(std::vector<std::string_view> const& polys) {
    std::vector<Polynomial> vs;
    for (auto s : polys) {
      vs.push_back(p(s));
    }
    return RuleSet(deglex(), vs);
  }

  std::set<Word> lms(RuleSet const& r) {
    std::set<Word> out;
    for (auto const& f : r.rules) {
      out.insert(f.leading_monomial());
    }
    return out;
  }

  std::size_t count_words(std::size_t letters, std::size_t d) {
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 0; len <= d; ++len) {
      total += layer;
      layer *= letters;
    }
    return total;
  }

}  // namespace

TEST_CASE("RuleSet normalises its input") {
  auto r = rule_set({"2*yz - 2*x", "0", "zx - xy"});
  REQUIRE(r.rules.size() == 2);
  CHECK(str(r.rules[0]) == "y.z - x");
}

TEST_CASE("ambiguities") {
  auto r = rule_set({"yz - x", "zx - xy"});
  auto a = ambiguities(r);
  REQUIRE(a.size() == 1);
  CHECK(a[0].kind == Ambiguity::Kind::overlap);
  CHECK(a[0].w1 == w("y"));
  CHECK(a[0].w2 == w("z"));
  CHECK(a[0].w3 == w("x"));
  CHECK(str(s_polynomial(r, a[0])) == "y.x.y - x.x");

  auto idem = rule_set({"xx - x"});
  auto ai   = ambiguities(idem);
  REQUIRE(ai.size() == 1);
  CHECK(ai[0].w1 == w("x"));
  CHECK(ai[0].w3 == w("x"));

  auto incl = rule_set({"yzx - x", "z - y"});
  auto an   = ambiguities(incl);
  REQUIRE(an.size() == 1);
  CHECK(an[0].kind == Ambiguity::Kind::inclusion);
  CHECK(an[0].w1 == w("y"));
  CHECK(an[0].w3 == w("x"));
}

TEST_CASE("naive_reduce") {
  auto r = rule_set({"yz - x", "zx - xy"});
  // yzx reduces at yz first and stops at xx
  CHECK(str(naive_reduce(r, p("yzx"))) == "x.x");
  CHECK(naive_reduce(r, p("xy + y")) == p("xy + y"));
  CHECK(naive_reduce(r, Polynomial()).is_zero());
  auto done = rule_set({"yz - x", "zx - xy", "yxy - xx", "yxx - xxz",
                        "yxxx - xxxy"});
  CHECK(naive_reduce(done, p("yzx - yxy")).is_zero());
  CHECK(str(naive_reduce(done, p("yxyxy"))) == "x.x.x.y");
  CHECK(naive_reduce(done, p("yxyz - xxz")).is_zero());
}

TEST_CASE("buchberger on the braided presentation") {
  auto res = buchberger(rule_set({"yz - x", "zx - xy"}), 5, 64);
  CHECK(res.complete);
  CHECK(lms(res.basis) == std::set<Word>{w("yz"), w("zx"), w("yxy"),
                                         w("yxx"), w("yxxx")});
  for (auto const& a : ambiguities(res.basis)) {
    CHECK(naive_reduce(res.basis, s_polynomial(res.basis, a)).is_zero());
  }
}

TEST_CASE("buchberger caps") {
  auto capped = buchberger(rule_set({"yz - x", "zx - xy"}), 2, 64);
  CHECK_FALSE(capped.complete);
  auto cut = buchberger(rule_set({"yz - x", "zx - xy"}), 8, 1);
  CHECK_FALSE(cut.complete);
  auto done = buchberger(rule_set({"xy - x"}), 4, 4);
  CHECK(done.complete);
  CHECK(done.basis.rules.size() == 1);
}

TEST_CASE("lm_set_up_to_degree") {
  auto done = rule_set({"yz - x", "zx - xy", "yxy - xx", "yxx - xxz",
                        "yxxx - xxxy"});
  auto s3 = lm_set_up_to_degree(done, 3);
  // yz or zx in 2 + 11 words of length <= 3, plus yxy and yxx
  CHECK(s3.size() == 15);
  CHECK(s3.contains(w("yzx")));
  CHECK_FALSE(s3.contains(w("xxz")));
  CHECK(lm_set_up_to_degree(rule_set({"x - y"}), 2).size() == 6);
  CHECK(lm_set_up_to_degree(rule_set({}), 3).empty());
  CHECK(count_words(3, 3) == 40);
  CHECK(lm_set_up_to_degree(rule_set({"x", "y", "z"}), 3).size()
        == count_words(3, 3) - 1);
}

TEST_CASE("compare_leading_ideals") {
  auto done = rule_set({"yz - x", "zx - xy", "yxy - xx", "yxx - xxz",
                        "yxxx - xxxy"});
  auto cmp  = compare_leading_ideals(done, done, 5);
  CHECK(cmp.agree);
  // a basis with one rule missing is caught with a witness
  auto broken = rule_set({"yz - x", "zx - xy", "yxy - xx", "yxxx - xxxy"});
  auto bad    = compare_leading_ideals(done, broken, 5);
  CHECK_FALSE(bad.agree);
  CHECK(bad.only_first.contains(w("yxx")));
  CHECK(bad.only_second.empty());
}

TEST_CASE("the oracle matches the lattice completion on random input") {
  Random rng(8);
  for (int i = 0; i < 25; ++i) {
    auto pres = rng.presentation(2, 3, 3);
    auto lat  = complete(pres, {64, 6});
    auto orc  = buchberger(RuleSet(deglex(), groebner_rules(pres)), 6, 64);
    if (lat.status == CompletionStatus::converged && orc.complete) {
      RuleSet from_lattice(deglex(), groebner_rules(lat.completed));
      CHECK(compare_leading_ideals(from_lattice, orc.basis, 6).agree);
    }
  }
}
