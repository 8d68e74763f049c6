#include "doctest.h"

#include <sstream>

#include "latf4/commands.hpp"
#include "support.hpp"

using namespace latf4;
using namespace latf4::test;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  template <typename F>
  Run run(F&& f) {
    std::ostringstream out, err;
    int                code = f(out, err);
    return {code, out.str(), err.str()};
  }

  std::string completed_text() {
    return run([](auto& o, auto& e) {
             return cmd_complete(braided_text(), {}, nullptr, o, e);
           })
        .out;
  }

}  // namespace

TEST_CASE("complete") {
  std::string trace;
  auto r = run([&](auto& o, auto& e) {
    return cmd_complete(braided_text(), {}, &trace, o, e);
  });
  CHECK(r.code == exit_ok);
  CHECK(r.out
        == "alphabet: x y z\norder: deglex\nstatus: converged\n"
           "iterations: 3\nbranchings: 6\nrules:\n"
           "y.z -> x\nz.x -> x.y\ny.x.x -> x.x.z\ny.x.y -> x.x\n"
           "y.x.x.x -> x.x.x.y\n");
  CHECK_FALSE(trace.empty());

  // the output is itself a presentation and completing it changes nothing
  auto again = run([&](auto& o, auto& e) {
    return cmd_complete(r.out, {}, nullptr, o, e);
  });
  CHECK(again.code == exit_ok);
  CHECK(again.out.substr(again.out.find("rules:"))
        == r.out.substr(r.out.find("rules:")));

  auto capped = run([](auto& o, auto& e) {
    return cmd_complete(braided_text(), {1, 12}, nullptr, o, e);
  });
  CHECK(capped.code == exit_negative);
  CHECK(capped.out.find("status: iteration_cap") != std::string::npos);
}

TEST_CASE("check") {
  auto before = run([](auto& o, auto& e) { return cmd_check(braided_text(), o, e); });
  CHECK(before.code == exit_negative);
  CHECK(before.out
        == "(y.z.x, (1,0), (0,1))  SP = y.x.y - x.x  NF = y.x.y - x.x\n"
           "not confluent\n");
  auto text  = completed_text();
  auto after = run([&](auto& o, auto& e) { return cmd_check(text, o, e); });
  CHECK(after.code == exit_ok);
  CHECK(after.out.ends_with("\nconfluent\n"));
}

TEST_CASE("reduce") {
  auto reduce = [](std::string_view text, std::string_view f) {
    return run([&](auto& o, auto& e) { return cmd_reduce(text, f, o, e); });
  };
  CHECK(reduce(braided_text(), "y.x.y").out == "y.x.y\n");
  auto text = completed_text();
  CHECK(reduce(text, "y.z.x").out == "x.x\n");
  CHECK(reduce(text, "y.x.y.x.y").out == "x.x.x.y\n");
  CHECK(reduce(text, "0").out == "0\n");
  CHECK(reduce(text, "yzx - yxy").out == "0\n");
  auto bad = reduce(text, "y.q");
  CHECK(bad.code == exit_usage);
  CHECK(bad.err.find("parse error") != std::string::npos);
}

TEST_CASE("branchings") {
  auto r = run([](auto& o, auto& e) { return cmd_branchings(braided_text(), o, e); });
  CHECK(r.code == exit_ok);
  CHECK(r.out == "(y.z.x, (1,0), (0,1))  SP = y.x.y - x.x\n");
}

TEST_CASE("oracle") {
  auto ok = run([](auto& o, auto& e) { return cmd_oracle(braided_text(), 6, 64, o, e); });
  CHECK(ok.code == exit_ok);
  CHECK(ok.out.find("AGREE up to degree 6") != std::string::npos);
  auto low = run([](auto& o, auto& e) { return cmd_oracle(braided_text(), 3, 64, o, e); });
  CHECK(low.code == exit_negative);
  CHECK(low.out.ends_with("INCONCLUSIVE\n"));
}

TEST_CASE("malformed input exits with the usage code") {
  auto r = run([](auto& o, auto& e) {
    return cmd_check("alphabet: x\norder: lex\nrules:\n", o, e);
  });
  CHECK(r.code == exit_usage);
  CHECK(r.err == "parse error: line 2, column 8: unknown order kind 'lex'\n");
  CHECK(r.out.empty());
}
