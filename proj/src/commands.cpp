#include "latf4/commands.hpp"

#include <ostream>

#include "latf4/io.hpp"
#include "latf4/oracle.hpp"

namespace latf4 {

  namespace {

    template <typename Body>
    int guarded(std::ostream& err, Body&& body) {
      try {
        return body();
      } catch (ParseError const& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
      } catch (Error const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
      }
    }

  }  // namespace

  int cmd_complete(std::string_view text, CompletionLimits limits,
                   std::string* trace, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      auto const pres   = parse_presentation(text);
      auto const result = complete(pres, limits);
      auto const& alpha = result.completed.alphabet();
      out << "alphabet:";
      for (auto const& s : alpha.symbols()) {
        out << ' ' << s;
      }
      out << "\norder: deglex\n";
      out << "status: " << to_string(result.status) << "\n";
      out << "iterations: " << result.steps.size() << "\n";
      out << "branchings: "
          << critical_branchings(result.completed).size() << "\n";
      out << "rules:\n" << format_rules(result.completed.op());
      if (trace != nullptr) {
        *trace = format_trace(result);
      }
      return result.status == CompletionStatus::converged ? exit_ok
                                                          : exit_negative;
    });
  }

  int cmd_check(std::string_view text, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      auto const  pres  = parse_presentation(text);
      auto const& alpha = pres.alphabet();
      bool        confluent = true;
      for (auto const& b : critical_branchings(pres)) {
        auto const sp = s_polynomial(pres, b);
        auto const nf = normal_form(pres, sp);
        out << format_branching(b, alpha)
            << "  SP = " << format_polynomial(sp, alpha)
            << "  NF = " << format_polynomial(nf, alpha) << "\n";
        confluent = confluent && nf.is_zero();
      }
      out << (confluent ? "confluent" : "not confluent") << "\n";
      return confluent ? exit_ok : exit_negative;
    });
  }

  int cmd_reduce(std::string_view text, std::string_view polynomial,
                 std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      auto const pres = parse_presentation(text);
      auto const f    = parse_polynomial(polynomial, pres.alphabet());
      out << format_polynomial(normal_form(pres, f), pres.alphabet())
          << "\n";
      return exit_ok;
    });
  }

  int cmd_branchings(std::string_view text, std::ostream& out,
                     std::ostream& err) {
    return guarded(err, [&] {
      auto const  pres  = parse_presentation(text);
      auto const& alpha = pres.alphabet();
      for (auto const& b : critical_branchings(pres)) {
        out << format_branching(b, alpha) << "  SP = "
            << format_polynomial(s_polynomial(pres, b), alpha) << "\n";
      }
      return exit_ok;
    });
  }

  int cmd_oracle(std::string_view text, std::size_t max_degree,
                 std::size_t max_iterations, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
      auto const pres    = parse_presentation(text);
      auto const lattice = complete(pres, {max_iterations, max_degree});
      auto const input   = groebner_rules(pres);
      auto const naive   = oracle::buchberger(
          oracle::RuleSet(pres.order(), input), max_degree, max_iterations);

      out << "lattice: " << to_string(lattice.status) << ", "
          << lattice.completed.op().size() << " rules\n";
      out << "oracle: " << (naive.complete ? "complete" : "capped") << ", "
          << naive.basis.rules.size() << " rules\n";
      if (lattice.status != CompletionStatus::converged || !naive.complete) {
        out << "INCONCLUSIVE\n";
        return exit_negative;
      }
      auto const cmp = oracle::compare_leading_ideals(
          oracle::RuleSet(pres.order(), groebner_rules(lattice.completed)),
          naive.basis, max_degree);
      if (cmp.agree) {
        out << "AGREE up to degree " << max_degree << "\n";
        return exit_ok;
      }
      auto const& alpha = pres.alphabet();
      out << "DISAGREE up to degree " << max_degree << "\n";
      for (auto const& w : cmp.only_first) {
        out << "  lattice only: " << format_word(w, alpha) << "\n";
      }
      for (auto const& w : cmp.only_second) {
        out << "  oracle only: " << format_word(w, alpha) << "\n";
      }
      return exit_negative;
    });
  }

}  // namespace latf4
