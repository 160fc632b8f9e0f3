#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mufix/chain.hpp"
#include "mufix/datalog.hpp"
#include "mufix/dsl.hpp"
#include "mufix/errors.hpp"
#include "mufix/report.hpp"
#include "mufix/term.hpp"

namespace {

using namespace mufix;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kBudgetExhausted = 2;
constexpr int kCheckFailed = 3;

struct Options {
  std::size_t max_stage = kDefaultMaxStage;
  std::size_t depth = kDefaultDepthBound;
  std::size_t cap = kDefaultCardinalityCap;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// CLI::PositiveNumber validates through double and reports the double range
// on failure; these options are integers, so give them an integer message.
const CLI::Validator kPositiveInteger(
    [](std::string& value) -> std::string {
      if (!value.empty() && value.find_first_not_of("0123456789") ==
                                std::string::npos &&
          value.find_first_not_of('0') != std::string::npos)
        return {};
      return "requires a positive integer, got '" + value + "'";
    },
    "POSITIVE_INT");

template <typename Report>
void emit(const Options& options, const Report& report) {
  std::cout << (options.format == "structured" ? to_json(report)
                                               : to_text(report));
}

std::vector<std::pair<std::string, std::string>> mapping_of(const FinFn& fn) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Elem& e : fn.domain()) out.emplace_back(e.repr(), fn(e).repr());
  return out;
}

int cmd_chain(const Options& options, const std::string& functor_path) {
  FunctorFile file = parse_functor_file(read_file(functor_path));
  Chain chain = build_chain(file.functor, options.max_stage, options.cap);
  std::optional<std::size_t> converged = detect_convergence(chain);

  ChainReport report;
  report.functor = file.functor.to_string();
  report.max_stage = options.max_stage;
  for (const FinSet& stage : chain.stages)
    report.stage_sizes.push_back(stage.size());
  report.converged_at = converged;
  if (converged)
    report.structure_map =
        mapping_of(extract_initial_algebra(chain, *converged).structure());

  emit(options, report);
  return converged ? kOk : kBudgetExhausted;
}

int cmd_fold(const Options& options, const std::string& functor_path,
             const std::string& algebra_path) {
  FunctorFile file = parse_functor_file(read_file(functor_path));
  ChainResult result = run_chain(file.functor, options.max_stage, options.cap);
  if (!result.converged_at)
    throw NotConverged("the chain did not converge within " +
                       std::to_string(options.max_stage) + " stages");
  Algebra target =
      parse_algebra_file(read_file(algebra_path), file.functor, file.sets);
  FinFn fold = fold_via_chain(result.chain, *result.converged_at, target);
  bool square = compose(fold, result.algebra->structure()) ==
                compose(target.structure(), apply_mor(file.functor, fold));

  FoldReport report;
  report.functor = file.functor.to_string();
  report.converged_at = *result.converged_at;
  report.fold = mapping_of(fold);
  report.square_holds = square;

  emit(options, report);
  return square ? kOk : kCheckFailed;
}

int cmd_lambek(const Options& options, const std::string& functor_path) {
  FunctorFile file = parse_functor_file(read_file(functor_path));
  ChainResult result = run_chain(file.functor, options.max_stage, options.cap);
  if (!result.converged_at)
    throw NotConverged("the chain did not converge within " +
                       std::to_string(options.max_stage) + " stages");
  LambekCheck check = lambek_verify(result.chain, *result.converged_at);

  LambekReport report;
  report.functor = file.functor.to_string();
  report.converged_at = *result.converged_at;
  report.carrier_size = result.algebra->carrier().size();
  report.forward_then_back = check.forward_then_back;
  report.back_then_forward = check.back_then_forward;

  emit(options, report);
  return check.ok() ? kOk : kCheckFailed;
}

std::vector<std::string> atom_names(const FinSet& interpretation) {
  std::vector<std::string> names;
  for (const Elem& e : interpretation) names.push_back(e.atom_name());
  return names;
}

int cmd_datalog(const Options& options, const std::string& program_path,
                bool trace, bool use_semi_naive, bool check_leastness) {
  Program program = parse_program(read_file(program_path));
  ModelResult result = least_model(program, options.cap);

  DatalogReport report;
  report.model = atom_names(result.model);
  report.iterations = result.iterations;

  if (trace) {
    DatalogReport::Trace t;
    for (std::size_t i = 1; i < result.trace.size(); ++i)
      t.deltas.push_back(
          atom_names(set_difference(result.trace[i], result.trace[i - 1])));
    t.note = "the final iteration repeats, confirming a fixed point";
    report.trace = std::move(t);
  }
  if (use_semi_naive)
    report.semi_naive_agrees = semi_naive(program, options.cap) == result.model;
  if (check_leastness) {
    LeastReport least =
        check_least(consequence_operator(program, options.cap), result.model);
    report.leastness = DatalogReport::Leastness{
        least.subsets_checked, least.fixed_points.size(), least.least()};
  }

  emit(options, report);
  bool failed = (report.semi_naive_agrees && !*report.semi_naive_agrees) ||
                (report.leastness && !report.leastness->least);
  return failed ? kCheckFailed : kOk;
}

// The recursion equations for the 1 + X shape: evaluating the empty layer
// gives the algebra's base value, and evaluating a wrapped term applies the
// algebra's step to the sub-term's value.
bool numeral_recursion_holds(const FunctorExpr& functor, const Algebra& target,
                             const TermUniverse& universe) {
  const FinFn& beta = target.structure();
  for (const Elem& term : universe.terms()) {
    Elem layer = term.child();
    Elem value = cata(functor, target, term);
    if (layer.is(Elem::Kind::Inl)) {
      if (value != beta(layer)) return false;
    } else {
      Elem sub_value = cata(functor, target, layer.child());
      if (value != beta(Elem::inr(sub_value))) return false;
    }
  }
  return true;
}

int cmd_terms(const Options& options, const std::string& functor_path,
              const std::string& algebra_path) {
  FunctorFile file = parse_functor_file(read_file(functor_path));
  TermUniverse universe =
      enumerate_terms(file.functor, options.depth, options.cap);

  TermsReport report;
  report.functor = file.functor.to_string();
  report.depth = options.depth;
  for (const Elem& term : universe.terms())
    report.terms.push_back(pretty_term(file.functor, term));

  if (!algebra_path.empty()) {
    Algebra target =
        parse_algebra_file(read_file(algebra_path), file.functor, file.sets);
    report.with_algebra = true;
    for (const Elem& term : universe.terms())
      report.evaluations.emplace_back(
          pretty_term(file.functor, term),
          cata(file.functor, target, term).repr());
    if (is_numeral_shape(file.functor))
      report.recursion_equations_hold =
          numeral_recursion_holds(file.functor, target, universe);
  }

  emit(options, report);
  return report.recursion_equations_hold && !*report.recursion_equations_hold
             ? kCheckFailed
             : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Initial algebras, folds and least fixed points over finite sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_option("--max-stage", options.max_stage,
                 "Largest chain stage to build")
      ->default_val(kDefaultMaxStage)
      ->check(kPositiveInteger);
  app.add_option("--depth", options.depth, "Term enumeration depth bound")
      ->default_val(kDefaultDepthBound);
  app.add_option("--cap", options.cap, "Largest set the tool will materialize")
      ->default_val(kDefaultCardinalityCap)
      ->check(kPositiveInteger);
  app.add_option("--format", options.format, "Report format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string functor_path;
  std::string algebra_path;
  std::string program_path;
  bool trace = false;
  bool use_semi_naive = false;
  bool check_leastness = false;

  CLI::App* chain = app.add_subcommand(
      "chain", "Iterate the functor from the empty set and report convergence");
  chain->add_option("functor-file", functor_path, "Functor definition file")
      ->required();

  CLI::App* fold = app.add_subcommand(
      "fold", "Fold the converged initial algebra into a target algebra");
  fold->add_option("functor-file", functor_path, "Functor definition file")
      ->required();
  fold->add_option("algebra-file", algebra_path, "Target algebra file")
      ->required();

  CLI::App* lambek = app.add_subcommand(
      "lambek", "Check that the converged structure map is an isomorphism");
  lambek->add_option("functor-file", functor_path, "Functor definition file")
      ->required();

  CLI::App* datalog = app.add_subcommand(
      "datalog", "Compute the least model of a positive program");
  datalog->add_option("program-file", program_path, "Datalog program file")
      ->required();
  datalog->add_flag("--trace", trace, "Print per-iteration deltas");
  datalog->add_flag("--semi-naive", use_semi_naive,
                    "Also evaluate semi-naively and compare");
  datalog->add_flag("--check-least", check_leastness,
                    "Exhaustively verify leastness (small bases only)");

  CLI::App* terms = app.add_subcommand(
      "terms", "Enumerate terms up to the depth bound, optionally evaluating");
  terms->add_option("functor-file", functor_path, "Functor definition file")
      ->required();
  terms->add_option("algebra-file", algebra_path,
                    "Algebra file to evaluate terms in");

  try {
    app.parse(argc, argv);
  } catch (const CLI::RequiredError& e) {
    // "A subcommand is required" masks the real mistake when the user typed
    // a misspelled subcommand; name the stray word instead.
    const std::vector<std::string> extras = app.remaining();
    if (!extras.empty()) {
      const std::string& stray = extras.front();
      const char* kind = stray.rfind('-', 0) == 0 ? "option" : "subcommand";
      std::cerr << "error: unknown " << kind << " '" << stray << "'\n"
                << "Run with --help for more information.\n";
      return kInputError;
    }
    return app.exit(e) == 0 ? kOk : kInputError;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (app.got_subcommand(chain)) return cmd_chain(options, functor_path);
    if (app.got_subcommand(fold))
      return cmd_fold(options, functor_path, algebra_path);
    if (app.got_subcommand(lambek)) return cmd_lambek(options, functor_path);
    if (app.got_subcommand(datalog))
      return cmd_datalog(options, program_path, trace, use_semi_naive,
                         check_leastness);
    if (app.got_subcommand(terms))
      return cmd_terms(options, functor_path, algebra_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
