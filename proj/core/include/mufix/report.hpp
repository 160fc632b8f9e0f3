#ifndef MUFIX_REPORT_HPP
#define MUFIX_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mufix {

// Plain-data summaries of what the tool did, with one text renderer and one
// structured (JSON) renderer each. The two renderers expose the same fields
// under the same names so scripted consumers see exactly what a reader sees.

struct ChainReport {
  std::string functor;
  std::size_t max_stage = 0;
  std::vector<std::size_t> stage_sizes;
  std::optional<std::size_t> converged_at;
  // Serialized structure map, present when converged.
  std::vector<std::pair<std::string, std::string>> structure_map;
};

struct FoldReport {
  std::string functor;
  std::size_t converged_at = 0;
  std::vector<std::pair<std::string, std::string>> fold;
  bool square_holds = false;  // fold . structure == target structure . F(fold)
};

struct LambekReport {
  std::string functor;
  std::size_t converged_at = 0;
  std::size_t carrier_size = 0;
  bool forward_then_back = false;
  bool back_then_forward = false;
};

struct DatalogReport {
  std::vector<std::string> model;  // sorted ground atoms
  std::size_t iterations = 0;
  struct Trace {
    std::vector<std::vector<std::string>> deltas;  // new atoms per round
    std::string note;
  };
  std::optional<Trace> trace;
  std::optional<bool> semi_naive_agrees;
  struct Leastness {
    std::size_t subsets_checked = 0;
    std::size_t fixed_points = 0;
    bool least = false;
  };
  std::optional<Leastness> leastness;
};

struct TermsReport {
  std::string functor;
  std::size_t depth = 0;
  std::vector<std::string> terms;  // pretty-printed, universe order
  std::vector<std::pair<std::string, std::string>> evaluations;
  bool with_algebra = false;
  // Set when the functor has the numeral shape and an algebra was given.
  std::optional<bool> recursion_equations_hold;
};

std::string to_text(const ChainReport& report);
std::string to_text(const FoldReport& report);
std::string to_text(const LambekReport& report);
std::string to_text(const DatalogReport& report);
std::string to_text(const TermsReport& report);

std::string to_json(const ChainReport& report);
std::string to_json(const FoldReport& report);
std::string to_json(const LambekReport& report);
std::string to_json(const DatalogReport& report);
std::string to_json(const TermsReport& report);

}  // namespace mufix

#endif
