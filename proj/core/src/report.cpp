#include "mufix/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mufix {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

ordered_json mapping_json(
    const std::vector<std::pair<std::string, std::string>>& mapping) {
  ordered_json out = ordered_json::object();
  for (const auto& [from, to] : mapping) out[from] = to;
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string to_text(const ChainReport& report) {
  std::ostringstream out;
  out << "functor: " << report.functor << "\n";
  out << "stage sizes:\n";
  for (std::size_t i = 0; i < report.stage_sizes.size(); ++i)
    out << "  X" << i << ": " << report.stage_sizes[i] << "\n";
  if (report.converged_at) {
    out << "convergence: stage " << *report.converged_at << "\n";
    out << "structure map:\n";
    for (const auto& [from, to] : report.structure_map)
      out << "  " << from << " -> " << to << "\n";
  } else {
    out << "convergence: none within budget (max stage " << report.max_stage
        << ")\n";
  }
  return out.str();
}

std::string to_json(const ChainReport& report) {
  ordered_json doc;
  doc["command"] = "chain";
  doc["functor"] = report.functor;
  doc["max_stage"] = report.max_stage;
  doc["stage_sizes"] = report.stage_sizes;
  doc["converged_at"] =
      report.converged_at ? ordered_json(*report.converged_at) : nullptr;
  doc["structure_map"] = report.converged_at
                             ? mapping_json(report.structure_map)
                             : ordered_json(nullptr);
  return dump(doc);
}

std::string to_text(const FoldReport& report) {
  std::ostringstream out;
  out << "functor: " << report.functor << "\n";
  out << "convergence: stage " << report.converged_at << "\n";
  out << "fold:\n";
  for (const auto& [from, to] : report.fold)
    out << "  " << from << " -> " << to << "\n";
  out << "homomorphism square: " << verdict(report.square_holds) << "\n";
  return out.str();
}

std::string to_json(const FoldReport& report) {
  ordered_json doc;
  doc["command"] = "fold";
  doc["functor"] = report.functor;
  doc["converged_at"] = report.converged_at;
  doc["fold"] = mapping_json(report.fold);
  doc["homomorphism_square"] = verdict(report.square_holds);
  return dump(doc);
}

std::string to_text(const LambekReport& report) {
  std::ostringstream out;
  out << "functor: " << report.functor << "\n";
  out << "convergence: stage " << report.converged_at << "\n";
  out << "carrier size: " << report.carrier_size << "\n";
  out << "structure . witness = id on the carrier: "
      << verdict(report.forward_then_back) << "\n";
  out << "witness . structure = id on the functor image: "
      << verdict(report.back_then_forward) << "\n";
  return out.str();
}

std::string to_json(const LambekReport& report) {
  ordered_json doc;
  doc["command"] = "lambek";
  doc["functor"] = report.functor;
  doc["converged_at"] = report.converged_at;
  doc["carrier_size"] = report.carrier_size;
  doc["structure_after_witness"] = verdict(report.forward_then_back);
  doc["witness_after_structure"] = verdict(report.back_then_forward);
  return dump(doc);
}

std::string to_text(const DatalogReport& report) {
  std::ostringstream out;
  if (report.trace) {
    out << "trace:\n";
    for (std::size_t i = 0; i < report.trace->deltas.size(); ++i) {
      out << "  iteration " << i + 1 << " delta:";
      if (report.trace->deltas[i].empty()) out << " (none)";
      for (const std::string& atom : report.trace->deltas[i])
        out << " " << atom;
      out << "\n";
    }
    out << "  note: " << report.trace->note << "\n";
  }
  out << "least model (" << report.model.size() << " atoms, "
      << report.iterations << " productive iterations):\n";
  for (const std::string& atom : report.model) out << atom << "\n";
  if (report.semi_naive_agrees)
    out << "semi-naive agreement: " << verdict(*report.semi_naive_agrees)
        << "\n";
  if (report.leastness)
    out << "leastness (" << report.leastness->subsets_checked << " subsets, "
        << report.leastness->fixed_points
        << " fixed points): " << verdict(report.leastness->least) << "\n";
  return out.str();
}

std::string to_json(const DatalogReport& report) {
  ordered_json doc;
  doc["command"] = "datalog";
  doc["model"] = report.model;
  doc["model_size"] = report.model.size();
  doc["iterations"] = report.iterations;
  if (report.trace) {
    doc["trace"] = {{"deltas", report.trace->deltas},
                    {"note", report.trace->note}};
  } else {
    doc["trace"] = nullptr;
  }
  doc["semi_naive_agreement"] =
      report.semi_naive_agrees ? ordered_json(verdict(*report.semi_naive_agrees))
                               : ordered_json(nullptr);
  if (report.leastness) {
    doc["leastness"] = {{"subsets_checked", report.leastness->subsets_checked},
                        {"fixed_points", report.leastness->fixed_points},
                        {"status", verdict(report.leastness->least)}};
  } else {
    doc["leastness"] = nullptr;
  }
  return dump(doc);
}

std::string to_text(const TermsReport& report) {
  std::ostringstream out;
  out << "functor: " << report.functor << "\n";
  out << "terms up to depth " << report.depth << " (" << report.terms.size()
      << "):\n";
  for (const std::string& term : report.terms) out << term << "\n";
  if (report.with_algebra) {
    out << "evaluation:\n";
    for (const auto& [term, value] : report.evaluations)
      out << "  " << term << " -> " << value << "\n";
    if (report.recursion_equations_hold)
      out << "recursion equations: "
          << verdict(*report.recursion_equations_hold) << "\n";
  }
  return out.str();
}

std::string to_json(const TermsReport& report) {
  ordered_json doc;
  doc["command"] = "terms";
  doc["functor"] = report.functor;
  doc["depth"] = report.depth;
  doc["terms"] = report.terms;
  doc["evaluation"] = report.with_algebra
                          ? mapping_json(report.evaluations)
                          : ordered_json(nullptr);
  doc["recursion_equations"] = report.recursion_equations_hold
                                   ? ordered_json(verdict(
                                         *report.recursion_equations_hold))
                                   : ordered_json(nullptr);
  return dump(doc);
}

}  // namespace mufix
