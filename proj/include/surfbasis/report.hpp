#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfbasis/basis.hpp"
#include "surfbasis/embedding.hpp"

namespace surfbasis {

struct ReportCycle {
  std::vector<std::string> edges;  ///< edge labels from the instance
  Weight weight = 0;
  std::string signature;  ///< '0'/'1' string, bit 0 first
  bool forced = false;
};

struct Verdict {
  std::string check;
  std::string status;  ///< "pass", "fail" or "skipped"
  std::string detail;
};

struct RunReport {
  std::string command;
  TopoStats stats;
  /// |T|, |C|, |L| of the decomposition (computed on the punctured graph when b = 0).
  std::size_t tree_edges = 0;
  std::size_t coforest_edges = 0;
  std::size_t leftover_edges = 0;
  std::vector<ReportCycle> cycles;
  Weight total_weight = 0;
  std::vector<std::pair<std::string, double>> timings;
  std::vector<Verdict> verdicts;

  bool operator==(const RunReport& other) const;
  bool verified() const;
};

enum class BasisKind { Cycle, Homology };

/// Stats and decomposition sizes of `g`, with no basis.
RunReport info_report(const EmbeddedGraph& g);

/// Report for a computed basis; signatures are taken on result.graph.
RunReport basis_report(const EmbeddedGraph& input, const BasisResult& result, BasisKind kind);

/// Checks that the cycles are even subgraphs with full signature rank and,
/// when the oracle can enumerate the instance, that the total weight is
/// optimal. Appends verdicts to the report.
void verify_basis(const BasisResult& result, BasisKind kind, RunReport& report);

// Structured format, one record per line:
//
//   report <command>
//   stat <key> <value>                 n m faces boundary euler_char ...
//   decomposition <|T|> <|C|> <|L|>
//   cycle <weight> <forced> <signature|-> <edge>...
//   total <weight>
//   timing <phase> <seconds>
//   verify <check> <status> [detail...]
//   end
std::string write_structured(const RunReport& report);
/// Throws InputError on malformed input.
RunReport parse_structured(const std::string& text);

std::string write_text(const RunReport& report);

}  // namespace surfbasis
