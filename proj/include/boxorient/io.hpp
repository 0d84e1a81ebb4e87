#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "boxorient/oracle.hpp"
#include "boxorient/verify.hpp"

namespace boxorient {

using Json = nlohmann::ordered_json;

struct ParsedGraph {
  UndirectedGraph graph;
  std::optional<int> root;
};

/// Parses the text graph format:
///   graph <n> <m>
///   root <id>        (optional)
///   <u> <v>          (m lines)
/// Errors carry the offending line number in their message.
ParsedGraph parse_graph_file(const std::string& text);

std::string format_graph_file(const UndirectedGraph& g,
                              std::optional<int> root = std::nullopt);

/// DOT document with grid position hints and one color per rule tag.
/// Byte-stable for a fixed orientation.
std::string export_dot(const OrientedProduct& oriented);

/// A pipeline run bundled with its report document (schema 1). certified is
/// false when the lemma sweep found violations; bound violations throw
/// instead, since they disprove the construction.
struct PipelineResult {
  OrientedProduct oriented;
  DiameterReport diameter;
  Json report;
  bool certified = true;
};

PipelineResult run_orient_trees(const UndirectedGraph& tree1,
                                std::optional<int> root1,
                                const UndirectedGraph& tree2,
                                std::optional<int> root2);
PipelineResult run_orient_cycles(int m, int n);
PipelineResult run_orient_general(const UndirectedGraph& g,
                                  const UndirectedGraph& h);
Json run_bruteforce(const UndirectedGraph& g, int max_edges);

struct VerifyOutcome {
  bool matched = false;
  std::string mismatch;  // first differing JSON path, empty when matched
};

/// Re-runs the pipeline recorded in a report document and compares every
/// field of the regenerated document against the stored one.
VerifyOutcome verify_report(const Json& document);

int cli_main(int argc, char** argv);

}  // namespace boxorient
