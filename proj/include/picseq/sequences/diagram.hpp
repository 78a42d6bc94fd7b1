#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picseq/extgroups/workbench.hpp"

namespace picseq::sequences {

struct DiagramNode {
  std::string id;
  std::string label;
  std::optional<std::size_t> order;  // empty for Picard groups
  bool partial = false;              // order counts only the generated classes
};

struct DiagramEdge {
  std::string from;
  std::string to;
  std::string label;  // empty for inclusions
};

/// The four sequences overlaid: the ten groups and the twelve maps between
/// them (eight named maps, four kernel inclusions).
struct Diagram {
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
};

Diagram build_diagram(extgroups::Workbench& wb);

std::string to_text(const Diagram& d);
std::string to_dot(const Diagram& d, const std::string& graph_name = "sequences");

}  // namespace picseq::sequences
