#include "picseq/sequences/diagram.hpp"

#include <sstream>

namespace picseq::sequences {

namespace {

std::string order_text(const DiagramNode& n) {
  if (!n.order) return "?";
  return std::to_string(*n.order) + (n.partial ? "+" : "");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Diagram build_diagram(extgroups::Workbench& wb) {
  const auto& aut = wb.aut_sr();
  const auto& kd = wb.base_kernel().kernel;
  const auto& kh = wb.induced_kernel().kernel;
  std::size_t both = 0;
  for (const auto& k : kd.elements()) both += kh.contains(k) ? 1 : 0;
  const auto& cls = wb.classes();
  Diagram d;
  d.nodes = {
      {"one", "1", 1, false},
      {"ker_both", "Ker D ∩ Ker hat", both, false},
      {"ker_d", "Ker D", kd.order(), false},
      {"ker_hat", "Ker hat", kh.order(), false},
      {"aut_sr", "Aut_SR(S)", aut.group.order(), false},
      {"inv", "Inv(R|S)", wb.inv().group.order(), false},
      {"aut_rings", "Aut_R-rings(S)", wb.aut_rrings().group.order(), false},
      {"psr", "P(S/R)", cls.group.order(), true},
      {"pic_r", "Pic(R)", std::nullopt, false},
      {"pic_s", "Pic(S)", std::nullopt, false},
  };
  d.edges = {
      {"ker_both", "ker_d", ""},
      {"ker_both", "ker_hat", ""},
      {"ker_d", "aut_sr", ""},
      {"ker_hat", "aut_sr", ""},
      {"aut_sr", "inv", "D"},
      {"aut_sr", "aut_rings", "hat"},
      {"aut_rings", "pic_s", "[S_-]"},
      {"inv", "pic_r", "[-]"},
      {"inv", "psr", "D'"},
      {"aut_rings", "psr", "E"},
      {"psr", "pic_s", "O_r"},
      {"psr", "pic_r", "O_l"},
  };
  return d;
}

std::string to_text(const Diagram& d) {
  std::ostringstream out;
  out << "nodes\n";
  for (const DiagramNode& n : d.nodes) out << "  " << n.id << "  " << n.label << "  order " << order_text(n) << "\n";
  out << "edges\n";
  for (const DiagramEdge& e : d.edges) {
    out << "  " << e.from << " -> " << e.to << "  " << (e.label.empty() ? "(inclusion)" : e.label) << "\n";
  }
  return out.str();
}

std::string to_dot(const Diagram& d, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=LR;\n";
  for (const DiagramNode& n : d.nodes) {
    out << "  " << n.id << " [label=" << quoted(n.label + "\norder " + order_text(n)) << "];\n";
  }
  for (const DiagramEdge& e : d.edges) {
    out << "  " << e.from << " -> " << e.to;
    if (e.label.empty()) {
      out << " [style=dashed, arrowhead=empty]";
    } else {
      out << " [label=" << quoted(e.label) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace picseq::sequences
