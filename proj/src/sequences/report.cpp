#include "picseq/sequences/report.hpp"

#include <sstream>

namespace picseq::sequences {

using nlohmann::json;

json to_json(const SequenceReport& r) {
  json nodes = json::array();
  for (const Node& n : r.nodes) {
    nodes.push_back({{"name", n.name}, {"order", n.order ? json(*n.order) : json(nullptr)}});
  }
  json verdicts = json::array();
  for (const Verdict& v : r.verdicts) {
    verdicts.push_back({{"position", v.position}, {"pass", v.pass}, {"witnesses", v.witnesses}});
  }
  json checks = json::array();
  for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"fixture", r.fixture}, {"sequence", r.sequence_id}, {"nodes", nodes},
          {"verdicts", verdicts}, {"checks", checks}, {"note", r.note}};
}

json to_json(const std::vector<SequenceReport>& rs) {
  json out = json::array();
  for (const SequenceReport& r : rs) out.push_back(to_json(r));
  return out;
}

std::string to_text(const SequenceReport& r) {
  std::ostringstream out;
  out << (r.pass() ? "PASS" : "FAIL") << " seq" << r.sequence_id;
  if (!r.fixture.empty()) out << " " << r.fixture;
  out << ":";
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const Node& n = r.nodes[i];
    out << (i ? " -> " : " ") << n.name;
    if (n.order && i > 0) out << " [" << *n.order << "]";
  }
  out << "\n";
  for (const Verdict& v : r.verdicts) {
    out << "  exact at " << v.position << ": " << (v.pass ? "yes" : "NO") << "\n";
    for (const std::string& w : v.witnesses) out << "    " << w << "\n";
  }
  for (const Check& c : r.checks) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  if (!r.note.empty()) out << "  note: " << r.note << "\n";
  return out.str();
}

}  // namespace picseq::sequences
