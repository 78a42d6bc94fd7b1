#include "picseq/cli/run.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "picseq/cli/fixture.hpp"
#include "picseq/error.hpp"
#include "picseq/extgroups/workbench.hpp"
#include "picseq/sequences/diagram.hpp"
#include "picseq/sequences/report.hpp"

namespace picseq::cli {

namespace {

struct Loaded {
  Fixture fixture;
  algebra::RingExtension ext;
};

Loaded load(const std::string& path) {
  Fixture f = parse_fixture(path);
  algebra::RingExtension ext = build_extension(f);
  return {std::move(f), std::move(ext)};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Validation, "cannot write " + path);
  file << text;
}

std::string format_subspace(const algebra::Algebra& s, const exactla::Subspace& x) {
  std::string out = "span{";
  auto basis = x.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : "") + s.format(basis[i]);
  return out + "}";
}

std::string format_matrix(const exactla::Mat& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    out << "    [";
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << "]\n";
  }
  return out.str();
}

int cmd_check(const std::string& path, std::ostream& out) {
  Loaded l = load(path);
  bimodule::ExtensionModules v = bimodule::make_extension_modules(l.ext);
  algebra::ValidationReport extras = check_extras(l.fixture, v);
  if (!extras.ok) {
    std::string msg = l.fixture.name + ": validation failed";
    for (const auto& pr : extras.problems) msg += "\n  " + pr;
    throw Error(ErrorKind::Validation, msg);
  }
  out << "OK " << l.fixture.name << ": p = " << l.fixture.p << ", dim S = " << l.ext.S->dim()
      << ", dim R = " << l.ext.R->dim() << ", local units = " << l.ext.S->local_units().size()
      << ", bimodules = " << l.fixture.bimodules.size() << ", maps = " << l.fixture.maps.size() << "\n";
  return kExitOk;
}

int cmd_groups(const std::string& which, const std::string& path, std::ostream& out) {
  Loaded l = load(path);
  extgroups::Workbench wb(l.ext);
  const algebra::Algebra& s = *l.ext.S;
  if (which == "inv") {
    const auto& inv = wb.inv();
    out << "Inv(R|S): order " << inv.group.order() << "\n";
    for (const auto& k : inv.group.elements()) {
      const auto& e = inv.at(k);
      out << "  X = " << format_subspace(s, e.x) << "  inverse " << format_subspace(s, e.y) << "\n";
    }
    return kExitOk;
  }
  const extgroups::FiniteGroup* g = nullptr;
  const extgroups::MapGroup* maps = nullptr;
  if (which == "aut-sr") {
    maps = &wb.aut_sr();
    g = &maps->group;
  } else if (which == "aut-rrings") {
    maps = &wb.aut_rrings();
    g = &maps->group;
  } else if (which == "ker-d") {
    maps = &wb.aut_sr();
    g = &wb.base_kernel().kernel;
  } else {
    maps = &wb.aut_sr();
    g = &wb.induced_kernel().kernel;
  }
  out << which << ": order " << g->order() << "\n";
  for (const auto& k : g->elements()) {
    out << "  element\n" << format_matrix(maps->at(k));
  }
  return kExitOk;
}

int cmd_verify(const std::string& which, const std::string& path, const std::string& report_path,
               const std::string& format, std::ostream& out) {
  Loaded l = load(path);
  extgroups::Workbench wb(l.ext);
  std::vector<sequences::SequenceReport> reports;
  if (which == "all") {
    for (int n = 1; n <= 4; ++n) reports.push_back(sequences::run_sequence(n, wb, l.fixture.name));
  } else {
    reports.push_back(sequences::run_sequence(std::stoi(which), wb, l.fixture.name));
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (format == "json") {
    out << sequences::to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << sequences::to_text(r);
  }
  if (!report_path.empty()) write_file(report_path, sequences::to_json(reports).dump(2) + "\n");
  return pass ? kExitOk : kExitVerdictFailure;
}

int cmd_diagram(const std::string& path, const std::string& dot_path, std::ostream& out) {
  Loaded l = load(path);
  extgroups::Workbench wb(l.ext);
  sequences::Diagram d = sequences::build_diagram(wb);
  out << sequences::to_text(d);
  if (dot_path == "-") {
    out << sequences::to_dot(d, l.fixture.name);
  } else if (!dot_path.empty()) {
    write_file(dot_path, sequences::to_dot(d, l.fixture.name));
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groups and exact sequences of a ring extension with local units", "picseq"};
  app.require_subcommand(1);

  std::string fixture;
  std::string which;
  std::string seq = "all";
  std::string report;
  std::string format = "text";
  std::string dot;

  auto* check = app.add_subcommand("check", "parse and validate a fixture");
  check->add_option("fixture", fixture, "fixture file")->required();

  auto* groups = app.add_subcommand("groups", "list the elements of one group");
  groups->add_option("--which", which, "group to list")
      ->required()
      ->check(CLI::IsMember({"inv", "aut-sr", "aut-rrings", "ker-d", "ker-hat"}));
  groups->add_option("fixture", fixture, "fixture file")->required();

  auto* verify = app.add_subcommand("verify-seq", "verify exactness of the sequences");
  verify->add_option("--n", seq, "sequence number or all")->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
  verify->add_option("fixture", fixture, "fixture file")->required();
  verify->add_option("--report", report, "write the JSON report to this file");
  verify->add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  auto* diagram = app.add_subcommand("diagram", "print the diagram of the four sequences");
  diagram->add_option("fixture", fixture, "fixture file")->required();
  diagram->add_option("--dot", dot, "write a dot graph to this file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(fixture, out);
    if (*groups) return cmd_groups(which, fixture, out);
    if (*verify) return cmd_verify(seq, fixture, report, format, out);
    if (*diagram) return cmd_diagram(fixture, dot, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace picseq::cli
