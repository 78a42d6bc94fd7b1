#include "picseq/cli/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "picseq/error.hpp"
#include "picseq/exactla/field.hpp"

namespace picseq::cli {

using nlohmann::json;
using exactla::Mat;
using exactla::Residue;
using exactla::Subspace;
using exactla::Vec;

namespace {

class Reader {
 public:
  Reader(const std::string& text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw Error(ErrorKind::Parse, origin_ + ":" + std::to_string(line_of(path)) + ": key '" + path + "': " + msg);
  }

  // Line of the last named key in a dotted path, searching each component
  // after the previous one.
  int line_of(const std::string& path) const {
    std::size_t pos = 0;
    std::size_t found = std::string::npos;
    std::string part;
    std::istringstream in(path);
    while (std::getline(in, part, '.')) {
      std::string name = part.substr(0, part.find('['));
      if (name.empty()) continue;
      std::size_t at = text_.find("\"" + name + "\"", pos);
      if (at == std::string::npos) break;
      found = at;
      pos = at + 1;
    }
    if (found == std::string::npos) return 1;
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(found), '\n'));
  }

  void only_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed,
                 const std::set<std::string>& required) const {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!allowed.count(it.key())) fail(join(path, it.key()), "unknown key");
    }
    for (const std::string& k : required) {
      if (!obj.contains(k)) fail(join(path, k), "missing required key");
    }
  }

  long long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  std::vector<long long> residues(const json& j, const std::string& path, int len, int p) const {
    if (!j.is_array()) fail(path, "expected an array");
    if (static_cast<int>(j.size()) != len) {
      fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    }
    std::vector<long long> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      long long c = integer(j[i], path + "[" + std::to_string(i) + "]");
      if (c < 0 || c >= p) fail(path + "[" + std::to_string(i) + "]", "coefficient outside [0, p)");
      out.push_back(c);
    }
    return out;
  }

  std::vector<std::vector<long long>> matrix(const json& j, const std::string& path, int rows, int cols,
                                             int p) const {
    if (!j.is_array()) fail(path, "expected an array of rows");
    if (static_cast<int>(j.size()) != rows) {
      fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    }
    std::vector<std::vector<long long>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(residues(j[i], path + "[" + std::to_string(i) + "]", cols, p));
    return out;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

 private:
  const std::string& text_;
  std::string origin_;
};

int ring_dim(const Fixture& f, const std::string& over) {
  return over == "S" ? f.s.dim : static_cast<int>(f.r_basis.size());
}

json matrix_json(const std::vector<std::vector<long long>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

}  // namespace

Fixture parse_fixture_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto end = text.begin() + static_cast<long>(std::min<std::size_t>(e.byte, text.size()));
    int line = 1 + static_cast<int>(std::count(text.begin(), end, '\n'));
    throw Error(ErrorKind::Parse, origin + ":" + std::to_string(line) + ": malformed input: " + e.what());
  }
  Reader rd(text, origin);
  rd.only_keys(doc, "", {"version", "name", "description", "p", "S", "local_units", "R_basis", "bimodules", "maps"},
               {"version", "name", "p", "S", "local_units", "R_basis"});
  Fixture f;
  f.version = static_cast<int>(rd.integer(doc["version"], "version"));
  if (f.version != 1) rd.fail("version", "unsupported version " + std::to_string(f.version));
  f.name = rd.string(doc["name"], "name");
  if (doc.contains("description")) f.description = rd.string(doc["description"], "description");
  long long p = rd.integer(doc["p"], "p");
  if (p < 2 || p > 97 || !exactla::is_supported_prime(static_cast<int>(p))) rd.fail("p", "not a prime in [2, 97]");
  f.p = static_cast<int>(p);

  const json& s = doc["S"];
  rd.only_keys(s, "S", {"dim", "basis", "mul"}, {"dim", "basis", "mul"});
  long long dim = rd.integer(s["dim"], "S.dim");
  if (dim < 1 || dim > 64) rd.fail("S.dim", "dimension must lie in [1, 64]");
  f.s.dim = static_cast<int>(dim);
  if (!s["basis"].is_array() || static_cast<int>(s["basis"].size()) != f.s.dim) {
    rd.fail("S.basis", "expected " + std::to_string(f.s.dim) + " basis names");
  }
  for (std::size_t i = 0; i < s["basis"].size(); ++i) {
    f.s.basis.push_back(rd.string(s["basis"][i], "S.basis[" + std::to_string(i) + "]"));
  }
  if (!s["mul"].is_array()) rd.fail("S.mul", "expected an array of [i, j, k, c]");
  std::set<std::array<long long, 3>> seen;
  for (std::size_t t = 0; t < s["mul"].size(); ++t) {
    std::string path = "S.mul[" + std::to_string(t) + "]";
    const json& q = s["mul"][t];
    if (!q.is_array() || q.size() != 4) rd.fail(path, "expected [i, j, k, c]");
    std::array<long long, 4> e{};
    for (int c = 0; c < 4; ++c) e[static_cast<std::size_t>(c)] = rd.integer(q[static_cast<std::size_t>(c)], path);
    for (int c = 0; c < 3; ++c) {
      if (e[static_cast<std::size_t>(c)] < 0 || e[static_cast<std::size_t>(c)] >= f.s.dim) {
        rd.fail(path, "basis index out of range");
      }
    }
    if (e[3] < 0 || e[3] >= f.p) rd.fail(path, "coefficient outside [0, p)");
    if (!seen.insert({e[0], e[1], e[2]}).second) rd.fail(path, "repeated (i, j, k)");
    f.s.mul.push_back(e);
  }

  if (!doc["local_units"].is_array() || doc["local_units"].empty()) {
    rd.fail("local_units", "expected a non-empty array of vectors");
  }
  for (std::size_t i = 0; i < doc["local_units"].size(); ++i) {
    f.local_units.push_back(rd.residues(doc["local_units"][i], "local_units[" + std::to_string(i) + "]", f.s.dim, f.p));
  }
  if (!doc["R_basis"].is_array() || doc["R_basis"].empty()) rd.fail("R_basis", "expected a non-empty array of vectors");
  for (std::size_t i = 0; i < doc["R_basis"].size(); ++i) {
    f.r_basis.push_back(rd.residues(doc["R_basis"][i], "R_basis[" + std::to_string(i) + "]", f.s.dim, f.p));
  }

  if (doc.contains("bimodules")) {
    if (!doc["bimodules"].is_array()) rd.fail("bimodules", "expected an array");
    for (std::size_t i = 0; i < doc["bimodules"].size(); ++i) {
      std::string path = "bimodules[" + std::to_string(i) + "]";
      const json& b = doc["bimodules"][i];
      rd.only_keys(b, path, {"name", "over", "dim", "left", "right"}, {"name", "over", "dim", "left", "right"});
      BimoduleSpec entry;
      entry.name = rd.string(b["name"], path + ".name");
      entry.over = rd.string(b["over"], path + ".over");
      if (entry.over != "R" && entry.over != "S") rd.fail(path + ".over", "expected \"R\" or \"S\"");
      long long d = rd.integer(b["dim"], path + ".dim");
      if (d < 0 || d > 256) rd.fail(path + ".dim", "dimension must lie in [0, 256]");
      entry.dim = static_cast<int>(d);
      int n = ring_dim(f, entry.over);
      for (const char* side : {"left", "right"}) {
        std::string sp = path + "." + side;
        const json& acts = b[side];
        if (!acts.is_array() || static_cast<int>(acts.size()) != n) {
          rd.fail(sp, "expected one matrix per basis element (" + std::to_string(n) + ")");
        }
        auto& dst = std::string(side) == "left" ? entry.left : entry.right;
        for (std::size_t k = 0; k < acts.size(); ++k) {
          dst.push_back(rd.matrix(acts[k], sp + "[" + std::to_string(k) + "]", entry.dim, entry.dim, f.p));
        }
      }
      f.bimodules.push_back(std::move(entry));
    }
  }
  if (doc.contains("maps")) {
    if (!doc["maps"].is_array()) rd.fail("maps", "expected an array");
    for (std::size_t i = 0; i < doc["maps"].size(); ++i) {
      std::string path = "maps[" + std::to_string(i) + "]";
      const json& m = doc["maps"][i];
      rd.only_keys(m, path, {"name", "source", "target", "linearity", "matrix"},
                   {"name", "source", "target", "linearity", "matrix"});
      MapSpec entry;
      entry.name = rd.string(m["name"], path + ".name");
      entry.source = rd.string(m["source"], path + ".source");
      entry.target = rd.string(m["target"], path + ".target");
      entry.linearity = rd.string(m["linearity"], path + ".linearity");
      if (entry.linearity != "left" && entry.linearity != "right" && entry.linearity != "bilinear") {
        rd.fail(path + ".linearity", "expected \"left\", \"right\" or \"bilinear\"");
      }
      if (!m["matrix"].is_array()) rd.fail(path + ".matrix", "expected an array of rows");
      for (std::size_t r = 0; r < m["matrix"].size(); ++r) {
        const json& row = m["matrix"][r];
        int cols = row.is_array() ? static_cast<int>(row.size()) : -1;
        entry.matrix.push_back(rd.residues(row, path + ".matrix[" + std::to_string(r) + "]", cols, f.p));
      }
      f.maps.push_back(std::move(entry));
    }
  }
  return f;
}

Fixture parse_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture_text(buf.str(), path.string());
}

std::string canonical_dump(const Fixture& f) {
  json doc;
  doc["version"] = f.version;
  doc["name"] = f.name;
  if (f.description) doc["description"] = *f.description;
  doc["p"] = f.p;
  json mul = json::array();
  for (const auto& e : f.s.mul) mul.push_back(e);
  doc["S"] = {{"dim", f.s.dim}, {"basis", f.s.basis}, {"mul", mul}};
  doc["local_units"] = matrix_json(f.local_units);
  doc["R_basis"] = matrix_json(f.r_basis);
  if (!f.bimodules.empty()) {
    json arr = json::array();
    for (const BimoduleSpec& b : f.bimodules) {
      json left = json::array();
      json right = json::array();
      for (const auto& m : b.left) left.push_back(matrix_json(m));
      for (const auto& m : b.right) right.push_back(matrix_json(m));
      arr.push_back({{"name", b.name}, {"over", b.over}, {"dim", b.dim}, {"left", left}, {"right", right}});
    }
    doc["bimodules"] = arr;
  }
  if (!f.maps.empty()) {
    json arr = json::array();
    for (const MapSpec& m : f.maps) {
      arr.push_back({{"name", m.name},
                     {"source", m.source},
                     {"target", m.target},
                     {"linearity", m.linearity},
                     {"matrix", matrix_json(m.matrix)}});
    }
    doc["maps"] = arr;
  }
  return doc.dump();
}

algebra::RingExtension build_extension(const Fixture& f) {
  const int n = f.s.dim;
  std::vector<Vec> products(static_cast<std::size_t>(n * n), exactla::zero_vec(n));
  for (const auto& e : f.s.mul) {
    products[static_cast<std::size_t>(e[0] * n + e[1])][static_cast<std::size_t>(e[2])] =
        static_cast<Residue>(e[3]);
  }
  auto to_vec = [](const std::vector<long long>& v) {
    Vec out;
    for (long long x : v) out.push_back(static_cast<Residue>(x));
    return out;
  };
  std::vector<Vec> units;
  for (const auto& u : f.local_units) units.push_back(to_vec(u));
  auto s = std::make_shared<const algebra::Algebra>(f.p, f.s.basis, products, units);
  algebra::ValidationReport rep = algebra::validate_algebra(*s);
  if (rep.ok) {
    std::vector<Vec> rb;
    for (const auto& r : f.r_basis) rb.push_back(to_vec(r));
    algebra::RingExtension ext = algebra::make_extension(s, Subspace::span(rb, n, f.p));
    if (static_cast<int>(f.r_basis.size()) != ext.r_space.dim()) {
      rep.fail("R_basis is linearly dependent");
    }
    algebra::ValidationReport er = algebra::validate_extension(ext);
    for (auto& msg : er.problems) rep.fail(msg);
    if (rep.ok) return ext;
  }
  std::string msg = f.name + ": validation failed";
  for (const auto& pr : rep.problems) msg += "\n  " + pr;
  throw Error(ErrorKind::Validation, msg);
}

algebra::ValidationReport check_extras(const Fixture& f, const bimodule::ExtensionModules& v) {
  algebra::ValidationReport rep;
  std::map<std::string, bimodule::Bimodule> named;
  named["R"] = v.r_reg;
  named["S"] = v.s_reg;
  for (const BimoduleSpec& b : f.bimodules) {
    if (named.count(b.name)) {
      rep.fail("bimodule " + b.name + ": duplicate name");
      continue;
    }
    bimodule::Bimodule m;
    m.left = b.over == "S" ? v.ext.S : v.ext.R;
    m.right = m.left;
    m.dim = b.dim;
    for (const auto& a : b.left) m.left_act.push_back(Mat::from_rows(a, f.p, b.dim));
    for (const auto& a : b.right) m.right_act.push_back(Mat::from_rows(a, f.p, b.dim));
    algebra::ValidationReport br = bimodule::validate_bimodule(m);
    for (const auto& pr : br.problems) rep.fail("bimodule " + b.name + ": " + pr);
    if (br.ok) named[b.name] = std::move(m);
  }
  for (const MapSpec& m : f.maps) {
    auto src = named.find(m.source);
    auto dst = named.find(m.target);
    if (src == named.end() || dst == named.end()) {
      rep.fail("map " + m.name + ": unknown or invalid endpoint");
      continue;
    }
    if (src->second.left != dst->second.left) {
      rep.fail("map " + m.name + ": endpoints are over different rings");
      continue;
    }
    bool shape = static_cast<int>(m.matrix.size()) == dst->second.dim;
    for (const auto& row : m.matrix) shape = shape && static_cast<int>(row.size()) == src->second.dim;
    if (!shape) {
      rep.fail("map " + m.name + ": matrix must be target dim x source dim");
      continue;
    }
    Mat mat = Mat::from_rows(m.matrix, f.p, src->second.dim);
    bimodule::Linearity lin = m.linearity == "left"    ? bimodule::Linearity::LeftOnly
                              : m.linearity == "right" ? bimodule::Linearity::RightOnly
                                                       : bimodule::Linearity::Bilinear;
    if (!bimodule::is_linear(src->second, dst->second, mat, lin)) {
      rep.fail("map " + m.name + ": not " + m.linearity + "-linear");
    }
  }
  return rep;
}

}  // namespace picseq::cli
