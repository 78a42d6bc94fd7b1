#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "picseq/algebra/extension.hpp"
#include "picseq/bimodule/bimodule.hpp"

namespace picseq::cli {

struct AlgebraSpec {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::array<long long, 4>> mul;  // (i, j, k, c): b_i b_j += c b_k
};

/// An extra bimodule for ad-hoc queries; actions are one matrix per basis
/// element of the ring it is over.
struct BimoduleSpec {
  std::string name;
  std::string over;  // "R" or "S"
  int dim = 0;
  std::vector<std::vector<std::vector<long long>>> left;
  std::vector<std::vector<std::vector<long long>>> right;
};

struct MapSpec {
  std::string name;
  std::string source;
  std::string target;
  std::string linearity;  // "left", "right" or "bilinear"
  std::vector<std::vector<long long>> matrix;
};

struct Fixture {
  int version = 1;
  std::string name;
  std::optional<std::string> description;
  int p = 0;
  AlgebraSpec s;
  std::vector<std::vector<long long>> local_units;
  std::vector<std::vector<long long>> r_basis;
  std::vector<BimoduleSpec> bimodules;
  std::vector<MapSpec> maps;
};

/// Strict parse: unknown keys, missing keys, wrong types and coefficients
/// outside [0, p) raise Error{Parse} with the line and key. `origin` prefixes
/// messages.
Fixture parse_fixture_text(const std::string& text, const std::string& origin = "<fixture>");
Fixture parse_fixture(const std::filesystem::path& path);

/// Sorted keys, no insignificant whitespace.
std::string canonical_dump(const Fixture& f);

/// Builds S and R ⊆ S. Throws Error{Validation} listing every problem when
/// the algebra or the extension fails validation.
algebra::RingExtension build_extension(const Fixture& f);

/// Checks the optional bimodules (actions are module structures) and maps
/// (endpoints exist, declared linearity holds). "R" and "S" name the regular
/// bimodules.
algebra::ValidationReport check_extras(const Fixture& f, const bimodule::ExtensionModules& v);

}  // namespace picseq::cli
