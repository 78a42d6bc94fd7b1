#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picseq/extgroups/workbench.hpp"

namespace picseq::sequences {

struct Node {
  std::string name;
  std::optional<std::size_t> order;  // empty for verdict-only Picard nodes
};

/// Exactness at one interior term. Witnesses are element keys of the
/// offending elements.
struct Verdict {
  std::string position;
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// Side conditions verified along the way (homomorphism laws, kernel
/// descriptions, constructive reductions).
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SequenceReport {
  int sequence_id = 0;
  std::string fixture;
  std::vector<Node> nodes;
  std::vector<Verdict> verdicts;
  std::vector<Check> checks;
  std::string note;

  /// Every verdict and every check passes.
  bool pass() const;
};

/// 1 -> Ker D -> Aut_SR(S) -> Inv(R ⊆ S) -> Pic(R).
SequenceReport seq1(extgroups::Workbench& wb, const std::string& fixture = "");
/// 1 -> Ker hat -> Aut_SR(S) -> Aut_R-rings(S) -> Pic(S).
SequenceReport seq2(extgroups::Workbench& wb, const std::string& fixture = "");
/// 1 -> Ker D ∩ Ker hat -> Ker hat -> Inv(R ⊆ S) -> P(S/R) -> Pic(S).
SequenceReport seq3(extgroups::Workbench& wb, const std::string& fixture = "");
/// 1 -> Ker D ∩ Ker hat -> Ker D -> Aut_R-rings(S) -> P(S/R) -> Pic(R).
SequenceReport seq4(extgroups::Workbench& wb, const std::string& fixture = "");

/// Runs sequence n (1..4); throws Error{Validation} for other n.
SequenceReport run_sequence(int n, extgroups::Workbench& wb, const std::string& fixture = "");

}  // namespace picseq::sequences
