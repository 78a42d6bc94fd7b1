#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "picseq/sequences/sequences.hpp"

namespace picseq::sequences {

/// {fixture, sequence, nodes:[{name, order|null}], verdicts:[{position,
/// pass, witnesses}], checks:[{name, pass, detail}], note}.
nlohmann::json to_json(const SequenceReport& r);
nlohmann::json to_json(const std::vector<SequenceReport>& rs);

/// One "PASS seq<n> ..." or "FAIL seq<n> ..." headline followed by indented
/// verdict and check lines.
std::string to_text(const SequenceReport& r);

}  // namespace picseq::sequences
