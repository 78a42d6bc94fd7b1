#pragma once

#include <string>

#include "picseq/cli/fixture.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(PICSEQ_FIXTURE_DIR) + "/" + name + ".json";
}

inline picseq::cli::Fixture load_fixture(const std::string& name) {
  return picseq::cli::parse_fixture(fixture_path(name));
}

inline picseq::algebra::RingExtension load_extension(const std::string& name) {
  return picseq::cli::build_extension(load_fixture(name));
}

inline const char* const kAllFixtures[] = {"fix-a", "fix-b", "fix-c", "fix-d"};

}  // namespace testsupport
