#pragma once

#include "fank/fan.hpp"

#include <string>
#include <vector>

namespace fank {

struct ExampleInfo {
  std::string name;
  std::string summary;
  bool parametric = false;  // takes r >= 1
};

const std::vector<ExampleInfo>& example_registry();
/// Fan file text of a bundled example; throws UnknownExample.
std::string example_text(const std::string& name, long r = 1);
Fan example_fan(const std::string& name, long r = 1);

}  // namespace fank
