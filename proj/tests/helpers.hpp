// Copyright 2026 The gsp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =============================================================================

#ifndef GSP_TESTS_HELPERS_HPP_
#define GSP_TESTS_HELPERS_HPP_

#include <fstream>
#include <string>
#include <vector>

#include "gsp/family.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"

#ifndef GSP_SOURCE_DIR
#define GSP_SOURCE_DIR "."
#endif

namespace testing {

inline gsp::ElementSet set_of(const gsp::GroundSet& ground,
                              const std::vector<std::string>& names) {
  return ground.subset(names);
}

inline std::string source_path(const std::string& relative) {
  return std::string(GSP_SOURCE_DIR) + "/" + relative;
}

inline gsp::io::Json load_json(const std::string& relative) {
  std::ifstream in(source_path(relative));
  return gsp::io::Json::parse(in);
}

inline gsp::FeasibleFamily golden_family(const std::string& name) {
  return gsp::io::family_from_json(load_json("tests/golden/" + name));
}

}  // namespace testing

#endif  // GSP_TESTS_HELPERS_HPP_
