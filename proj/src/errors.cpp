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

#include "gsp/errors.hpp"

#include <charconv>
#include <cstdlib>

namespace gsp {

namespace {

void override_from(const char* var, std::size_t& field) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return;
  const std::string text(raw);
  std::size_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument(std::string(var) + ": not a number: " + text);
  }
  if (value > Caps::kCeiling) {
    throw std::invalid_argument(std::string(var) + ": above the ceiling of " +
                                std::to_string(Caps::kCeiling));
  }
  field = value;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  override_from("GSP_FEASIBILITY_CAP", caps.feasibility);
  override_from("GSP_FAMILY_CAP", caps.family);
  override_from("GSP_CERTIFICATE_CAP", caps.certificate);
  return caps;
}

}  // namespace gsp
