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

#ifndef GSP_ERRORS_HPP_
#define GSP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsp {

// Bad arguments to an operation (unknown ids, overlapping sets, infeasible
// inputs) are reported as std::domain_error.

/// An exhaustive search would exceed an enumeration cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap_name, std::size_t limit, std::size_t requested)
      : std::runtime_error(cap_name + " cap exceeded: " +
                           std::to_string(requested) + " > " +
                           std::to_string(limit)),
        cap_name_(std::move(cap_name)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t limit() const { return limit_; }
  std::size_t requested() const { return requested_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::size_t requested_;
};

/// Malformed input document. The message carries the position or JSON path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration limits, in number of ground elements.
struct Caps {
  std::size_t feasibility = 20;  // solutions, feasibility, closures, greedy
  std::size_t family = 16;       // full family materialisation
  std::size_t certificate = 12;  // all-orders certificate reconstruction

  // Hard ceiling imposed by ElementSet's width and table sizes.
  static constexpr std::size_t kCeiling = 24;

  /// Defaults overridden by GSP_FEASIBILITY_CAP, GSP_FAMILY_CAP and
  /// GSP_CERTIFICATE_CAP when set.
  static Caps from_env();
};

inline void require_cap(const char* name, std::size_t limit, std::size_t n) {
  if (n > limit) throw ResourceError(name, limit, n);
}

}  // namespace gsp

#endif  // GSP_ERRORS_HPP_
