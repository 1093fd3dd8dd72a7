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

#ifndef GSP_SRC_UNION_FIND_HPP_
#define GSP_SRC_UNION_FIND_HPP_

#include <cstddef>
#include <numeric>
#include <vector>

namespace gsp::internal {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) {
      parent_[y] = x;
    } else {
      parent_[x] = y;
    }
    --classes_;
    return true;
  }

  std::size_t classes() const { return classes_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t classes_;
};

}  // namespace gsp::internal

#endif  // GSP_SRC_UNION_FIND_HPP_
