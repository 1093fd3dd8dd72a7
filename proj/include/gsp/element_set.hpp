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

#ifndef GSP_ELEMENT_SET_HPP_
#define GSP_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gsp {

/// A subset of a ground set, stored as one bit per element in ground order.
///
/// Element i of the ground set is bit i. Two sets over the same ground are
/// equal iff their bit patterns are equal, so families of subsets compare
/// exactly and independently of insertion order.
class ElementSet {
 public:
  using Bits = std::uint32_t;
  static constexpr std::size_t kMaxElements = 32;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Bits bits) : bits_(bits) {}

  static constexpr ElementSet singleton(std::size_t i) {
    return ElementSet(Bits{1} << i);
  }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= kMaxElements ? ~Bits{0} : (Bits{1} << n) - 1);
  }
  static constexpr ElementSet of(std::initializer_list<std::size_t> items) {
    ElementSet s;
    for (std::size_t i : items) s.bits_ |= Bits{1} << i;
    return s;
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const {
    return (bits_ >> i) & Bits{1};
  }
  constexpr bool subset_of(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(ElementSet o) const {
    return (bits_ & o.bits_) != 0;
  }
  constexpr ElementSet with(std::size_t i) const {
    return ElementSet(bits_ | (Bits{1} << i));
  }
  constexpr ElementSet without(std::size_t i) const {
    return ElementSet(bits_ & ~(Bits{1} << i));
  }
  // Lowest element; undefined on the empty set.
  constexpr std::size_t front() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (Bits b = bits_; b != 0; b &= b - 1) {
      f(static_cast<std::size_t>(std::countr_zero(b)));
    }
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  Bits bits_ = 0;
};

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// ascending element sequence. Every sorted listing in this library (member
/// lists, golden files, reports) uses this order.
constexpr bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // For equal sizes the lowest differing element decides.
  const ElementSet diff((a.bits() ^ b.bits()));
  return a.contains(diff.front());
}

struct CanonicalLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const {
    return canonical_less(a, b);
  }
};

/// Calls f on every subset of mask, including the empty set and mask itself.
template <typename F>
constexpr void for_each_subset(ElementSet mask, F&& f) {
  ElementSet::Bits s = mask.bits();
  while (true) {
    f(ElementSet(s));
    if (s == 0) break;
    s = (s - 1) & mask.bits();
  }
}

}  // namespace gsp

#endif  // GSP_ELEMENT_SET_HPP_
