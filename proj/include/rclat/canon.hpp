#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "rclat/poset.hpp"

namespace rclat {

/// Canonical fingerprint of a poset: two posets have equal keys iff they are
/// isomorphic. The bytes are the element count (2 bytes, big-endian) followed
/// by the row-major cover bit-matrix under the canonical relabelling.
struct CanonKey {
  std::string bytes;

  std::string hex() const;
  static CanonKey from_hex(const std::string& hex);

  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
  friend bool operator==(const CanonKey&, const CanonKey&) = default;
};

/// label[v] is the position of element v in the canonical order.
std::vector<int> canonical_labeling(const Poset& p);

CanonKey canon_key(const Poset& p);

/// Relabels element v as label[v].
Poset relabel(const Poset& p, const std::vector<int>& label);

bool is_isomorphic(const Poset& p, const Poset& q);

}  // namespace rclat

template <>
struct std::hash<rclat::CanonKey> {
  std::size_t operator()(const rclat::CanonKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
