#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace rclat {

using Bitset = boost::dynamic_bitset<>;

/// A covering pair (lo, hi): lo ≺ hi.
using Cover = std::pair<int, int>;

class PosetError : public std::invalid_argument {
 public:
  enum class Kind { OutOfRange, Duplicate, CycleDetected, NotReduced };

  PosetError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A finite partial order on the elements 0..n-1, stored as its cover digraph
/// together with the up-set and down-set of every element.
///
/// Instances are immutable. The only ways to obtain one are the validating
/// poset_from_covers() and the constructors that derive covers from an order
/// relation (poset_from_order(), induced()), so the cover list is always the
/// transitive reduction of the order.
class Poset {
 public:
  Poset() = default;

  int size() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(covers_.size()); }

  /// Covers sorted lexicographically.
  const std::vector<Cover>& covers() const noexcept { return covers_; }

  std::span<const int> upper_covers(int x) const { return upper_[x]; }
  std::span<const int> lower_covers(int x) const { return lower_[x]; }

  bool leq(int a, int b) const { return up_[a][b]; }
  bool less(int a, int b) const { return a != b && up_[a][b]; }
  bool comparable(int a, int b) const { return up_[a][b] || up_[b][a]; }
  bool covered_by(int a, int b) const;

  /// {y : x <= y}
  const Bitset& up_set(int x) const { return up_[x]; }
  /// {y : y <= x}
  const Bitset& down_set(int x) const { return down_[x]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Length (in covers) of the longest chain ending at / starting from x.
  std::vector<int> heights() const;
  std::vector<int> depths() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  friend Poset poset_from_covers(int n, std::span<const Cover> covers);
  friend Poset poset_from_order(std::vector<Bitset> up);

  void build_adjacency();

  int n_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

/// Builds a poset from its Hasse diagram. Input that is not already a
/// transitively reduced DAG is rejected, never repaired.
Poset poset_from_covers(int n, std::span<const Cover> covers);

inline Poset poset_from_covers(int n, std::initializer_list<Cover> covers) {
  return poset_from_covers(n, std::span<const Cover>(covers.begin(), covers.size()));
}

/// Builds a poset from its reflexive order matrix (`up[a][b]` iff a <= b).
/// The matrix must already be a partial order.
Poset poset_from_order(std::vector<Bitset> up);

/// The subposet induced on `keep`; element i of the result is keep[i].
Poset induced(const Poset& p, std::span<const int> keep);

/// The subposet with element x deleted; ids above x shift down by one.
Poset without(const Poset& p, int x);

Poset chain_poset(int n);

/// Ordinal sum: every element of `lower` sits below every element of `upper`,
/// whose ids are shifted by lower.size().
Poset direct_sum(const Poset& lower, const Poset& upper);

/// |covers| - n + (connected components of the cover graph).
int nullity(const Poset& p);

/// Searches for an induced crown on 2n' >= 6 elements. Returns the witness ids
/// sorted ascending, or nullopt when the poset is crown-free.
std::optional<std::vector<int>> contains_crown(const Poset& p);

}  // namespace rclat
