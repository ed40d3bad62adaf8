#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rclat/poset.hpp"

namespace rclat {

struct LatticeFailure {
  enum class Missing { meet, join };
  int x = -1;
  int y = -1;
  Missing missing = Missing::meet;
};

class NotALattice : public std::invalid_argument {
 public:
  explicit NotALattice(LatticeFailure witness);
  const LatticeFailure& witness() const noexcept { return witness_; }

 private:
  LatticeFailure witness_;
};

/// Thrown by maximal_block() on a chain.
class ChainInput : public std::invalid_argument {
 public:
  ChainInput() : std::invalid_argument("lattice is a chain") {}
};

/// A poset together with its full meet and join tables.
class Lattice {
 public:
  const Poset& poset() const noexcept { return poset_; }
  int size() const noexcept { return poset_.size(); }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }
  int meet(int x, int y) const { return meet_[x * size() + y]; }
  int join(int x, int y) const { return join_[x * size() + y]; }

  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int edge_count() const noexcept { return poset_.edge_count(); }

 private:
  friend std::optional<Lattice> try_lattice(const Poset& p, LatticeFailure* why);

  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
};

/// Returns the lattice, or nullopt with the first pair lacking a meet or join
/// reported through `why`.
std::optional<Lattice> try_lattice(const Poset& p, LatticeFailure* why = nullptr);

/// Throwing variant of try_lattice().
Lattice as_lattice(const Poset& p);

Lattice chain_lattice(int n);
Lattice direct_sum(const Lattice& lower, const Lattice& upper);

/// chain(below) ⊕ block ⊕ chain(above), with an empty chain for a zero count.
Lattice with_tails(const Lattice& block, int below, int above);

/// Sublattice induced on `keep` (ascending ids recommended). Throws
/// NotALattice when the induced subposet is not a lattice.
Lattice sublattice(const Lattice& l, std::span<const int> keep);

struct ElementClasses {
  std::vector<int> irr;       // at most one lower and one upper cover
  std::vector<int> irr_star;  // exactly one lower and one upper cover
  std::vector<int> red;       // two or more lower or upper covers
};

ElementClasses classify_elements(const Poset& p);
inline ElementClasses classify_elements(const Lattice& l) { return classify_elements(l.poset()); }

bool is_reducible(const Poset& p, int x);
bool is_doubly_irreducible(const Poset& p, int x);

int nullity(const Lattice& l);

bool is_chain(const Poset& p);

/// True iff the reducible elements are pairwise comparable.
bool is_rc(const Lattice& l);

bool is_block(const Lattice& l);

struct Dismantling {
  bool dismantlable = false;
  std::vector<int> removal_order;  // ids of the input lattice
};

/// Greedily deletes the lowest-id doubly irreducible element until one element
/// remains or none is removable. Every intermediate stage is re-checked to be a
/// lattice.
Dismantling is_dismantlable(const Lattice& l);

struct MaximalBlock {
  int below = 0;
  Lattice block;
  int above = 0;
  std::vector<int> ids;  // block element i is ids[i] in the input
};

MaximalBlock maximal_block(const Lattice& l);

/// All saturated chains from bottom to top, in lexicographic order.
std::vector<std::vector<int>> maximal_chains(const Lattice& l);

bool is_maximal_chain(const Lattice& l, std::span<const int> chain);

}  // namespace rclat
