#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rclat/lattice.hpp"

namespace rclat {

class StructureError : public std::invalid_argument {
 public:
  enum class Kind { InvalidPair, NotDismantlable, NotMaximalChain, NotBasicBlock, NotRC };

  StructureError(Kind kind, const std::string& what, int step = -1)
      : std::invalid_argument(what), kind_(kind), step_(step) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending step index for InvalidPair raised by reassemble(), else -1.
  int step() const noexcept { return step_; }

 private:
  Kind kind_;
  int step_;
};

/// L1 ]^b_a L2: L2 glued strictly between a and b. Ids of l1 are kept, ids of
/// l2 are shifted by l1.size(). Requires a < b and a not covered by b.
Lattice adjunct(const Lattice& l1, const Lattice& l2, int a, int b);

struct AdjunctStep {
  std::vector<int> chain;  // bottom to top
  int a = -1;
  int b = -1;

  friend bool operator==(const AdjunctStep&, const AdjunctStep&) = default;
};

/// c0 ]^{b_1}_{a_1} C_1 ]^{b_2}_{a_2} C_2 ... with every id taken from the
/// decomposed lattice.
struct AdjunctDecomposition {
  std::vector<int> c0;
  std::vector<AdjunctStep> steps;

  friend bool operator==(const AdjunctDecomposition&, const AdjunctDecomposition&) = default;
};

/// Writes a dismantlable lattice as an adjunct of chains whose base is the
/// given maximal chain.
AdjunctDecomposition adjunct_decompose(const Lattice& l, std::span<const int> chain);

/// Folds the adjunct steps over the base chain. Element i of the result is the
/// i-th id in order of appearance (c0 first, then each step chain).
Lattice reassemble(const AdjunctDecomposition& d);

/// Doubly irreducible x for which no reducible y ≺ x ≺ z exist, or for which the
/// only upward cover path from y to z runs through x.
std::vector<int> retractible_elements(const Poset& p);

/// A reduced poset together with the surviving ids of the input.
struct Retract {
  Poset poset;
  std::vector<int> ids;
};

/// Deletes retractible elements with exactly one lower and one upper cover
/// until none remain. With `shuffle` set the victim is drawn at random instead
/// of taking the lowest id.
Retract basic_retract(const Poset& p, std::mt19937_64* shuffle = nullptr);

struct LatticeRetract {
  Lattice lattice;
  std::vector<int> ids;
};

/// Basic retract, then pendant-vertex removal interleaved with further
/// retraction until a fixed point. Chains shrink to a single element.
LatticeRetract basic_block_of(const Lattice& l, std::mt19937_64* shuffle = nullptr);

bool is_basic_block(const Lattice& b);

/// Parameters of an RC basic block read off its decomposition over a maximal
/// chain through every reducible element. Reducibles are numbered 1..r
/// bottom to top; pairs use that numbering.
struct BlockParams {
  int n = 0;
  int r = 0;
  int k = 0;
  int m = 0;
  int p = 0;
  int l = 0;
  std::vector<std::pair<int, int>> m_pairs;
  std::vector<int> m_vec;
  std::vector<std::pair<int, int>> p_pairs;
  std::vector<int> p_vec;
};

BlockParams chbb_params(const Lattice& b);

}  // namespace rclat
