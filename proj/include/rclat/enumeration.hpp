#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rclat/canon.hpp"
#include "rclat/lattice.hpp"
#include "rclat/parallel.hpp"

namespace rclat {

using BigCount = boost::multiprecision::cpp_int;

class EnumerationError : public std::invalid_argument {
 public:
  enum class Kind { InvalidRange, TooSmall };

  EnumerationError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// ---------------------------------------------------------------------------
// Partition arithmetic

/// Number of partitions of n into exactly k positive parts. Memoized in a
/// process-wide table that grows on demand and is safe to read concurrently.
BigCount partition_count(int n, int k);

/// Every partition of n into exactly k positive parts, parts non-decreasing,
/// partitions in lexicographic order.
std::vector<std::vector<int>> partitions_into(int n, int k);

/// Lower bounds for the slots of a composition.
struct SlotBounds {
  std::vector<int> bounds;
};

/// Forward range over all u with u[i] >= bounds[i] and sum(u) == total, in
/// lexicographic order. Empty when infeasible; a single empty vector when both
/// total and the bound list are zero/empty.
class Compositions {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = const std::vector<int>&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class Compositions;
    iterator(const Compositions* owner, bool done);

    const Compositions* owner_ = nullptr;
    std::vector<int> current_;
    bool done_ = true;
  };

  Compositions(int total, SlotBounds bounds) : total_(total), bounds_(std::move(bounds.bounds)) {}

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

  std::vector<std::vector<int>> to_vector() const { return {begin(), end()}; }

 private:
  int total_;
  std::vector<int> bounds_;
};

inline Compositions compositions_with_bounds(int total, SlotBounds bounds) {
  return Compositions(total, std::move(bounds));
}

// ---------------------------------------------------------------------------
// Basic blocks

/// A basic block in B_r(k): reducibles x_1 < ... < x_r and a multiset of
/// adjunct pairs (i, j), 1 <= i < j <= r.
struct BasicBlockCode {
  int r = 0;
  std::map<std::pair<int, int>, int> pairs;

  int k() const;
  int m() const;
  int p() const;
  int l() const { return r - m() - 1; }
  /// r + m + k, the size of the basic block itself.
  int size() const;

  /// Consecutive pairs (i, i+1) present, ascending.
  std::vector<std::pair<int, int>> m_pairs() const;
  /// Non-consecutive pairs present, ascending.
  std::vector<std::pair<int, int>> p_pairs() const;
  /// Lower index i of every consecutive pair (i, i+1) not present, ascending.
  std::vector<int> gaps() const;

  /// Every index 1..r is an endpoint and every multiplicity is positive.
  bool valid() const;

  std::string to_string() const;

  friend bool operator==(const BasicBlockCode&, const BasicBlockCode&) = default;
};

/// m-slots take bound m_i + 1, p-slots p_i, gap slots 0; slot order is m-slots
/// ascending by pair, then p-slots, then gaps by position.
SlotBounds slot_bounds(const BasicBlockCode& code);

/// Chain lengths for every slot of a code: an m-slot lists m_i + 1 lengths
/// (the first one stays on the base chain), a p-slot lists p_i lengths and a
/// gap slot lists exactly one length, possibly zero.
using SlotFill = std::vector<std::vector<int>>;

/// Builds the block described by a code and a slot fill. The base chain is
/// numbered first, bottom to top, followed by the attached chains in slot order.
Lattice expand_code(const BasicBlockCode& code, const SlotFill& fill);

/// The basic block itself: every chain of length one, every gap empty.
Lattice basic_block_lattice(const BasicBlockCode& code);

struct BasicBlock {
  BasicBlockCode code;
  Lattice lattice;
  CanonKey key;
};

struct BasicBlockFamily {
  int r = 0;
  int k = 0;
  std::vector<BasicBlock> blocks;
  /// Codes dropped because their block was isomorphic to an earlier one.
  std::size_t collisions = 0;
};

/// Exhaustive search for B_r(k) over multisets of k pairs covering 1..r, with
/// canonical-form deduplication. Codes whose block has more than `max_size`
/// elements are pruned from the search. Throws InvalidRange unless k >= 1 and
/// 2 <= r <= 2k.
BasicBlockFamily gen_basic_blocks(int r, int k, Exec exec = Exec::parallel,
                                  int max_size = std::numeric_limits<int>::max());

/// Cached gen_basic_blocks().
std::shared_ptr<const BasicBlockFamily> basic_block_family(
    int r, int k, int max_size = std::numeric_limits<int>::max());

// ---------------------------------------------------------------------------
// Counting

/// |B(n; B, k, r)|: maximal blocks on n elements whose basic block is `code`.
/// Throws TooSmall when n < code.size().
BigCount count_blocks_for_basic(int n, const BasicBlockCode& code);

/// Same sum with caller-supplied slot bounds.
BigCount count_blocks_for_basic(int n, const BasicBlockCode& code, const SlotBounds& bounds);

/// count(n, k, r) of RC maximal blocks; plugged into the roll-ups below.
using BlockCounter = std::function<BigCount(int n, int k, int r)>;

/// |B(n, k, r)|. Requires k >= 1, 2 <= r <= 2k, n >= k + r.
BigCount count_blocks(int n, int k, int r, Exec exec = Exec::parallel);

/// |B(n, k)| = sum over feasible r. Requires k >= 1, n >= k + 3.
BigCount count_blocks_nullity(int n, int k, const BlockCounter& blocks = {});

/// |L(n, k)| = sum_{i=0}^{n-k-3} (i+1) |B(n-i, k)|. Requires k >= 1, n >= k + 3.
BigCount count_rc_lattices(int n, int k, const BlockCounter& blocks = {});

/// |L(n)| = 1 + sum_{k=1}^{n-3} |L(n, k)|. Requires n >= 1.
BigCount count_rc_total(int n, const BlockCounter& blocks = {});

// ---------------------------------------------------------------------------
// Generation

struct EnumeratedLattice {
  Lattice lattice;
  int k = 0;
  int r = 0;
  int below = 0;
  int above = 0;
  CanonKey basic_block_key;
};

/// All maximal blocks on n elements with basic block `code`, one per
/// isomorphism class. Throws TooSmall when n < code.size().
std::vector<Lattice> gen_blocks_for_basic(int n, const BasicBlockCode& code,
                                          Exec exec = Exec::parallel);

/// All RC maximal blocks in B(n, k, r). Same preconditions as count_blocks().
std::vector<EnumeratedLattice> enumerate_blocks(int n, int k, int r, Exec exec = Exec::parallel);

/// All RC lattices on n elements with nullity k, optionally restricted to r
/// reducibles (r <= 0 means any). Same preconditions as count_rc_lattices().
std::vector<EnumeratedLattice> enumerate_rc_lattices(int n, int k, int r = 0,
                                                     Exec exec = Exec::parallel);

}  // namespace rclat
