#include "rclat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace rclat {

namespace {

std::string describe(const LatticeFailure& w) {
  std::ostringstream msg;
  msg << "elements " << w.x << " and " << w.y << " have no "
      << (w.missing == LatticeFailure::Missing::meet ? "meet" : "join");
  return msg.str();
}

// Greatest element of `bounds` w.r.t. `sets` (down-sets for a meet, up-sets for
// a join), or -1 when no element of `bounds` dominates all the others.
int extremal(const Bitset& bounds, const std::vector<const Bitset*>& sets) {
  int best = -1;
  std::size_t best_count = 0;
  for (auto z = bounds.find_first(); z != Bitset::npos; z = bounds.find_next(z)) {
    const auto c = sets[z]->count();
    if (best < 0 || c > best_count) {
      best = static_cast<int>(z);
      best_count = c;
    }
  }
  if (best < 0 || !bounds.is_subset_of(*sets[best])) return -1;
  return best;
}

}  // namespace

NotALattice::NotALattice(LatticeFailure witness)
    : std::invalid_argument(describe(witness)), witness_(witness) {}

std::optional<Lattice> try_lattice(const Poset& p, LatticeFailure* why) {
  const int n = p.size();
  if (n == 0) {
    if (why) *why = LatticeFailure{};
    return std::nullopt;
  }
  std::vector<const Bitset*> downs(n), ups(n);
  for (int x = 0; x < n; ++x) {
    downs[x] = &p.down_set(x);
    ups[x] = &p.up_set(x);
  }
  Lattice l;
  l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  l.join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const int m = extremal(p.down_set(x) & p.down_set(y), downs);
      if (m < 0) {
        if (why) *why = {x, y, LatticeFailure::Missing::meet};
        return std::nullopt;
      }
      const int j = extremal(p.up_set(x) & p.up_set(y), ups);
      if (j < 0) {
        if (why) *why = {x, y, LatticeFailure::Missing::join};
        return std::nullopt;
      }
      l.meet_[x * n + y] = l.meet_[y * n + x] = m;
      l.join_[x * n + y] = l.join_[y * n + x] = j;
    }
  }
  auto minimal = p.minimal_elements();
  auto maximal = p.maximal_elements();
  l.bottom_ = minimal.front();
  l.top_ = maximal.front();
  l.poset_ = p;
  return l;
}

Lattice as_lattice(const Poset& p) {
  LatticeFailure why;
  auto l = try_lattice(p, &why);
  if (!l) throw NotALattice(why);
  return std::move(*l);
}

Lattice chain_lattice(int n) { return as_lattice(chain_poset(n)); }

Lattice direct_sum(const Lattice& lower, const Lattice& upper) {
  auto sum = as_lattice(direct_sum(lower.poset(), upper.poset()));
  if (sum.edge_count() != lower.edge_count() + upper.edge_count() + 1)
    throw std::logic_error("direct sum edge identity violated");
  return sum;
}

Lattice with_tails(const Lattice& block, int below, int above) {
  if (below == 0 && above == 0) return block;
  if (below == 0) return direct_sum(block, chain_lattice(above));
  if (above == 0) return direct_sum(chain_lattice(below), block);
  return direct_sum(direct_sum(chain_lattice(below), block), chain_lattice(above));
}

Lattice sublattice(const Lattice& l, std::span<const int> keep) {
  return as_lattice(induced(l.poset(), keep));
}

bool is_reducible(const Poset& p, int x) {
  return p.lower_covers(x).size() >= 2 || p.upper_covers(x).size() >= 2;
}

bool is_doubly_irreducible(const Poset& p, int x) { return !is_reducible(p, x); }

ElementClasses classify_elements(const Poset& p) {
  ElementClasses c;
  for (int x = 0; x < p.size(); ++x) {
    if (is_reducible(p, x)) {
      c.red.push_back(x);
      continue;
    }
    c.irr.push_back(x);
    if (p.lower_covers(x).size() == 1 && p.upper_covers(x).size() == 1) c.irr_star.push_back(x);
  }
  return c;
}

int nullity(const Lattice& l) { return nullity(l.poset()); }

bool is_chain(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    if (static_cast<int>(p.up_set(x).count() + p.down_set(x).count()) != p.size() + 1)
      return false;
  return true;
}

bool is_rc(const Lattice& l) {
  const auto red = classify_elements(l).red;
  for (std::size_t i = 0; i < red.size(); ++i)
    for (std::size_t j = i + 1; j < red.size(); ++j)
      if (!l.poset().comparable(red[i], red[j])) return false;
  return true;
}

bool is_block(const Lattice& l) {
  const auto& p = l.poset();
  return p.upper_covers(l.bottom()).size() >= 2 && p.lower_covers(l.top()).size() >= 2;
}

Dismantling is_dismantlable(const Lattice& l) {
  Dismantling result;
  std::vector<int> alive(l.size());
  for (int i = 0; i < l.size(); ++i) alive[i] = i;
  Poset current = l.poset();
  while (alive.size() > 1) {
    int victim = -1;
    for (int x = 0; x < current.size(); ++x) {
      if (is_doubly_irreducible(current, x)) {
        victim = x;
        break;
      }
    }
    if (victim < 0) return result;
    result.removal_order.push_back(alive[victim]);
    alive.erase(alive.begin() + victim);
    current = without(current, victim);
    if (!try_lattice(current))
      throw std::logic_error("removing a doubly irreducible element broke the lattice");
  }
  result.dismantlable = true;
  return result;
}

MaximalBlock maximal_block(const Lattice& l) {
  const auto& p = l.poset();
  if (is_chain(p)) throw ChainInput();
  MaximalBlock mb;
  int lo = l.bottom();
  while (p.upper_covers(lo).size() == 1) {
    lo = p.upper_covers(lo).front();
    ++mb.below;
  }
  int hi = l.top();
  while (p.lower_covers(hi).size() == 1) {
    hi = p.lower_covers(hi).front();
    ++mb.above;
  }
  const Bitset interval = p.up_set(lo) & p.down_set(hi);
  for (auto x = interval.find_first(); x != Bitset::npos; x = interval.find_next(x))
    mb.ids.push_back(static_cast<int>(x));
  mb.block = sublattice(l, mb.ids);
  return mb;
}

std::vector<std::vector<int>> maximal_chains(const Lattice& l) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{l.bottom()};
  const auto& p = l.poset();
  auto walk = [&](auto&& self) -> void {
    const int x = path.back();
    if (x == l.top()) {
      out.push_back(path);
      return;
    }
    for (int hi : p.upper_covers(x)) {
      path.push_back(hi);
      self(self);
      path.pop_back();
    }
  };
  walk(walk);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximal_chain(const Lattice& l, std::span<const int> chain) {
  if (chain.empty() || chain.front() != l.bottom() || chain.back() != l.top()) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] < 0 || chain[i] >= l.size() || !l.poset().covered_by(chain[i], chain[i + 1]))
      return false;
  return true;
}

}  // namespace rclat
