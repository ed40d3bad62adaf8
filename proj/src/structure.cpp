#include "rclat/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rclat {

namespace {

std::string pair_text(int a, int b) {
  std::ostringstream msg;
  msg << "(" << a << "," << b << ")";
  return msg.str();
}

int local_index(const std::vector<int>& ids, int id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) throw std::logic_error("id not present in sublattice");
  return static_cast<int>(it - ids.begin());
}

std::vector<int> to_local(const std::vector<int>& ids, std::span<const int> chain) {
  std::vector<int> out;
  out.reserve(chain.size());
  for (int id : chain) out.push_back(local_index(ids, id));
  return out;
}

// Lexicographically least saturated chain from lo up to hi, endpoints included.
std::vector<int> saturated_chain(const Poset& p, int lo, int hi) {
  std::vector<int> out{lo};
  while (out.back() != hi) {
    for (int up : p.upper_covers(out.back())) {
      if (p.leq(up, hi)) {
        out.push_back(up);
        break;
      }
    }
  }
  return out;
}

// Places x on the step chain that carries the cover a ≺ b of the smaller
// lattice; x then sits between a and b.
void absorb(std::vector<AdjunctStep>& steps, int x, int a, int b) {
  for (auto& step : steps) {
    auto& c = step.chain;
    if (step.a == a && c.front() == b) {
      c.insert(c.begin(), x);
      return;
    }
    if (c.back() == a && step.b == b) {
      c.push_back(x);
      return;
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] == a && c[i + 1] == b) {
        c.insert(c.begin() + static_cast<long>(i) + 1, x);
        return;
      }
    }
  }
  throw std::logic_error("no step chain carries the cover " + pair_text(a, b));
}

// One level of the induction: `l` is the sublattice on the ascending original
// ids `ids`, `chain` a maximal chain of it in original ids.
AdjunctDecomposition decompose(const Lattice& l, const std::vector<int>& ids,
                               std::vector<int> chain) {
  if (l.size() == 1) return {std::move(chain), {}};

  const auto& p = l.poset();
  int x = -1;
  for (int v = 0; v < l.size(); ++v) {
    if (is_doubly_irreducible(p, v)) {
      x = v;
      break;
    }
  }
  if (x < 0) throw std::logic_error("dismantlable lattice without a doubly irreducible element");

  const int x_id = ids[x];
  std::vector<int> rest_ids;
  rest_ids.reserve(ids.size() - 1);
  for (int id : ids)
    if (id != x_id) rest_ids.push_back(id);
  std::vector<int> keep;
  for (int v = 0; v < l.size(); ++v)
    if (v != x) keep.push_back(v);
  const Lattice rest = sublattice(l, keep);

  auto at = std::find(chain.begin(), chain.end(), x_id);
  if (at != chain.end()) {
    std::vector<int> shorter = chain;
    shorter.erase(shorter.begin() + (at - chain.begin()));
    if (is_maximal_chain(rest, to_local(rest_ids, shorter))) {
      auto d = decompose(rest, rest_ids, std::move(shorter));
      d.c0 = std::move(chain);
      return d;
    }
    // x sits strictly inside the chain and a ≺ b is not a cover once x is
    // gone: reroute the base chain through another maximal chain of [a, b].
    const int a_id = *(at - 1);
    const int b_id = *(at + 1);
    const auto detour_local =
        saturated_chain(rest.poset(), local_index(rest_ids, a_id), local_index(rest_ids, b_id));
    std::vector<int> interior;
    for (std::size_t i = 1; i + 1 < detour_local.size(); ++i)
      interior.push_back(rest_ids[detour_local[i]]);
    std::vector<int> rerouted(chain.begin(), at);
    rerouted.insert(rerouted.end(), interior.begin(), interior.end());
    rerouted.insert(rerouted.end(), at + 1, chain.end());
    auto d = decompose(rest, rest_ids, std::move(rerouted));
    d.c0 = std::move(chain);
    d.steps.insert(d.steps.begin(), AdjunctStep{std::move(interior), a_id, b_id});
    return d;
  }

  auto d = decompose(rest, rest_ids, std::move(chain));
  const int a_id = ids[p.lower_covers(x).front()];
  const int b_id = ids[p.upper_covers(x).front()];
  if (!rest.poset().covered_by(local_index(rest_ids, a_id), local_index(rest_ids, b_id))) {
    d.steps.push_back(AdjunctStep{{x_id}, a_id, b_id});
  } else {
    absorb(d.steps, x_id, a_id, b_id);
  }
  return d;
}

}  // namespace

Lattice adjunct(const Lattice& l1, const Lattice& l2, int a, int b) {
  const int n1 = l1.size();
  if (a < 0 || b < 0 || a >= n1 || b >= n1 || !l1.poset().less(a, b))
    throw StructureError(StructureError::Kind::InvalidPair,
                         "adjunct pair " + pair_text(a, b) + " is not ordered a < b");
  if (l1.poset().covered_by(a, b))
    throw StructureError(StructureError::Kind::InvalidPair,
                         "adjunct pair " + pair_text(a, b) + " is a cover");
  std::vector<Cover> covers = l1.poset().covers();
  for (auto [lo, hi] : l2.poset().covers()) covers.emplace_back(lo + n1, hi + n1);
  covers.emplace_back(a, l2.bottom() + n1);
  covers.emplace_back(l2.top() + n1, b);
  auto l = as_lattice(poset_from_covers(n1 + l2.size(), covers));
  if (l.edge_count() != l1.edge_count() + l2.edge_count() + 2)
    throw std::logic_error("adjunct edge identity violated");
  return l;
}

AdjunctDecomposition adjunct_decompose(const Lattice& l, std::span<const int> chain) {
  if (!is_maximal_chain(l, chain))
    throw StructureError(StructureError::Kind::NotMaximalChain, "not a maximal chain");
  if (!is_dismantlable(l).dismantlable)
    throw StructureError(StructureError::Kind::NotDismantlable, "lattice is not dismantlable");
  std::vector<int> ids(l.size());
  for (int i = 0; i < l.size(); ++i) ids[i] = i;
  return decompose(l, ids, std::vector<int>(chain.begin(), chain.end()));
}

Lattice reassemble(const AdjunctDecomposition& d) {
  if (d.c0.empty()) throw std::invalid_argument("empty base chain");
  std::map<int, int> position;
  for (int id : d.c0)
    if (!position.emplace(id, static_cast<int>(position.size())).second)
      throw std::invalid_argument("base chain repeats an id");
  Lattice acc = chain_lattice(static_cast<int>(d.c0.size()));
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& step = d.steps[i];
    const int index = static_cast<int>(i);
    auto a = position.find(step.a), b = position.find(step.b);
    if (step.chain.empty() || a == position.end() || b == position.end())
      throw StructureError(StructureError::Kind::InvalidPair,
                           "step " + std::to_string(i) + " references an absent element", index);
    try {
      acc = adjunct(acc, chain_lattice(static_cast<int>(step.chain.size())), a->second, b->second);
    } catch (const StructureError& e) {
      throw StructureError(StructureError::Kind::InvalidPair,
                           "step " + std::to_string(i) + ": " + e.what(), index);
    }
    for (int id : step.chain)
      if (!position.emplace(id, static_cast<int>(position.size())).second)
        throw StructureError(StructureError::Kind::InvalidPair,
                             "step " + std::to_string(i) + " reuses id " + std::to_string(id),
                             index);
  }
  return acc;
}

std::vector<int> retractible_elements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    if (is_reducible(p, x)) continue;
    if (p.lower_covers(x).empty() || p.upper_covers(x).empty()) {
      out.push_back(x);
      continue;
    }
    const int y = p.lower_covers(x).front();
    const int z = p.upper_covers(x).front();
    if (!is_reducible(p, y) || !is_reducible(p, z)) {
      out.push_back(x);
      continue;
    }
    bool detour = false;
    for (int w : p.upper_covers(y))
      if (w != x && p.leq(w, z)) detour = true;
    if (!detour) out.push_back(x);
  }
  return out;
}

namespace {

int pick(const std::vector<int>& candidates, std::mt19937_64* shuffle) {
  if (!shuffle) return candidates.front();
  std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
  return candidates[dist(*shuffle)];
}

void drop(Retract& r, int victim) {
  r.poset = without(r.poset, victim);
  r.ids.erase(r.ids.begin() + victim);
}

// Retracts in place; ids keep pointing at the original input.
void retract(Retract& r, std::mt19937_64* shuffle) {
  while (true) {
    std::vector<int> candidates;
    for (int x : retractible_elements(r.poset))
      if (r.poset.lower_covers(x).size() == 1 && r.poset.upper_covers(x).size() == 1)
        candidates.push_back(x);
    if (candidates.empty()) return;
    drop(r, pick(candidates, shuffle));
  }
}

}  // namespace

Retract basic_retract(const Poset& p, std::mt19937_64* shuffle) {
  Retract r{p, {}};
  r.ids.resize(p.size());
  for (int i = 0; i < p.size(); ++i) r.ids[i] = i;
  retract(r, shuffle);
  return r;
}

LatticeRetract basic_block_of(const Lattice& l, std::mt19937_64* shuffle) {
  Retract r = basic_retract(l.poset(), shuffle);
  while (true) {
    std::vector<int> pendant;
    for (int x = 0; x < r.poset.size(); ++x)
      if (r.poset.lower_covers(x).size() + r.poset.upper_covers(x).size() == 1) pendant.push_back(x);
    if (pendant.empty()) break;
    drop(r, pick(pendant, shuffle));
    retract(r, shuffle);
  }

  LatticeRetract out{as_lattice(r.poset), std::move(r.ids)};
  std::vector<int> red_before = classify_elements(l).red;
  std::vector<int> red_after;
  for (int x : classify_elements(out.lattice).red) red_after.push_back(out.ids[x]);
  if (red_before != red_after || nullity(out.lattice) != nullity(l))
    throw std::logic_error("basic block changed the reducible set or the nullity");
  return out;
}

bool is_basic_block(const Lattice& b) {
  if (b.size() == 1) return true;
  if (!is_block(b)) return false;
  const int eta = nullity(b);
  for (int x : classify_elements(b).irr) {
    const Poset smaller = without(b.poset(), x);
    if (!try_lattice(smaller) || nullity(smaller) != eta - 1) return false;
  }
  return true;
}

BlockParams chbb_params(const Lattice& b) {
  if (b.size() < 4 || !is_basic_block(b))
    throw StructureError(StructureError::Kind::NotBasicBlock, "not a basic block on >= 4 elements");
  if (!is_rc(b)) throw StructureError(StructureError::Kind::NotRC, "reducible elements not comparable");

  const auto& p = b.poset();
  const auto classes = classify_elements(b);
  std::vector<int> red = classes.red;
  std::sort(red.begin(), red.end(),
            [&](int x, int y) { return p.down_set(x).count() < p.down_set(y).count(); });

  std::vector<int> c0{red.front()};
  for (std::size_t i = 0; i + 1 < red.size(); ++i) {
    auto seg = saturated_chain(p, red[i], red[i + 1]);
    c0.insert(c0.end(), seg.begin() + 1, seg.end());
  }
  const auto d = adjunct_decompose(b, c0);

  std::map<int, int> index;
  for (std::size_t i = 0; i < red.size(); ++i) index[red[i]] = static_cast<int>(i) + 1;
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& step : d.steps) {
    if (step.chain.size() != 1)
      throw std::logic_error("basic block decomposition has a step chain longer than one");
    if (!index.count(step.a) || !index.count(step.b))
      throw std::logic_error("adjunct pair endpoint is not reducible");
    ++multiplicity[{index[step.a], index[step.b]}];
  }

  BlockParams bp;
  bp.n = b.size();
  bp.r = static_cast<int>(red.size());
  bp.k = static_cast<int>(d.steps.size());
  for (auto [pair, mult] : multiplicity) {
    if (pair.second == pair.first + 1) {
      bp.m_pairs.push_back(pair);
      bp.m_vec.push_back(mult);
    } else {
      bp.p_pairs.push_back(pair);
      bp.p_vec.push_back(mult);
    }
  }
  bp.m = static_cast<int>(bp.m_pairs.size());
  bp.p = static_cast<int>(bp.p_pairs.size());
  bp.l = bp.r - bp.m - 1;

  if (bp.k != nullity(b) || static_cast<int>(classes.irr.size()) != bp.k + bp.m ||
      static_cast<int>(c0.size()) != bp.r + bp.m || bp.n != bp.r + bp.m + bp.k || bp.l < 0)
    throw std::logic_error("basic block parameters violate n = r + m + k");
  return bp;
}

}  // namespace rclat
