#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rclat/lattice.hpp"
#include "rclat/poset.hpp"

namespace rclat::testing {

inline Poset m2() { return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline Poset m3() {
  return poset_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// 0 < a < b < 1 and 0 < c < 1 with a=1, b=2, c=3, top=4.
inline Poset n5() { return poset_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

// Atoms 1,2,3; coatoms 4 = 1v2, 5 = 1v3, 6 = 2v3.
inline Poset b3() {
  return poset_from_covers(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 5},
                               {3, 6}, {4, 7}, {5, 7}, {6, 7}});
}

// x1=1, x2=2 are incomparable meet-reducibles; p=3, q=4, t=5.
inline Poset seven_non_rc() {
  return poset_from_covers(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
}

/// Random order on n elements: each pair i < j is related with probability
/// `density`, then closed transitively. Element ids are shuffled afterwards.
inline Poset random_poset(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) up[i] |= up[j];
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Bitset> shuffled(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (up[i][j]) shuffled[perm[i]].set(perm[j]);
  return poset_from_order(std::move(shuffled));
}

/// Brute force: some permutation maps the order of p onto the order of q.
inline bool brute_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.edge_count() != q.edge_count()) return false;
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (p.leq(a, b) != q.leq(perm[a], perm[b])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace rclat::testing
