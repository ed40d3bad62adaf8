#include "rclat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rclat {

bool Poset::covered_by(int a, int b) const {
  const auto& ups = upper_[a];
  return std::binary_search(ups.begin(), ups.end(), b);
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

namespace {

// Topological order by down-set size: a < b implies |down(a)| < |down(b)|.
std::vector<int> linear_extension(const std::vector<Bitset>& down) {
  std::vector<int> order(down.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return down[a].count() < down[b].count();
  });
  return order;
}

}  // namespace

std::vector<int> Poset::heights() const {
  std::vector<int> h(n_, 0);
  for (int x : linear_extension(down_))
    for (int lo : lower_[x]) h[x] = std::max(h[x], h[lo] + 1);
  return h;
}

std::vector<int> Poset::depths() const {
  std::vector<int> d(n_, 0);
  auto order = linear_extension(down_);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int hi : upper_[*it]) d[*it] = std::max(d[*it], d[hi] + 1);
  return d;
}

void Poset::build_adjacency() {
  std::sort(covers_.begin(), covers_.end());
  upper_.assign(n_, {});
  lower_.assign(n_, {});
  for (auto [a, b] : covers_) {
    upper_[a].push_back(b);
    lower_[b].push_back(a);
  }
  for (auto& v : lower_) std::sort(v.begin(), v.end());
}

Poset poset_from_covers(int n, std::span<const Cover> covers) {
  if (n < 0) throw PosetError(PosetError::Kind::OutOfRange, "negative element count");
  Poset p;
  p.n_ = n;
  p.covers_.assign(covers.begin(), covers.end());
  for (auto [a, b] : p.covers_) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      std::ostringstream msg;
      msg << "cover (" << a << "," << b << ") out of range for n=" << n;
      throw PosetError(PosetError::Kind::OutOfRange, msg.str());
    }
    if (a == b) {
      std::ostringstream msg;
      msg << "self-loop on " << a;
      throw PosetError(PosetError::Kind::CycleDetected, msg.str());
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  if (auto dup = std::adjacent_find(p.covers_.begin(), p.covers_.end());
      dup != p.covers_.end()) {
    std::ostringstream msg;
    msg << "duplicate cover (" << dup->first << "," << dup->second << ")";
    throw PosetError(PosetError::Kind::Duplicate, msg.str());
  }
  p.build_adjacency();

  // Kahn's algorithm; anything left over sits on a cycle.
  std::vector<int> indeg(n), order;
  order.reserve(n);
  for (int x = 0; x < n; ++x) indeg[x] = static_cast<int>(p.lower_[x].size());
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(x);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int hi : p.upper_[order[i]])
      if (--indeg[hi] == 0) order.push_back(hi);
  if (static_cast<int>(order.size()) != n)
    throw PosetError(PosetError::Kind::CycleDetected, "cover digraph has a directed cycle");

  p.up_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    p.up_[x].set(x);
    for (int hi : p.upper_[x]) p.up_[x] |= p.up_[hi];
  }
  p.down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (auto b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b))
      p.down_[b].set(a);

  for (auto [a, b] : p.covers_) {
    for (int c : p.upper_[a]) {
      if (c != b && p.up_[c][b]) {
        std::ostringstream msg;
        msg << "cover (" << a << "," << b << ") is implied via " << c;
        throw PosetError(PosetError::Kind::NotReduced, msg.str());
      }
    }
  }
  return p;
}

Poset poset_from_order(std::vector<Bitset> up) {
  Poset p;
  p.n_ = static_cast<int>(up.size());
  const int n = p.n_;
  p.up_ = std::move(up);
  p.down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (auto b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b))
      p.down_[b].set(a);
  for (int a = 0; a < n; ++a) {
    for (auto b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b)) {
      if (static_cast<int>(b) == a) continue;
      if ((p.up_[a] & p.down_[b]).count() == 2) p.covers_.emplace_back(a, static_cast<int>(b));
    }
  }
  p.build_adjacency();
  return p;
}

Poset induced(const Poset& p, std::span<const int> keep) {
  const int m = static_cast<int>(keep.size());
  std::vector<Bitset> up(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.leq(keep[i], keep[j])) up[i].set(j);
  return poset_from_order(std::move(up));
}

Poset without(const Poset& p, int x) {
  std::vector<int> keep;
  keep.reserve(p.size());
  for (int y = 0; y < p.size(); ++y)
    if (y != x) keep.push_back(y);
  return induced(p, keep);
}

Poset chain_poset(int n) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return poset_from_covers(n, covers);
}

Poset direct_sum(const Poset& lower, const Poset& upper) {
  const int shift = lower.size();
  std::vector<Cover> covers = lower.covers();
  for (auto [a, b] : upper.covers()) covers.emplace_back(a + shift, b + shift);
  for (int top : lower.maximal_elements())
    for (int bot : upper.minimal_elements()) covers.emplace_back(top, bot + shift);
  return poset_from_covers(lower.size() + upper.size(), covers);
}

int nullity(const Poset& p) {
  std::vector<int> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = p.size();
  for (auto [a, b] : p.covers()) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return p.edge_count() - p.size() + components;
}

namespace {

// An induced crown is exactly a chordless cycle of length >= 6 in the
// comparability graph: a vertex lying between its two cycle neighbours would
// force a chord by transitivity, so the cycle alternates minima and maxima.
class CrownSearch {
 public:
  explicit CrownSearch(const Poset& p) : p_(p), n_(p.size()) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < n_; ++s) {
      path_ = {s};
      if (extend(s)) {
        std::sort(path_.begin(), path_.end());
        return path_;
      }
    }
    return std::nullopt;
  }

 private:
  bool adjacent(int a, int b) const { return a != b && p_.comparable(a, b); }

  bool extend(int s) {
    const int last = path_.back();
    for (int w = s + 1; w < n_; ++w) {
      if (!adjacent(last, w)) continue;
      if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i)
        if (adjacent(path_[i], w)) chord = true;
      if (chord) continue;
      if (path_.size() >= 2 && adjacent(s, w)) {
        if (path_.size() + 1 >= 6) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      if (extend(s)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Poset& p_;
  int n_;
  std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> contains_crown(const Poset& p) { return CrownSearch(p).run(); }

}  // namespace rclat
