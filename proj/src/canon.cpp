#include "rclat/canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace rclat {

std::string CanonKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonKey CanonKey::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex key");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  CanonKey key;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    key.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return key;
}

namespace {

using Coloring = std::vector<int>;

std::string encode(const Poset& p, const std::vector<int>& label) {
  const int n = p.size();
  std::string bytes(2 + (static_cast<std::size_t>(n) * n + 7) / 8, '\0');
  bytes[0] = static_cast<char>((n >> 8) & 0xff);
  bytes[1] = static_cast<char>(n & 0xff);
  for (auto [a, b] : p.covers()) {
    const std::size_t bit = static_cast<std::size_t>(label[a]) * n + label[b];
    bytes[2 + bit / 8] = static_cast<char>(bytes[2 + bit / 8] | (0x80 >> (bit % 8)));
  }
  return bytes;
}

class Canonizer {
 public:
  explicit Canonizer(const Poset& p) : p_(p), n_(p.size()), twin_(n_) {
    // Elements with identical upper and lower cover sets are interchanged by
    // an automorphism; only one of them needs to be individualized per cell.
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> classes;
    for (int v = 0; v < n_; ++v) {
      auto ups = p.upper_covers(v), lows = p.lower_covers(v);
      auto key = std::make_pair(std::vector<int>(ups.begin(), ups.end()),
                                std::vector<int>(lows.begin(), lows.end()));
      twin_[v] = classes.emplace(std::move(key), static_cast<int>(classes.size())).first->second;
    }
  }

  std::vector<int> run() {
    const auto heights = p_.heights();
    const auto depths = p_.depths();
    std::vector<std::tuple<int, int, int, int>> invariant(n_);
    for (int v = 0; v < n_; ++v)
      invariant[v] = {static_cast<int>(p_.lower_covers(v).size()),
                      static_cast<int>(p_.upper_covers(v).size()), heights[v], depths[v]};
    Coloring color = rank(invariant);
    search(std::move(color));
    return best_label_;
  }

 private:
  template <class T>
  static Coloring rank(const std::vector<T>& sig) {
    std::vector<T> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Coloring c(sig.size());
    for (std::size_t v = 0; v < sig.size(); ++v)
      c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return c;
  }

  static int cell_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  // Colour refinement on the cover digraph until the partition is equitable.
  void refine(Coloring& color) const {
    int cells = cell_count(color);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int> ups, lows;
        for (int u : p_.upper_covers(v)) ups.push_back(color[u]);
        for (int u : p_.lower_covers(v)) lows.push_back(color[u]);
        std::sort(ups.begin(), ups.end());
        std::sort(lows.begin(), lows.end());
        auto& s = sig[v];
        s.push_back(color[v]);
        s.push_back(static_cast<int>(ups.size()));
        s.insert(s.end(), ups.begin(), ups.end());
        s.insert(s.end(), lows.begin(), lows.end());
      }
      Coloring next = rank(sig);
      const int next_cells = cell_count(next);
      color = std::move(next);
      if (next_cells == cells) return;
      cells = next_cells;
    }
  }

  void search(Coloring color) {
    refine(color);
    const int cells = cell_count(color);
    if (cells == n_) {
      auto cert = encode(p_, color);
      if (best_label_.empty() || cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_label_ = color;
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : color) ++size[c];
    const int target = static_cast<int>(
        std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (std::find(tried.begin(), tried.end(), twin_[v]) != tried.end()) continue;
      tried.push_back(twin_[v]);
      Coloring child(n_);
      for (int u = 0; u < n_; ++u) child[u] = 2 * color[u] + ((u == v || color[u] != target) ? 0 : 1);
      search(rank(child));
    }
  }

  const Poset& p_;
  int n_;
  std::vector<int> twin_;
  std::string best_cert_;
  std::vector<int> best_label_;
};

}  // namespace

std::vector<int> canonical_labeling(const Poset& p) {
  if (p.size() == 0) return {};
  return Canonizer(p).run();
}

CanonKey canon_key(const Poset& p) { return CanonKey{encode(p, canonical_labeling(p))}; }

Poset relabel(const Poset& p, const std::vector<int>& label) {
  std::vector<Cover> covers;
  covers.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) covers.emplace_back(label[a], label[b]);
  return poset_from_covers(p.size(), covers);
}

bool is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.edge_count() != q.edge_count()) return false;
  return canon_key(p) == canon_key(q);
}

}  // namespace rclat
