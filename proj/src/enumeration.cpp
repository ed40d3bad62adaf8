#include "rclat/enumeration.hpp"

#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "rclat/structure.hpp"

namespace rclat {

int BasicBlockCode::k() const {
  int k = 0;
  for (const auto& [pair, mult] : pairs) k += mult;
  return k;
}

int BasicBlockCode::m() const { return static_cast<int>(m_pairs().size()); }
int BasicBlockCode::p() const { return static_cast<int>(p_pairs().size()); }
int BasicBlockCode::size() const { return r + m() + k(); }

std::vector<std::pair<int, int>> BasicBlockCode::m_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [pair, mult] : pairs)
    if (pair.second == pair.first + 1) out.push_back(pair);
  return out;
}

std::vector<std::pair<int, int>> BasicBlockCode::p_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [pair, mult] : pairs)
    if (pair.second > pair.first + 1) out.push_back(pair);
  return out;
}

std::vector<int> BasicBlockCode::gaps() const {
  std::vector<int> out;
  for (int i = 1; i < r; ++i)
    if (!pairs.count({i, i + 1})) out.push_back(i);
  return out;
}

bool BasicBlockCode::valid() const {
  if (r < 2 || pairs.empty()) return false;
  std::vector<bool> hit(r + 1, false);
  for (const auto& [pair, mult] : pairs) {
    auto [i, j] = pair;
    if (mult < 1 || i < 1 || j > r || i >= j) return false;
    hit[i] = hit[j] = true;
  }
  for (int i = 1; i <= r; ++i)
    if (!hit[i]) return false;
  return true;
}

std::string BasicBlockCode::to_string() const {
  std::ostringstream out;
  out << "r=" << r << " {";
  bool first = true;
  for (const auto& [pair, mult] : pairs) {
    if (!first) out << ", ";
    first = false;
    out << "(" << pair.first << "," << pair.second << ")";
    if (mult > 1) out << "x" << mult;
  }
  out << "}";
  return out.str();
}

SlotBounds slot_bounds(const BasicBlockCode& code) {
  SlotBounds sb;
  for (auto pair : code.m_pairs()) sb.bounds.push_back(code.pairs.at(pair) + 1);
  for (auto pair : code.p_pairs()) sb.bounds.push_back(code.pairs.at(pair));
  for (std::size_t g = 0; g < code.gaps().size(); ++g) sb.bounds.push_back(0);
  return sb;
}

Lattice expand_code(const BasicBlockCode& code, const SlotFill& fill) {
  if (!code.valid()) throw std::invalid_argument("invalid basic block code " + code.to_string());
  const auto m_pairs = code.m_pairs();
  const auto p_pairs = code.p_pairs();
  const auto gaps = code.gaps();
  if (fill.size() != m_pairs.size() + p_pairs.size() + gaps.size())
    throw std::invalid_argument("slot fill has the wrong number of slots");

  // Chain length sitting on the base chain between x_i and x_{i+1}.
  std::vector<int> base_segment(code.r + 1, 0);
  std::size_t slot = 0;
  for (auto [i, j] : m_pairs) {
    const auto& parts = fill[slot++];
    if (static_cast<int>(parts.size()) != code.pairs.at({i, j}) + 1)
      throw std::invalid_argument("m-slot has the wrong number of chains");
    base_segment[i] = parts.front();
  }
  slot += p_pairs.size();
  for (int i : gaps) {
    const auto& parts = fill[slot++];
    if (parts.size() != 1 || parts.front() < 0)
      throw std::invalid_argument("gap slot must hold one non-negative length");
    base_segment[i] = parts.front();
  }

  std::vector<Cover> covers;
  std::vector<int> x(code.r + 1);
  int next = 0;
  x[1] = next++;
  for (int i = 1; i < code.r; ++i) {
    int prev = x[i];
    for (int t = 0; t < base_segment[i]; ++t) {
      covers.emplace_back(prev, next);
      prev = next++;
    }
    x[i + 1] = next++;
    covers.emplace_back(prev, x[i + 1]);
  }

  auto attach = [&](int lo, int hi, int length) {
    if (length < 1) throw std::invalid_argument("attached chain must be non-empty");
    int prev = lo;
    for (int t = 0; t < length; ++t) {
      covers.emplace_back(prev, next);
      prev = next++;
    }
    covers.emplace_back(prev, hi);
  };
  slot = 0;
  for (auto [i, j] : m_pairs) {
    const auto& parts = fill[slot++];
    if (parts.front() < 1) throw std::invalid_argument("m-slot base segment must be non-empty");
    for (std::size_t c = 1; c < parts.size(); ++c) attach(x[i], x[j], parts[c]);
  }
  for (auto [i, j] : p_pairs) {
    const auto& parts = fill[slot++];
    if (static_cast<int>(parts.size()) != code.pairs.at({i, j}))
      throw std::invalid_argument("p-slot has the wrong number of chains");
    for (int len : parts) attach(x[i], x[j], len);
  }
  return as_lattice(poset_from_covers(next, covers));
}

Lattice basic_block_lattice(const BasicBlockCode& code) {
  SlotFill fill;
  for (auto pair : code.m_pairs()) fill.emplace_back(code.pairs.at(pair) + 1, 1);
  for (auto pair : code.p_pairs()) fill.emplace_back(code.pairs.at(pair), 1);
  for (std::size_t g = 0; g < code.gaps().size(); ++g) fill.push_back({0});
  return expand_code(code, fill);
}

namespace {

std::string range_text(int n, int k, int r) {
  std::ostringstream msg;
  msg << "(n=" << n << ", k=" << k << ", r=" << r << ")";
  return msg.str();
}

void require_block_range(int n, int k, int r) {
  if (k < 1 || r < 2 || r > 2 * k || n < k + r)
    throw EnumerationError(EnumerationError::Kind::InvalidRange,
                           "need k >= 1, 2 <= r <= 2k, n >= k + r; got " + range_text(n, k, r));
}

void require_nullity_range(int n, int k) {
  if (k < 1 || n < k + 3) {
    std::ostringstream msg;
    msg << "need k >= 1 and n >= k + 3; got (n=" << n << ", k=" << k << ")";
    throw EnumerationError(EnumerationError::Kind::InvalidRange, msg.str());
  }
}

// Multisets of k pairs over 1..r, chosen in non-decreasing pair order, that
// cover every index and keep r + m + k within max_size.
class CodeSearch {
 public:
  CodeSearch(int r, int k, int max_size) : r_(r), k_(k), max_size_(max_size), hit_(r + 1, 0) {
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) pairs_.emplace_back(i, j);
  }

  std::vector<BasicBlockCode> run() {
    dfs(0, 0, 0);
    return std::move(out_);
  }

 private:
  void dfs(std::size_t from, int picked, int consecutive) {
    if (r_ + consecutive + k_ > max_size_) return;
    if (uncovered_ > 2 * (k_ - picked)) return;
    if (picked == k_) {
      if (uncovered_ == 0) out_.push_back(current_);
      return;
    }
    for (std::size_t idx = from; idx < pairs_.size(); ++idx) {
      const auto pair = pairs_[idx];
      const bool fresh_consecutive =
          pair.second == pair.first + 1 && !current_.pairs.count(pair);
      ++current_.pairs[pair];
      mark(pair.first, +1);
      mark(pair.second, +1);
      dfs(idx, picked + 1, consecutive + (fresh_consecutive ? 1 : 0));
      mark(pair.first, -1);
      mark(pair.second, -1);
      if (--current_.pairs[pair] == 0) current_.pairs.erase(pair);
    }
  }

  void mark(int i, int delta) {
    if (delta > 0 && hit_[i]++ == 0) --uncovered_;
    if (delta < 0 && --hit_[i] == 0) ++uncovered_;
  }

  int r_, k_, max_size_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> hit_;
  int uncovered_ = r_;
  BasicBlockCode current_{r_, {}};
  std::vector<BasicBlockCode> out_;
};

}  // namespace

BasicBlockFamily gen_basic_blocks(int r, int k, Exec exec, int max_size) {
  if (k < 1 || r < 2 || r > 2 * k)
    throw EnumerationError(EnumerationError::Kind::InvalidRange,
                           "need k >= 1 and 2 <= r <= 2k; got (r=" + std::to_string(r) +
                               ", k=" + std::to_string(k) + ")");
  auto codes = CodeSearch(r, k, max_size).run();

  std::vector<BasicBlock> built(codes.size());
  for_each_index(exec, codes.size(), [&](std::size_t i) {
    Lattice l = basic_block_lattice(codes[i]);
    if (!is_basic_block(l) || !is_rc(l) || nullity(l) != k ||
        static_cast<int>(classify_elements(l).red.size()) != r)
      throw std::logic_error("code " + codes[i].to_string() + " does not build a basic block in B_r(k)");
    CanonKey key = canon_key(l.poset());
    built[i] = BasicBlock{std::move(codes[i]), std::move(l), std::move(key)};
  });

  BasicBlockFamily family{r, k, {}, 0};
  std::set<CanonKey> seen;
  for (auto& b : built) {
    if (!seen.insert(b.key).second) {
      ++family.collisions;
      continue;
    }
    family.blocks.push_back(std::move(b));
  }
  return family;
}

std::shared_ptr<const BasicBlockFamily> basic_block_family(int r, int k, int max_size) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const BasicBlockFamily>> cache;
  const auto key = std::make_tuple(r, k, max_size);
  {
    std::lock_guard lock{mutex};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto family = std::make_shared<const BasicBlockFamily>(gen_basic_blocks(r, k, Exec::serial, max_size));
  std::lock_guard lock{mutex};
  return cache.emplace(key, std::move(family)).first->second;
}

BigCount count_blocks_for_basic(int n, const BasicBlockCode& code) {
  return count_blocks_for_basic(n, code, slot_bounds(code));
}

BigCount count_blocks_for_basic(int n, const BasicBlockCode& code, const SlotBounds& bounds) {
  if (!code.valid()) throw std::invalid_argument("invalid basic block code " + code.to_string());
  if (n < code.size())
    throw EnumerationError(EnumerationError::Kind::TooSmall,
                           "n=" + std::to_string(n) + " is below the basic block size " +
                               std::to_string(code.size()));
  std::vector<int> parts;
  for (auto pair : code.m_pairs()) parts.push_back(code.pairs.at(pair) + 1);
  for (auto pair : code.p_pairs()) parts.push_back(code.pairs.at(pair));

  BigCount total = 0;
  for (const auto& u : compositions_with_bounds(n - code.r, bounds)) {
    BigCount term = 1;
    for (std::size_t i = 0; i < parts.size() && term != 0; ++i) term *= partition_count(u[i], parts[i]);
    total += term;
  }
  return total;
}

BigCount count_blocks(int n, int k, int r, Exec exec) {
  require_block_range(n, k, r);
  const auto family = basic_block_family(r, k, n);
  std::vector<BigCount> terms(family->blocks.size());
  for_each_index(exec, terms.size(), [&](std::size_t i) {
    terms[i] = count_blocks_for_basic(n, family->blocks[i].code);
  });
  BigCount total = 0;
  for (const auto& t : terms) total += t;
  return total;
}

BigCount count_blocks_nullity(int n, int k, const BlockCounter& blocks) {
  require_nullity_range(n, k);
  BigCount total = 0;
  for (int r = 2; r <= 2 * k; ++r) {
    if (n < k + r) continue;
    total += blocks ? blocks(n, k, r) : count_blocks(n, k, r);
  }
  return total;
}

BigCount count_rc_lattices(int n, int k, const BlockCounter& blocks) {
  require_nullity_range(n, k);
  BigCount total = 0;
  for (int i = 0; i <= n - k - 3; ++i) total += (i + 1) * count_blocks_nullity(n - i, k, blocks);
  return total;
}

BigCount count_rc_total(int n, const BlockCounter& blocks) {
  if (n < 1) throw EnumerationError(EnumerationError::Kind::InvalidRange, "need n >= 1");
  BigCount total = 1;
  for (int k = 1; k <= n - 3; ++k) total += count_rc_lattices(n, k, blocks);
  return total;
}

namespace {

// Cartesian product of the per-slot partition choices for one composition.
void for_each_fill(const std::vector<std::vector<std::vector<int>>>& choices, SlotFill& fill,
                   std::size_t slot, const std::function<void(const SlotFill&)>& emit) {
  if (slot == choices.size()) {
    emit(fill);
    return;
  }
  for (const auto& option : choices[slot]) {
    fill[slot] = option;
    for_each_fill(choices, fill, slot + 1, emit);
  }
}

}  // namespace

std::vector<Lattice> gen_blocks_for_basic(int n, const BasicBlockCode& code, Exec exec) {
  if (!code.valid()) throw std::invalid_argument("invalid basic block code " + code.to_string());
  if (n < code.size())
    throw EnumerationError(EnumerationError::Kind::TooSmall,
                           "n=" + std::to_string(n) + " is below the basic block size " +
                               std::to_string(code.size()));
  std::vector<int> parts;
  for (auto pair : code.m_pairs()) parts.push_back(code.pairs.at(pair) + 1);
  for (auto pair : code.p_pairs()) parts.push_back(code.pairs.at(pair));

  const auto compositions = compositions_with_bounds(n - code.r, slot_bounds(code)).to_vector();
  std::vector<std::vector<Lattice>> per_composition(compositions.size());
  for_each_index(exec, compositions.size(), [&](std::size_t c) {
    const auto& u = compositions[c];
    std::vector<std::vector<std::vector<int>>> choices(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      choices[i] = i < parts.size() ? partitions_into(u[i], parts[i])
                                    : std::vector<std::vector<int>>{{u[i]}};
    SlotFill fill(u.size());
    for_each_fill(choices, fill, 0,
                  [&](const SlotFill& f) { per_composition[c].push_back(expand_code(code, f)); });
  });

  std::vector<Lattice> out;
  for (auto& batch : per_composition)
    for (auto& l : batch) out.push_back(std::move(l));
  return out;
}

std::vector<EnumeratedLattice> enumerate_blocks(int n, int k, int r, Exec exec) {
  require_block_range(n, k, r);
  std::vector<EnumeratedLattice> out;
  const auto family = basic_block_family(r, k, n);
  for (const auto& basic : family->blocks) {
    for (auto& l : gen_blocks_for_basic(n, basic.code, exec))
      out.push_back(EnumeratedLattice{std::move(l), k, r, 0, 0, basic.key});
  }
  return out;
}

std::vector<EnumeratedLattice> enumerate_rc_lattices(int n, int k, int r, Exec exec) {
  require_nullity_range(n, k);
  std::vector<EnumeratedLattice> out;
  for (int i = 0; i <= n - k - 3; ++i) {
    const int j = n - i;
    for (int rr = 2; rr <= 2 * k; ++rr) {
      if (j < k + rr || (r > 0 && rr != r)) continue;
      for (const auto& block : enumerate_blocks(j, k, rr, exec)) {
        for (int below = 0; below <= i; ++below) {
          out.push_back(EnumeratedLattice{with_tails(block.lattice, below, i - below), k, rr, below,
                                          i - below, block.basic_block_key});
        }
      }
    }
  }
  return out;
}

}  // namespace rclat
