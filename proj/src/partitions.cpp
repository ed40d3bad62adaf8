#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "rclat/enumeration.hpp"

namespace rclat {

namespace {

class PartitionTable {
 public:
  BigCount get(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("partition_count of a negative argument");
    if (k > n) return (n == 0 && k == 0) ? 1 : 0;
    {
      std::shared_lock lock{mutex_};
      if (n < static_cast<int>(table_.size())) return table_[n][k];
    }
    std::unique_lock lock{mutex_};
    grow(n);
    return table_[n][k];
  }

 private:
  // table_[n][k] for 0 <= k <= n.
  void grow(int n) {
    for (int i = static_cast<int>(table_.size()); i <= n; ++i) {
      std::vector<BigCount> row(i + 1, 0);
      if (i == 0) row[0] = 1;
      for (int k = 1; k <= i; ++k) {
        BigCount v = table_[i - 1].size() > static_cast<std::size_t>(k - 1) ? table_[i - 1][k - 1] : 0;
        if (i - k >= k) v += table_[i - k][k];
        row[k] = v;
      }
      table_.push_back(std::move(row));
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<BigCount>> table_;
};

PartitionTable& partition_table() {
  static PartitionTable table;
  return table;
}

void partitions_rec(int remaining, int parts, int min_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (int part = min_part; part * parts <= remaining; ++part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, parts - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BigCount partition_count(int n, int k) { return partition_table().get(n, k); }

std::vector<std::vector<int>> partitions_into(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, k, 1, prefix, out);
  return out;
}

Compositions::iterator::iterator(const Compositions* owner, bool done) : owner_(owner), done_(done) {
  if (done_) return;
  const auto& b = owner_->bounds_;
  const long floor = std::accumulate(b.begin(), b.end(), 0L);
  if (b.empty()) {
    done_ = owner_->total_ != 0;
    return;
  }
  if (floor > owner_->total_) {
    done_ = true;
    return;
  }
  current_ = b;
  current_.back() += static_cast<int>(owner_->total_ - floor);
}

Compositions::iterator& Compositions::iterator::operator++() {
  const auto& b = owner_->bounds_;
  const int len = static_cast<int>(current_.size());
  int excess = 0;
  for (int i = len - 2; i >= 0; --i) {
    excess += current_[i + 1] - b[i + 1];
    if (excess > 0) {
      ++current_[i];
      for (int j = i + 1; j < len; ++j) current_[j] = b[j];
      current_[len - 1] += excess - 1;
      return *this;
    }
  }
  done_ = true;
  current_.clear();
  return *this;
}

}  // namespace rclat
