#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rclat/canon.hpp"
#include "rclat/enumeration.hpp"
#include "rclat/parallel.hpp"
#include "rclat/poset.hpp"

namespace rclat::oracle {

inline constexpr int default_limit = 8;

class LimitExceeded : public std::invalid_argument {
 public:
  LimitExceeded(int n, int limit)
      : std::invalid_argument("census size " + std::to_string(n) + " exceeds the limit " +
                              std::to_string(limit)) {}
};

struct CensusEntry {
  CanonKey key;
  Poset poset;
  bool is_lattice = false;
  bool is_rc = false;
  int nullity = 0;
  int red_count = 0;
  bool is_dismantlable = false;
  bool has_crown = false;
};

/// One representative per isomorphism class of n-element posets, sorted by
/// key bytes.
struct Census {
  int n = 0;
  std::vector<CensusEntry> entries;
};

/// Censuses for every size 1..n. Each level extends the previous one by a new
/// maximal element whose lower covers range over all antichains, then
/// deduplicates by canonical key. Output is identical for both Exec paths.
std::vector<Census> enumerate_posets_upto(int n, Exec exec = Exec::parallel,
                                          int limit = default_limit);

Census enumerate_posets(int n, Exec exec = Exec::parallel, int limit = default_limit);

/// The lattice entries of a poset census.
Census lattice_subset(const Census& posets);

Census lattice_census(int n, Exec exec = Exec::parallel, int limit = default_limit);

/// RC lattices grouped by (nullity, reducible count). The chain sits in
/// stratum (0, 0).
struct RcCensus {
  int n = 0;
  std::map<std::pair<int, int>, std::vector<CanonKey>> strata;
  std::size_t non_rc = 0;

  std::size_t total() const;
  std::size_t count(int k, int r) const;
};

RcCensus rc_census_of(const Census& lattices);
RcCensus rc_census(int n, Exec exec = Exec::parallel, int limit = default_limit);

/// RC lattices that are their own maximal block, grouped by (k, r).
std::map<std::pair<int, int>, std::size_t> rc_block_strata(const Census& lattices);

struct Violation {
  std::string check;
  int n = 0;
  std::string key_hex;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 6;
  Exec exec = Exec::parallel;
  int limit = default_limit;
  /// Block counter feeding the count comparisons; empty means count_blocks().
  BlockCounter count_blocks;
};

struct VerifyReport {
  int n_max = 0;
  std::map<std::string, std::size_t> checks;  // check name -> instances run
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Re-checks every structural property and every count over the full lattice
/// census up to n_max.
VerifyReport verify_all(const VerifyOptions& options);

void print_report(std::ostream& out, const VerifyReport& report);

/// One JSON line per entry: the poset record plus the tag fields.
void write_census_archive(std::ostream& out, const Census& census);

}  // namespace rclat::oracle
