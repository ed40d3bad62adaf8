#include "rclat/oracle.hpp"

#include <algorithm>
#include <set>

#include "rclat/io.hpp"
#include "rclat/lattice.hpp"
#include "rclat/structure.hpp"

namespace rclat::oracle {

namespace {

std::vector<std::uint32_t> antichains(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = a + 1; b < n && ok; ++b)
        if ((mask >> b & 1u) && p.comparable(a, b)) ok = false;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

CensusEntry tag(CanonKey key, Poset p) {
  CensusEntry e;
  e.key = std::move(key);
  e.nullity = nullity(p);
  e.red_count = static_cast<int>(classify_elements(p).red.size());
  e.has_crown = contains_crown(p).has_value();
  if (auto l = try_lattice(p)) {
    e.is_lattice = true;
    e.is_rc = is_rc(*l);
    e.is_dismantlable = is_dismantlable(*l).dismantlable;
  }
  e.poset = std::move(p);
  return e;
}

Census finish_level(int n, std::map<CanonKey, Poset> classes, Exec exec) {
  std::vector<std::pair<CanonKey, Poset>> flat(std::make_move_iterator(classes.begin()),
                                               std::make_move_iterator(classes.end()));
  Census c;
  c.n = n;
  c.entries.resize(flat.size());
  for_each_index(exec, flat.size(), [&](std::size_t i) {
    c.entries[i] = tag(std::move(flat[i].first), std::move(flat[i].second));
  });
  return c;
}

}  // namespace

std::vector<Census> enumerate_posets_upto(int n, Exec exec, int limit) {
  if (n < 1) throw std::invalid_argument("census size must be at least 1");
  if (n > limit) throw LimitExceeded(n, limit);
  if (n > 30) throw LimitExceeded(n, 30);

  std::vector<Census> levels;
  {
    std::map<CanonKey, Poset> first;
    Poset single = poset_from_covers(1, {});
    first.emplace(canon_key(single), single);
    levels.push_back(finish_level(1, std::move(first), exec));
  }
  for (int size = 1; size < n; ++size) {
    const auto& parents = levels.back().entries;
    std::vector<std::vector<std::pair<CanonKey, Poset>>> children(parents.size());
    for_each_index(exec, parents.size(), [&](std::size_t i) {
      const Poset& parent = parents[i].poset;
      std::set<CanonKey> local;
      for (std::uint32_t mask : antichains(parent)) {
        std::vector<Cover> covers = parent.covers();
        for (int a = 0; a < size; ++a)
          if (mask >> a & 1u) covers.emplace_back(a, size);
        Poset child = poset_from_covers(size + 1, covers);
        CanonKey key = canon_key(child);
        if (local.insert(key).second) children[i].emplace_back(std::move(key), std::move(child));
      }
    });
    std::map<CanonKey, Poset> merged;
    for (auto& batch : children)
      for (auto& [key, poset] : batch) merged.emplace(std::move(key), std::move(poset));
    levels.push_back(finish_level(size + 1, std::move(merged), exec));
  }
  return levels;
}

Census enumerate_posets(int n, Exec exec, int limit) {
  return std::move(enumerate_posets_upto(n, exec, limit).back());
}

Census lattice_subset(const Census& posets) {
  Census out;
  out.n = posets.n;
  for (const auto& e : posets.entries)
    if (e.is_lattice) out.entries.push_back(e);
  return out;
}

Census lattice_census(int n, Exec exec, int limit) {
  return lattice_subset(enumerate_posets(n, exec, limit));
}

std::size_t RcCensus::total() const {
  std::size_t t = 0;
  for (const auto& [stratum, keys] : strata) t += keys.size();
  return t;
}

std::size_t RcCensus::count(int k, int r) const {
  auto it = strata.find({k, r});
  return it == strata.end() ? 0 : it->second.size();
}

RcCensus rc_census_of(const Census& lattices) {
  RcCensus rc;
  rc.n = lattices.n;
  for (const auto& e : lattices.entries) {
    if (!e.is_lattice) continue;
    if (!e.is_rc) {
      ++rc.non_rc;
      continue;
    }
    rc.strata[{e.nullity, e.red_count}].push_back(e.key);
  }
  return rc;
}

RcCensus rc_census(int n, Exec exec, int limit) {
  return rc_census_of(lattice_census(n, exec, limit));
}

std::map<std::pair<int, int>, std::size_t> rc_block_strata(const Census& lattices) {
  std::map<std::pair<int, int>, std::size_t> strata;
  for (const auto& e : lattices.entries) {
    if (!e.is_lattice || !e.is_rc || is_chain(e.poset)) continue;
    const auto mb = maximal_block(as_lattice(e.poset));
    if (mb.below == 0 && mb.above == 0) ++strata[{e.nullity, e.red_count}];
  }
  return strata;
}

namespace {

struct LatticeChecks {
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> checks;
};

LatticeChecks check_lattice(const CensusEntry& e) {
  LatticeChecks out;
  const int n = e.poset.size();
  const std::string hex = e.key.hex();
  auto run = [&](const std::string& name, auto&& body) {
    ++out.checks[name];
    try {
      std::string detail = body();
      if (!detail.empty()) out.violations.push_back({name, n, hex, detail});
    } catch (const std::exception& ex) {
      out.violations.push_back({name, n, hex, std::string("exception: ") + ex.what()});
    }
  };

  const Lattice l = as_lattice(e.poset);
  const int eta = e.nullity;

  run("dismantlable-iff-crown-free", [&]() -> std::string {
    return e.is_dismantlable == !e.has_crown ? "" : "dismantlable and crown-free disagree";
  });
  run("edge-count", [&]() -> std::string {
    return l.edge_count() == n + eta - 1 ? "" : "|E| != n + eta - 1";
  });
  if (eta >= 1) {
    run("reducible-bounds", [&]() -> std::string {
      return (e.red_count >= 2 && e.red_count <= 2 * eta) ? "" : "|Red| outside [2, 2k]";
    });
  }
  if (e.is_dismantlable) {
    for (const auto& chain : maximal_chains(l)) {
      run("decomposition-roundtrip", [&]() -> std::string {
        const auto d = adjunct_decompose(l, chain);
        if (static_cast<int>(d.steps.size()) != eta) return "step count != nullity";
        std::vector<int> ids = d.c0;
        for (const auto& s : d.steps) ids.insert(ids.end(), s.chain.begin(), s.chain.end());
        std::sort(ids.begin(), ids.end());
        if (static_cast<int>(ids.size()) != n || std::adjacent_find(ids.begin(), ids.end()) != ids.end())
          return "ids not covered exactly once";
        if (canon_key(reassemble(d).poset()) != e.key) return "reassembly not isomorphic";
        return "";
      });
    }
  }
  run("basic-block-invariants", [&]() -> std::string {
    const auto bb = basic_block_of(l);
    if (!is_basic_block(bb.lattice)) return "result is not a basic block";
    if (is_chain(e.poset) != (bb.lattice.size() == 1)) return "chain/single-element mismatch";
    return "";
  });
  if (e.is_rc && !is_chain(e.poset)) {
    run("basic-block-family", [&]() -> std::string {
      const auto bb = basic_block_of(l);
      const auto key = canon_key(bb.lattice.poset());
      const auto family = basic_block_family(e.red_count, eta);
      for (const auto& b : family->blocks)
        if (b.key == key) return "";
      return "basic block missing from B_r(k)";
    });
  }
  return out;
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
  if (options.n_max > options.limit) throw LimitExceeded(options.n_max, options.limit);
  const BlockCounter counter = options.count_blocks
                                   ? options.count_blocks
                                   : BlockCounter([](int n, int k, int r) { return count_blocks(n, k, r); });
  VerifyReport report;
  report.n_max = options.n_max;
  const auto levels = enumerate_posets_upto(options.n_max, options.exec, options.limit);

  for (const auto& level : levels) {
    const Census lattices = lattice_subset(level);
    std::vector<LatticeChecks> results(lattices.entries.size());
    for_each_index(options.exec, results.size(),
                   [&](std::size_t i) { results[i] = check_lattice(lattices.entries[i]); });
    for (auto& r : results) {
      for (auto& [name, count] : r.checks) report.checks[name] += count;
      for (auto& v : r.violations) report.violations.push_back(std::move(v));
    }

    const int n = level.n;
    const RcCensus rc = rc_census_of(lattices);
    ++report.checks["rc-total"];
    try {
      const BigCount formula = count_rc_total(n, counter);
      if (formula != rc.total())
        report.violations.push_back({"rc-total", n, "",
                                     "formula " + formula.str() + " vs census " +
                                         std::to_string(rc.total())});
    } catch (const std::exception& ex) {
      report.violations.push_back({"rc-total", n, "", std::string("exception: ") + ex.what()});
    }

    auto strata = rc_block_strata(lattices);
    for (int k = 1; k <= n - 3; ++k) {
      for (int r = 2; r <= 2 * k && k + r <= n; ++r) {
        ++report.checks["block-strata"];
        const std::size_t census = strata[{k, r}];
        strata.erase({k, r});
        try {
          const BigCount formula = counter(n, k, r);
          if (formula != census)
            report.violations.push_back({"block-strata", n, "",
                                         "(k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                                             ") formula " + formula.str() + " vs census " +
                                             std::to_string(census)});
        } catch (const std::exception& ex) {
          report.violations.push_back({"block-strata", n, "", std::string("exception: ") + ex.what()});
        }
      }
    }
    for (const auto& [stratum, count] : strata) {
      if (count == 0) continue;
      report.violations.push_back({"block-strata", n, "",
                                   "census has blocks outside the feasible range at (k=" +
                                       std::to_string(stratum.first) +
                                       ", r=" + std::to_string(stratum.second) + ")"});
    }
  }
  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  out << "verify up to n=" << report.n_max << "\n";
  for (const auto& [name, count] : report.checks) out << "  " << name << ": " << count << " checked\n";
  for (const auto& v : report.violations) {
    out << "  VIOLATION " << v.check << " n=" << v.n;
    if (!v.key_hex.empty()) out << " key=" << v.key_hex;
    out << " " << v.detail << "\n";
  }
  out << report.violations.size() << " violations\n";
}

void write_census_archive(std::ostream& out, const Census& census) {
  for (const auto& e : census.entries) {
    json j = poset_to_json(e.poset);
    j["key"] = e.key.hex();
    j["is_lattice"] = e.is_lattice;
    j["is_rc"] = e.is_rc;
    j["nullity"] = e.nullity;
    j["red_count"] = e.red_count;
    j["is_dismantlable"] = e.is_dismantlable;
    j["has_crown"] = e.has_crown;
    out << j.dump() << "\n";
  }
}

}  // namespace rclat::oracle
