#include <doctest.h>

#include <set>

#include "rclat/canon.hpp"
#include "rclat/enumeration.hpp"
#include "rclat/structure.hpp"
#include "support.hpp"

using namespace rclat;
namespace fx = rclat::testing;

namespace {

void brute_partitions(int n, int k, int min_part, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(prefix);
    return;
  }
  for (int part = min_part; part * k <= n; ++part) {
    prefix.push_back(part);
    brute_partitions(n - part, k - 1, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> brute_partitions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  brute_partitions(n, k, 1, prefix, out);
  return out;
}

std::vector<std::vector<int>> brute_compositions(int total, const std::vector<int>& bounds) {
  std::vector<std::vector<int>> out;
  std::vector<int> u(bounds);
  if (bounds.empty()) {
    if (total == 0) out.push_back({});
    return out;
  }
  for (;;) {
    if (std::accumulate(u.begin(), u.end(), 0) == total) out.push_back(u);
    std::size_t i = u.size();
    while (i > 0) {
      --i;
      if (++u[i] <= total) break;
      u[i] = bounds[i];
      if (i == 0) return out;
    }
  }
}

BasicBlockCode code(int r, std::map<std::pair<int, int>, int> pairs) {
  BasicBlockCode c;
  c.r = r;
  c.pairs = std::move(pairs);
  return c;
}

std::set<CanonKey> keys_of(const std::vector<Lattice>& ls) {
  std::set<CanonKey> keys;
  for (const auto& l : ls) keys.insert(canon_key(l.poset()));
  return keys;
}

}  // namespace

TEST_CASE("partition counts") {
  CHECK(partition_count(4, 2) == 2);
  CHECK(partition_count(6, 3) == 3);
  CHECK(partition_count(0, 0) == 1);
  CHECK(partition_count(5, 0) == 0);
  CHECK(partition_count(3, 4) == 0);
  CHECK(partitions_into(6, 3) == std::vector<std::vector<int>>{{1, 1, 4}, {1, 2, 3}, {2, 2, 2}});
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto brute = brute_partitions(n, k);
      CHECK(partition_count(n, k) == brute.size());
      CHECK(partitions_into(n, k) == brute);
    }
  // Total partitions of 100.
  BigCount total = 0;
  for (int k = 1; k <= 100; ++k) total += partition_count(100, k);
  CHECK(total == BigCount("190569292"));
}

TEST_CASE("compositions with lower bounds") {
  CHECK(compositions_with_bounds(3, {{2, 1, 0}}).to_vector() == std::vector<std::vector<int>>{{2, 1, 0}});
  CHECK(compositions_with_bounds(2, {{1, 1, 0, 0, 0}}).to_vector() ==
        std::vector<std::vector<int>>{{1, 1, 0, 0, 0}});
  CHECK(compositions_with_bounds(0, {{}}).to_vector() == std::vector<std::vector<int>>{{}});
  CHECK(compositions_with_bounds(1, {{}}).to_vector().empty());
  CHECK(compositions_with_bounds(1, {{2}}).to_vector().empty());
  const std::vector<std::vector<int>> bound_sets{{0}, {1, 0}, {0, 0, 0}, {2, 1, 0, 1}, {1, 1, 1, 0, 0}};
  for (const auto& bounds : bound_sets)
    for (int total = 0; total <= 8; ++total)
      CHECK(compositions_with_bounds(total, {bounds}).to_vector() == brute_compositions(total, bounds));
}

TEST_CASE("basic block codes") {
  const auto c = code(3, {{{1, 3}, 1}, {{1, 2}, 1}});
  CHECK(c.valid());
  CHECK(c.k() == 2);
  CHECK(c.m() == 1);
  CHECK(c.p() == 1);
  CHECK(c.l() == 1);
  CHECK(c.size() == 6);
  CHECK(c.gaps() == std::vector<int>{2});
  CHECK(slot_bounds(c).bounds == std::vector<int>{2, 1, 0});
  CHECK_FALSE(code(3, {{{1, 2}, 1}}).valid());
  CHECK(basic_block_lattice(code(2, {{{1, 2}, 1}})).poset() ==
        poset_from_covers(4, {{0, 1}, {0, 3}, {1, 2}, {3, 2}}));
  CHECK(is_isomorphic(basic_block_lattice(code(2, {{{1, 2}, 2}})).poset(), fx::m3()));
}

TEST_CASE("basic block families") {
  const auto one = gen_basic_blocks(2, 1);
  REQUIRE(one.blocks.size() == 1);
  CHECK(one.blocks[0].code == code(2, {{{1, 2}, 1}}));

  const auto three = gen_basic_blocks(3, 2);
  REQUIRE(three.blocks.size() == 3);
  std::set<std::map<std::pair<int, int>, int>> codes;
  for (const auto& b : three.blocks) codes.insert(b.code.pairs);
  CHECK(codes == std::set<std::map<std::pair<int, int>, int>>{
                     {{{1, 2}, 1}, {{2, 3}, 1}}, {{{1, 2}, 1}, {{1, 3}, 1}}, {{{2, 3}, 1}, {{1, 3}, 1}}});

  const auto four = gen_basic_blocks(4, 2);
  REQUIRE(four.blocks.size() == 3);
  codes.clear();
  for (const auto& b : four.blocks) codes.insert(b.code.pairs);
  CHECK(codes == std::set<std::map<std::pair<int, int>, int>>{
                     {{{1, 2}, 1}, {{3, 4}, 1}}, {{{1, 3}, 1}, {{2, 4}, 1}}, {{{1, 4}, 1}, {{2, 3}, 1}}});

  CHECK_THROWS_AS(gen_basic_blocks(1, 1), EnumerationError);
  CHECK_THROWS_AS(gen_basic_blocks(5, 2), EnumerationError);
  CHECK_THROWS_AS(gen_basic_blocks(2, 0), EnumerationError);
}

TEST_CASE("family members are pairwise non-isomorphic RC basic blocks") {
  for (int k = 1; k <= 3; ++k)
    for (int r = 2; r <= 2 * k; ++r) {
      const auto family = gen_basic_blocks(r, k, Exec::parallel, 10);
      CHECK(family.collisions == 0);
      std::set<CanonKey> keys;
      for (const auto& b : family.blocks) {
        keys.insert(b.key);
        CHECK(b.code.valid());
        CHECK(is_basic_block(b.lattice));
        CHECK(is_rc(b.lattice));
        CHECK(nullity(b.lattice) == k);
        CHECK(static_cast<int>(classify_elements(b.lattice).red.size()) == r);
        CHECK(b.lattice.size() == b.code.size());
      }
      CHECK(keys.size() == family.blocks.size());
    }
}

TEST_CASE("serial and parallel basic block search agree") {
  for (int k = 1; k <= 3; ++k)
    for (int r = 2; r <= 2 * k; ++r) {
      const auto a = gen_basic_blocks(r, k, Exec::serial, 10);
      const auto b = gen_basic_blocks(r, k, Exec::parallel, 10);
      REQUIRE(a.blocks.size() == b.blocks.size());
      for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        CHECK(a.blocks[i].code == b.blocks[i].code);
        CHECK(a.blocks[i].key == b.blocks[i].key);
      }
    }
}

TEST_CASE("block counts per basic block") {
  const auto m2 = code(2, {{{1, 2}, 1}});
  const auto m3 = code(2, {{{1, 2}, 2}});
  const auto six = code(3, {{{1, 3}, 1}, {{1, 2}, 1}});
  CHECK(count_blocks_for_basic(7, m2) == 2);
  CHECK(count_blocks_for_basic(5, m3) == 1);
  CHECK(count_blocks_for_basic(6, six) == 1);
  for (int n = 4; n <= 30; ++n) CHECK(count_blocks_for_basic(n, m2) == (n - 2) / 2);
  CHECK_THROWS_AS(count_blocks_for_basic(3, m2), EnumerationError);

  const auto m2_blocks = gen_blocks_for_basic(6, m2);
  REQUIRE(m2_blocks.size() == 2);
  const Lattice parallel_13 = adjunct(chain_lattice(3), chain_lattice(3), 0, 2);
  const Lattice parallel_22 = adjunct(chain_lattice(4), chain_lattice(2), 0, 3);
  CHECK(keys_of(m2_blocks) == keys_of({parallel_13, parallel_22}));
  const auto m3_blocks = gen_blocks_for_basic(5, m3);
  REQUIRE(m3_blocks.size() == 1);
  CHECK(is_isomorphic(m3_blocks[0].poset(), fx::m3()));
  CHECK(is_isomorphic(gen_blocks_for_basic(6, six).front().poset(), basic_block_lattice(six).poset()));
}

TEST_CASE("generation matches counting for every small code") {
  for (int k = 1; k <= 3; ++k)
    for (int r = 2; r <= 2 * k; ++r)
      for (const auto& b : basic_block_family(r, k, 8)->blocks)
        for (int n = b.code.size(); n <= 9; ++n) {
          const auto generated = gen_blocks_for_basic(n, b.code);
          CHECK(count_blocks_for_basic(n, b.code) == generated.size());
          CHECK(keys_of(generated).size() == generated.size());
          for (const auto& l : generated) {
            CHECK(is_block(l));
            CHECK(canon_key(basic_block_of(l).lattice.poset()) == b.key);
          }
        }
}

TEST_CASE("stratified counts") {
  CHECK(count_blocks(6, 2, 3) == 2);
  CHECK(count_blocks(6, 2, 4) == 1);
  for (int n = 4; n <= 100; ++n) CHECK(count_blocks(n, 1, 2) == (n - 2) / 2);
  CHECK(count_blocks_nullity(6, 2) == 4);
  CHECK(count_blocks_nullity(5, 2) == 1);
  CHECK(count_blocks_nullity(4, 1) == 1);
  CHECK(count_rc_lattices(5, 1) == 3);
  CHECK(count_rc_lattices(6, 1) == 7);
  CHECK(count_rc_lattices(6, 2) == 6);
  CHECK(count_rc_total(3) == 1);
  CHECK(count_rc_total(4) == 2);
  CHECK(count_rc_total(5) == 5);
  CHECK(count_rc_total(6) == 15);
  CHECK(count_blocks(8, 2, 3, Exec::serial) == count_blocks(8, 2, 3, Exec::parallel));

  CHECK_THROWS_AS(count_blocks(6, 1, 3), EnumerationError);
  CHECK_THROWS_AS(count_blocks(2, 1, 2), EnumerationError);
  CHECK_THROWS_AS(count_blocks(6, 0, 2), EnumerationError);
  CHECK_THROWS_AS(count_rc_lattices(4, 2), EnumerationError);
  CHECK_THROWS_AS(count_rc_total(0), EnumerationError);
}

TEST_CASE("custom block counter feeds the roll-ups") {
  const BlockCounter ones = [](int, int, int) { return BigCount(1); };
  // r ranges over 2..min(2k, n-k): for (6,2) that is r = 2, 3, 4.
  CHECK(count_blocks_nullity(6, 2, ones) == 3);
}

TEST_CASE("enumerated RC lattices") {
  const auto five = enumerate_rc_lattices(5, 1);
  std::vector<Lattice> ls;
  for (const auto& e : five) ls.push_back(e.lattice);
  CHECK(keys_of(ls) == keys_of({as_lattice(fx::n5()), direct_sum(as_lattice(fx::m2()), chain_lattice(1)),
                                direct_sum(chain_lattice(1), as_lattice(fx::m2()))}));
  for (const auto& e : five) {
    CHECK(e.k == 1);
    CHECK(e.r == 2);
    CHECK(e.below + e.above + maximal_block(e.lattice).block.size() == 5);
  }
  const auto m3 = enumerate_rc_lattices(5, 2);
  REQUIRE(m3.size() == 1);
  CHECK(is_isomorphic(m3[0].lattice.poset(), fx::m3()));
  const auto m2 = enumerate_rc_lattices(4, 1);
  REQUIRE(m2.size() == 1);
  CHECK(is_isomorphic(m2[0].lattice.poset(), fx::m2()));

  for (int n = 4; n <= 9; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      const auto all = enumerate_rc_lattices(n, k);
      CHECK(count_rc_lattices(n, k) == all.size());
      std::vector<Lattice> pool;
      for (const auto& e : all) pool.push_back(e.lattice);
      CHECK(keys_of(pool).size() == pool.size());
      BigCount by_r = 0;
      for (int r = 2; r <= 2 * k && r <= n - k; ++r) by_r += enumerate_rc_lattices(n, k, r).size();
      CHECK(by_r == all.size());
    }
}

TEST_CASE("enumerate_blocks matches count_blocks") {
  for (int n = 4; n <= 9; ++n)
    for (int k = 1; k <= n - 3; ++k)
      for (int r = 2; r <= 2 * k && r <= n - k; ++r) {
        const auto serial = enumerate_blocks(n, k, r, Exec::serial);
        const auto parallel = enumerate_blocks(n, k, r, Exec::parallel);
        CHECK(count_blocks(n, k, r) == serial.size());
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
          CHECK(serial[i].lattice.poset() == parallel[i].lattice.poset());
      }
}
