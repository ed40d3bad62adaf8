#include <doctest.h>

#include <random>

#include "rclat/canon.hpp"
#include "rclat/enumeration.hpp"
#include "rclat/io.hpp"
#include "rclat/oracle.hpp"
#include "rclat/structure.hpp"
#include "support.hpp"

using namespace rclat;
namespace fx = rclat::testing;

namespace {

const std::vector<Lattice>& lattices_upto_7() {
  static const std::vector<Lattice> all = [] {
    std::vector<Lattice> out;
    for (const auto& level : oracle::enumerate_posets_upto(7))
      for (const auto& e : level.entries)
        if (e.is_lattice) out.push_back(as_lattice(e.poset));
    return out;
  }();
  return all;
}

StructureError::Kind kind_of(auto&& body) {
  try {
    body();
  } catch (const StructureError& e) {
    return e.kind();
  }
  FAIL("no StructureError thrown");
  return StructureError::Kind::InvalidPair;
}

}  // namespace

TEST_CASE("adjunct of chains") {
  const Lattice l = adjunct(chain_lattice(3), chain_lattice(1), 0, 2);
  CHECK(canon_key(l.poset()) == canon_key(fx::m2()));
  CHECK(l.edge_count() == 2 + 0 + 2);
  CHECK(kind_of([] { adjunct(chain_lattice(2), chain_lattice(1), 0, 1); }) ==
        StructureError::Kind::InvalidPair);
  CHECK(kind_of([] { adjunct(chain_lattice(3), chain_lattice(1), 2, 0); }) ==
        StructureError::Kind::InvalidPair);
}

TEST_CASE("adjunct edge identity on census lattices") {
  std::mt19937_64 rng(41);
  const auto& pool = lattices_upto_7();
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Lattice& l1 = pool[rng() % pool.size()];
    const Lattice& l2 = pool[rng() % pool.size()];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < l1.size(); ++a)
      for (int b = 0; b < l1.size(); ++b)
        if (l1.poset().less(a, b) && !l1.poset().covered_by(a, b)) pairs.emplace_back(a, b);
    if (pairs.empty()) continue;
    const auto [a, b] = pairs[rng() % pairs.size()];
    const Lattice l = adjunct(l1, l2, a, b);
    CHECK(l.edge_count() == l1.edge_count() + l2.edge_count() + 2);
    CHECK(nullity(l) == nullity(l1) + nullity(l2) + 1);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("decomposition of fixtures") {
  const Lattice chain = chain_lattice(4);
  const std::vector<int> all{0, 1, 2, 3};
  const auto d0 = adjunct_decompose(chain, all);
  CHECK(d0.c0 == all);
  CHECK(d0.steps.empty());

  const std::vector<int> m2_chain{0, 1, 3};
  const auto dm = adjunct_decompose(as_lattice(fx::m2()), m2_chain);
  CHECK(dm.c0 == m2_chain);
  REQUIRE(dm.steps.size() == 1);
  CHECK(dm.steps[0] == AdjunctStep{{2}, 0, 3});

  const Lattice n5 = as_lattice(fx::n5());
  const std::vector<int> n5_chain{0, 1, 2, 4};
  const auto dn = adjunct_decompose(n5, n5_chain);
  REQUIRE(dn.steps.size() == 1);
  CHECK(dn.steps[0] == AdjunctStep{{3}, 0, 4});
  CHECK(canon_key(reassemble(dn).poset()) == canon_key(fx::n5()));

  const std::vector<int> other{0, 3, 4};
  const auto dn2 = adjunct_decompose(n5, other);
  REQUIRE(dn2.steps.size() == 1);
  CHECK(dn2.steps[0] == AdjunctStep{{1, 2}, 0, 4});
}

TEST_CASE("decomposition preconditions") {
  const Lattice n5 = as_lattice(fx::n5());
  const std::vector<int> not_maximal{0, 1, 4};
  CHECK(kind_of([&] { adjunct_decompose(n5, not_maximal); }) ==
        StructureError::Kind::NotMaximalChain);
  const Lattice b3 = as_lattice(fx::b3());
  const std::vector<int> chain{0, 1, 4, 7};
  CHECK(kind_of([&] { adjunct_decompose(b3, chain); }) == StructureError::Kind::NotDismantlable);
}

TEST_CASE("reassembly") {
  AdjunctDecomposition d{{10, 11, 12}, {AdjunctStep{{13}, 10, 12}}};
  const Lattice l = reassemble(d);
  CHECK(l.size() == 4);
  CHECK(nullity(l) == 1);
  CHECK(reassemble(AdjunctDecomposition{{5, 6, 7}, {}}).poset() == chain_poset(3));

  AdjunctDecomposition bad{{0, 1, 2}, {AdjunctStep{{3}, 0, 2}, AdjunctStep{{4}, 0, 1}}};
  try {
    reassemble(bad);
    FAIL("expected InvalidPair");
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::InvalidPair);
    CHECK(e.step() == 1);
  }

  const json j = decomposition_to_json(d);
  CHECK(j.dump() == R"({"c0":[10,11,12],"steps":[{"chain":[13],"pair":[10,12]}]})");
  CHECK(decomposition_from_json(j) == d);
}

TEST_CASE("every maximal chain of every dismantlable lattice decomposes") {
  for (const auto& l : lattices_upto_7()) {
    if (!is_dismantlable(l).dismantlable) continue;
    for (const auto& chain : maximal_chains(l)) {
      const auto d = adjunct_decompose(l, chain);
      CHECK(d.c0 == chain);
      CHECK(static_cast<int>(d.steps.size()) == nullity(l));
      CHECK(is_isomorphic(reassemble(d).poset(), l.poset()));
    }
  }
}

TEST_CASE("retractible elements") {
  const auto n5 = retractible_elements(fx::n5());
  CHECK(std::find(n5.begin(), n5.end(), 1) != n5.end());
  CHECK(std::find(n5.begin(), n5.end(), 3) == n5.end());

  CHECK(basic_retract(fx::n5()).poset == fx::m2());
  CHECK(basic_retract(fx::m3()).poset == fx::m3());
  const auto chain = basic_retract(chain_poset(5));
  CHECK(chain.poset == chain_poset(2));
  CHECK(chain.ids == std::vector<int>{0, 4});
}

TEST_CASE("basic block of fixtures") {
  CHECK(basic_block_of(chain_lattice(5)).lattice.size() == 1);
  CHECK(basic_block_of(as_lattice(fx::n5())).lattice.poset() == fx::m2());
  const auto tailed = basic_block_of(direct_sum(as_lattice(fx::m2()), chain_lattice(2)));
  CHECK(tailed.lattice.poset() == fx::m2());
  CHECK(tailed.ids == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("basic block recognition") {
  CHECK(is_basic_block(as_lattice(fx::m2())));
  CHECK_FALSE(is_basic_block(as_lattice(fx::n5())));
  CHECK(is_basic_block(as_lattice(fx::m3())));
  CHECK(is_basic_block(chain_lattice(1)));
  CHECK_FALSE(is_basic_block(chain_lattice(3)));
}

TEST_CASE("basic block is unique under shuffled retraction order and idempotent") {
  std::mt19937_64 rng(7);
  for (const auto& l : lattices_upto_7()) {
    const auto reference = basic_block_of(l);
    const auto key = canon_key(reference.lattice.poset());
    for (int shuffle = 0; shuffle < 10; ++shuffle)
      CHECK(canon_key(basic_block_of(l, &rng).lattice.poset()) == key);
    CHECK(basic_block_of(reference.lattice).lattice.poset() == reference.lattice.poset());
    if (l.size() > 1 && !is_chain(l.poset())) {
      CHECK(classify_elements(reference.lattice).red.size() == classify_elements(l).red.size());
      CHECK(nullity(reference.lattice) == nullity(l));
      CHECK(is_basic_block(reference.lattice));
    }
  }
}

TEST_CASE("block parameters") {
  const auto m2 = chbb_params(as_lattice(fx::m2()));
  CHECK(m2.r == 2);
  CHECK(m2.k == 1);
  CHECK(m2.m == 1);
  CHECK(m2.m_vec == std::vector<int>{1});
  CHECK(m2.p == 0);
  CHECK(m2.l == 0);
  CHECK(m2.n == 4);

  const auto m3 = chbb_params(as_lattice(fx::m3()));
  CHECK(m3.r == 2);
  CHECK(m3.k == 2);
  CHECK(m3.m == 1);
  CHECK(m3.m_vec == std::vector<int>{2});
  CHECK(m3.n == 5);

  BasicBlockCode code;
  code.r = 3;
  code.pairs = {{{1, 3}, 1}, {{1, 2}, 1}};
  const auto six = chbb_params(basic_block_lattice(code));
  CHECK(six.n == 6);
  CHECK(six.r == 3);
  CHECK(six.k == 2);
  CHECK(six.m == 1);
  CHECK(six.p == 1);
  CHECK(six.l == 1);
  CHECK(six.m_vec == std::vector<int>{1});
  CHECK(six.p_vec == std::vector<int>{1});
  CHECK(six.m_pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(six.p_pairs == std::vector<std::pair<int, int>>{{1, 3}});

  CHECK(kind_of([] { chbb_params(as_lattice(fx::n5())); }) == StructureError::Kind::NotBasicBlock);
  CHECK(kind_of([] { chbb_params(as_lattice(fx::b3())); }) != StructureError::Kind::InvalidPair);
}

TEST_CASE("block parameters satisfy the size identities on every basic block family member") {
  for (int k = 1; k <= 3; ++k)
    for (int r = 2; r <= 2 * k; ++r)
      for (const auto& b : basic_block_family(r, k, 9)->blocks) {
        const auto params = chbb_params(b.lattice);
        CHECK(params.n == params.r + params.m + params.k);
        CHECK(params.r == r);
        CHECK(params.k == k);
        CHECK(params.m == b.code.m());
        CHECK(params.p == b.code.p());
        CHECK(params.l == b.code.l());
      }
}
