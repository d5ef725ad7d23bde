#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "ordercheck/extensions.hpp"
#include "ordercheck/generate.hpp"
#include "ordercheck/ideals.hpp"
#include "ordercheck/poset.hpp"

using namespace ordercheck;

namespace {

Poset from_arcs(int p, std::initializer_list<std::pair<int, int>> arcs) {
  std::vector<Mask> rows(p, 0);
  for (auto [i, j] : arcs) rows[i] |= bit(j);
  return Poset::from_relation(p, rows);
}

Poset chain(int p) {
  std::vector<Mask> rows(p, 0);
  for (int i = 0; i + 1 < p; ++i) rows[i] = bit(i + 1);
  return Poset::from_relation(p, rows);
}

Poset antichain(int p) {
  std::vector<Mask> rows(p, 0);
  return Poset::from_relation(p, rows);
}

// legs 0 and 1 under apex 2
Poset vee() { return from_arcs(3, {{0, 2}, {1, 2}}); }

std::vector<Poset> all_posets(int p) {
  std::vector<Poset> out;
  generate_all(p, [&](const Poset& P) { out.push_back(P); });
  return out;
}

}  // namespace

TEST_CASE("transitive closure of a 3-chain") {
  Poset P = from_arcs(3, {{0, 1}, {1, 2}});
  CHECK(P.less(0, 1));
  CHECK(P.less(1, 2));
  CHECK(P.less(0, 2));
  CHECK_FALSE(P.less(2, 0));
  CHECK(P.up(0) == (bit(1) | bit(2)));
}

TEST_CASE("closure of the empty relation is the antichain") {
  Poset P = antichain(2);
  CHECK_FALSE(P.less(0, 1));
  CHECK_FALSE(P.less(1, 0));
}

TEST_CASE("closure relabels to natural labeling by topological order") {
  // arc 2 -> 0 violates natural labeling; Kahn order with ascending
  // tie-break visits 1, 2, 0, so the chain lands on labels 1 < 2.
  Poset P = from_arcs(3, {{2, 0}});
  CHECK(P.up(0) == 0);
  CHECK(P.up(1) == bit(2));
  CHECK(P.up(2) == 0);
  CHECK(P.canonical_key() == from_arcs(3, {{0, 1}}).canonical_key());
}

TEST_CASE("closure input validation") {
  std::vector<Mask> cyclic = {bit(1), bit(0)};
  CHECK_THROWS_AS(Poset::from_relation(2, cyclic), CyclicInput);
  std::vector<Mask> reflexive = {bit(0), 0};
  CHECK_THROWS_AS(Poset::from_relation(2, reflexive), ReflexiveInput);
  std::vector<Mask> empty;
  CHECK_THROWS_AS(Poset::from_relation(0, empty), OutOfRange);
  std::vector<Mask> too_big(17, 0);
  CHECK_THROWS_AS(Poset::from_relation(17, too_big), OutOfRange);
}

TEST_CASE("covers drop transitive shortcuts") {
  Poset P = chain(3);
  CHECK(P.covers_of(0) == bit(1));
  CHECK(P.covers_of(1) == bit(2));
  CHECK(P.covers(0, 1));
  CHECK_FALSE(P.covers(0, 2));
}

TEST_CASE("generated posets satisfy the relation invariants") {
  for (int p = 1; p <= 6; ++p) {
    for (const Poset& P : all_posets(p)) {
      for (int i = 0; i < p; ++i) {
        CHECK_FALSE(P.less(i, i));
        for (int j = 0; j < p; ++j) {
          if (P.less(i, j)) {
            CHECK_FALSE(P.less(j, i));
            CHECK(i < j);  // natural labeling
            for (int k = 0; k < p; ++k)
              if (P.less(j, k)) CHECK(P.less(i, k));
          }
        }
      }
    }
  }
}

TEST_CASE("linear extensions of the worked examples") {
  CHECK(count_linear_extensions(chain(3)) == 1);
  CHECK(count_linear_extensions(antichain(3)) == 6);

  std::vector<std::vector<std::uint8_t>> words;
  for_each_linear_extension(vee(), [&](std::span<const std::uint8_t> w) {
    words.emplace_back(w.begin(), w.end());
  });
  REQUIRE(words.size() == 2);
  CHECK(words[0] == std::vector<std::uint8_t>{0, 1, 2});
  CHECK(words[1] == std::vector<std::uint8_t>{1, 0, 2});
}

TEST_CASE("linear extensions match the permutation filter and stay sorted") {
  for (int p = 1; p <= 5; ++p) {
    for (const Poset& P : all_posets(p)) {
      auto expected = brute::linear_extensions(P);
      std::vector<std::vector<int>> got;
      std::uint64_t n =
          for_each_linear_extension(P, [&](std::span<const std::uint8_t> w) {
            got.emplace_back(w.begin(), w.end());
          });
      CHECK(n == expected.size());
      CHECK(got == expected);  // next_permutation emits in lex order
    }
  }
}

TEST_CASE("order ideals of the worked examples") {
  CHECK(order_ideals(chain(4)).count() == 5);
  CHECK(order_ideals(antichain(2)).count() == 4);
  const IdealLattice L = order_ideals(vee());
  CHECK(L.ideals == std::vector<Mask>{0, 1, 2, 3, 7});
}

TEST_CASE("order ideals match the subset filter") {
  for (int p = 1; p <= 6; ++p)
    for (const Poset& P : all_posets(p))
      CHECK(order_ideals(P).ideals == brute::order_ideal_masks(P));

  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    Poset P = brute::random_poset(rng, 10, 0.2 + 0.05 * (trial % 8));
    CHECK(order_ideals(P).ideals == brute::order_ideal_masks(P));
  }
}

TEST_CASE("ideal containment lists hold exactly the strict supersets") {
  const IdealLattice L = order_ideals(vee());
  REQUIRE(L.count() == 5);
  // ideals: 0, {0}, {1}, {0,1}, {0,1,2}
  CHECK(L.containing[0] == std::vector<std::uint32_t>{1, 2, 3, 4});
  CHECK(L.containing[1] == std::vector<std::uint32_t>{3, 4});
  CHECK(L.containing[3] == std::vector<std::uint32_t>{4});
  CHECK(L.containing[4].empty());
}

TEST_CASE("narrow posets are exactly those without a 3-antichain") {
  CHECK_FALSE(antichain(3).is_narrow());
  CHECK(chain(5).is_narrow());
  CHECK(vee().is_narrow());
  for (int p = 1; p <= 6; ++p)
    for (const Poset& P : all_posets(p))
      CHECK(P.is_narrow() == (brute::max_antichain(P) <= 2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Poset P = brute::random_poset(rng, 8, 0.15 + 0.05 * (trial % 10));
    CHECK(P.is_narrow() == (brute::max_antichain(P) <= 2));
  }
}

TEST_CASE("graded posets are exactly those with equal maximal chains") {
  CHECK(chain(3).is_graded());
  CHECK(antichain(3).is_graded());
  // maximal chains 0 < 1 and 0 < 2 < 3 differ in length
  CHECK_FALSE(from_arcs(4, {{0, 1}, {0, 2}, {2, 3}}).is_graded());
  for (int p = 1; p <= 6; ++p)
    for (const Poset& P : all_posets(p)) {
      auto lengths = brute::maximal_chain_lengths(P);
      bool same = std::set<int>(lengths.begin(), lengths.end()).size() == 1;
      CHECK(P.is_graded() == same);
    }
}

TEST_CASE("canonical key identifies isomorphic posets") {
  // The vee again, fed through a non-natural labeling (apex 1).
  Poset relabeled = from_arcs(3, {{2, 1}, {0, 1}});
  CHECK(relabeled.canonical_key() == vee().canonical_key());
  CHECK(chain(3).canonical_key() != antichain(3).canonical_key());

  std::set<std::string> keys;
  for (const Poset& P : all_posets(3)) keys.insert(P.canonical_key());
  CHECK(keys.size() == 5);
}

TEST_CASE("canonical key equals the permutation-minimum oracle") {
  for (int p = 1; p <= 5; ++p) {
    for (const auto& rows : brute::all_closed_matrices(p)) {
      Poset P = Poset::from_closed_rows(p, rows.data());
      CHECK(P.canonical_key() == brute::canonical_min(P));
      CHECK(P.is_canonical() == (P.canonical_key() == P.packed_rows()));
    }
  }
}

TEST_CASE("canonical key is invariant under extension relabelings") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 4 + trial % 7;  // up to 10
    Poset P = brute::random_poset(rng, p, 0.1 + 0.06 * (trial % 9));
    Poset Q = brute::relabel_by_word(P, brute::random_linear_extension(rng, P));
    CHECK(P.canonical_key() == Q.canonical_key());
  }
}

TEST_CASE("hasse rendering lists cover pairs") {
  CHECK(chain(3).hasse() == "1 < 2\n2 < 3\n");
  CHECK(antichain(2).hasse() == "");
  CHECK(vee().hasse() == "1 < 3\n2 < 3\n");
}

TEST_CASE("packed key of the worked examples") {
  CHECK(to_hex(chain(3).canonical_key()) == "6400");
  CHECK(to_hex(antichain(3).canonical_key()) == "0000");
  CHECK(to_hex(vee().canonical_key()) == "2400");
}
