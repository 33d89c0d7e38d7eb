#include <doctest.h>

#include <random>

#include "gct/analysis.hpp"

using namespace gct;

namespace {
CharacterTable table_of(const std::string& spec) {
  return character_table(std::make_shared<PermGroup>(catalog(spec)));
}
}  // namespace

TEST_CASE("class sums and products") {
  auto t = table_of("symmetric:3");
  auto id_sum = class_sum(t.group, t.classes, 0);
  CHECK(id_sum.coeffs.size() == 1);
  CHECK(id_sum.at(0) == Cyclotomic(1L));
  auto trans = class_sum(t.group, t.classes, 1);  // 2A, three transpositions
  CHECK(trans.coeffs.size() == 3);
  // K2A * K2A = 3*1 + ... : coefficient of the identity is 3
  auto prod = trans * trans;
  CHECK(prod.at(0) == Cyclotomic(3L));
  // product expands with the class matrix pair counts
  auto m = class_matrix(*t.group, t.classes, 1);
  for (size_t l = 0; l < t.k(); ++l) {
    Cyclotomic at_rep = prod.at(t.classes.representatives[l]);
    // pair count per element of K_l: M[j][l]*|K_j|/|K_l| with j = 2A
    Rational want(static_cast<long>(m[1][l] * t.classes.sizes[1]),
                  static_cast<long>(t.classes.sizes[l]));
    want.canonicalize();
    CHECK(at_rep == Cyclotomic(want));
  }
}

TEST_CASE("class sums commute with everything") {
  auto t = table_of("symmetric:4");
  CHECK(centrality_check(t).all_pass());
}

TEST_CASE("membership and coordinates") {
  auto t = table_of("symmetric:4");
  auto ns = normal_subgroups(t);
  const auto& v4 = ns[1];
  // class sums of classes inside N give unit coordinate vectors
  for (size_t idx = 0; idx < v4.class_indices.size(); ++idx) {
    auto coords = membership_and_coords(
        class_sum(t.group, t.classes, static_cast<size_t>(v4.class_indices[idx])), t.classes, v4);
    REQUIRE(coords.has_value());
    for (size_t j = 0; j < coords->size(); ++j)
      CHECK((*coords)[j] == Cyclotomic(j == idx ? 1L : 0L));
  }
  // class sums outside N are rejected
  auto outside = membership_and_coords(class_sum(t.group, t.classes, 4), t.classes, v4);
  CHECK(!outside.has_value());
  // non-class-constant elements are rejected
  GroupAlgebraElement bad{t.group, {}};
  bad.set(t.classes.representatives[1], Cyclotomic(1L));
  CHECK(!membership_and_coords(bad, t.classes, v4).has_value());
}

TEST_CASE("S4 / V4 block idempotent has support in V4") {
  auto t = table_of("symmetric:4");
  auto ns = normal_subgroups(t);
  const auto& v4 = ns[1];
  auto ec = equivalence_classes(t, v4);
  auto rep = idempotent_support_check(t, ec, v4);
  CHECK(rep.all_pass());
  // the block of the trivial character is {triv, sgn, 2-dim}: coefficient at
  // g is (1 + sgn(g) + 2 chi2(g^{-1}))/24, vanishing off V4
  int b = ec.block_of[0];
  CHECK(ec.blocks[static_cast<size_t>(b)].size() == 3);
}

TEST_CASE("idempotents for the whole group sum to the identity element") {
  auto t = table_of("HolC5");
  auto ns = normal_subgroups(t);
  auto ec = equivalence_classes(t, ns.back());
  CHECK(idempotent_support_check(t, ec, ns.back()).all_pass());
}

TEST_CASE("dimension check three ways") {
  auto t = table_of("AutD16");
  for (const auto& n : normal_subgroups(t)) {
    auto oracle = g_action_on_irrN(t.group, n);
    auto ec = equivalence_classes(t, n);
    CHECK(dimension_check(n, oracle, ec).all_pass());
  }
}

TEST_CASE("random combinations of N-class sums round trip") {
  auto t = table_of("dihedral:12");
  auto ns = normal_subgroups(t);
  std::mt19937_64 rng(3);
  for (const auto& n : ns) {
    GroupAlgebraElement v{t.group, {}};
    std::vector<Cyclotomic> want;
    for (int c : n.class_indices) {
      Rational q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
      q.canonicalize();
      want.push_back(Cyclotomic(q));
      for (const auto& [e, one] : class_sum(t.group, t.classes, static_cast<size_t>(c)).coeffs)
        v.set(e, v.at(e) + Cyclotomic(q));
    }
    auto coords = membership_and_coords(v, t.classes, n);
    REQUIRE(coords.has_value());
    CHECK(*coords == want);
  }
}
