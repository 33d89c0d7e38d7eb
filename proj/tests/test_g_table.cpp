#include <doctest.h>

#include <set>

#include "gct/analysis.hpp"
#include "published_tables.hpp"

using namespace gct;

namespace {

CharacterTable table_of(const std::string& spec) {
  return character_table(std::make_shared<PermGroup>(catalog(spec)));
}

// main worked example: G = D8 x A4, N = intersection of the four kernels
// of the linear characters that contain it, order 24
struct Ex1 {
  CharacterTable t;
  fixtures::TableMatch match;
  NormalSubgroup n;
  Ex1() : t(table_of("D8xA4")) {
    auto m = fixtures::match_table(t, fixtures::d8xa4_table());
    REQUIRE(m.has_value());
    match = *m;
    std::vector<int> inter = kernel_of(t, static_cast<size_t>(match.row_map[0]));
    for (int published_row : {1, 2, 3}) {
      auto ker = kernel_of(t, static_cast<size_t>(match.row_map[published_row]));
      std::vector<int> next;
      std::set_intersection(inter.begin(), inter.end(), ker.begin(), ker.end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    n = normal_from_classes(t, inter);
  }
};

Ex1& ex1() {
  static Ex1 instance;
  return instance;
}

}  // namespace

TEST_CASE("D8xA4 table matches the published 20x20 matrix") {
  auto& e = ex1();
  CHECK(e.t.k() == 20);
  CHECK(verify_orthogonality(e.t).pass);
  // match found in the fixture setup already; spot check one translated cell
  int r20 = e.match.row_map[19];
  int c2c = e.match.col_map[4];
  CHECK(e.t.values[static_cast<size_t>(r20)][static_cast<size_t>(c2c)] == Cyclotomic(-6L));
}

TEST_CASE("a single sign flip in the matched table breaks orthogonality") {
  auto& e = ex1();
  CharacterTable broken = e.t;
  size_t r = static_cast<size_t>(e.match.row_map[15]);
  size_t c = static_cast<size_t>(e.match.col_map[1]);
  broken.values[r][c] = -broken.values[r][c];
  CHECK(!verify_orthogonality(broken).pass);
}

TEST_CASE("D8xA4: order-24 normal subgroup and its equivalence classes") {
  auto& e = ex1();
  CHECK(e.n.order == 24);
  CHECK(e.n.class_indices.size() == 8);

  auto ec = equivalence_classes(e.t, e.n);
  REQUIRE(ec.blocks.size() == 8);
  // translate the published partition through the row match
  std::set<std::set<int>> want;
  for (const auto& block : fixtures::d8xa4_order24_blocks()) {
    std::set<int> b;
    for (int published_row : block) b.insert(e.match.row_map[static_cast<size_t>(published_row)]);
    want.insert(b);
  }
  std::set<std::set<int>> got;
  for (const auto& block : ec.blocks) got.insert(std::set<int>(block.begin(), block.end()));
  CHECK(got == want);
  // ratio e_chi/e_rep equals the degree ratio inside a block
  for (size_t row = 0; row < e.t.k(); ++row) {
    int rep = ec.representative[static_cast<size_t>(ec.block_of[row])];
    Rational want_ratio(static_cast<long>(e.t.degrees[row]),
                        static_cast<long>(e.t.degrees[static_cast<size_t>(rep)]));
    want_ratio.canonicalize();
    CHECK(ec.ratio_to_rep[row] == want_ratio);
  }
}

TEST_CASE("D8xA4: X equals the published 8x8 matrix with the published representatives") {
  auto& e = ex1();
  auto ec = equivalence_classes(e.t, e.n);
  std::vector<int> reps;
  for (int published_row : fixtures::d8xa4_order24_reps())
    reps.push_back(e.match.row_map[static_cast<size_t>(published_row)]);
  GCharTable x = g_character_table(e.t, e.n, ec, &reps);
  auto paper = fixtures::d8xa4_order24_x();
  auto d = fixtures::d8xa4_order24_d();

  // column c of the published X corresponds to our column for that G-class
  std::vector<int> col_to_local(paper.col_names.size(), -1);
  for (size_t j = 0; j < paper.col_names.size(); ++j) {
    // published column labels of X are a sub-list of the big table's labels
    const std::vector<std::string> big_labels = fixtures::d8xa4_table().col_names;
    int big_idx = -1;
    for (size_t c = 0; c < big_labels.size(); ++c)
      if (big_labels[c] == paper.col_names[j]) big_idx = static_cast<int>(c);
    REQUIRE(big_idx >= 0);
    int ours = e.match.col_map[static_cast<size_t>(big_idx)];
    for (size_t local = 0; local < x.column_classes.size(); ++local)
      if (x.column_classes[local] == ours) col_to_local[j] = static_cast<int>(local);
    REQUIRE(col_to_local[j] >= 0);
  }
  // rows: block of the published representative
  for (size_t i = 0; i < paper.rows.size(); ++i) {
    int our_rep = reps[i];
    int b = ec.block_of[static_cast<size_t>(our_rep)];
    for (size_t j = 0; j < paper.rows[i].size(); ++j) {
      CHECK(x.X[static_cast<size_t>(b)][static_cast<size_t>(col_to_local[j])] == paper.rows[i][j]);
      CHECK(x.D[static_cast<size_t>(col_to_local[j])] == d[j]);
    }
  }
}

TEST_CASE("D8xA4: relation vectors and parameter inference") {
  auto& e = ex1();
  auto na = analyze_normal(e.t, e.n, nullptr, 0);

  // order blocks as published: by the matched representative
  std::vector<size_t> published_block_order;
  for (int published_rep : fixtures::d8xa4_order24_reps()) {
    int our_row = e.match.row_map[static_cast<size_t>(published_rep)];
    published_block_order.push_back(static_cast<size_t>(na.blocks.block_of[static_cast<size_t>(our_row)]));
  }
  std::vector<int64_t> A, B;
  for (size_t b : published_block_order) {
    A.push_back(to_int64(na.params.relations[b].A));
    B.push_back(to_int64(na.params.relations[b].B));
  }
  CHECK(A == std::vector<int64_t>{1, 1, 1, 4, 4, 4, 1, 4});
  CHECK(B == std::vector<int64_t>{1, 1, 1, 1, 1, 1, 9, 9});

  // inference: unique solutions per block, block 8 gives (2,1,3)
  std::vector<ParamTriple> want{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {2, 1, 1},
                                {2, 1, 1}, {2, 1, 1}, {1, 1, 3}, {2, 1, 3}};
  for (size_t i = 0; i < 8; ++i) {
    size_t b = published_block_order[i];
    REQUIRE(na.params.solutions[b].size() == 1);
    CHECK(na.params.determined[b]);
    CHECK(na.params.solutions[b][0] == want[i]);
  }

  // ramification vector e = (1,1,1,2,2,2,1,2) in the published block order
  std::vector<uint64_t> evec;
  for (size_t b : published_block_order) evec.push_back(na.xhat.e[b]);
  CHECK(evec == std::vector<uint64_t>{1, 1, 1, 2, 2, 2, 1, 2});

  // restriction irreducibility holds exactly for blocks 1,2,3,7
  std::set<size_t> irreducible{0, 1, 2, 6};
  for (size_t i = 0; i < 8; ++i)
    CHECK(restriction_irreducible(na.x, published_block_order[i]) == (irreducible.count(i) > 0));

  // every theta is G-invariant: all orbits singletons
  for (auto ti : na.oracle.t) CHECK(ti == 1);
  CHECK(na.counts.real_rows == na.counts.real_classes);
  CHECK(na.checks.all_pass());
}

TEST_CASE("D8xA4: structural deductions") {
  auto& e = ex1();
  auto na = analyze_normal(e.t, e.n, nullptr, 0);
  bool found_sylow2 = false;
  for (const auto& d : na.deductions.items) {
    if (d.kind == "abelian-normal-sylow" && d.statement.find(" 2 ") != std::string::npos) {
      found_sylow2 = true;
      CHECK(d.oracle_confirmed);
    }
    CHECK(d.oracle_confirmed);
  }
  CHECK(found_sylow2);
  // X has zeros, so no nilpotency claim; N is in fact not nilpotent
  for (const auto& d : na.deductions.items) CHECK(d.kind != "no-zeros-nilpotent");
  CHECK(!is_nilpotent(*na.oracle.n_group));
  // prime set of the two degree-3 invariant characters is {3}
  int count3 = 0;
  for (size_t b = 0; b < na.x.k(); ++b) {
    uint64_t inv_deg = static_cast<uint64_t>(to_int64(*na.xhat.Xhat[b][0].rational_value()));
    if (inv_deg == 3) ++count3;
  }
  CHECK(count3 == 2);
}

TEST_CASE("AutD16: both order-8 normal subgroups") {
  auto t = table_of("AutD16");
  auto match = fixtures::match_table(t, fixtures::autd16_table());
  REQUIRE(match.has_value());

  auto intersect_kernels = [&](int r1, int r2) {
    auto k1 = kernel_of(t, static_cast<size_t>(match->row_map[r1]));
    auto k2 = kernel_of(t, static_cast<size_t>(match->row_map[r2]));
    std::vector<int> inter;
    std::set_intersection(k1.begin(), k1.end(), k2.begin(), k2.end(),
                          std::back_inserter(inter));
    return normal_from_classes(t, inter);
  };
  NormalSubgroup n = intersect_kernels(1, 5);  // 1A 2B 4A 2D
  NormalSubgroup m = intersect_kernels(3, 7);  // 1A 8A 4A 2D
  REQUIRE(n.order == 8);
  REQUIRE(m.order == 8);

  auto na_n = analyze_normal(t, n, nullptr, 0);
  auto na_m = analyze_normal(t, m, nullptr, 0);
  CHECK(na_n.checks.all_pass());
  CHECK(na_m.checks.all_pass());

  // published X for N with representatives {chi1, chi3, chi9, chi11}
  auto ec_n = equivalence_classes(t, n);
  std::vector<int> reps;
  for (int published_row : fixtures::autd16_order8_reps())
    reps.push_back(match->row_map[static_cast<size_t>(published_row)]);
  GCharTable x_n = g_character_table(t, n, ec_n, &reps);
  auto paper = fixtures::autd16_order8_x();

  // identify our local columns for the published labels 1A 2B 4A 2D
  const auto big_labels = fixtures::autd16_table().col_names;
  auto local_col = [&](const GCharTable& x, const std::string& label) {
    int big_idx = -1;
    for (size_t c = 0; c < big_labels.size(); ++c)
      if (big_labels[c] == label) big_idx = static_cast<int>(c);
    REQUIRE(big_idx >= 0);
    int ours = match->col_map[static_cast<size_t>(big_idx)];
    for (size_t local = 0; local < x.column_classes.size(); ++local)
      if (x.column_classes[local] == ours) return static_cast<int>(local);
    REQUIRE(false);
    return -1;
  };
  for (size_t i = 0; i < 4; ++i) {
    int b = ec_n.block_of[static_cast<size_t>(reps[i])];
    for (size_t j = 0; j < 4; ++j) {
      int lc = local_col(x_n, paper.col_names[j]);
      CHECK(x_n.X[static_cast<size_t>(b)][static_cast<size_t>(lc)] == paper.rows[i][j]);
      CHECK(x_n.D[static_cast<size_t>(lc)] == fixtures::autd16_order8_d()[j]);
    }
  }

  // blocks have sizes 4,4,2,1 and the published membership
  std::set<std::set<int>> want_blocks;
  for (const auto& block : fixtures::autd16_order8_blocks()) {
    std::set<int> bset;
    for (int pr : block) bset.insert(match->row_map[static_cast<size_t>(pr)]);
    want_blocks.insert(bset);
  }
  std::set<std::set<int>> got_blocks;
  for (const auto& block : ec_n.blocks) got_blocks.insert(std::set<int>(block.begin(), block.end()));
  CHECK(got_blocks == want_blocks);

  // A = B = (1,1,2,4) for both subgroups
  auto ab_multiset = [](const NormalAnalysis& na) {
    std::multiset<std::pair<int64_t, int64_t>> s;
    for (size_t b = 0; b < na.x.k(); ++b)
      s.insert({to_int64(na.params.relations[b].A), to_int64(na.params.relations[b].B)});
    return s;
  };
  std::multiset<std::pair<int64_t, int64_t>> want_ab{{1, 1}, {1, 1}, {2, 2}, {4, 4}};
  CHECK(ab_multiset(na_n) == want_ab);
  CHECK(ab_multiset(na_m) == want_ab);

  // X of M equals X of N after the stated relabeling (2B <-> 8A), i.e. the
  // matrices agree entrywise with the same D, columns ordered 1A 2B/8A 4A 2D
  auto ec_m = equivalence_classes(t, m);
  GCharTable x_m_default = g_character_table(t, m, ec_m, nullptr);
  GCharTable x_n_default = g_character_table(t, n, ec_n, nullptr);
  auto values_in_order = [&](const GCharTable& x, const std::vector<std::string>& labels) {
    std::vector<std::vector<Cyclotomic>> out(x.k());
    for (const auto& label : labels) {
      int lc = local_col(x, label);
      for (size_t b = 0; b < x.k(); ++b) out[b].push_back(x.X[b][static_cast<size_t>(lc)]);
    }
    return out;
  };
  auto vn = values_in_order(x_n_default, {"1A", "2B", "4A", "2D"});
  auto vm = values_in_order(x_m_default, {"1A", "8A", "4A", "2D"});
  // compare as row multisets (representative order may differ)
  auto as_set = [](const std::vector<std::vector<Cyclotomic>>& rows) {
    std::multiset<std::string> s;
    for (const auto& r : rows) {
      std::string key;
      for (const auto& v : r) key += v.to_string() + "|";
      s.insert(key);
    }
    return s;
  };
  CHECK(as_set(vn) == as_set(vm));

  // the ambiguous block: A = B = 4 admits exactly (1,4,1) and (2,1,2); the
  // oracle resolves it to (1,4,1) for M (abelian) and (2,1,2) for N
  auto ambiguous_block = [&](const NormalAnalysis& na) {
    for (size_t b = 0; b < na.x.k(); ++b)
      if (na.params.relations[b].A == 4) return b;
    REQUIRE(false);
    return size_t{0};
  };
  size_t bn = ambiguous_block(na_n), bm = ambiguous_block(na_m);
  std::vector<ParamTriple> want_sols{{1, 4, 1}, {2, 1, 2}};
  CHECK(na_n.params.solutions[bn] == want_sols);
  CHECK(na_m.params.solutions[bm] == want_sols);
  CHECK(!na_n.params.determined[bn]);
  CHECK(!na_m.params.determined[bm]);
  size_t on = static_cast<size_t>(na_n.xhat.orbit_for_block[bn]);
  size_t om = static_cast<size_t>(na_m.xhat.orbit_for_block[bm]);
  CHECK(ParamTriple{na_n.xhat.e[bn], na_n.oracle.t[on], na_n.oracle.theta_degrees[on]} ==
        ParamTriple{2, 1, 2});
  CHECK(ParamTriple{na_m.xhat.e[bm], na_m.oracle.t[om], na_m.oracle.theta_degrees[om]} ==
        ParamTriple{1, 4, 1});
}

TEST_CASE("HolC5 G-character table of C5") {
  auto t = table_of("HolC5");
  auto ns = normal_subgroups(t);
  REQUIRE(ns[1].order == 5);
  auto na = analyze_normal(t, ns[1], nullptr, 0);
  REQUIRE(na.x.k() == 2);
  CHECK(na.x.X[0] == std::vector<Cyclotomic>{Cyclotomic(1L), Cyclotomic(1L)});
  CHECK(na.x.X[1] == std::vector<Cyclotomic>{Cyclotomic(4L), Cyclotomic(-1L)});
  CHECK(na.x.D == std::vector<uint64_t>{1, 4});
  CHECK(na.xhat.Xhat == na.x.X);  // all ramification numbers are 1
  CHECK(na.counts.real_rows == 2);
  CHECK(na.counts.real_classes == 2);
  // divisibility d | 5 removes (2,1,2); the solution is unique
  REQUIRE(na.params.solutions.size() == 2);
  CHECK(na.params.solutions[1] == std::vector<ParamTriple>{{1, 4, 1}});
  CHECK(na.params.determined[1]);
  CHECK(na.checks.all_pass());
  // two real G-classes force a normal Sylow 2-subgroup of N (trivial here)
  bool found = false;
  for (const auto& d : na.deductions.items)
    if (d.kind == "two-real-classes-sylow2") {
      found = true;
      CHECK(d.oracle_confirmed);
    }
  CHECK(found);
}

TEST_CASE("N = G gives the character table back") {
  auto t = table_of("symmetric:4");
  auto ns = normal_subgroups(t);
  auto na = analyze_normal(t, ns.back(), nullptr, 0);
  CHECK(na.x.k() == t.k());
  for (size_t b = 0; b < na.x.k(); ++b) {
    CHECK(na.xhat.e[b] == 1);
    CHECK(na.xhat.Xhat[b] == na.x.X[b]);
    CHECK(to_int64(na.params.relations[b].A) == 1);
    CHECK(to_int64(na.params.relations[b].B) ==
          static_cast<int64_t>(t.degrees[static_cast<size_t>(na.x.row_chars[b])] *
                               t.degrees[static_cast<size_t>(na.x.row_chars[b])]));
  }
  CHECK(na.checks.all_pass());
}

TEST_CASE("N = 1 is the one-by-one table") {
  auto t = table_of("symmetric:4");
  auto ns = normal_subgroups(t);
  auto na = analyze_normal(t, ns[0], nullptr, 0);
  CHECK(na.x.k() == 1);
  CHECK(na.x.X[0][0] == Cyclotomic(1L));
  CHECK(na.checks.all_pass());
}

TEST_CASE("bad representative lists are rejected") {
  auto t = table_of("HolC5");
  auto ns = normal_subgroups(t);
  auto ec = equivalence_classes(t, ns[1]);
  std::vector<int> too_few{0};
  CHECK_THROWS_AS(g_character_table(t, ns[1], ec, &too_few), Error);
  std::vector<int> same_block{0, 1};  // rows 0,1 are both linear: same block
  CHECK_THROWS_AS(g_character_table(t, ns[1], ec, &same_block), Error);
}

TEST_CASE("generalized Brauer check with inversion and galois twists") {
  auto& e = ex1();
  auto na = analyze_normal(e.t, e.n, nullptr, 0);
  CHECK(generalized_brauer_check(na.xhat, na.x, e.t, TableAction{true, -1}).all_pass());
  // exponent of N is 12; galois(5) and galois(7) are compatible actions
  CHECK(generalized_brauer_check(na.xhat, na.x, e.t, TableAction{false, 5}).all_pass());
  CHECK(generalized_brauer_check(na.xhat, na.x, e.t, TableAction{false, 7}).all_pass());
}
