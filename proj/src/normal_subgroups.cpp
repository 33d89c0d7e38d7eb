#include "gct/normal_subgroups.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gct {

namespace {

std::string class_set_id(const PermGroup& g, const ClassData& cd,
                         const std::vector<int>& classes) {
  // hash over the sorted image lists of the member class representatives
  std::vector<std::vector<int>> reps;
  for (int c : classes) reps.push_back(g.element(cd.representatives[static_cast<size_t>(c)]).images());
  std::sort(reps.begin(), reps.end());
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& im : reps) {
    mix(im.size());
    for (int v : im) mix(static_cast<uint64_t>(v) + 1);
  }
  std::ostringstream os;
  os << "n" << std::hex << h;
  return os.str();
}

bool closed_under_multiplication(const PermGroup& g, const std::vector<uint8_t>& member) {
  std::vector<int> elems;
  for (size_t e = 0; e < member.size(); ++e)
    if (member[e]) elems.push_back(static_cast<int>(e));
  for (int a : elems)
    for (int b : elems)
      if (!member[static_cast<size_t>(g.mul(a, b))]) return false;
  return true;
}

}  // namespace

std::vector<int> kernel_of(const CharacterTable& t, size_t row) {
  std::vector<int> out;
  for (size_t c = 0; c < t.k(); ++c)
    if (t.values[row][c] == t.values[row][0]) out.push_back(static_cast<int>(c));
  return out;
}

NormalSubgroup normal_from_classes(const CharacterTable& t, std::vector<int> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  NormalSubgroup n;
  n.class_indices = std::move(classes);
  n.membership.assign(t.group->order(), 0);
  for (size_t e = 0; e < t.group->order(); ++e)
    if (std::binary_search(n.class_indices.begin(), n.class_indices.end(),
                           t.classes.class_of[e]))
      n.membership[e] = 1;
  for (int c : n.class_indices) n.order += t.classes.sizes[static_cast<size_t>(c)];
  n.id = class_set_id(*t.group, t.classes, n.class_indices);
  if (n.class_indices.empty() || n.class_indices[0] != 0)
    fail(ErrorKind::Internal, "normal subgroup misses the identity class");
  if (t.group->order() % n.order)
    fail(ErrorKind::Internal, "class union order does not divide |G|");
  if (!closed_under_multiplication(*t.group, n.membership))
    fail(ErrorKind::Internal, "class union is not closed under multiplication");
  return n;
}

std::vector<NormalSubgroup> normal_subgroups(const CharacterTable& t) {
  std::set<std::vector<int>> sets;
  size_t k = t.k();
  for (size_t i = 0; i < k; ++i) sets.insert(kernel_of(t, i));
  // close under pairwise intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(sets.begin(), sets.end());
    for (size_t a = 0; a < current.size() && !grew; ++a)
      for (size_t b = a + 1; b < current.size(); ++b) {
        std::vector<int> inter;
        std::set_intersection(current[a].begin(), current[a].end(),
                              current[b].begin(), current[b].end(),
                              std::back_inserter(inter));
        if (sets.insert(inter).second) {
          grew = true;
          break;
        }
      }
  }
  std::vector<NormalSubgroup> out;
  for (const auto& s : sets) out.push_back(normal_from_classes(t, s));
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    return std::tuple(a.order, a.class_indices) < std::tuple(b.order, b.class_indices);
  });
  return out;
}

std::vector<std::vector<int>> normal_class_sets_bruteforce(const PermGroup& g,
                                                           const ClassData& cd) {
  size_t k = cd.count();
  // class product support from the class matrices
  std::vector<std::vector<std::vector<int>>> prod(k);
  for (size_t i = 0; i < k; ++i) {
    auto m = class_matrix(g, cd, i);
    prod[i].resize(k);
    for (size_t j = 0; j < k; ++j)
      for (size_t l = 0; l < k; ++l)
        if (m[j][l]) prod[i][j].push_back(static_cast<int>(l));
  }
  auto closure = [&](std::set<int> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : cur)
          for (int l : prod[static_cast<size_t>(a)][static_cast<size_t>(b)])
            if (s.insert(l).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
  };
  std::set<std::vector<int>> found;
  found.insert(closure({0}));
  // atoms: closure of the identity class plus one further class
  std::vector<std::vector<int>> atoms;
  for (size_t c = 1; c < k; ++c) atoms.push_back(closure({0, static_cast<int>(c)}));
  for (const auto& a : atoms) found.insert(a);
  // join-closure: all unions of already found sets with atoms
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (const auto& s : cur)
      for (const auto& a : atoms) {
        std::set<int> u(s.begin(), s.end());
        u.insert(a.begin(), a.end());
        if (found.insert(closure(std::move(u))).second) grew = true;
      }
  }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

NormalSubgroup normal_by_id(const CharacterTable& t, const std::string& id) {
  for (auto& n : normal_subgroups(t))
    if (n.id == id) return n;
  fail(ErrorKind::BadNormalId, "no normal subgroup with id '" + id + "'");
}

PermGroup materialize(const PermGroup& g, const NormalSubgroup& n) {
  // grow a generating set greedily; each added element at least doubles the
  // subgroup, so only O(log |N|) closures are computed
  std::vector<Permutation> gens;
  std::set<Permutation> current{Permutation::identity(g.degree())};
  for (size_t e = 1; e < g.order() && current.size() < n.order; ++e) {
    if (!n.membership[e] || current.count(g.element(static_cast<int>(e)))) continue;
    gens.push_back(g.element(static_cast<int>(e)));
    auto closure = PermGroup::from_generators(gens, g.degree());
    current = std::set<Permutation>(closure.elements().begin(), closure.elements().end());
  }
  PermGroup sub = PermGroup::from_generators(gens, g.degree());
  if (sub.order() != n.order)
    fail(ErrorKind::Internal, "materialized subgroup has wrong order");
  return sub;
}

std::vector<int> SubIrrData::class_action(const PermGroup& g_group, int g) const {
  const ClassData& ncd = table_n.classes;
  std::vector<int> out(ncd.count());
  for (size_t c = 0; c < ncd.count(); ++c) {
    int rep_g = n_index_to_g[static_cast<size_t>(ncd.representatives[c])];
    int conj = g_group.conj(g, rep_g);
    int n_idx = n_group->index_of(g_group.element(conj));
    if (n_idx < 0) fail(ErrorKind::Internal, "conjugate left the normal subgroup");
    out[c] = ncd.class_of[static_cast<size_t>(n_idx)];
  }
  return out;
}

std::vector<int> SubIrrData::irr_action(const PermGroup& g_group, int g) const {
  auto pi = class_action(g_group, g);
  size_t k = table_n.k();
  std::vector<int> out(k, -1);
  for (size_t i = 0; i < k; ++i) {
    // theta^g as a row vector: value at class c is theta(pi(c))
    std::vector<Cyclotomic> row(k);
    for (size_t c = 0; c < k; ++c) row[c] = table_n.values[i][static_cast<size_t>(pi[c])];
    for (size_t j = 0; j < k; ++j)
      if (table_n.values[j] == row) {
        out[i] = static_cast<int>(j);
        break;
      }
    if (out[i] < 0)
      fail(ErrorKind::ActionInconsistent,
           "conjugate character matches no irreducible of N");
  }
  return out;
}

SubIrrData g_action_on_irrN(std::shared_ptr<const PermGroup> g,
                            const NormalSubgroup& n, uint64_t seed) {
  SubIrrData sub;
  sub.n_group = std::make_shared<PermGroup>(materialize(*g, n));
  sub.table_n = character_table(sub.n_group, seed);
  sub.n_index_to_g.resize(sub.n_group->order());
  for (size_t i = 0; i < sub.n_group->order(); ++i) {
    int gi = g->index_of(sub.n_group->element(static_cast<int>(i)));
    if (gi < 0) fail(ErrorKind::Internal, "N element not found in G");
    sub.n_index_to_g[i] = gi;
  }
  ClassData gcd = conjugacy_classes(*g);
  sub.g_class_of_n_class.resize(sub.table_n.k());
  for (size_t c = 0; c < sub.table_n.k(); ++c) {
    int rep_g = sub.n_index_to_g[static_cast<size_t>(sub.table_n.classes.representatives[c])];
    sub.g_class_of_n_class[c] = gcd.class_of[static_cast<size_t>(rep_g)];
  }

  // orbits of the permutations of Irr(N) induced by the generators of G
  size_t k = sub.table_n.k();
  std::vector<std::vector<int>> gen_actions;
  for (const auto& gen : g->generators())
    gen_actions.push_back(sub.irr_action(*g, g->index_of(gen)));
  sub.orbit_of.assign(k, -1);
  for (size_t i = 0; i < k; ++i) {
    if (sub.orbit_of[i] >= 0) continue;
    int orbit = static_cast<int>(sub.orbits.size());
    std::vector<int> members{static_cast<int>(i)};
    sub.orbit_of[i] = orbit;
    for (size_t pos = 0; pos < members.size(); ++pos)
      for (const auto& act : gen_actions) {
        int j = act[static_cast<size_t>(members[pos])];
        if (sub.orbit_of[static_cast<size_t>(j)] < 0) {
          sub.orbit_of[static_cast<size_t>(j)] = orbit;
          members.push_back(j);
        }
      }
    std::sort(members.begin(), members.end());
    sub.theta_reps.push_back(members[0]);
    sub.t.push_back(members.size());
    sub.theta_degrees.push_back(sub.table_n.degrees[static_cast<size_t>(members[0])]);
    sub.orbits.push_back(std::move(members));
  }
  uint64_t index = g->order() / n.order;
  for (uint64_t ti : sub.t)
    if (index % ti)
      fail(ErrorKind::Internal, "orbit length does not divide |G:N|");
  return sub;
}

BrauerElementReport brauer_per_element_check(const PermGroup& g,
                                             const NormalSubgroup& n,
                                             const SubIrrData& sub) {
  BrauerElementReport rep;
  size_t k = sub.table_n.k();
  std::vector<uint8_t> in_seen_coset(g.order(), 0);
  std::vector<uint8_t> char_fixed_all(k, 1), class_fixed_all(k, 1);
  for (size_t e = 0; e < g.order(); ++e) {
    if (in_seen_coset[e]) continue;
    for (size_t m = 0; m < n.membership.size(); ++m)
      if (n.membership[m])
        in_seen_coset[static_cast<size_t>(g.mul(static_cast<int>(e), static_cast<int>(m)))] = 1;
    auto pi = sub.class_action(g, static_cast<int>(e));
    auto sigma = sub.irr_action(g, static_cast<int>(e));
    uint64_t fc = 0, fk = 0;
    for (size_t i = 0; i < k; ++i) {
      if (sigma[i] == static_cast<int>(i)) ++fc;
      else char_fixed_all[i] = 0;
      if (pi[i] == static_cast<int>(i)) ++fk;
      else class_fixed_all[i] = 0;
    }
    rep.per_element.push_back({static_cast<int>(e), fc, fk});
    if (fc != fk) rep.per_element_equal = false;
  }
  for (size_t i = 0; i < k; ++i) {
    rep.invariant_chars += char_fixed_all[i];
    rep.invariant_classes += class_fixed_all[i];
  }
  rep.orbit_count = sub.orbits.size();
  rep.g_class_count = n.class_indices.size();
  return rep;
}

std::vector<int> real_g_classes(const CharacterTable& t, const NormalSubgroup& n) {
  auto inv = power_class_map(*t.group, t.classes, -1);
  std::vector<int> out;
  for (int c : n.class_indices)
    if (inv[static_cast<size_t>(c)] == c) out.push_back(c);
  return out;
}

std::optional<std::vector<int>> normal_sylow_elements(const PermGroup& g, uint64_t p) {
  // the set of p-elements is a (normal) Sylow p-subgroup iff it is closed
  std::vector<int> pelems;
  std::vector<uint8_t> member(g.order(), 0);
  for (size_t e = 0; e < g.order(); ++e) {
    uint64_t o = g.element_order(static_cast<int>(e));
    bool ppower = true;
    while (o > 1) {
      if (o % p) {
        ppower = false;
        break;
      }
      o /= p;
    }
    if (ppower) {
      pelems.push_back(static_cast<int>(e));
      member[e] = 1;
    }
  }
  for (int a : pelems)
    for (int b : pelems)
      if (!member[static_cast<size_t>(g.mul(a, b))]) return std::nullopt;
  return pelems;
}

bool has_normal_sylow(const PermGroup& g, uint64_t p) {
  return normal_sylow_elements(g, p).has_value();
}

bool has_abelian_normal_sylow(const PermGroup& g, uint64_t p) {
  auto elems = normal_sylow_elements(g, p);
  if (!elems) return false;
  for (int a : *elems)
    for (int b : *elems)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const PermGroup& g) {
  for (const auto& a : g.generators())
    for (const auto& b : g.generators())
      if (!(a * b == b * a)) return false;
  return true;
}

bool is_nilpotent(const PermGroup& g) {
  for (uint64_t p : prime_divisors(g.order()))
    if (!has_normal_sylow(g, p)) return false;
  return true;
}

}  // namespace gct
