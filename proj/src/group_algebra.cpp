#include "gct/group_algebra.hpp"

namespace gct {

void GroupAlgebraElement::set(int e, Cyclotomic v) {
  if (v.is_zero())
    coeffs.erase(e);
  else
    coeffs[e] = std::move(v);
}

Cyclotomic GroupAlgebraElement::at(int e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Cyclotomic(0L) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r{group, coeffs};
  for (const auto& [e, v] : o.coeffs) {
    Cyclotomic s = r.at(e) + v;
    r.set(e, std::move(s));
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r{group, {}};
  std::map<int, Cyclotomic> acc;
  for (const auto& [e1, v1] : coeffs)
    for (const auto& [e2, v2] : o.coeffs) {
      int e = group->mul(e1, e2);
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, v1 * v2);
      else
        it->second += v1 * v2;
    }
  for (auto& [e, v] : acc)
    if (!v.is_zero()) r.coeffs.emplace(e, std::move(v));
  return r;
}

bool GroupAlgebraElement::supported_in(const NormalSubgroup& n) const {
  for (const auto& [e, v] : coeffs)
    if (!n.contains_element(e)) return false;
  return true;
}

GroupAlgebraElement class_sum(std::shared_ptr<const PermGroup> g, const ClassData& cd,
                              size_t cls) {
  GroupAlgebraElement s{g, {}};
  for (size_t e = 0; e < g->order(); ++e)
    if (cd.class_of[e] == static_cast<int>(cls)) s.coeffs.emplace(static_cast<int>(e), Cyclotomic(1L));
  return s;
}

std::optional<std::vector<Cyclotomic>> membership_and_coords(
    const GroupAlgebraElement& v, const ClassData& cd, const NormalSubgroup& n) {
  if (!v.supported_in(n)) return std::nullopt;
  // constant on every G-class
  for (size_t cls = 0; cls < cd.count(); ++cls) {
    Cyclotomic want = v.at(cd.representatives[cls]);
    for (size_t e = 0; e < v.group->order(); ++e)
      if (cd.class_of[e] == static_cast<int>(cls) && !(v.at(static_cast<int>(e)) == want))
        return std::nullopt;
  }
  std::vector<Cyclotomic> coords;
  for (int c : n.class_indices) coords.push_back(v.at(cd.representatives[static_cast<size_t>(c)]));
  return coords;
}

CheckReport dimension_check(const NormalSubgroup& n, const SubIrrData& oracle,
                            const EquivClasses& ec) {
  CheckReport rep;
  size_t k = n.class_indices.size();
  rep.add("g-classes-in-n", true, std::to_string(k));
  rep.add("orbits-equal-g-classes", oracle.orbits.size() == k,
          std::to_string(oracle.orbits.size()) + " orbits vs " + std::to_string(k));
  rep.add("blocks-equal-g-classes", ec.blocks.size() == k,
          std::to_string(ec.blocks.size()) + " blocks vs " + std::to_string(k));
  return rep;
}

CheckReport idempotent_support_check(const CharacterTable& t, const EquivClasses& ec,
                                     const NormalSubgroup& n) {
  CheckReport rep;
  auto g = t.group;
  Rational inv_order(1, static_cast<long>(g->order()));
  inv_order.canonicalize();

  // block idempotents; coefficient of x in f_b is sum_chi chi(1)chi(x^{-1})/|G|
  std::vector<GroupAlgebraElement> f;
  for (const auto& block : ec.blocks) {
    GroupAlgebraElement fb{g, {}};
    for (size_t e = 0; e < g->order(); ++e) {
      int inv_cls = t.classes.class_of[static_cast<size_t>(g->inv(static_cast<int>(e)))];
      Cyclotomic coeff(0L);
      for (int row : block)
        coeff += Cyclotomic(static_cast<long>(t.degrees[static_cast<size_t>(row)])) *
                 t.values[static_cast<size_t>(row)][static_cast<size_t>(inv_cls)];
      coeff *= Cyclotomic(inv_order);
      fb.set(static_cast<int>(e), std::move(coeff));
    }
    f.push_back(std::move(fb));
  }

  bool support_ok = true, constant_ok = true;
  for (const auto& fb : f) {
    support_ok = support_ok && fb.supported_in(n);
    constant_ok = constant_ok && membership_and_coords(fb, t.classes, n).has_value();
  }
  rep.add("idempotent-support-in-n", support_ok);
  rep.add("idempotent-constant-on-classes", constant_ok);

  bool orthogonal_idempotent = true;
  for (size_t a = 0; a < f.size() && orthogonal_idempotent; ++a)
    for (size_t b = a; b < f.size(); ++b) {
      GroupAlgebraElement prod = f[a] * f[b];
      const GroupAlgebraElement& want = f[a];
      if (a == b) {
        if (!(prod == want)) {
          orthogonal_idempotent = false;
          break;
        }
      } else if (!prod.coeffs.empty()) {
        orthogonal_idempotent = false;
        break;
      }
    }
  rep.add("idempotents-orthogonal", orthogonal_idempotent);

  GroupAlgebraElement sum{g, {}};
  for (const auto& fb : f) sum = sum + fb;
  GroupAlgebraElement identity{g, {}};
  identity.set(0, Cyclotomic(1L));
  rep.add("idempotents-sum-to-identity", sum == identity);
  return rep;
}

CheckReport centrality_check(const CharacterTable& t) {
  CheckReport rep;
  auto g = t.group;
  bool ok = true;
  for (size_t cls = 0; cls < t.classes.count() && ok; ++cls) {
    GroupAlgebraElement ks = class_sum(g, t.classes, cls);
    for (const auto& gen : g->generators()) {
      GroupAlgebraElement ge{g, {}};
      ge.set(g->index_of(gen), Cyclotomic(1L));
      if (!(ks * ge == ge * ks)) {
        ok = false;
        break;
      }
    }
  }
  rep.add("class-sums-central", ok);
  return rep;
}

}  // namespace gct
