#include "gct/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace gct {

PermGroup PermGroup::from_generators(std::vector<Permutation> gens,
                                     int degree_if_empty, uint64_t order_cap) {
  PermGroup g;
  if (gens.empty()) {
    g.degree_ = degree_if_empty;
  } else {
    g.degree_ = gens[0].degree();
    for (const auto& p : gens)
      if (p.degree() != g.degree_)
        fail(ErrorKind::DegreeMismatch, "generators have mixed degrees");
  }
  g.generators_ = std::move(gens);

  Permutation id = Permutation::identity(g.degree_);
  g.elements_.push_back(id);
  g.index_[id] = 0;
  std::vector<Permutation> level{id};
  while (!level.empty()) {
    std::set<Permutation> next;
    for (const auto& e : level)
      for (const auto& gen : g.generators_) {
        Permutation p = e * gen;
        if (!g.index_.count(p)) next.insert(p);
      }
    level.clear();
    for (const auto& p : next) {
      if (g.elements_.size() >= order_cap)
        fail(ErrorKind::OrderCapExceeded,
             "group order exceeds cap " + std::to_string(order_cap));
      g.index_[p] = static_cast<int>(g.elements_.size());
      g.elements_.push_back(p);
      level.push_back(p);
    }
  }

  g.inverse_.resize(g.elements_.size());
  for (size_t i = 0; i < g.elements_.size(); ++i) {
    int j = g.index_of(g.elements_[i].inverse());
    if (j < 0) fail(ErrorKind::Internal, "closure not closed under inverse");
    g.inverse_[i] = j;
  }
  return g;
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int i, int j) const {
  int r = index_of(elements_[static_cast<size_t>(i)] * elements_[static_cast<size_t>(j)]);
  if (r < 0) fail(ErrorKind::Internal, "product left the group");
  return r;
}

int PermGroup::conj(int g, int x) const {
  const Permutation& pg = elements_[static_cast<size_t>(g)];
  int r = index_of(pg * elements_[static_cast<size_t>(x)] * pg.inverse());
  if (r < 0) fail(ErrorKind::Internal, "conjugate left the group");
  return r;
}

int PermGroup::power(int i, long k) const {
  int r = index_of(elements_[static_cast<size_t>(i)].power(k));
  if (r < 0) fail(ErrorKind::Internal, "power left the group");
  return r;
}

uint64_t PermGroup::exponent() const {
  uint64_t e = 1;
  for (const auto& p : elements_) e = lcm_u64(e, p.order());
  return e;
}

std::string PermGroup::content_hash() const {
  std::vector<const Permutation*> sorted;
  sorted.reserve(elements_.size());
  for (const auto& p : elements_) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const Permutation* a, const Permutation* b) { return *a < *b; });
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(degree_));
  for (const auto* p : sorted)
    for (int v : p->images()) mix(static_cast<uint64_t>(v) + 1);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

ClassData conjugacy_classes(const PermGroup& g) {
  size_t n = g.order();
  std::vector<int> raw_class(n, -1);
  std::vector<std::vector<int>> members;
  for (size_t i = 0; i < n; ++i) {
    if (raw_class[i] >= 0) continue;
    int cls = static_cast<int>(members.size());
    std::vector<int> orbit{static_cast<int>(i)};
    raw_class[i] = cls;
    for (size_t k = 0; k < orbit.size(); ++k)
      for (const auto& gen : g.generators()) {
        int y = g.index_of(gen * g.element(orbit[k]) * gen.inverse());
        if (raw_class[static_cast<size_t>(y)] < 0) {
          raw_class[static_cast<size_t>(y)] = cls;
          orbit.push_back(y);
        }
      }
    members.push_back(std::move(orbit));
  }

  // canonical order: (element order, class size, smallest member index)
  std::vector<int> perm(members.size());
  for (size_t i = 0; i < members.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<uint64_t> ord(members.size()), sz(members.size());
  std::vector<int> min_member(members.size());
  for (size_t i = 0; i < members.size(); ++i) {
    min_member[i] = *std::min_element(members[i].begin(), members[i].end());
    ord[i] = g.element_order(min_member[i]);
    sz[i] = members[i].size();
  }
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    auto ka = std::tuple(ord[static_cast<size_t>(a)], sz[static_cast<size_t>(a)], min_member[static_cast<size_t>(a)]);
    auto kb = std::tuple(ord[static_cast<size_t>(b)], sz[static_cast<size_t>(b)], min_member[static_cast<size_t>(b)]);
    return ka < kb;
  });

  ClassData cd;
  cd.class_of.resize(n);
  std::vector<int> new_index(members.size());
  for (size_t ni = 0; ni < perm.size(); ++ni) {
    int oi = perm[ni];
    new_index[static_cast<size_t>(oi)] = static_cast<int>(ni);
    cd.representatives.push_back(min_member[static_cast<size_t>(oi)]);
    cd.sizes.push_back(sz[static_cast<size_t>(oi)]);
    cd.element_orders.push_back(ord[static_cast<size_t>(oi)]);
  }
  for (size_t i = 0; i < n; ++i) cd.class_of[i] = new_index[static_cast<size_t>(raw_class[i])];

  // names: <order><letter>, letters counted within equal element order
  std::map<uint64_t, int> counter;
  for (size_t i = 0; i < cd.sizes.size(); ++i) {
    int c = counter[cd.element_orders[i]]++;
    std::string letters;
    do {
      letters.insert(letters.begin(), static_cast<char>('A' + c % 26));
      c = c / 26 - 1;
    } while (c >= 0);
    cd.names.push_back(std::to_string(cd.element_orders[i]) + letters);
  }
  return cd;
}

std::vector<int> power_class_map(const PermGroup& g, const ClassData& cd, long k) {
  std::vector<int> out(cd.count());
  for (size_t c = 0; c < cd.count(); ++c)
    out[c] = cd.class_of[static_cast<size_t>(g.power(cd.representatives[c], k))];
  return out;
}

}  // namespace gct
