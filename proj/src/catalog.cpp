#include <json.hpp>

#include "gct/perm_group.hpp"

namespace gct {

namespace {

std::vector<int> iota_cycle(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

std::vector<Permutation> cyclic_gens(int n) {
  if (n < 1) fail(ErrorKind::UnknownCatalogName, "cyclic: order must be >= 1");
  if (n == 1) return {};
  return {Permutation::cycle(n, iota_cycle(n))};
}

// dihedral group of the given ORDER (2m), acting on m points
std::vector<Permutation> dihedral_gens(int order) {
  if (order < 4 || order % 2)
    fail(ErrorKind::UnknownCatalogName, "dihedral: order must be even and >= 4");
  int m = order / 2;
  if (m == 2) {  // Klein four group needs 4 points to act faithfully
    return {Permutation::cycle(4, {0, 1}), Permutation::cycle(4, {2, 3})};
  }
  std::vector<int> refl(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) refl[static_cast<size_t>(i)] = (m - i) % m;
  return {Permutation::cycle(m, iota_cycle(m)), Permutation(refl)};
}

std::vector<Permutation> symmetric_gens(int n) {
  if (n < 1) fail(ErrorKind::UnknownCatalogName, "symmetric: n must be >= 1");
  if (n == 1) return {};
  if (n == 2) return {Permutation::cycle(2, {0, 1})};
  return {Permutation::cycle(n, {0, 1}), Permutation::cycle(n, iota_cycle(n))};
}

std::vector<Permutation> alternating_gens(int n) {
  if (n < 3) fail(ErrorKind::UnknownCatalogName, "alternating: n must be >= 3");
  if (n == 3) return {Permutation::cycle(3, {0, 1, 2})};
  std::vector<int> rest;
  if (n % 2) {
    rest = iota_cycle(n);
  } else {
    for (int i = 1; i < n; ++i) rest.push_back(i);
  }
  return {Permutation::cycle(n, {0, 1, 2}), Permutation::cycle(n, rest)};
}

std::vector<Permutation> embed(const std::vector<Permutation>& gens, int offset,
                               int total) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    Permutation p = Permutation::identity(total);
    std::vector<int> im = p.images();
    for (int i = 0; i < g.degree(); ++i)
      im[static_cast<size_t>(offset + i)] = offset + g(i);
    out.push_back(Permutation(im));
  }
  return out;
}

// affine maps v -> Av + w on Z/n acting on n points
Permutation affine_mod(int n, int a, int b) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) im[static_cast<size_t>(v)] = (a * v + b) % n;
  return Permutation(im);
}

// Hol(C8) = C8 : (Z/8)^x, a faithful realization of Aut(D16); 32 elements,
// 11 conjugacy classes
std::vector<Permutation> autd16_gens() {
  return {affine_mod(8, 1, 1), affine_mod(8, 3, 0), affine_mod(8, 5, 0)};
}

std::vector<Permutation> holc5_gens() {
  return {affine_mod(5, 1, 1), affine_mod(5, 2, 0)};
}

// G = (C2)^3 : C4 on the 8 vectors of F_2^3, generated by the three
// translations and the unipotent map x: e1 -> e1+e2, e2 -> e2+e3, e3 -> e3,
// so that x a x^{-1} = ab, x b x^{-1} = bc, x c x^{-1} = c.
std::vector<Permutation> e8semic4_gens() {
  auto translate = [](int mask) {
    std::vector<int> im(8);
    for (int v = 0; v < 8; ++v) im[static_cast<size_t>(v)] = v ^ mask;
    return Permutation(im);
  };
  std::vector<int> lin(8);
  for (int v = 0; v < 8; ++v) {
    int v1 = v & 1, v2 = (v >> 1) & 1, v3 = (v >> 2) & 1;
    lin[static_cast<size_t>(v)] = v1 | ((v1 ^ v2) << 1) | ((v2 ^ v3) << 2);
  }
  return {translate(1), translate(2), translate(4), Permutation(lin)};
}

struct ParsedSpec {
  std::string name;
  std::vector<std::string> params;
};

ParsedSpec parse_spec(const std::string& spec) {
  ParsedSpec out;
  auto colon = spec.find(':');
  out.name = spec.substr(0, colon);
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) {
        out.params.push_back(rest.substr(pos));
        break;
      }
      out.params.push_back(rest.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  return out;
}

int parse_int_param(const ParsedSpec& s) {
  if (s.params.size() != 1)
    fail(ErrorKind::UnknownCatalogName, s.name + ": expected one integer parameter");
  try {
    return std::stoi(s.params[0]);
  } catch (const std::exception&) {
    fail(ErrorKind::UnknownCatalogName, s.name + ": bad parameter '" + s.params[0] + "'");
  }
}

std::vector<Permutation> atom_gens(const std::string& atom);

std::vector<Permutation> direct_product_gens(const std::vector<std::string>& parts) {
  if (parts.size() < 2)
    fail(ErrorKind::UnknownCatalogName, "direct_product: need at least two factors");
  std::vector<std::vector<Permutation>> factor_gens;
  std::vector<int> degrees;
  for (const auto& part : parts) {
    auto gens = atom_gens(part);
    int deg = gens.empty() ? 1 : gens[0].degree();
    factor_gens.push_back(std::move(gens));
    degrees.push_back(deg);
  }
  int total = 0;
  for (int d : degrees) total += d;
  std::vector<Permutation> out;
  int offset = 0;
  for (size_t i = 0; i < factor_gens.size(); ++i) {
    auto emb = embed(factor_gens[i], offset, total);
    out.insert(out.end(), emb.begin(), emb.end());
    offset += degrees[i];
  }
  return out;
}

// atoms: C<n>, D<order>, S<n>, A<n> or any full catalog name
std::vector<Permutation> atom_gens(const std::string& atom) {
  bool shorthand = atom.size() >= 2;
  for (size_t i = 1; i < atom.size() && shorthand; ++i)
    shorthand = std::isdigit(static_cast<unsigned char>(atom[i])) != 0;
  if (shorthand) {
    int n = std::stoi(atom.substr(1));
    switch (atom[0]) {
      case 'C': return cyclic_gens(n);
      case 'D': return dihedral_gens(n);
      case 'S': return symmetric_gens(n);
      case 'A': return alternating_gens(n);
      default: break;
    }
  }
  ParsedSpec s = parse_spec(atom);
  if (s.name == "cyclic") return cyclic_gens(parse_int_param(s));
  if (s.name == "dihedral") return dihedral_gens(parse_int_param(s));
  if (s.name == "symmetric") return symmetric_gens(parse_int_param(s));
  if (s.name == "alternating") return alternating_gens(parse_int_param(s));
  if (s.name == "direct_product") return direct_product_gens(s.params);
  if (s.name == "D8xA4") return direct_product_gens({"D8", "A4"});
  if (s.name == "AutD16") return autd16_gens();
  if (s.name == "HolC5") return holc5_gens();
  if (s.name == "E8semiC4") return e8semic4_gens();
  fail(ErrorKind::UnknownCatalogName, "unknown catalog group '" + atom + "'");
}

}  // namespace

PermGroup catalog(const std::string& spec) {
  return PermGroup::from_generators(atom_gens(spec));
}

PermGroup group_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::BadGroupInput, std::string("bad group JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    fail(ErrorKind::BadGroupInput, "group JSON needs 'degree' and 'generators'");
  int degree = j["degree"].get<int>();
  if (degree < 1) fail(ErrorKind::BadGroupInput, "degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& lst : j["generators"]) {
    std::vector<int> im;
    for (const auto& v : lst) {
      int x = v.get<int>();
      if (x < 1 || x > degree) fail(ErrorKind::BadGroupInput, "image out of range (1-based)");
      im.push_back(x - 1);
    }
    if (static_cast<int>(im.size()) != degree)
      fail(ErrorKind::BadGroupInput, "generator image list length != degree");
    gens.push_back(Permutation(im));
  }
  return PermGroup::from_generators(std::move(gens), degree);
}

std::string group_to_json_text(const PermGroup& g) {
  nlohmann::json j;
  j["degree"] = g.degree();
  auto gens = nlohmann::json::array();
  for (const auto& p : g.generators()) {
    auto lst = nlohmann::json::array();
    for (int v : p.images()) lst.push_back(v + 1);
    gens.push_back(lst);
  }
  j["generators"] = gens;
  return j.dump();
}

}  // namespace gct
