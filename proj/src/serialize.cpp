#include "gct/serialize.hpp"

namespace gct {

namespace {

nlohmann::json mpz_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();  // decimal string fallback for out-of-range values
}

Integer mpz_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(static_cast<long>(j.get<int64_t>()));
}

}  // namespace

nlohmann::json cyclo_to_json(const Cyclotomic& c) {
  nlohmann::json j;
  j["n"] = c.conductor();
  auto terms = nlohmann::json::array();
  for (const auto& [e, coeff] : c.terms())
    terms.push_back(nlohmann::json::array(
        {e, mpz_to_json(Integer(coeff.get_num())), mpz_to_json(Integer(coeff.get_den()))}));
  j["terms"] = terms;
  return j;
}

Cyclotomic cyclo_from_json(const nlohmann::json& j) {
  unsigned n = j.at("n").get<unsigned>();
  Cyclotomic out(0L);
  for (const auto& term : j.at("terms")) {
    Rational coeff(mpz_from_json(term.at(1)), mpz_from_json(term.at(2)));
    coeff.canonicalize();
    out += Cyclotomic(coeff) * Cyclotomic::zeta(n, term.at(0).get<long>());
  }
  return out;
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json j;
  j["schema"] = 1;
  j["group_hash"] = t.group->content_hash();
  j["order"] = t.group->order();
  j["seed"] = t.seed;
  j["prime"] = t.dixon_prime;
  j["exponent"] = t.exponent;
  auto classes = nlohmann::json::array();
  for (size_t c = 0; c < t.classes.count(); ++c) {
    nlohmann::json cls;
    cls["name"] = t.classes.names[c];
    cls["order"] = t.classes.element_orders[c];
    cls["size"] = t.classes.sizes[c];
    auto rep = nlohmann::json::array();
    for (int v : t.group->element(t.classes.representatives[c]).images())
      rep.push_back(v + 1);
    cls["rep"] = rep;
    classes.push_back(cls);
  }
  j["classes"] = classes;
  j["degrees"] = t.degrees;
  auto rows = nlohmann::json::array();
  for (const auto& row : t.values) {
    auto r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(cyclo_to_json(v));
    rows.push_back(r);
  }
  j["values"] = rows;
  return j;
}

CharacterTable table_from_json(const nlohmann::json& j,
                               std::shared_ptr<const PermGroup> g) {
  if (j.at("schema").get<int>() != 1) fail(ErrorKind::Io, "unknown table schema");
  if (j.at("group_hash").get<std::string>() != g->content_hash())
    fail(ErrorKind::Io, "cached table belongs to a different group");
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(*g);
  t.seed = j.at("seed").get<uint64_t>();
  t.dixon_prime = j.at("prime").get<uint64_t>();
  t.exponent = j.at("exponent").get<uint64_t>();
  const auto& classes = j.at("classes");
  if (classes.size() != t.classes.count()) fail(ErrorKind::Io, "cached class count mismatch");
  for (size_t c = 0; c < t.classes.count(); ++c) {
    if (classes[c].at("name").get<std::string>() != t.classes.names[c] ||
        classes[c].at("size").get<uint64_t>() != t.classes.sizes[c])
      fail(ErrorKind::Io, "cached class data mismatch");
  }
  for (const auto& row : j.at("values")) {
    std::vector<Cyclotomic> r;
    for (const auto& v : row) r.push_back(cyclo_from_json(v));
    t.values.push_back(std::move(r));
  }
  if (t.values.size() != t.classes.count()) fail(ErrorKind::Io, "cached row count mismatch");
  t.degrees = j.at("degrees").get<std::vector<uint64_t>>();
  return t;
}

std::string table_to_json_text(const CharacterTable& t) { return table_to_json(t).dump(); }

CharacterTable table_from_json_text(const std::string& text,
                                    std::shared_ptr<const PermGroup> g) {
  return table_from_json(nlohmann::json::parse(text), g);
}

}  // namespace gct
