#include "gct/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gct/serialize.hpp"

namespace gct {

CharacterTable table_with_cache(std::shared_ptr<const PermGroup> g, uint64_t seed,
                                const std::string& cache_dir) {
  if (cache_dir.empty()) return character_table(g, seed);
  std::filesystem::path dir(cache_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path file =
      dir / (g->content_hash() + ".s" + std::to_string(seed) + ".table.json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return table_from_json_text(buf.str(), g);
    } catch (const Error&) {
      // stale or foreign cache entry: recompute below
    }
  }
  CharacterTable t = character_table(g, seed);
  std::ofstream out(file);
  out << table_to_json_text(t) << "\n";
  return t;
}

namespace {

// invariant suite for one (G, N) pair; results land in na.checks
void run_pair_checks(NormalAnalysis& na, const CharacterTable& t, uint64_t seed) {
  CheckReport& r = na.checks;
  const uint64_t norder = na.n.order;
  const uint64_t index = t.group->order() / norder;

  r.add("lambda-diagonal-positive-integral", true);  // lambda_and_relations threw otherwise
  r.add("det-x-nonzero", !determinant(na.x.X).is_zero());

  bool ab = true;
  for (size_t b = 0; b < na.x.k(); ++b) {
    Integer chi(static_cast<long>(na.params.relations[b].chi_degree));
    ab = ab && (na.params.relations[b].A * na.params.relations[b].B == chi * chi);
  }
  r.add("a-times-b-is-chi-squared", ab);

  // oracle triple is always among the inferred solutions
  bool oracle_in = true, determined_match = true;
  for (size_t b = 0; b < na.x.k(); ++b) {
    size_t o = static_cast<size_t>(na.xhat.orbit_for_block[b]);
    ParamTriple truth{na.xhat.e[b], na.oracle.t[o], na.oracle.theta_degrees[o]};
    const auto& sols = na.params.solutions[b];
    bool in = std::find(sols.begin(), sols.end(), truth) != sols.end();
    oracle_in = oracle_in && in;
    if (na.params.determined[b]) determined_match = determined_match && in && sols.size() == 1;
  }
  r.add("oracle-triple-in-solutions", oracle_in);
  r.add("determined-blocks-match-oracle", determined_match);

  for (const auto& item : dimension_check(na.n, na.oracle, na.blocks).items) r.items.push_back(item);

  r.add("real-rows-equal-real-classes", na.counts.real_rows == na.counts.real_classes,
        std::to_string(na.counts.real_rows) + " vs " + std::to_string(na.counts.real_classes));
  r.add("brauer-per-element", na.brauer.per_element_equal);
  r.add("orbit-count-equals-g-classes", na.brauer.orbit_count == na.brauer.g_class_count);

  bool t_div = true;
  for (uint64_t ti : na.oracle.t) t_div = t_div && (index % ti == 0);
  r.add("t-divides-index", t_div);
  bool d_div = true;
  for (uint64_t di : na.oracle.theta_degrees) d_div = d_div && (norder % di == 0);
  r.add("theta-degree-divides-n", d_div);

  // restriction irreducibility criterion against the oracle
  bool restr = true;
  for (size_t b = 0; b < na.x.k(); ++b) {
    size_t o = static_cast<size_t>(na.xhat.orbit_for_block[b]);
    bool table_says = restriction_irreducible(na.x, b);
    bool oracle_says = na.xhat.e[b] == 1 && na.oracle.t[o] == 1;
    restr = restr && (table_says == oracle_says);
  }
  r.add("restriction-irreducible-iff-lambda-n", restr);

  // policy independence: representatives chosen as the highest row index
  {
    std::vector<int> alt;
    for (const auto& block : na.blocks.blocks) alt.push_back(block.back());
    GCharTable x2 = g_character_table(t, na.n, na.blocks, &alt);
    lambda_and_relations(x2);
    bool same = x2.column_classes == na.x.column_classes;
    for (size_t b = 0; b < na.x.k() && same; ++b) {
      size_t o = static_cast<size_t>(na.xhat.orbit_for_block[b]);
      uint64_t theta1 = na.oracle.t[o] * na.oracle.theta_degrees[o];
      uint64_t chi2 = static_cast<uint64_t>(to_int64(*x2.X[b][0].rational_value()));
      if (chi2 % theta1) {
        same = false;
        break;
      }
      uint64_t e2 = chi2 / theta1;
      Integer want = Integer(static_cast<long>(norder)) *
                     Integer(static_cast<long>(na.oracle.t[o])) *
                     Integer(static_cast<long>(e2 * e2));
      same = same && (x2.lambda[b] == want);
    }
    r.add("policy-independence", same);
  }

  for (const auto& item : basis_check_cfGN(na.xhat, na.x, seed).items) r.items.push_back(item);

  {
    TableAction inv{true, -1};
    for (const auto& item : generalized_brauer_check(na.xhat, na.x, t, inv).items)
      r.items.push_back(item);
    uint64_t n_exp = 1;
    for (int c : na.x.column_classes)
      n_exp = lcm_u64(n_exp, t.classes.element_orders[static_cast<size_t>(c)]);
    for (long kgal = 2; kgal < static_cast<long>(n_exp); ++kgal)
      if (gcd_u64(static_cast<uint64_t>(kgal), n_exp) == 1) {
        TableAction gal{false, kgal};
        auto gr = generalized_brauer_check(na.xhat, na.x, t, gal);
        r.add("galois-" + std::to_string(kgal) + "-brauer", gr.all_pass());
        break;
      }
  }

  for (const auto& item : idempotent_support_check(t, na.blocks, na.n).items)
    r.items.push_back(item);

  r.add("deductions-oracle-confirmed", na.deductions.all_confirmed);
}

}  // namespace

NormalAnalysis analyze_normal(const CharacterTable& t, const NormalSubgroup& n,
                              const std::vector<int>* reps, uint64_t seed) {
  NormalAnalysis na;
  na.n = n;
  na.oracle = g_action_on_irrN(t.group, n, seed);
  na.blocks = equivalence_classes(t, n);
  na.x = g_character_table(t, n, na.blocks, reps);
  na.params = infer_parameters(na.x, lambda_and_relations(na.x));
  na.xhat = invariant_table(na.x, na.oracle);
  na.counts = real_counts(na.xhat, t, na.n);
  na.brauer = brauer_per_element_check(*t.group, na.n, na.oracle);
  na.deductions = structural_deductions(na.x, na.params, na.xhat, na.counts, na.oracle);
  run_pair_checks(na, t, seed);
  return na;
}

Analysis analyze(const std::string& source, std::shared_ptr<const PermGroup> g,
                 const CharacterTable& t, const std::string& normal_id,
                 const std::vector<int>* reps, uint64_t seed) {
  Analysis a;
  a.source = source;
  a.group = g;
  a.table = t;
  if (normal_id.empty()) {
    if (reps)
      fail(ErrorKind::BadRepresentative, "--reps needs a specific --normal");
    for (const auto& n : normal_subgroups(t))
      a.normals.push_back(analyze_normal(t, n, nullptr, seed));
  } else {
    a.normals.push_back(analyze_normal(t, normal_by_id(t, normal_id), reps, seed));
  }
  return a;
}

namespace {

nlohmann::json rational_to_json(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

nlohmann::json check_report_to_json(const CheckReport& r) {
  auto arr = nlohmann::json::array();
  for (const auto& item : r.items) {
    nlohmann::json j;
    j["name"] = item.name;
    j["pass"] = item.pass;
    if (!item.detail.empty()) j["detail"] = item.detail;
    arr.push_back(j);
  }
  return arr;
}

nlohmann::json group_header_json(const std::string& source, const CharacterTable& t) {
  nlohmann::json g;
  g["source"] = source;
  g["hash"] = t.group->content_hash();
  g["order"] = t.group->order();
  g["degree"] = t.group->degree();
  auto classes = nlohmann::json::array();
  for (size_t c = 0; c < t.k(); ++c) {
    nlohmann::json cj;
    cj["name"] = t.classes.names[c];
    cj["order"] = t.classes.element_orders[c];
    cj["size"] = t.classes.sizes[c];
    classes.push_back(cj);
  }
  g["classes"] = classes;
  return g;
}

}  // namespace

nlohmann::json normal_analysis_to_json(const NormalAnalysis& na, const CharacterTable& t) {
  nlohmann::json j;
  j["id"] = na.n.id;
  j["order"] = na.n.order;
  j["index"] = t.group->order() / na.n.order;
  auto classes = nlohmann::json::array();
  for (int c : na.n.class_indices) classes.push_back(t.classes.names[static_cast<size_t>(c)]);
  j["classes"] = classes;

  auto blocks = nlohmann::json::array();
  for (const auto& block : na.blocks.blocks) {
    auto b = nlohmann::json::array();
    for (int row : block) b.push_back(row + 1);
    blocks.push_back(b);
  }
  j["blocks"] = blocks;

  nlohmann::json x;
  auto cols = nlohmann::json::array();
  for (int c : na.x.column_classes) cols.push_back(t.classes.names[static_cast<size_t>(c)]);
  x["columns"] = cols;
  x["d"] = na.x.D;
  auto repsj = nlohmann::json::array();
  for (int r : na.x.row_chars) repsj.push_back(r + 1);
  x["reps"] = repsj;
  auto values = nlohmann::json::array();
  for (const auto& row : na.x.X) {
    auto rj = nlohmann::json::array();
    for (const auto& v : row) rj.push_back(cyclo_to_json(v));
    values.push_back(rj);
  }
  x["values"] = values;
  j["x"] = x;

  auto lam = nlohmann::json::array(), aj = nlohmann::json::array(), bj = nlohmann::json::array(),
       cj = nlohmann::json::array();
  for (size_t b = 0; b < na.x.k(); ++b) {
    lam.push_back(to_int64(na.x.lambda[b]));
    aj.push_back(to_int64(na.params.relations[b].A));
    bj.push_back(to_int64(na.params.relations[b].B));
    cj.push_back(rational_to_json(na.params.relations[b].C));
  }
  j["lambda"] = lam;
  j["a"] = aj;
  j["b"] = bj;
  j["c"] = cj;

  auto sols = nlohmann::json::array();
  for (const auto& block : na.params.solutions) {
    auto sb = nlohmann::json::array();
    for (const auto& s : block)
      sb.push_back(nlohmann::json{{"e", s.e}, {"t", s.t}, {"d", s.d}});
    sols.push_back(sb);
  }
  j["solutions"] = sols;
  nlohmann::json flags;
  flags["hall"] = na.params.hall_applied;
  flags["squarefree"] = na.params.squarefree_applied;
  flags["determined"] = na.params.determined;
  j["flags"] = flags;

  nlohmann::json xh;
  auto xvals = nlohmann::json::array();
  for (const auto& row : na.xhat.Xhat) {
    auto rj = nlohmann::json::array();
    for (const auto& v : row) rj.push_back(cyclo_to_json(v));
    xvals.push_back(rj);
  }
  xh["values"] = xvals;
  xh["e"] = na.xhat.e;
  j["xhat"] = xh;

  j["real"] = nlohmann::json{{"rows", na.counts.real_rows}, {"classes", na.counts.real_classes}};

  nlohmann::json br;
  br["per_element_equal"] = na.brauer.per_element_equal;
  auto pe = nlohmann::json::array();
  for (const auto& p : na.brauer.per_element)
    pe.push_back(nlohmann::json::array({p.element, p.fixed_chars, p.fixed_classes}));
  br["per_element"] = pe;
  br["invariant_chars"] = na.brauer.invariant_chars;
  br["invariant_classes"] = na.brauer.invariant_classes;
  br["orbits"] = na.brauer.orbit_count;
  br["g_classes"] = na.brauer.g_class_count;
  j["brauer"] = br;

  nlohmann::json oracle;
  oracle["t"] = na.oracle.t;
  oracle["theta_degrees"] = na.oracle.theta_degrees;
  oracle["e"] = na.xhat.e;
  j["oracle"] = oracle;

  auto ded = nlohmann::json::array();
  for (const auto& d : na.deductions.items) {
    nlohmann::json dj;
    dj["kind"] = d.kind;
    dj["statement"] = d.statement;
    dj["oracle_confirmed"] = d.oracle_confirmed;
    if (!d.detail.empty()) dj["detail"] = d.detail;
    ded.push_back(dj);
  }
  j["deductions"] = ded;
  j["checks"] = check_report_to_json(na.checks);
  return j;
}

nlohmann::json analysis_to_json(const Analysis& a) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["tool"] = nlohmann::json{{"name", "gct"}, {"version", kToolVersion}};
  j["seed"] = a.table.seed;
  j["group"] = group_header_json(a.source, a.table);
  auto normals = nlohmann::json::array();
  for (const auto& na : a.normals) normals.push_back(normal_analysis_to_json(na, a.table));
  j["normals"] = normals;
  return j;
}

std::string render_table_markdown(const CharacterTable& t) {
  std::ostringstream os;
  os << "# Character table (order " << t.group->order() << ", " << t.k() << " classes)\n\n";
  os << "group hash `" << t.group->content_hash() << "`, dixon prime " << t.dixon_prime
     << ", exponent " << t.exponent << ", seed " << t.seed << "\n\n";
  os << "| |";
  for (const auto& name : t.classes.names) os << " " << name << " |";
  os << "\n|---|";
  for (size_t c = 0; c < t.k(); ++c) os << "---|";
  os << "\n| size |";
  for (auto s : t.classes.sizes) os << " " << s << " |";
  os << "\n";
  for (size_t i = 0; i < t.k(); ++i) {
    os << "| x" << (i + 1) << " |";
    for (size_t c = 0; c < t.k(); ++c) os << " " << t.values[i][c].pretty() << " |";
    os << "\n";
  }
  return os.str();
}

nlohmann::json normals_to_json(const CharacterTable& t) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["group"] = group_header_json("", t);
  auto arr = nlohmann::json::array();
  for (const auto& n : normal_subgroups(t)) {
    nlohmann::json nj;
    nj["id"] = n.id;
    nj["order"] = n.order;
    nj["index"] = t.group->order() / n.order;
    auto classes = nlohmann::json::array();
    for (int c : n.class_indices) classes.push_back(t.classes.names[static_cast<size_t>(c)]);
    nj["classes"] = classes;
    arr.push_back(nj);
  }
  j["normals"] = arr;
  return j;
}

std::string render_normals_markdown(const CharacterTable& t) {
  std::ostringstream os;
  os << "# Normal subgroups (group order " << t.group->order() << ")\n\n";
  os << "| id | order | index | classes |\n|---|---|---|---|\n";
  for (const auto& n : normal_subgroups(t)) {
    os << "| " << n.id << " | " << n.order << " | " << t.group->order() / n.order << " | ";
    for (size_t i = 0; i < n.class_indices.size(); ++i)
      os << (i ? " " : "") << t.classes.names[static_cast<size_t>(n.class_indices[i])];
    os << " |\n";
  }
  return os.str();
}

std::string render_gtable_markdown(const NormalAnalysis& na, const CharacterTable& t) {
  std::ostringstream os;
  os << "## G-character table of N = " << na.n.id << " (|N| = " << na.n.order << ")\n\n";
  os << "| |";
  for (int c : na.x.column_classes) os << " " << t.classes.names[static_cast<size_t>(c)] << " |";
  os << "\n|---|";
  for (size_t c = 0; c < na.x.k(); ++c) os << "---|";
  os << "\n| D |";
  for (auto d : na.x.D) os << " " << d << " |";
  os << "\n";
  for (size_t b = 0; b < na.x.k(); ++b) {
    os << "| x" << (na.x.row_chars[b] + 1) << " |";
    for (const auto& v : na.x.X[b]) os << " " << v.pretty() << " |";
    os << "\n";
  }
  os << "\nlambda:";
  for (const auto& l : na.x.lambda) os << " " << l.get_str();
  os << "\nA:";
  for (const auto& r : na.params.relations) os << " " << r.A.get_str();
  os << "\nB:";
  for (const auto& r : na.params.relations) os << " " << r.B.get_str();
  os << "\nC:";
  for (const auto& r : na.params.relations) os << " " << r.C.get_str();
  os << "\nsolutions:";
  for (const auto& block : na.params.solutions) {
    os << " {";
    for (size_t i = 0; i < block.size(); ++i)
      os << (i ? ", " : "") << "(" << block[i].e << "," << block[i].t << "," << block[i].d << ")";
    os << "}";
  }
  os << "\n";
  return os.str();
}

std::string render_analysis_markdown(const Analysis& a) {
  std::ostringstream os;
  os << "# Analysis: " << a.source << " (order " << a.group->order() << ")\n\n";
  for (const auto& na : a.normals) {
    os << render_gtable_markdown(na, a.table) << "\n";
    os << "Xhat ramification e:";
    for (auto e : na.xhat.e) os << " " << e;
    os << "\nreal rows/classes: " << na.counts.real_rows << "/" << na.counts.real_classes;
    os << "\norbit lengths t:";
    for (auto ti : na.oracle.t) os << " " << ti;
    os << "\n\n";
    if (!na.deductions.items.empty()) {
      os << "Deductions:\n";
      for (const auto& d : na.deductions.items)
        os << "- " << d.statement << " [oracle " << (d.oracle_confirmed ? "confirms" : "REFUTES")
           << "]\n";
      os << "\n";
    }
    bool all = na.checks.all_pass();
    os << "checks: " << (all ? "all pass" : "FAILURES") << " (" << na.checks.items.size()
       << " items)\n\n";
  }
  return os.str();
}

nlohmann::json verify_algebra_json(const CharacterTable& t, const std::string& normal_id,
                                   uint64_t seed, bool* all_pass) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["group"] = group_header_json("", t);
  bool pass = true;
  auto arr = nlohmann::json::array();
  auto ns = normal_subgroups(t);
  for (const auto& n : ns) {
    if (!normal_id.empty() && n.id != normal_id) continue;
    nlohmann::json nj;
    nj["id"] = n.id;
    nj["order"] = n.order;
    CheckReport rep = centrality_check(t);
    auto oracle = g_action_on_irrN(t.group, n, seed);
    auto ec = equivalence_classes(t, n);
    for (const auto& item : dimension_check(n, oracle, ec).items) rep.items.push_back(item);
    for (const auto& item : idempotent_support_check(t, ec, n).items) rep.items.push_back(item);

    // class-sum coordinate round trip
    {
      std::mt19937_64 rng(seed ^ n.order);
      GroupAlgebraElement v{t.group, {}};
      std::vector<Cyclotomic> want;
      for (int c : n.class_indices) {
        long num = static_cast<long>(rng() % 9) - 4;
        Rational q(num, 1 + static_cast<long>(rng() % 3));
        q.canonicalize();
        want.push_back(Cyclotomic(q));
        GroupAlgebraElement ks = class_sum(t.group, t.classes, static_cast<size_t>(c));
        for (const auto& [e, one] : ks.coeffs) v.set(e, v.at(e) + Cyclotomic(q));
      }
      auto coords = membership_and_coords(v, t.classes, n);
      rep.add("class-sum-coords-roundtrip", coords.has_value() && *coords == want);
      GroupAlgebraElement outside = class_sum(t.group, t.classes, 0);
      bool checked_outside = true;
      for (size_t c = 0; c < t.k(); ++c)
        if (!n.contains_class(static_cast<int>(c))) {
          checked_outside =
              !membership_and_coords(class_sum(t.group, t.classes, c), t.classes, n).has_value();
          break;
        }
      rep.add("outside-class-sum-rejected", checked_outside);
      (void)outside;
    }
    nj["checks"] = check_report_to_json(rep);
    pass = pass && rep.all_pass();
    arr.push_back(nj);
  }
  if (arr.empty()) fail(ErrorKind::BadNormalId, "no normal subgroup with id '" + normal_id + "'");
  j["results"] = arr;
  j["pass"] = pass;
  if (all_pass) *all_pass = pass;
  return j;
}

std::vector<std::string> corpus_group_specs() {
  return {
      "cyclic:1",  "cyclic:2",  "cyclic:3",  "cyclic:4",  "cyclic:6",
      "cyclic:8",  "cyclic:12", "dihedral:6", "dihedral:8", "dihedral:10",
      "dihedral:12", "dihedral:16", "symmetric:4", "alternating:4", "alternating:5",
      "direct_product:C2,C2", "direct_product:C4,C2", "direct_product:S3,C3",
      "direct_product:D8,C2", "direct_product:A4,C2", "HolC5", "AutD16",
      "E8semiC4", "D8xA4",
  };
}

CorpusResult verify_corpus(uint64_t seed, int jobs, const std::string& cache_dir) {
  auto specs = corpus_group_specs();
  std::vector<nlohmann::json> group_reports(specs.size());
  std::vector<uint64_t> pair_counts(specs.size(), 0);
  std::vector<std::string> errors(specs.size());

  auto run_one = [&](size_t idx) {
    const std::string& spec = specs[idx];
    try {
      auto g = std::make_shared<PermGroup>(catalog(spec));
      CharacterTable t = table_with_cache(g, seed, cache_dir);
      nlohmann::json gj;
      gj["source"] = spec;
      gj["order"] = g->order();
      gj["hash"] = g->content_hash();
      bool orth = verify_orthogonality(t).pass;
      gj["orthogonality"] = orth;

      // the kernel-intersection normals agree with the class-closure oracle
      auto ns = normal_subgroups(t);
      std::set<std::vector<int>> from_kernels;
      for (const auto& n : ns) from_kernels.insert(n.class_indices);
      auto brute = normal_class_sets_bruteforce(*g, t.classes);
      std::set<std::vector<int>> from_closure(brute.begin(), brute.end());
      gj["normals_match_bruteforce"] = from_kernels == from_closure;

      auto pairs = nlohmann::json::array();
      bool all = orth && from_kernels == from_closure;
      for (const auto& n : ns) {
        NormalAnalysis na = analyze_normal(t, n, nullptr, seed);
        nlohmann::json pj;
        pj["normal"] = n.id;
        pj["order"] = n.order;
        pj["pass"] = na.checks.all_pass();
        auto failures = nlohmann::json::array();
        for (const auto& item : na.checks.items)
          if (!item.pass) failures.push_back(item.name + (item.detail.empty() ? "" : ": " + item.detail));
        if (!failures.empty()) pj["failures"] = failures;
        pairs.push_back(pj);
        all = all && na.checks.all_pass();
        ++pair_counts[idx];
      }
      gj["pairs"] = pairs;
      gj["pass"] = all;
      group_reports[idx] = std::move(gj);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
      nlohmann::json gj;
      gj["source"] = spec;
      gj["pass"] = false;
      gj["error"] = e.what();
      group_reports[idx] = std::move(gj);
    }
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < specs.size(); ++i) run_one(i);
  } else {
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) run_one(i);
      });
    for (auto& w : workers) w.join();
  }

  CorpusResult out;
  out.report["schema"] = kReportSchema;
  out.report["seed"] = seed;
  out.report["tool"] = nlohmann::json{{"name", "gct"}, {"version", kToolVersion}};
  auto arr = nlohmann::json::array();
  bool pass = true;
  uint64_t pairs = 0;
  for (size_t i = 0; i < specs.size(); ++i) {
    arr.push_back(group_reports[i]);
    pass = pass && group_reports[i].value("pass", false);
    pairs += pair_counts[i];
  }
  out.report["groups"] = arr;
  out.report["pairs"] = pairs;
  out.report["pass"] = pass;
  out.pass = pass;
  out.pair_count = pairs;
  return out;
}

}  // namespace gct
