#include "gct.h"

#include <cstring>

#include "gct/analysis.hpp"
#include "gct/serialize.hpp"

struct gct_group {
  std::shared_ptr<const gct::PermGroup> g;
  std::string source;
};

struct gct_table {
  std::shared_ptr<const gct::PermGroup> g;
  std::string source;
  gct::CharacterTable t;
};

namespace {

thread_local std::string g_last_error;

int code_for(const gct::Error& e) {
  switch (e.kind()) {
    case gct::ErrorKind::DegreeMismatch:
    case gct::ErrorKind::OrderCapExceeded:
    case gct::ErrorKind::UnknownCatalogName:
    case gct::ErrorKind::BadGroupInput:
    case gct::ErrorKind::BadRepresentative:
    case gct::ErrorKind::BadNormalId:
      return GCT_ERR_ARG;
    case gct::ErrorKind::Io:
      return GCT_ERR_IO;
    default:
      return GCT_ERR_COMPUTE;
  }
}

template <typename F>
int wrap(F&& f) {
  try {
    f();
    return GCT_OK;
  } catch (const gct::Error& e) {
    g_last_error = e.what();
    return code_for(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GCT_ERR_COMPUTE;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> parse_reps_csv(const char* reps_csv) {
  std::vector<int> reps;
  std::string s(reps_csv);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) gct::fail(gct::ErrorKind::BadRepresentative, "empty entry in reps list");
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      gct::fail(gct::ErrorKind::BadRepresentative, "bad reps entry '" + tok + "'");
    }
    reps.push_back(v - 1);  // CLI rows are 1-based
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return reps;
}

bool want_json(const char* format) {
  std::string f = format ? format : "md";
  if (f == "json") return true;
  if (f == "md" || f == "markdown") return false;
  gct::fail(gct::ErrorKind::BadGroupInput, "unknown format '" + f + "' (use md or json)");
}

}  // namespace

extern "C" {

const char* gct_last_error(void) { return g_last_error.c_str(); }

int gct_group_from_catalog(const char* spec, gct_group** out) {
  return wrap([&] {
    auto g = std::make_shared<gct::PermGroup>(gct::catalog(spec ? spec : ""));
    *out = new gct_group{std::move(g), spec ? spec : ""};
  });
}

int gct_group_from_json(const char* json_text, gct_group** out) {
  return wrap([&] {
    auto g = std::make_shared<gct::PermGroup>(gct::group_from_json_text(json_text ? json_text : ""));
    *out = new gct_group{std::move(g), "json-input"};
  });
}

void gct_group_free(gct_group* g) { delete g; }

uint64_t gct_group_order(const gct_group* g) { return g->g->order(); }

int gct_group_hash(const gct_group* g, char** out) {
  return wrap([&] { *out = dup_string(g->g->content_hash()); });
}

int gct_table_compute(const gct_group* g, uint64_t seed, const char* cache_dir,
                      gct_table** out) {
  return wrap([&] {
    gct::CharacterTable t = gct::table_with_cache(g->g, seed, cache_dir ? cache_dir : "");
    *out = new gct_table{g->g, g->source, std::move(t)};
  });
}

void gct_table_free(gct_table* t) { delete t; }

int gct_table_render(const gct_table* t, const char* format, char** out) {
  return wrap([&] {
    if (want_json(format))
      *out = dup_string(gct::table_to_json(t->t).dump(2) + "\n");
    else
      *out = dup_string(gct::render_table_markdown(t->t));
  });
}

int gct_normals_render(const gct_table* t, const char* format, char** out) {
  return wrap([&] {
    if (want_json(format))
      *out = dup_string(gct::normals_to_json(t->t).dump(2) + "\n");
    else
      *out = dup_string(gct::render_normals_markdown(t->t));
  });
}

int gct_gtable_render(const gct_table* t, const char* normal_id, const char* reps_csv,
                      const char* format, char** out) {
  return wrap([&] {
    if (!normal_id || !*normal_id)
      gct::fail(gct::ErrorKind::BadNormalId, "gtable needs a normal subgroup id");
    std::vector<int> reps;
    const std::vector<int>* reps_ptr = nullptr;
    if (reps_csv && *reps_csv) {
      reps = parse_reps_csv(reps_csv);
      reps_ptr = &reps;
    }
    auto n = gct::normal_by_id(t->t, normal_id);
    auto na = gct::analyze_normal(t->t, n, reps_ptr, t->t.seed);
    if (want_json(format)) {
      *out = dup_string(gct::normal_analysis_to_json(na, t->t).dump(2) + "\n");
    } else {
      *out = dup_string(gct::render_gtable_markdown(na, t->t));
    }
  });
}

int gct_analyze_render(const gct_table* t, const char* normal_id, const char* reps_csv,
                       const char* format, char** out) {
  return wrap([&] {
    std::vector<int> reps;
    const std::vector<int>* reps_ptr = nullptr;
    if (reps_csv && *reps_csv) {
      reps = parse_reps_csv(reps_csv);
      reps_ptr = &reps;
    }
    gct::Analysis a = gct::analyze(t->source, t->g, t->t, normal_id ? normal_id : "",
                                   reps_ptr, t->t.seed);
    if (want_json(format))
      *out = dup_string(gct::analysis_to_json(a).dump(2) + "\n");
    else
      *out = dup_string(gct::render_analysis_markdown(a));
  });
}

int gct_verify_algebra(const gct_table* t, const char* normal_id, uint64_t seed,
                       char** out, int* all_pass) {
  return wrap([&] {
    bool pass = false;
    auto j = gct::verify_algebra_json(t->t, normal_id ? normal_id : "", seed, &pass);
    *out = dup_string(j.dump(2) + "\n");
    if (all_pass) *all_pass = pass ? 1 : 0;
  });
}

int gct_verify_corpus(uint64_t seed, int jobs, const char* cache_dir, char** report_out,
                      int* all_pass) {
  return wrap([&] {
    auto result = gct::verify_corpus(seed, jobs, cache_dir ? cache_dir : "");
    if (report_out) *report_out = dup_string(result.report.dump(2) + "\n");
    if (all_pass) *all_pass = result.pass ? 1 : 0;
  });
}

void gct_string_free(char* s) { std::free(s); }

}  // extern "C"
