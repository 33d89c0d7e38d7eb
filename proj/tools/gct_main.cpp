// gct command line tool, a thin client of the shared C API.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gct.h"

namespace {

struct GroupHandle {
  gct_group* g = nullptr;
  ~GroupHandle() { gct_group_free(g); }
};

struct TableHandle {
  gct_table* t = nullptr;
  ~TableHandle() { gct_table_free(t); }
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "gct: " << msg << "\n";
  // invalid inputs are usage errors (exit 2); everything else exits 1
  std::exit(code == GCT_ERR_ARG ? 2 : 1);
}

void check(int code) {
  if (code != GCT_OK) die(code, gct_last_error());
}

/// --group accepts a catalog spec or a path to a JSON file ("@file" or any
/// existing file path).
int load_group(const std::string& source, gct_group** out) {
  std::string path;
  if (!source.empty() && source[0] == '@')
    path = source.substr(1);
  else if (std::ifstream probe(source); probe.good())
    path = source;
  if (path.empty()) return gct_group_from_catalog(source.c_str(), out);
  std::ifstream in(path);
  if (!in) return gct_group_from_catalog(source.c_str(), out);
  std::stringstream buf;
  buf << in.rdbuf();
  return gct_group_from_json(buf.str().c_str(), out);
}

void print_and_free(char* s) {
  std::fputs(s, stdout);
  gct_string_free(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and G-character tables of normal subgroups"};
  app.require_subcommand(1);

  std::string group_spec, normal_id, reps, format = "md", cache_dir;
  uint64_t seed = 0;
  int jobs = 1;

  auto add_group_opts = [&](CLI::App* cmd, bool need_group) {
    auto* opt = cmd->add_option("--group", group_spec,
                                "catalog spec (e.g. D8xA4, cyclic:5) or JSON file path");
    if (need_group) opt->required();
    cmd->add_option("--seed", seed, "RNG seed for the table computation");
    cmd->add_option("--cache-dir", cache_dir,
                    "table cache directory (also GCT_CACHE_DIR)");
  };

  auto* cmd_table = app.add_subcommand("table", "print the character table");
  add_group_opts(cmd_table, true);
  cmd_table->add_option("--format", format, "md or json");

  auto* cmd_normals = app.add_subcommand("normals", "list the normal subgroups");
  add_group_opts(cmd_normals, true);
  cmd_normals->add_option("--format", format, "md or json");

  auto* cmd_gtable = app.add_subcommand("gtable", "G-character table of one normal subgroup");
  add_group_opts(cmd_gtable, true);
  cmd_gtable->add_option("--normal", normal_id, "normal subgroup id (see normals)")->required();
  cmd_gtable->add_option("--reps", reps, "comma separated 1-based representative rows");
  cmd_gtable->add_option("--format", format, "md or json");

  auto* cmd_analyze = app.add_subcommand("analyze", "full analysis report");
  add_group_opts(cmd_analyze, true);
  cmd_analyze->add_option("--normal", normal_id, "restrict to one normal subgroup id");
  cmd_analyze->add_option("--reps", reps, "representative rows (needs --normal)");
  cmd_analyze->add_option("--format", format, "md or json");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite over the corpus");
  cmd_verify->add_option("--seed", seed, "RNG seed");
  cmd_verify->add_option("--cache-dir", cache_dir, "table cache directory");
  cmd_verify->add_option("--jobs", jobs, "parallel corpus workers");

  auto* cmd_valg = app.add_subcommand("verify-algebra", "class-sum and idempotent checks");
  add_group_opts(cmd_valg, true);
  cmd_valg->add_option("--normal", normal_id, "restrict to one normal subgroup id");

  CLI11_PARSE(app, argc, argv);

  if (cache_dir.empty())
    if (const char* env = std::getenv("GCT_CACHE_DIR")) cache_dir = env;

  if (cmd_verify->parsed()) {
    char* report = nullptr;
    int all_pass = 0;
    check(gct_verify_corpus(seed, jobs, cache_dir.c_str(), &report, &all_pass));
    print_and_free(report);
    return all_pass ? 0 : 1;
  }

  GroupHandle group;
  check(load_group(group_spec, &group.g));
  TableHandle table;
  check(gct_table_compute(group.g, seed, cache_dir.c_str(), &table.t));

  char* out = nullptr;
  if (cmd_table->parsed()) {
    check(gct_table_render(table.t, format.c_str(), &out));
  } else if (cmd_normals->parsed()) {
    check(gct_normals_render(table.t, format.c_str(), &out));
  } else if (cmd_gtable->parsed()) {
    check(gct_gtable_render(table.t, normal_id.c_str(), reps.c_str(), format.c_str(), &out));
  } else if (cmd_analyze->parsed()) {
    check(gct_analyze_render(table.t, normal_id.empty() ? nullptr : normal_id.c_str(),
                             reps.empty() ? nullptr : reps.c_str(), format.c_str(), &out));
  } else if (cmd_valg->parsed()) {
    int all_pass = 0;
    check(gct_verify_algebra(table.t, normal_id.empty() ? nullptr : normal_id.c_str(), seed,
                             &out, &all_pass));
    print_and_free(out);
    return all_pass ? 0 : 1;
  }
  print_and_free(out);
  return 0;
}
