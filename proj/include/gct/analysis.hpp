#pragma once

#include <json.hpp>

#include "gct/group_algebra.hpp"

namespace gct {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

/// Everything the pipeline derives for one normal subgroup.
struct NormalAnalysis {
  NormalSubgroup n;
  SubIrrData oracle;
  EquivClasses blocks;
  GCharTable x;
  ParamSolutionSet params;
  InvariantTable xhat;
  RealCounts counts;
  BrauerElementReport brauer;
  DeductionReport deductions;
  CheckReport checks;  // invariant suite results for this pair
};

struct Analysis {
  std::string source;
  std::shared_ptr<const PermGroup> group;
  CharacterTable table;
  std::vector<NormalAnalysis> normals;
};

/// Character table with optional file cache keyed by the group content hash.
CharacterTable table_with_cache(std::shared_ptr<const PermGroup> g, uint64_t seed,
                                const std::string& cache_dir);

/// Full pipeline for one normal subgroup, including the invariant checks.
NormalAnalysis analyze_normal(const CharacterTable& t, const NormalSubgroup& n,
                              const std::vector<int>* reps, uint64_t seed);

Analysis analyze(const std::string& source, std::shared_ptr<const PermGroup> g,
                 const CharacterTable& t, const std::string& normal_id,
                 const std::vector<int>* reps, uint64_t seed);

// report rendering
nlohmann::json analysis_to_json(const Analysis& a);
nlohmann::json normal_analysis_to_json(const NormalAnalysis& na, const CharacterTable& t);
std::string render_table_markdown(const CharacterTable& t);
std::string render_normals_markdown(const CharacterTable& t);
nlohmann::json normals_to_json(const CharacterTable& t);
std::string render_gtable_markdown(const NormalAnalysis& na, const CharacterTable& t);
std::string render_analysis_markdown(const Analysis& a);

/// Algebra verification report ([algebra-verify] surface).
nlohmann::json verify_algebra_json(const CharacterTable& t, const std::string& normal_id,
                                   uint64_t seed, bool* all_pass);

/// The built-in verification corpus (catalog specs).
std::vector<std::string> corpus_group_specs();

struct CorpusResult {
  nlohmann::json report;
  bool pass = false;
  uint64_t pair_count = 0;
};

/// Runs the invariant suite over every normal subgroup of every corpus group.
CorpusResult verify_corpus(uint64_t seed, int jobs, const std::string& cache_dir);

}  // namespace gct
