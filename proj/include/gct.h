/* C interface to the gct library: exact character tables of finite
 * permutation groups and G-character-table analysis of their normal
 * subgroups.
 *
 * All functions returning int use the GCT_* status codes; on failure a
 * message is available from gct_last_error() until the next failing call on
 * the same thread. Strings returned through char** are heap-allocated and
 * must be released with gct_string_free().
 */
#ifndef GCT_H
#define GCT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GCT_OK 0
#define GCT_ERR_ARG 1     /* invalid input: catalog spec, JSON, ids, reps */
#define GCT_ERR_COMPUTE 2 /* internal computation failure */
#define GCT_ERR_IO 3      /* cache or file trouble */

typedef struct gct_group gct_group;
typedef struct gct_table gct_table;

const char* gct_last_error(void);

/* catalog specs: cyclic:<n>, dihedral:<order>, symmetric:<n>,
 * alternating:<n>, direct_product:<atom>,<atom>,..., D8xA4, AutD16, HolC5,
 * E8semiC4; atoms C<n>/D<n>/S<n>/A<n> */
int gct_group_from_catalog(const char* spec, gct_group** out);
/* {"degree": n, "generators": [[1-based images], ...]} */
int gct_group_from_json(const char* json_text, gct_group** out);
void gct_group_free(gct_group* g);
uint64_t gct_group_order(const gct_group* g);
int gct_group_hash(const gct_group* g, char** out);

/* cache_dir may be NULL or empty for no caching */
int gct_table_compute(const gct_group* g, uint64_t seed, const char* cache_dir,
                      gct_table** out);
void gct_table_free(gct_table* t);

/* format: "md" or "json" */
int gct_table_render(const gct_table* t, const char* format, char** out);
int gct_normals_render(const gct_table* t, const char* format, char** out);
/* normal_id: required; reps_csv: optional comma-separated 1-based row list */
int gct_gtable_render(const gct_table* t, const char* normal_id, const char* reps_csv,
                      const char* format, char** out);
/* normal_id: NULL or empty analyzes every normal subgroup */
int gct_analyze_render(const gct_table* t, const char* normal_id, const char* reps_csv,
                       const char* format, char** out);
/* group-algebra verification report (JSON); *all_pass set to 0/1 */
int gct_verify_algebra(const gct_table* t, const char* normal_id, uint64_t seed,
                       char** out, int* all_pass);
/* invariant suite over the built-in corpus; report is JSON */
int gct_verify_corpus(uint64_t seed, int jobs, const char* cache_dir, char** report_out,
                      int* all_pass);

void gct_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GCT_H */
