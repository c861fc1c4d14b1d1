#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <unistd.h>

#include "fibercone/fibercone.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: FAILED %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* haystack, const char* needle) { return strstr(haystack, needle) != NULL; }

static void test_ideal(void) {
  fc_ideal* ideal = NULL;
  char* json = NULL;
  int member = -1;
  int64_t m[2] = {5, 5};
  EXPECT(fc_ideal_parse("4,0;3,2;2,3;0,4", 0, &ideal) == FC_OK);
  EXPECT(fc_member_strict(ideal, m, 2, 2, &member) == FC_OK);
  EXPECT(member == 1);
  EXPECT(fc_member_strict(ideal, m, 3, 2, &member) == FC_INVALID_INPUT);
  EXPECT(fc_ideal_power_json(ideal, 3, &json) == FC_OK);
  EXPECT(contains(json, "\"mu_powers\":[4,7,10]"));
  fc_string_free(json);
  fc_ideal_free(ideal);

  ideal = NULL;
  EXPECT(fc_ideal_parse("4,0;x", 0, &ideal) == FC_INVALID_INPUT);
  EXPECT(ideal == NULL);
  EXPECT(strlen(fc_last_error()) > 0);
  EXPECT(fc_ideal_parse(NULL, 0, &ideal) == FC_INVALID_INPUT);
  EXPECT(fc_ideal_symmetric(2, 4, 6, &ideal) == FC_INVALID_INPUT);
  EXPECT(fc_ideal_symmetric(2, 3, 4, &ideal) == FC_OK);
  EXPECT(strlen(fc_last_error()) == 0);
  fc_ideal_free(ideal);
  fc_ideal_free(NULL);
}

static void test_kernel(void) {
  fc_ideal* ideal = NULL;
  fc_kernel* kernel = NULL;
  char* json = NULL;
  EXPECT(fc_ideal_symmetric(3, 8, 10, &ideal) == FC_OK);
  EXPECT(fc_kernel_compute(ideal, 6, &kernel) == FC_OK);
  EXPECT(fc_kernel_to_json(kernel, &json) == FC_OK);
  EXPECT(contains(json, "\"mu_J\":4"));
  EXPECT(contains(json, "z1*z3^2 - z2^2*z4"));
  fc_string_free(json);
  EXPECT(fc_kernel_depth_json(kernel, 32003, 64, 1, &json) == FC_INCONCLUSIVE);
  fc_kernel_free(kernel);

  EXPECT(fc_kernel_compute_stable(ideal, 30, &kernel) == FC_OK);
  EXPECT(fc_kernel_evidence_json(kernel, &json) == FC_OK);
  EXPECT(contains(json, "\"sufficient\":true"));
  fc_string_free(json);
  EXPECT(fc_kernel_depth_json(kernel, 32003, 64, 1, &json) == FC_OK);
  EXPECT(contains(json, "\"depth\":1"));
  fc_string_free(json);
  EXPECT(fc_kernel_depth_json(kernel, 32001, 64, 1, &json) == FC_INVALID_INPUT);
  fc_kernel_free(kernel);
  fc_ideal_free(ideal);
}

static void test_classify(void) {
  fc_classification* cl = NULL;
  char* json = NULL;
  int64_t a[2] = {2, 3}, b[2] = {1, 2};
  EXPECT(fc_classify_symmetric(2, 29, 30, &cl) == FC_OK);
  EXPECT(fc_classification_depth_json(cl, 32003, 64, 1, &json) == FC_INCONCLUSIVE);
  EXPECT(fc_classification_certify(cl, 3) == FC_OK);
  EXPECT(fc_classification_to_json(cl, &json) == FC_OK);
  EXPECT(contains(json, "\"case\":\"iv\""));
  EXPECT(contains(json, "CertifiedUpTo"));
  fc_string_free(json);
  EXPECT(fc_classification_depth_json(cl, 32003, 64, 1, &json) == FC_OK);
  EXPECT(contains(json, "\"depth\":1"));
  fc_string_free(json);
  fc_classification_free(cl);

  EXPECT(fc_classify_ci(3, 3, 2, 4, &cl) == FC_OK);
  EXPECT(fc_classification_certify(cl, 3) == FC_OK);
  fc_classification_free(cl);

  EXPECT(fc_classify_hypersurface(a, b, 2, &cl) == FC_OK);
  EXPECT(fc_classification_to_json(cl, &json) == FC_OK);
  EXPECT(contains(json, "HPlus"));
  fc_string_free(json);
  fc_classification_free(cl);
  EXPECT(fc_classify_hypersurface(a, b, 0, &cl) == FC_INVALID_INPUT);
  EXPECT(fc_classification_certify(NULL, 3) == FC_INVALID_INPUT);
}

static void test_sweep(void) {
  char path[64];
  char* json = NULL;
  char* table = NULL;
  snprintf(path, sizeof path, "/tmp/fibercone-c-api-%d.jsonl", (int)getpid());
  remove(path);
  EXPECT(fc_sweep_run("{\"family\":\"symmetric\",\"ranges\":{\"c\":[3,5]}}", path, 2, &json) == FC_OK);
  EXPECT(contains(json, "\"added\":6"));
  EXPECT(fc_sweep_summary_table(json, &table) == FC_OK);
  EXPECT(contains(table, "added 6"));
  fc_string_free(table);
  fc_string_free(json);
  EXPECT(fc_sweep_report(path, &json) == FC_OK);
  EXPECT(contains(json, "\"depth_zero\":[]"));
  fc_string_free(json);
  EXPECT(fc_sweep_run("{\"family\":\"bogus\"}", path, 1, &json) == FC_INVALID_INPUT);
  EXPECT(fc_sweep_run("not json", path, 1, &json) == FC_INVALID_INPUT);
  remove(path);
}

static void test_examples(void) {
  char* json = NULL;
  int failed = -1;
  EXPECT(fc_worked_examples(&json, &failed) == FC_OK);
  EXPECT(failed == 0);
  EXPECT(contains(json, "\"passed\":true"));
  fc_string_free(json);
  EXPECT(strcmp(fc_status_name(FC_MISMATCH), "mismatch") == 0);
}

int main(void) {
  test_ideal();
  test_kernel();
  test_classify();
  test_sweep();
  test_examples();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
