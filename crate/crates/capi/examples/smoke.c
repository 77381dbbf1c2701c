#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "kostant.h"

int main(void) {
    printf("version: %s\n", kostant_version());

    KostantTable *table = kostant_table_new(3, 1, "0,0,0");
    assert(table != NULL);
    assert(kostant_table_len(table) == 6);
    assert(kostant_table_n(table) == 3);
    assert(kostant_table_k(table) == 1);

    char *lambda = kostant_table_lambda(table);
    assert(strcmp(lambda, "0,0,0") == 0);
    kostant_string_free(lambda);

    char *row = kostant_table_row_json(table, 2);
    assert(row != NULL);
    printf("row 2: %.70s...\n", row);
    kostant_string_free(row);
    kostant_table_free(table);

    char *bad = kostant_table_row_json(NULL, 0);
    assert(bad == NULL);
    char *msg = kostant_last_error_message();
    printf("error surface: %s\n", msg);
    kostant_string_free(msg);

    char *csv = kostant_table_render(3, 1, "0,0,0", 1);
    assert(csv != NULL);
    assert(strncmp(csv, "n,k,I,J,length,t_twice,mu,self_dual,family", 42) == 0);
    kostant_string_free(csv);

    char *verdict = kostant_verdict_render(3, 1, "0,0,0", "3", "", true, true,
                                           KOSTANT_FLAG_TRUE, KOSTANT_FLAG_FALSE,
                                           false, false, 0);
    assert(verdict != NULL);
    assert(strstr(verdict, "\"Residual\"") != NULL);
    kostant_string_free(verdict);

    char *report = NULL;
    KostantStatus status = kostant_verify(2, 2, 1, &report);
    assert(status == KOSTANT_STATUS_OK);
    assert(report != NULL && strstr(report, "\"failures\": []") != NULL);
    kostant_string_free(report);

    printf("C smoke test: PASS\n");
    return 0;
}
