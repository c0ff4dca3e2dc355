#include <stdio.h>
#include <string.h>

#include "periodicity_gate.h"

int main(void) {
    PgField *k = NULL;
    if (pg_field_new("z", "z^2 + 1", &k) != PG_STATUS_OK) {
        fprintf(stderr, "%s\n", pg_last_error());
        return 1;
    }
    PgPoly *p = NULL;
    if (pg_poly_parse(k, "t^2 - 1", &p) != PG_STATUS_OK) {
        fprintf(stderr, "%s\n", pg_last_error());
        return 1;
    }
    PgReport *r = NULL;
    if (pg_obstruct(p, PG_LIFT_PLUS, PG_LIFT_SELECTION_MINUS, 0, &r) != PG_STATUS_OK) {
        fprintf(stderr, "%s\n", pg_last_error());
        return 1;
    }
    PgPoly *f = pg_report_factor_f(r);
    char *s = pg_poly_to_string(f);
    printf("%s %s\n", pg_report_verdict(r) == PG_VERDICT_CONSISTENT ? "CONSISTENT" : "OBSTRUCTED", s);
    pg_string_free(s);
    pg_poly_free(f);
    pg_report_free(r);
    pg_poly_free(p);
    pg_field_free(k);
    return 0;
}
