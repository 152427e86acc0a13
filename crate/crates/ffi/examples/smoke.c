#include <stdio.h>
#include "maltsev.h"

int main(void) {
    char *out = NULL;
    bool eq = false;
    if (mw_normalize("mu(mu(x,y,y),z,z)", &out) != MW_STATUS_OK) return 1;
    printf("normalize: %s\n", out);
    mw_string_free(out);
    if (mw_fg_reduce("x y z z^-1 y^-1 x", &out) != MW_STATUS_OK) return 1;
    printf("reduce: %s\n", out);
    mw_string_free(out);
    mw_equal("mu(y,y,x)", "x", &eq);
    printf("equal: %d\n", eq);
    if (mw_normalize("mu(x,y)", &out) != MW_STATUS_PARSE) return 1;
    printf("error: %s\n", mw_last_error_message());

    MwAlgebra *alg = NULL;
    const char *z2 = "{\"name\":\"z2\",\"size\":2,\"operations\":"
                     "[{\"symbol\":\"mul\",\"arity\":2,\"table\":[0,1,1,0]}]}";
    if (mw_algebra_from_json(z2, &alg) != MW_STATUS_OK) return 1;
    size_t n = 0;
    mw_algebra_congruence_count(alg, 8, &n);
    printf("congruences: %zu\n", n);
    if (mw_algebra_find_maltsev_term(alg, 1000000, &out) == MW_STATUS_OK) {
        printf("maltsev term: %s\n", out);
        mw_string_free(out);
    }
    mw_algebra_free(alg);
    return 0;
}
