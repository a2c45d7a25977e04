/* Minimal C consumer of the cyclaut ABI.
 *
 * Build (from the workspace root, after `cargo build --release -p cyclaut-capi`):
 *   cc crates/capi/examples/capi_demo.c -Icrates/capi/include \
 *      target/release/libcyclaut_capi.a -lpthread -lm -ldl -o capi_demo
 * or link the shared library with -Ltarget/release -lcyclaut_capi and run
 * with LD_LIBRARY_PATH=target/release.
 */
#include <stdio.h>
#include <stdlib.h>

#include "cyclaut.h"

int main(void) {
    CyclautObject *hamming = NULL;
    CyclautStatus st = cyclaut_object_parse(
        "{\"n\":7,\"q\":2,\"defining_set\":[1,2,4]}", &hamming);
    if (st != CyclautStatus_Ok) {
        fprintf(stderr, "parse: %s\n", cyclaut_last_error());
        return 1;
    }
    char *report = NULL;
    st = cyclaut_classify(hamming, &report);
    if (st != CyclautStatus_Ok) {
        fprintf(stderr, "classify: %s\n", cyclaut_last_error());
        cyclaut_object_free(hamming);
        return 1;
    }
    printf("classification: %s\n", report);
    cyclaut_string_free(report);

    CyclautObject *a = NULL, *b = NULL;
    cyclaut_object_parse("{\"n\":9,\"connection\":[1,8],\"directed\":false}", &a);
    cyclaut_object_parse("{\"n\":9,\"connection\":[2,7],\"directed\":false}", &b);
    bool eq = false;
    char *witness = NULL;
    st = cyclaut_equivalent(a, b, 10000000, 1, &eq, &witness);
    if (st != CyclautStatus_Ok) {
        fprintf(stderr, "equivalent: %s\n", cyclaut_last_error());
        return 1;
    }
    printf("equivalent: %s\nwitness: %s\n", eq ? "yes" : "no", witness);
    cyclaut_string_free(witness);
    cyclaut_object_free(a);
    cyclaut_object_free(b);
    cyclaut_object_free(hamming);
    return 0;
}
