#include <stdio.h>
#include <string.h>

#include "dichoose.h"

int main(void) {
    DichooseDigraph *t = NULL;
    if (dichoose_tournament(1, &t) != DICHOOSE_STATUS_OK) {
        fprintf(stderr, "%s\n", dichoose_last_error());
        return 1;
    }
    size_t value = 0;
    uint32_t colours[4];
    if (dichoose_dichromatic_number(t, NULL, &value, colours, 4) != DICHOOSE_STATUS_OK) {
        fprintf(stderr, "%s\n", dichoose_last_error());
        return 1;
    }
    DichooseGraph *g = NULL;
    DichooseStatus s = dichoose_graph_parse("graph 2\n0 2\n", &g);
    printf("n=%zu arcs=%zu chi=%zu parse=%d err=%s\n", dichoose_digraph_vertex_count(t), dichoose_digraph_arc_count(t), value, (int)s,
           dichoose_last_error());
    dichoose_digraph_free(t);
    return 0;
}
