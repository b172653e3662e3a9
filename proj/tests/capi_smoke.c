/* Compiles the public header as C and exercises a round trip. */
#include <stdio.h>
#include <string.h>

#include "rdisc.h"

int main(void) {
  rd_graph* g = NULL;
  rd_result* r = NULL;
  char* g6 = NULL;
  int value = 0;
  if (rd_graph_parse("C~", &g) != RD_OK) return 1;
  if (rd_graph_to_graph6(g, &g6) != RD_OK || strcmp(g6, "C~") != 0) return 2;
  rd_string_free(g6);
  if (rd_exact(g, 0, 0, &r) != RD_OK) return 3;
  value = rd_result_value(r);
  rd_result_free(r);
  rd_graph_free(g);
  if (rd_graph_parse("not a graph", &g) != RD_ERR_PARSE) return 4;
  printf("rd(K4) = %d\n", value);
  return value == 3 ? 0 : 5;
}
