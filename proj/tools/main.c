/* Copyright (c) 2026 dpring developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * dpring CLI: a thin shim over the shared-library C API.
 */

#include <stdio.h>

#include <dpring.h>

int main(int argc, char** argv) {
  char* out = NULL;
  char* err = NULL;
  int code = dpr_run_command(argc - 1, (const char* const*)(argv + 1), &out, &err);
  if (out != NULL) {
    fputs(out, stdout);
    dpr_string_free(out);
  }
  if (err != NULL) {
    fputs(err, stderr);
    dpr_string_free(err);
  }
  return code;
}
