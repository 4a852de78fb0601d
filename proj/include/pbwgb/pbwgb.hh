#ifndef PBWGB_PBWGB_HH
#define PBWGB_PBWGB_HH

// Everything except the CLI driver (that one pulls in third-party headers;
// include pbwgb/cli.hh yourself if you want run_command).

#include "error.hh"
#include "free_module.hh"
#include "groebner.hh"
#include "intersect.hh"
#include "io.hh"
#include "oracle.hh"
#include "order.hh"
#include "pbw.hh"
#include "scalar.hh"
#include "syzygy.hh"
#include "twosided.hh"

#endif
