#pragma once

#include "bezroot_cli/json_io.hpp"

namespace bezroot::cli {

/// Recomputes the printed characteristic polynomials for (s, n) = (7, 10)
/// and (8, 12), the D-block signature table and the s = 2 closed form.
/// The result carries "passed" at the top level.
json paper_examples_report();

}  // namespace bezroot::cli
