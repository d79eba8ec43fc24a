#pragma once

#include <stdexcept>
#include <string>

namespace twt {

// Every failure mode in the library is an exception rooted here, so callers
// (CLI, tests) can distinguish "bad input" from "internal invariant broke".
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable range.
struct overflow_error : error {
  using error::error;
};

// Malformed rational / cube / measure-spec text.
struct parse_error : error {
  using error::error;
};

// Cube with nonpositive side, dimension mismatch, or similar.
struct invalid_cube_error : error {
  using error::error;
};

// Dyadic level outside the supported range.
struct scale_error : error {
  using error::error;
};

// Two lattice-backed objects with incompatible lattices.
struct lattice_mismatch_error : error {
  using error::error;
};

// Operation applied to the wrong measure kind (e.g. restrict on closed form).
struct kind_error : error {
  using error::error;
};

// Whitney decomposition of a set with no exterior in the window.
struct no_exterior_error : error {
  using error::error;
};

// Open set carries detail below the grid's floor scale.
struct resolution_error : error {
  using error::error;
};

// A case split that is provably exhaustive failed on an instance; this means
// the implementation (not the instance) is wrong, so we halt loudly.
struct exhaustiveness_error : error {
  using error::error;
};

// Fractional kernel evaluated inside a massive cell with no closed form.
struct singular_cell_error : error {
  using error::error;
};

// CLI / config file problems.
struct config_error : error {
  using error::error;
};

}  // namespace twt
