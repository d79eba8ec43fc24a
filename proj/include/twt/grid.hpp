#pragma once

// Shifted dyadic grids.  The grid with shift vector g (entries in
// {0, 1/3, 2/3}) has level-j cubes  2^j * ( k + [0,1)^n + (-1)^j g ),
// k integer.  The alternating sign makes consecutive levels nest: each
// level-j cube is tiled by exactly 2^n level-(j-1) cubes of the same grid.
// Levels are clamped to [kLevelMin, kLevelMax].

#include <twt/geometry.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace twt {

inline constexpr int kLevelMin = -40;
inline constexpr int kLevelMax = 40;

// A grid cube is identified by its level and integer index vector.
struct GridCube {
  int level = 0;
  std::array<std::int64_t, kMaxDim> k{};

  friend bool operator==(const GridCube&, const GridCube&) = default;
  friend std::strong_ordering operator<=>(const GridCube&, const GridCube&) = default;
};

class ShiftedGrid {
 public:
  // shift entries are given as integer numerators over 3: each in {0,1,2}.
  ShiftedGrid(int dim, std::array<int, kMaxDim> thirds);

  // The grid with shift vector gamma; entries must be 0, 1/3 or 2/3.
  static ShiftedGrid from_gamma(const RVec& gamma);
  static ShiftedGrid standard(int dim) { return ShiftedGrid(dim, {0, 0, 0}); }
  // All 3^dim shift choices, lexicographic, starting with the standard grid.
  static std::vector<ShiftedGrid> all_shifts(int dim);

  int dim() const { return dim_; }
  RVec gamma() const;
  const std::array<int, kMaxDim>& thirds() const { return thirds_; }

  Cube cube(const GridCube& gc) const;
  GridCube cube_at(int level, const RVec& x) const;    // unique level cube containing x
  std::array<std::int64_t, kMaxDim> index_at(int level, const RVec& x) const;

  std::vector<GridCube> children(const GridCube& gc) const;  // level-1, lexicographic
  GridCube parent(const GridCube& gc) const;                 // level+1

  // The nested chain of grid cubes containing x, levels ascending.
  std::vector<GridCube> containing_chain(const RVec& x, int level_lo, int level_hi) const;

  // Per-axis index ranges [begin, end) of level cubes meeting the box.
  struct IndexRange {
    std::array<std::int64_t, kMaxDim> begin{}, end{};
  };
  IndexRange index_range(int level, const Box& b) const;

  friend bool operator==(const ShiftedGrid&, const ShiftedGrid&) = default;

 private:
  static void check_level(int level);
  int sign_at(int level) const { return (level % 2 == 0) ? 1 : -1; }

  int dim_;
  std::array<int, kMaxDim> thirds_;  // 3 * gamma_i, each in {0,1,2}
};

// Result of the shifted-cover search: a grid cube Q' from one of the 3^n
// grids whose 9/10-dilate contains the query cube.
struct CoverResult {
  ShiftedGrid grid;
  GridCube gc;
  Cube cube;
  Rational side_ratio;  // side(Q') / side(Q)
};

// Finds, by exhaustive scan over shifts and ascending levels, a grid cube Q'
// with q inside (9/10) Q'.  The scan starts at the smallest level whose cubes
// are at least as large as q, so the returned ratio is minimal over levels.
CoverResult cover_cube(const Cube& q);

}  // namespace twt
