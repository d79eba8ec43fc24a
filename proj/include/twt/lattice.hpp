#pragma once

// Uniform cell lattices over a rectangular window, plus the two workhorse
// containers on them: CellField (a binary64 value per cell, with an integral
// image for box queries) and CellSet (a membership flag per cell).
//
// Geometry queries come in two flavours, both computed with exact rational
// index arithmetic:
//   * proportional-overlap sums (CellField::box_sum): boundary cells count
//     fractionally by overlap volume; this is the convention for integrating
//     lattice data over non-aligned cubes,
//   * midpoint-resolution queries (CellSet): a cell belongs to a region iff
//     its midpoint does; this is the convention for set-level statements.

#include <twt/geometry.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace twt {

class Lattice {
 public:
  // Window must be an exact integer number of h-cells per axis.
  static Lattice over(const Box& window, const Rational& h);

  int dim() const { return dim_; }
  const Rational& h() const { return h_; }
  const RVec& origin() const { return origin_; }
  std::int64_t count(int axis) const { return count_[axis]; }
  std::int64_t cells() const { return total_; }
  Box window() const;
  double cell_volume() const;

  std::array<std::int64_t, kMaxDim> unflat(std::int64_t flat) const;
  std::int64_t flat(const std::array<std::int64_t, kMaxDim>& idx) const;

  Box cell_box(std::int64_t flat) const;
  RVec midpoint(std::int64_t flat) const;

  // Cell containing the point, if inside the window.
  std::optional<std::int64_t> cell_at(const RVec& x) const;

  struct AxisRange {
    std::int64_t begin = 0, end = 0;  // half-open, clamped to the window
    std::int64_t len() const { return end - begin; }
  };
  // Cells whose midpoint lies in the (half-open) box.
  std::array<AxisRange, kMaxDim> midpoint_ranges(const Box& b) const;
  std::int64_t midpoint_cell_count(const Box& b) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.h_ == b.h_ && a.origin_ == b.origin_ && a.count_ == b.count_;
  }

 private:
  RVec origin_{};
  Rational h_{1};
  std::array<std::int64_t, kMaxDim> count_{1, 1, 1};
  std::int64_t total_ = 1;
  int dim_ = 1;
};

namespace detail {
// Per-axis decomposition of [lo, hi) into boundary cells with fractional
// overlap weights and a fully covered middle range.
struct AxisCover {
  Lattice::AxisRange full;
  std::optional<std::pair<std::int64_t, double>> lo_edge, hi_edge;
};
AxisCover axis_cover(const RVec& origin, const Rational& h, std::int64_t count, int axis,
                     const Rational& lo, const Rational& hi);
}  // namespace detail

class CellField {
 public:
  explicit CellField(Lattice lat, double init = 0.0)
      : lat_(std::move(lat)), v_(static_cast<std::size_t>(lat_.cells()), init) {}
  CellField(Lattice lat, std::vector<double> values);

  const Lattice& lattice() const { return lat_; }
  double operator[](std::int64_t flat) const { return v_[static_cast<std::size_t>(flat)]; }
  void set(std::int64_t flat, double x) {
    v_[static_cast<std::size_t>(flat)] = x;
    fresh_ = false;
  }
  const std::vector<double>& values() const { return v_; }

  double total() const;

  // Sum of cell values over the box with proportional overlap at the edges.
  double box_sum(const Box& b) const;
  // Sum over fully aligned index ranges (used by the fast evaluators).
  double range_sum(const std::array<Lattice::AxisRange, kMaxDim>& r) const;

 private:
  void refresh() const;
  double prefix_at(std::int64_t i0, std::int64_t i1, std::int64_t i2) const;
  double corner_sum(const std::array<std::int64_t, kMaxDim>& b,
                    const std::array<std::int64_t, kMaxDim>& e) const;

  Lattice lat_;
  std::vector<double> v_;
  mutable std::vector<double> prefix_;
  mutable bool fresh_ = false;
};

class CellSet {
 public:
  explicit CellSet(Lattice lat) : lat_(std::move(lat)), in_(static_cast<std::size_t>(lat_.cells()), 0) {}

  const Lattice& lattice() const { return lat_; }

  bool contains(std::int64_t flat) const { return in_[static_cast<std::size_t>(flat)] != 0; }
  void add(std::int64_t flat);
  void remove(std::int64_t flat);
  std::int64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_whole_window() const { return size_ == lat_.cells(); }

  std::vector<std::int64_t> members() const;

  CellSet intersect(const CellSet& o) const;
  CellSet subtract(const CellSet& o) const;
  CellSet unite(const CellSet& o) const;
  CellSet complement() const;
  bool subset_of(const CellSet& o) const;

  // Number of member cells whose midpoint lies in the box.
  std::int64_t count_in(const Box& b) const;
  // True iff the box lies inside the window and every window cell midpoint
  // in it belongs to the set (containment at midpoint resolution).
  bool region_subset(const Box& b) const;
  // True iff some member midpoint lies in the box.
  bool meets(const Box& b) const { return count_in(b) > 0; }

 private:
  void require_same(const CellSet& o) const;
  void refresh() const;
  std::int64_t prefix_at(std::int64_t i0, std::int64_t i1, std::int64_t i2) const;

  Lattice lat_;
  std::vector<std::uint8_t> in_;
  std::int64_t size_ = 0;
  mutable std::vector<std::int64_t> prefix_;
  mutable bool fresh_ = false;
};

// Sum of field values over the member cells (plain cell sum, no weights).
double dot(const CellField& f, const CellSet& s);

}  // namespace twt
