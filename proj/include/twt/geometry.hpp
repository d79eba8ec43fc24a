#pragma once

// Points, axis-aligned boxes, and half-open cubes [corner, corner+side)^n
// with exact rational coordinates.  Dimension is a runtime value in 1..3;
// anything higher is out of scope for this library.

#include <twt/rational.hpp>

#include <array>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace twt {

inline constexpr int kMaxDim = 3;

class RVec {
 public:
  RVec() : dim_(1) {}
  explicit RVec(int dim) : dim_(dim) { check_dim(dim); }
  RVec(std::initializer_list<Rational> xs) : dim_(static_cast<int>(xs.size())) {
    check_dim(dim_);
    int i = 0;
    for (const auto& x : xs) c_[i++] = x;
  }

  static RVec constant(int dim, const Rational& v) {
    RVec r(dim);
    for (int i = 0; i < dim; ++i) r.c_[i] = v;
    return r;
  }

  int dim() const { return dim_; }
  Rational& operator[](int i) { return c_[i]; }
  const Rational& operator[](int i) const { return c_[i]; }

  friend RVec operator+(const RVec& a, const RVec& b) {
    RVec r(a.require_same_dim(b));
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend RVec operator-(const RVec& a, const RVec& b) {
    RVec r(a.require_same_dim(b));
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend RVec operator*(const Rational& s, const RVec& a) {
    RVec r(a.dim_);
    for (int i = 0; i < r.dim_; ++i) r.c_[i] = s * a.c_[i];
    return r;
  }

  friend bool operator==(const RVec& a, const RVec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  // Lexicographic; used for deterministic tie-breaking only.
  friend std::strong_ordering operator<=>(const RVec& a, const RVec& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int i = 0; i < a.dim_; ++i)
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim_; ++i) s += (i ? "," : "") + c_[i].str();
    return s + ")";
  }

 private:
  static void check_dim(int d) {
    if (d < 1 || d > kMaxDim) throw invalid_cube_error("dimension must be 1..3, got " + std::to_string(d));
  }
  int require_same_dim(const RVec& b) const {
    if (dim_ != b.dim_) throw invalid_cube_error("dimension mismatch");
    return dim_;
  }

  std::array<Rational, kMaxDim> c_{};
  int dim_;
};

// Half-open rectangular box: product of [lo_i, hi_i).  Boxes arise as cube
// intersections and query regions; they may be empty (hi <= lo on some axis).
struct Box {
  RVec lo, hi;

  Box() = default;
  Box(RVec l, RVec h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.dim() != hi.dim()) throw invalid_cube_error("box corner dimension mismatch");
  }

  int dim() const { return lo.dim(); }

  bool empty() const {
    for (int i = 0; i < dim(); ++i)
      if (hi[i] <= lo[i]) return true;
    return false;
  }

  bool contains_point(const RVec& x) const {
    for (int i = 0; i < dim(); ++i)
      if (x[i] < lo[i] || x[i] >= hi[i]) return false;
    return true;
  }
  // b subset of this, both half-open; the empty box is contained everywhere.
  bool contains_box(const Box& b) const {
    if (b.empty()) return true;
    for (int i = 0; i < dim(); ++i)
      if (b.lo[i] < lo[i] || b.hi[i] > hi[i]) return false;
    return true;
  }
  bool intersects(const Box& b) const { return !intersect(b).empty(); }

  Box intersect(const Box& b) const {
    Box r(lo, hi);
    for (int i = 0; i < dim(); ++i) {
      r.lo[i] = max(lo[i], b.lo[i]);
      r.hi[i] = min(hi[i], b.hi[i]);
    }
    return r;
  }

  double volume() const {
    if (empty()) return 0.0;
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= (hi[i] - lo[i]).to_double();
    return v;
  }

  friend bool operator==(const Box&, const Box&) = default;
};

class Cube {
 public:
  Cube() : corner_(1), side_(1) {}
  Cube(RVec corner, Rational side) : corner_(std::move(corner)), side_(std::move(side)) {
    if (side_.sign() <= 0) throw invalid_cube_error("cube side must be positive, got " + side_.str());
  }

  int dim() const { return corner_.dim(); }
  const RVec& corner() const { return corner_; }
  const Rational& side() const { return side_; }

  Rational lo(int i) const { return corner_[i]; }
  Rational hi(int i) const { return corner_[i] + side_; }

  RVec center() const { return corner_ + RVec::constant(dim(), side_ / 2); }

  Box box() const {
    return Box(corner_, corner_ + RVec::constant(dim(), side_));
  }

  double volume() const {
    double s = side_.to_double(), v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= s;
    return v;
  }

  bool contains_point(const RVec& x) const { return box().contains_point(x); }
  bool contains_cube(const Cube& q) const { return box().contains_box(q.box()); }
  bool intersects(const Cube& q) const { return box().intersects(q.box()); }

  friend bool operator==(const Cube& a, const Cube& b) {
    return a.side_ == b.side_ && a.corner_ == b.corner_;
  }
  friend std::strong_ordering operator<=>(const Cube& a, const Cube& b) {
    if (auto c = a.side_ <=> b.side_; c != 0) return c;
    return a.corner_ <=> b.corner_;
  }

  // "[a,b)" per axis joined by "x", e.g. "[-1/3,2/3)x[0,1)".
  std::string str() const;
  static Cube parse(std::string_view s);

 private:
  RVec corner_;
  Rational side_;
};

// Concentric dilation: same center, side scaled by lam > 0.
Cube dilate(const Cube& q, const Rational& lam);

// The 2^n half-side subcubes tiling q, in lexicographic corner order.
std::vector<Cube> children(const Cube& q);

// The 2^n double-side cubes P with q among children(P), lexicographic order.
// Every P contains q.
std::vector<Cube> parents(const Cube& q);

}  // namespace twt
