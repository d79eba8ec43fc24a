#include <twt/grid.hpp>

namespace twt {

ShiftedGrid::ShiftedGrid(int dim, std::array<int, kMaxDim> thirds) : dim_(dim), thirds_(thirds) {
  if (dim < 1 || dim > kMaxDim) throw invalid_cube_error("grid dimension must be 1..3");
  for (int i = 0; i < dim; ++i)
    if (thirds_[i] < 0 || thirds_[i] > 2)
      throw invalid_cube_error("grid shift must be 0, 1/3 or 2/3 per axis");
  for (int i = dim; i < kMaxDim; ++i) thirds_[i] = 0;
}

ShiftedGrid ShiftedGrid::from_gamma(const RVec& gamma) {
  std::array<int, kMaxDim> t{};
  for (int i = 0; i < gamma.dim(); ++i) {
    Rational three = 3 * gamma[i];
    if (!three.is_integer()) throw invalid_cube_error("grid shift must be a multiple of 1/3");
    t[i] = static_cast<int>(three.num());
  }
  return ShiftedGrid(gamma.dim(), t);
}

std::vector<ShiftedGrid> ShiftedGrid::all_shifts(int dim) {
  int total = 1;
  for (int i = 0; i < dim; ++i) total *= 3;
  std::vector<ShiftedGrid> out;
  out.reserve(total);
  for (int code = 0; code < total; ++code) {
    std::array<int, kMaxDim> t{};
    int c = code;
    for (int i = dim - 1; i >= 0; --i) {
      t[i] = c % 3;
      c /= 3;
    }
    out.emplace_back(dim, t);
  }
  return out;
}

RVec ShiftedGrid::gamma() const {
  RVec g(dim_);
  for (int i = 0; i < dim_; ++i) g[i] = Rational(thirds_[i], 3);
  return g;
}

void ShiftedGrid::check_level(int level) {
  if (level < kLevelMin || level > kLevelMax)
    throw scale_error("grid level " + std::to_string(level) + " outside [" +
                      std::to_string(kLevelMin) + "," + std::to_string(kLevelMax) + "]");
}

Cube ShiftedGrid::cube(const GridCube& gc) const {
  check_level(gc.level);
  Rational side = Rational::pow2(gc.level);
  int s = sign_at(gc.level);
  RVec corner(dim_);
  for (int i = 0; i < dim_; ++i)
    corner[i] = side * (Rational(gc.k[i]) + Rational(s * thirds_[i], 3));
  return Cube(std::move(corner), side);
}

std::array<std::int64_t, kMaxDim> ShiftedGrid::index_at(int level, const RVec& x) const {
  check_level(level);
  Rational side = Rational::pow2(level);
  int s = sign_at(level);
  std::array<std::int64_t, kMaxDim> k{};
  for (int i = 0; i < dim_; ++i)
    k[i] = (x[i] / side - Rational(s * thirds_[i], 3)).floor();
  return k;
}

GridCube ShiftedGrid::cube_at(int level, const RVec& x) const {
  return GridCube{level, index_at(level, x)};
}

std::vector<GridCube> ShiftedGrid::children(const GridCube& gc) const {
  check_level(gc.level - 1);
  int s = sign_at(gc.level);
  std::vector<GridCube> out;
  out.reserve(std::size_t(1) << dim_);
  for (int mask = 0; mask < (1 << dim_); ++mask) {
    GridCube child{gc.level - 1, {}};
    for (int i = 0; i < dim_; ++i) {
      int eps = (mask >> (dim_ - 1 - i)) & 1;
      child.k[i] = 2 * gc.k[i] + eps + std::int64_t(s) * thirds_[i];
    }
    out.push_back(child);
  }
  return out;
}

GridCube ShiftedGrid::parent(const GridCube& gc) const {
  check_level(gc.level + 1);
  int sp = sign_at(gc.level + 1);
  GridCube p{gc.level + 1, {}};
  for (int i = 0; i < dim_; ++i) {
    std::int64_t t = gc.k[i] - std::int64_t(sp) * thirds_[i];
    p.k[i] = (t >= 0) ? t / 2 : (t - 1) / 2;  // floor division
  }
  return p;
}

std::vector<GridCube> ShiftedGrid::containing_chain(const RVec& x, int level_lo, int level_hi) const {
  if (level_lo > level_hi) throw scale_error("containing_chain: empty level range");
  std::vector<GridCube> chain;
  chain.reserve(level_hi - level_lo + 1);
  for (int j = level_lo; j <= level_hi; ++j) chain.push_back(cube_at(j, x));
  return chain;
}

ShiftedGrid::IndexRange ShiftedGrid::index_range(int level, const Box& b) const {
  check_level(level);
  Rational side = Rational::pow2(level);
  int s = sign_at(level);
  IndexRange r;
  for (int i = 0; i < dim_; ++i) {
    Rational shift(s * thirds_[i], 3);
    // cube k meets [lo, hi) iff 2^j(k+shift) < hi and 2^j(k+shift+1) > lo
    r.begin[i] = (b.lo[i] / side - shift + 1).ceil() - 1;
    r.end[i] = (b.hi[i] / side - shift).ceil();
    if (r.end[i] < r.begin[i]) r.end[i] = r.begin[i];
  }
  return r;
}

CoverResult cover_cube(const Cube& q) {
  // Smallest level at least as large as side(q).
  int j0 = kLevelMin;
  while (j0 < kLevelMax && Rational::pow2(j0) < q.side()) ++j0;
  if (Rational::pow2(j0) < q.side()) throw scale_error("cube too large for cover search");

  const Rational nine_tenths(9, 10);
  RVec center = q.center();
  for (int j = j0; j <= kLevelMax; ++j) {
    for (const ShiftedGrid& g : ShiftedGrid::all_shifts(q.dim())) {
      GridCube gc = g.cube_at(j, center);
      Cube big = g.cube(gc);
      if (dilate(big, nine_tenths).contains_cube(q))
        return CoverResult{g, gc, big, big.side() / q.side()};
    }
  }
  throw scale_error("cover search exhausted levels for cube " + q.str());
}

}  // namespace twt
