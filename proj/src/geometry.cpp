#include <twt/geometry.hpp>

namespace twt {

Cube dilate(const Cube& q, const Rational& lam) {
  if (lam.sign() <= 0) throw invalid_cube_error("dilation factor must be positive, got " + lam.str());
  Rational shift = (Rational(1) - lam) / 2 * q.side();
  return Cube(q.corner() + RVec::constant(q.dim(), shift), lam * q.side());
}

std::vector<Cube> children(const Cube& q) {
  const int n = q.dim();
  Rational half = q.side() / 2;
  std::vector<Cube> out;
  out.reserve(std::size_t(1) << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    RVec c = q.corner();
    // Lexicographic corner order: axis 0 is the most significant bit.
    for (int i = 0; i < n; ++i)
      if (mask & (1 << (n - 1 - i))) c[i] += half;
    out.emplace_back(std::move(c), half);
  }
  return out;
}

std::vector<Cube> parents(const Cube& q) {
  const int n = q.dim();
  std::vector<Cube> out;
  out.reserve(std::size_t(1) << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    RVec c = q.corner();
    for (int i = 0; i < n; ++i)
      if (mask & (1 << (n - 1 - i))) c[i] -= q.side();
    out.emplace_back(std::move(c), 2 * q.side());
  }
  return out;
}

std::string Cube::str() const {
  std::string s;
  for (int i = 0; i < dim(); ++i) {
    if (i) s += "x";
    s += "[" + lo(i).str() + "," + hi(i).str() + ")";
  }
  return s;
}

Cube Cube::parse(std::string_view s) {
  auto bad = [&](const char* why) {
    throw parse_error(std::string("bad cube literal ('") + std::string(s) + "'): " + why);
  };
  std::vector<Rational> los, his;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '[') bad("expected '['");
    std::size_t comma = s.find(',', i);
    if (comma == std::string_view::npos) bad("missing ','");
    std::size_t close = s.find(')', comma);
    if (close == std::string_view::npos) bad("missing ')'");
    los.push_back(Rational::parse(s.substr(i + 1, comma - i - 1)));
    his.push_back(Rational::parse(s.substr(comma + 1, close - comma - 1)));
    i = close + 1;
    if (i < s.size()) {
      if (s[i] != 'x') bad("expected 'x' between axes");
      ++i;
    }
  }
  if (los.empty() || los.size() > kMaxDim) bad("dimension must be 1..3");
  Rational side = his[0] - los[0];
  if (side.sign() <= 0) bad("empty interval");
  RVec corner(static_cast<int>(los.size()));
  for (std::size_t k = 0; k < los.size(); ++k) {
    if (his[k] - los[k] != side) bad("sides differ between axes");
    corner[static_cast<int>(k)] = los[k];
  }
  return Cube(std::move(corner), side);
}

}  // namespace twt
