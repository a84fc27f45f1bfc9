#include "jetfront/slopes.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace jetfront {

namespace {

void check_class(CurveClass c) {
  if (c.q < 0) throw std::invalid_argument("curve class must have q >= 0");
  if (c.q == 0 && c.p != 1) throw std::invalid_argument("q = 0 requires p = 1");
  int g = std::gcd(std::abs(c.p), std::abs(c.q));
  if (g != 1) throw std::invalid_argument("curve class must be coprime");
}

int min_intersection_bounded(CurveClass c, int m, int r_bound) {
  int best = -1;
  for (const SlopePair& sl : admissible_slopes(m, r_bound)) {
    int v = 2 * std::abs(c.p * sl.r + c.q * sl.s);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

}  // namespace

int kanda_twist(int intersection_count) {
  if (intersection_count < 0 || intersection_count % 2 != 0)
    throw std::invalid_argument("intersection count must be even and >= 0");
  return -intersection_count / 2;
}

int twist_on_torus(int tb, CurveClass c) { return tb - c.p * c.q; }

std::vector<SlopePair> admissible_slopes(int m, int r_bound) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (r_bound < 1) throw std::invalid_argument("r_bound must be >= 1");
  std::vector<SlopePair> out;
  for (int r = 1; r <= r_bound; ++r)
    for (int s = 0; s <= r * m; ++s)
      if (std::gcd(r, s) == 1) out.push_back({r, s});
  return out;
}

int min_intersection(CurveClass c, int m) {
  check_class(c);
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  // The closed forms put the minimum at (1,0), (1,m) or (q,-p); the bound
  // max(q,1)+2 covers those without assuming them, and the +2 re-check
  // guards against a minimum escaping the search window.
  int r_bound = std::max(c.q, 1) + 2;
  int v = min_intersection_bounded(c, m, r_bound);
  if (min_intersection_bounded(c, m, r_bound + 2) != v)
    throw std::logic_error("min_intersection: search bound unstable");
  return v;
}

int tb_max_oracle(CurveClass c, int m) {
  check_class(c);
  return c.p * c.q - min_intersection(c, m) / 2;
}

CurveClass change_basis(CurveClass c, const std::array<std::array<int, 2>, 2>& matrix) {
  int det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
  if (det != 1 && det != -1) throw std::invalid_argument("basis change must be unimodular");
  return {matrix[0][0] * c.p + matrix[0][1] * c.q,
          matrix[1][0] * c.p + matrix[1][1] * c.q};
}

int tb_after_longitude_shift(int tb, int winding, int shift) {
  return tb + shift * winding * winding;
}

}  // namespace jetfront
