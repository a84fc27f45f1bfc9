#pragma once

#include <array>
#include <vector>

namespace jetfront {

// Boundary slope -r/s of a convex torus around the core, with s = 0 meaning
// slope infinity (the standard torus).  Always stored coprime.
struct SlopePair {
  int r = 1;
  int s = 0;
};

// Homology class p*mu + q*lambda of a curve on a torus around the core.
struct CurveClass {
  int p = 0;
  int q = 1;
};

// Twisting of the contact planes along a Legendrian curve on a convex
// surface, from the intersection count with the dividing set.
int kanda_twist(int intersection_count);

// Twisting relative to the torus framing: tb - p*q.
int twist_on_torus(int tb, CurveClass c);

// All coprime (r,s) with 1 <= r <= r_bound and 0 <= s <= r*m, i.e. the
// slopes -r/s <= -1/m realisable by convex tori around a core with
// tb = -m, together with slope infinity.
std::vector<SlopePair> admissible_slopes(int m, int r_bound);

// Minimal geometric intersection number of a (p,q)-curve with a two-curve
// dividing set over all admissible slopes.  Even and >= 0.
int min_intersection(CurveClass c, int m);

// Maximal Thurston-Bennequin invariant of a (p,q)-cable of a core with
// tb = -m, computed from the intersection-count bound:  pq - min/2.
// Independent of the closed-form case analysis in classify.
int tb_max_oracle(CurveClass c, int m);

// Unimodular change of basis on H_1 of the torus.
CurveClass change_basis(CurveClass c, const std::array<std::array<int, 2>, 2>& matrix);

// Effect of re-identifying the solid torus by a longitude change:
// tb + shift * winding^2.
int tb_after_longitude_shift(int tb, int winding, int shift);

}  // namespace jetfront
