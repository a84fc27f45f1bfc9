#pragma once

#include "jetfront/slopes.hpp"

namespace jetfront {

// Cable type of the image link in S^3 under the standard contact embedding
// of the 1-jet space into the complement of a Legendrian unknot.
struct S3CableType {
  int p_prime;
  int q_prime;
};

// Oriented class plus classical invariants, as acted on by orientation
// reversal of the cable component.
struct OrientedClassInvariants {
  int p;
  int q;
  int tb;
  int rot;
};

// (p,q) |-> (-q, q-p).  Unimodular, so coprimality is preserved.
S3CableType cable_type_to_s3(int p, int q);

// tb in the jet space vs tb in S^3 differ by the square of the winding:
// tb' = tb - q^2 for a component winding q times around the circle factor.
int tb_to_s3(int tb_jet, int q);

// m' = m + 1: the core maps to a tb = -(m+1) unknot in S^3.
int m_to_s3(int m);

// Reversing the orientation of the cable component negates its class and
// rotation number and fixes tb.
OrientedClassInvariants reverse_orientation(OrientedClassInvariants v);

// For 0 < p < q-1, the difference between the maximal tb of the image
// cable type realised freely in S^3 and the maximal tb realisable as an
// image from the jet space.  Equals p; positive, so some S^3 cable links
// are not images.
int cor_noimage_gap(int p, int q);

// Maximal tb of the positive torus knot of type (-p', -q'):
// p'q' + p' + q'  (also valid for q' = 0 with p' = -1).
int s3_positive_torus_tb_max(int p_prime, int q_prime);

}  // namespace jetfront
