#pragma once

#include <random>
#include <vector>

#include "jetfront/front.hpp"
#include "jetfront/moves.hpp"

namespace jetfront::testing {

// Deterministic sampler over valid fronts: a seed diagram, a few
// stabilizations, then a few moves.
inline FrontDiagram random_front(std::mt19937& rng, int max_stabs = 3, int max_moves = 4) {
  FrontDiagram d;
  switch (rng() % 6) {
    case 0: d = lambda_front(1 + rng() % 3); break;
    case 1: d = meridian_eye_front(); break;
    case 2: d = torus_braid_front(2, 3); break;
    case 3: d = torus_braid_front(3, 2); break;
    case 4: d = cable_link_front(1, 1); break;
    default: d = cable_link_front(2, 3); break;
  }
  int stabs = rng() % (max_stabs + 1);
  for (int i = 0; i < stabs; ++i) {
    int comp = rng() % component_count(d);
    int sign = (rng() % 2) ? 1 : -1;
    d = stabilize(d, comp, sign);
  }
  int moves = rng() % (max_moves + 1);
  for (int i = 0; i < moves; ++i) {
    std::vector<MoveSite> sites = applicable_moves(d);
    if (sites.empty()) break;
    d = apply_move(d, sites[rng() % sites.size()]).diagram;
  }
  return d;
}

}  // namespace jetfront::testing
