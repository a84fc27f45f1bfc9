#include <doctest.h>

#include <random>
#include <set>

#include "jetfront/front.hpp"
#include "jetfront/moves.hpp"
#include "random_fronts.hpp"

using namespace jetfront;
using jetfront::testing::random_front;

namespace {

std::vector<ComponentInvariants> all_invariants(const FrontDiagram& d) {
  Trace tr = trace_components(d);
  std::vector<ComponentInvariants> out;
  for (int c = 0; c < tr.component_count(); ++c) out.push_back(tr.invariants(c));
  return out;
}

}  // namespace

TEST_CASE("stabilization arithmetic") {
  FrontDiagram s_plus = stabilize(lambda_front(1), 0, 1);
  CHECK(invariants(s_plus, 0) == ComponentInvariants{-1, 1, 1});
  FrontDiagram s_minus = stabilize(lambda_front(1), 0, -1);
  CHECK(invariants(s_minus, 0) == ComponentInvariants{-1, -1, 1});

  FrontDiagram both = stabilize(s_plus, 0, -1);
  CHECK(invariants(both, 0) == ComponentInvariants{-2, 0, 1});

  FrontDiagram eye_stab = stabilize(meridian_eye_front(), 1, 1);
  CHECK(invariants(eye_stab, 1) == ComponentInvariants{-2, 1, 0});
  CHECK(invariants(eye_stab, 0) == ComponentInvariants{0, 0, 1});

  CHECK_THROWS(stabilize(lambda_front(1), 1, 1));
  CHECK_THROWS(stabilize(lambda_front(1), 0, 2));
}

TEST_CASE("stabilization on reversed components") {
  FrontDiagram d = lambda_front(1);
  d.orientations = {-1};
  FrontDiagram s = stabilize(d, 0, 1);
  ComponentInvariants iv = invariants(s, 0);
  CHECK(iv.tb == -1);
  CHECK(iv.rot == 1);
  CHECK(iv.winding == -1);
}

TEST_CASE("destabilization") {
  FrontDiagram s_plus = stabilize(lambda_front(1), 0, 1);
  auto back = destabilize(s_plus, 0, 1);
  REQUIRE(back.has_value());
  CHECK(*back == lambda_front(1));

  CHECK(!destabilize(lambda_front(1), 0, 1).has_value());
  CHECK(!destabilize(s_plus, 0, -1).has_value());  // wrong sign

  FrontDiagram two = stabilize(stabilize(lambda_front(1), 0, 1), 0, -1);
  auto once = destabilize(two, 0, -1);
  REQUIRE(once.has_value());
  CHECK(invariants(*once, 0) == ComponentInvariants{-1, 1, 1});
}

TEST_CASE("destabilize then stabilize is the identity on canonical keys") {
  FrontDiagram d = stabilize(lambda_front(1), 0, 1);
  // present the zigzag in a rotated frame
  FrontDiagram r = apply_move(d, {MoveKind::RotateBasepoint, 0, +1, false}).diagram;
  auto gone = destabilize(r, 0, 1);
  REQUIRE(gone.has_value());
  FrontDiagram again = stabilize(*gone, 0, 1);
  CHECK(canonical_key(again) == canonical_key(d));

  FrontDiagram eye_stab = stabilize(meridian_eye_front(), 1, -1);
  auto eye_back = destabilize(eye_stab, 1, -1);
  REQUIRE(eye_back.has_value());
  CHECK(canonical_key(*eye_back) == canonical_key(meridian_eye_front()));
  CHECK(canonical_key(stabilize(*eye_back, 1, -1)) == canonical_key(eye_stab));
}

TEST_CASE("destabilization across a commute window") {
  // bury the zigzag behind commuting events on another component
  FrontDiagram d = stabilize(lambda_front(2), 1, 1);  // zigzag at positions 2,3
  FrontDiagram s = stabilize(d, 0, -1);               // separate zigzag below it
  auto r = destabilize(s, 1, 1);
  REQUIRE(r.has_value());
  CHECK(invariants(*r, 1) == ComponentInvariants{0, 0, 1});
  CHECK(invariants(*r, 0) == ComponentInvariants{-1, -1, 1});
}

TEST_CASE("move site enumeration") {
  std::vector<MoveSite> lambda_sites = applicable_moves(lambda_front(2));
  for (const MoveSite& m : lambda_sites) CHECK(m.kind == MoveKind::RotateBasepoint);

  bool has_triple = false;
  for (const MoveSite& m : applicable_moves(torus_braid_front(2, 3)))
    if (m.kind == MoveKind::TriplePoint) has_triple = true;
  CHECK(has_triple);

  bool has_cusp_move = false;
  for (const MoveSite& m : applicable_moves(meridian_eye_front()))
    if (m.kind == MoveKind::CuspThroughStrand) has_cusp_move = true;
  CHECK(has_cusp_move);
}

TEST_CASE("moves preserve the classical invariants") {
  std::mt19937 rng(11);
  int checked = 0;
  while (checked < 120) {
    FrontDiagram d = random_front(rng);
    std::vector<MoveSite> sites = applicable_moves(d);
    if (sites.empty()) continue;
    MoveSite site = sites[rng() % sites.size()];
    MoveApplication app = apply_move(d, site);
    REQUIRE(validate(app.diagram).ok);
    auto before = all_invariants(d);
    auto after = all_invariants(app.diagram);
    REQUIRE(before.size() == after.size());
    for (size_t c = 0; c < before.size(); ++c) {
      CHECK(before[c] == after[app.component_map[c]]);
    }
    for (size_t a = 0; a < before.size(); ++a)
      for (size_t b = a + 1; b < before.size(); ++b)
        CHECK(inter_component_crossing_sum(d, a, b) ==
              inter_component_crossing_sum(app.diagram, app.component_map[a],
                                           app.component_map[b]));
    ++checked;
  }
}

TEST_CASE("every move undoes") {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 80) {
    FrontDiagram d = random_front(rng);
    std::vector<MoveSite> sites = applicable_moves(d);
    if (sites.empty()) continue;
    MoveSite site = sites[rng() % sites.size()];
    FrontDiagram fwd = apply_move(d, site).diagram;
    FrontDiagram back = apply_move(fwd, inverse_move(d, site)).diagram;
    CHECK(back == d);
    ++checked;
  }
}

TEST_CASE("canonical keys absorb rotation and commutation") {
  std::mt19937 rng(37);
  int rotations_checked = 0, commutes_checked = 0;
  while (rotations_checked < 15 || commutes_checked < 15) {
    FrontDiagram d = random_front(rng, 1, 1);
    std::string key = canonical_key(d);
    if (rotations_checked < 15) {
      FrontDiagram r = apply_move(d, {MoveKind::RotateBasepoint, 0, +1, false}).diagram;
      CHECK(canonical_key(r) == key);
      ++rotations_checked;
    }
    for (const MoveSite& m : applicable_moves(d)) {
      if (m.kind != MoveKind::Commute) continue;
      FrontDiagram c = apply_move(d, m).diagram;
      CHECK(canonical_key(c) == key);
      ++commutes_checked;
      break;
    }
  }
  CHECK(canonical_key(stabilize(lambda_front(1), 0, 1)) != canonical_key(lambda_front(1)));

  // two stacked eyes: a full rotation cycle relabels the components, the
  // key must not care
  FrontDiagram eyes{0,
                    {{EventKind::LeftCusp, 1},
                     {EventKind::RightCusp, 1},
                     {EventKind::LeftCusp, 1},
                     {EventKind::RightCusp, 1}},
                    {}, {}};
  REQUIRE(validate(eyes).ok);
  FrontDiagram turned = eyes;
  for (int i = 0; i < 2; ++i)
    turned = apply_move(turned, {MoveKind::RotateBasepoint, 0, +1, false}).diagram;
  CHECK(canonical_key(turned) == canonical_key(eyes));
}

TEST_CASE("search: invariant mismatch short-circuits") {
  SearchResult r = search_isotopy(lambda_front(1), stabilize(lambda_front(1), 0, 1));
  CHECK(r.verdict == SearchVerdict::NotIsotopic);
}

TEST_CASE("search: stabilizations commute") {
  FrontDiagram pm = stabilize(stabilize(lambda_front(1), 0, 1), 0, -1);
  FrontDiagram mp = stabilize(stabilize(lambda_front(1), 0, -1), 0, 1);
  SearchResult r = search_isotopy(pm, mp, {10, 100000});
  REQUIRE(r.verdict == SearchVerdict::Found);
  // replay the path and land exactly on the target
  FrontDiagram cur = pm;
  for (const MoveSite& m : r.path) cur = apply_move(cur, m).diagram;
  CHECK(cur == mp);
}

TEST_CASE("search: ordered flat two-copies stay apart") {
  FrontDiagram a = lambda_front(2);
  FrontDiagram b = lambda_front(2);
  b.order = {1, 0};
  SearchResult r = search_isotopy(a, b, {8, 20000});
  CHECK(r.verdict == SearchVerdict::NotFoundWithinBudget);
}

TEST_CASE("search: trivial equality") {
  SearchResult r = search_isotopy(meridian_eye_front(), meridian_eye_front());
  CHECK(r.verdict == SearchVerdict::Found);
  CHECK(r.path.empty());
}

TEST_CASE("search: symmetric under swapping the endpoints") {
  std::mt19937 rng(53);
  for (int i = 0; i < 10; ++i) {
    FrontDiagram d = random_front(rng, 1, 1);
    std::vector<MoveSite> sites = applicable_moves(d);
    FrontDiagram e = d;
    for (int hops = 0; hops < 2 && !sites.empty(); ++hops) {
      e = apply_move(e, sites[rng() % sites.size()]).diagram;
      sites = applicable_moves(e);
    }
    SearchBudget budget{6, 30000};
    SearchResult fwd = search_isotopy(d, e, budget);
    SearchResult bwd = search_isotopy(e, d, budget);
    CHECK((fwd.verdict == SearchVerdict::Found) == (bwd.verdict == SearchVerdict::Found));
  }
}
