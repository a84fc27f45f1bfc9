#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetfront/front.hpp"

namespace jetfront {

// Local rewrites of the event word that realise Legendrian isotopies:
//   TriplePoint        braid relation on three consecutive crossings
//   CuspThroughStrand  a strand sweeps across a cusp point, creating or
//                      cancelling its two crossings with the branch pair
//                      (four variants: which side of a left/right cusp)
//   ZigzagSlide        two adjacent zigzags on the same strand swap order
//                      (stabilizations commute)
//   Commute            adjacent events in disjoint height ranges swap; a
//                      right cusp meeting a left cusp at the same slot has
//                      two outcomes (variant 0: reopen below, 1: above)
//   RotateBasepoint    the x = 0 line slides across one event
enum class MoveKind : std::uint8_t {
  TriplePoint,
  CuspThroughStrand,
  ZigzagSlide,
  Commute,
  RotateBasepoint,
};

// CuspThroughStrand variants, named by where the transverse strand sits in
// the crossing-free form.
enum class CuspPass : std::uint8_t {
  LeftCuspStrandBelow,
  LeftCuspStrandAbove,
  RightCuspStrandAbove,
  RightCuspStrandBelow,
};

struct MoveSite {
  MoveKind kind;
  int index = 0;    // word index of the leftmost event in the window
  int variant = 0;  // CuspPass value; RotateBasepoint: +1 forward / -1 backward
  bool expand = false;  // CuspThroughStrand: 1 -> 3 (else contract 3 -> 1)
  bool operator==(const MoveSite&) const = default;
};

struct MoveApplication {
  FrontDiagram diagram;
  std::vector<int> component_map;  // old component id -> new component id
};

// Complete enumeration of the legal sites on a valid diagram.
std::vector<MoveSite> applicable_moves(const FrontDiagram& d);

// Applies one move.  Component identity, orientations and the link order
// are carried through the rewrite.  Throws on an illegal site.
MoveApplication apply_move(const FrontDiagram& d, const MoveSite& site);

// The site undoing `site`, addressed against apply_move(d, site).diagram.
MoveSite inverse_move(const FrontDiagram& d, const MoveSite& site);

// Inserts a two-cusp zigzag on the component at its first segment.
// tb drops by 1, rot changes by sign.
FrontDiagram stabilize(const FrontDiagram& d, int component, int sign);

// Removes one zigzag of the given sign from the component if one can be
// exposed by at most `window` commutations/rotations.  nullopt means no
// zigzag was found syntactically, not that none exists.
std::optional<FrontDiagram> destabilize(const FrontDiagram& d, int component, int sign,
                                        int window = 8);

// Key equal across RotateBasepoint and Commute rewrites: classical
// invariants per link position plus each component's canonical cyclic
// feature word (cusps with z-direction; crossings with front/back role,
// sign and partner position).  Diagrams differing by other moves hash
// apart through the crossing/cusp data; genuinely different words can
// collide, so exact comparisons should use encode().
std::string canonical_key(const FrontDiagram& d);

// Exact textual encoding of a diagram (orientations and order included).
std::string encode(const FrontDiagram& d);

struct SearchBudget {
  int max_depth = 14;
  long max_states = 2'000'000;
};

enum class SearchVerdict { Found, NotFoundWithinBudget, NotIsotopic };

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::NotFoundWithinBudget;
  std::vector<MoveSite> path;  // applies sequentially, transforming d1 into d2
  long states = 0;
  std::string reason;
};

// Bidirectional breadth-first search for a move path from d1 to d2.
// A mismatch of per-position classical invariants is a conclusive
// non-isotopy; exhausting the budget is inconclusive.
SearchResult search_isotopy(const FrontDiagram& d1, const FrontDiagram& d2,
                            SearchBudget budget = {});

}  // namespace jetfront
