#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jetfront {

enum class EventKind : std::uint8_t { Crossing, LeftCusp, RightCusp };

// One front event at a fixed x-coordinate, acting on the strand stack.
// Positions are 1-based z-order indices, bottom to top.
//   Crossing @ i   swaps strands i, i+1
//   LeftCusp @ i   inserts two new strands at i, i+1
//   RightCusp @ i  merges strands i, i+1 at a cusp point
struct Event {
  EventKind kind;
  int position;
  bool operator==(const Event&) const = default;
};

// Multi-component Legendrian front on the annulus [0,2pi] x R, encoded as
// base strand count at x = 0 plus the x-ordered event word.  Strand ends at
// x = 2pi glue straight back to the base strands.
//
// orientations: one sign per component id, +1/-1; empty means all +1.  The
// sign orients the component's lowest base strand rightward (+1) or
// leftward; a component without base strands is anchored at the lower
// branch of its first left cusp.
//
// order: the link order as a permutation, order[k] = component id of the
// k-th link component; empty means identity.  Needed because an ordered
// link is more data than its picture.
struct FrontDiagram {
  int base_strands = 0;
  std::vector<Event> events;
  std::vector<std::int8_t> orientations;
  std::vector<int> order;
  bool operator==(const FrontDiagram&) const = default;
};

struct Violation {
  int event_index;  // -1 for diagram-level violations
  std::string rule;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// A strand segment: column c is the gap before event c (column 0 starts at
// x = 0); position is the 1-based height index within that column.
struct SegmentRef {
  int column;
  int position;
  bool operator==(const SegmentRef&) const = default;
};

struct ComponentInvariants {
  int tb = 0;
  int rot = 0;
  int winding = 0;
  bool operator==(const ComponentInvariants&) const = default;
};

// Component trace of a valid diagram: partition of the strand segments,
// traversal direction of every segment under the component orientations,
// and everything the invariants need.
class Trace {
 public:
  static Trace compute(const FrontDiagram& d);

  int component_count() const { return num_components_; }
  int strand_count(int column) const { return counts_[column]; }
  int columns() const { return static_cast<int>(counts_.size()); }

  int component_of(SegmentRef s) const { return seg_component_[seg_index(s)]; }
  int direction_of(SegmentRef s) const { return seg_direction_[seg_index(s)]; }
  std::vector<SegmentRef> segments_of(int component) const;

  // Segments in traversal order along the oriented component, starting from
  // its anchor.
  const std::vector<SegmentRef>& component_cycle(int component) const {
    return cycles_[component];
  }

  int winding(int component) const { return winding_[component]; }

  // Cusp data per event index; owner is -1 for crossings.
  int cusp_owner(int event_index) const { return cusp_owner_[event_index]; }
  bool cusp_is_down(int event_index) const { return cusp_down_[event_index] != 0; }

  // Sign of the crossing at the given event index: the product of the two
  // strands' x-direction signs.
  int crossing_sign(int event_index) const;
  // Component ids of the two strands entering a crossing (lower, upper).
  std::pair<int, int> crossing_components(int event_index) const;

  ComponentInvariants invariants(int component) const;

 private:
  int seg_index(SegmentRef s) const { return offsets_[s.column] + s.position - 1; }

  int num_components_ = 0;
  std::vector<Event> events_;
  std::vector<int> counts_;         // strand count per column, size events+1
  std::vector<int> offsets_;        // flat segment offset per column
  std::vector<int> seg_component_;  // flat segment -> component id
  std::vector<int> seg_direction_;  // flat segment -> +1/-1
  std::vector<int> winding_;
  std::vector<int> cusp_owner_;     // per event, -1 for crossings
  std::vector<int> cusp_down_;      // per event, 1 down / 0 up / -1 n.a.
  std::vector<std::vector<SegmentRef>> cycles_;
};

ValidationReport validate(const FrontDiagram& d);

// Throws std::invalid_argument when the diagram does not validate.
Trace trace_components(const FrontDiagram& d);

int component_count(const FrontDiagram& d);
int crossing_sign(const FrontDiagram& d, int event_index);
ComponentInvariants invariants(const FrontDiagram& d, int component);

// Signed sum of the crossings between two distinct components; half of it
// is the meridional pairing.
int inter_component_crossing_sum(const FrontDiagram& d, int a, int b);

// The component order as an explicit permutation (identity if unset).
std::vector<int> link_order(const FrontDiagram& d);

// --- standard fronts ------------------------------------------------------

// n parallel strands, no events: the n-copy of the zero-section lift.
FrontDiagram lambda_front(int n);

// A flat core strand plus a standard unknot ("eye") whose lower branch dips
// around the core: the maximal-tb meridian.
FrontDiagram meridian_eye_front();

// Closure of (sigma_{q-1} ... sigma_1)^p on q strands: the cusp-free
// maximal-tb (p,q)-cable front.  Requires p,q >= 1 coprime.
FrontDiagram torus_braid_front(int p, int q);

// Core strand at the bottom plus the (p,q) torus braid above it, with p
// meridian dips of the braid's lowest strand around the core.
FrontDiagram cable_link_front(int p, int q);

}  // namespace jetfront
