#include "jetfront/moves.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace jetfront {

namespace {

constexpr int kX = 0, kL = 1, kR = 2;

int kind_code(EventKind k) {
  switch (k) {
    case EventKind::Crossing: return kX;
    case EventKind::LeftCusp: return kL;
    case EventKind::RightCusp: return kR;
  }
  return kX;
}

char kind_char(EventKind k) {
  switch (k) {
    case EventKind::Crossing: return 'X';
    case EventKind::LeftCusp: return 'L';
    case EventKind::RightCusp: return 'R';
  }
  return '?';
}

bool is(const Event& e, EventKind k, int pos) { return e.kind == k && e.position == pos; }

// Strand count entering each event.
std::vector<int> column_counts(const FrontDiagram& d) {
  std::vector<int> c(d.events.size() + 1);
  c[0] = d.base_strands;
  for (size_t k = 0; k < d.events.size(); ++k) {
    int delta = d.events[k].kind == EventKind::LeftCusp    ? 2
                : d.events[k].kind == EventKind::RightCusp ? -2
                                                           : 0;
    c[k + 1] = c[k] + delta;
  }
  return c;
}

// Swap rule for adjacent events in disjoint height ranges.  Returns the
// swapped pair [B', A'] or nullopt when the supports interact.  A right
// cusp followed by a left cusp at the same slot commutes two ways: the new
// branch pair slides below (variant 0) or above (variant 1) the dying one.
std::optional<std::pair<Event, Event>> commute_pair(const Event& A, const Event& B,
                                                    int variant = 0) {
  const int a = A.position, b = B.position;
  auto ev = [](EventKind k, int p) { return Event{k, p}; };
  if (variant != 0 && !(A.kind == EventKind::RightCusp && B.kind == EventKind::LeftCusp && a == b))
    return std::nullopt;
  switch (kind_code(A.kind) * 3 + kind_code(B.kind)) {
    case kX * 3 + kX:
      if (std::abs(a - b) >= 2) return {{ev(B.kind, b), ev(A.kind, a)}};
      break;
    case kX * 3 + kL:
      if (b <= a) return {{ev(B.kind, b), ev(A.kind, a + 2)}};
      if (b >= a + 2) return {{ev(B.kind, b), ev(A.kind, a)}};
      break;
    case kX * 3 + kR:
      if (b <= a - 2) return {{ev(B.kind, b), ev(A.kind, a - 2)}};
      if (b >= a + 2) return {{ev(B.kind, b), ev(A.kind, a)}};
      break;
    case kL * 3 + kX:
      if (b <= a - 2) return {{ev(B.kind, b), ev(A.kind, a)}};
      if (b >= a + 2) return {{ev(B.kind, b - 2), ev(A.kind, a)}};
      break;
    case kL * 3 + kL:
      if (b <= a) return {{ev(B.kind, b), ev(A.kind, a + 2)}};
      if (b >= a + 2) return {{ev(B.kind, b - 2), ev(A.kind, a)}};
      break;
    case kL * 3 + kR:
      if (b <= a - 2) return {{ev(B.kind, b), ev(A.kind, a - 2)}};
      if (b >= a + 2) return {{ev(B.kind, b - 2), ev(A.kind, a)}};
      break;
    case kR * 3 + kX:
      if (b <= a - 2) return {{ev(B.kind, b), ev(A.kind, a)}};
      if (b >= a) return {{ev(B.kind, b + 2), ev(A.kind, a)}};
      break;
    case kR * 3 + kL:
      if (a == b)
        return variant == 0 ? std::pair{ev(EventKind::LeftCusp, a), ev(EventKind::RightCusp, a + 2)}
                            : std::pair{ev(EventKind::LeftCusp, a + 2), ev(EventKind::RightCusp, a)};
      if (b <= a - 1) return {{ev(B.kind, b), ev(A.kind, a + 2)}};
      if (b >= a + 1) return {{ev(B.kind, b + 2), ev(A.kind, a)}};
      break;
    case kR * 3 + kR:
      if (b <= a - 2) return {{ev(B.kind, b), ev(A.kind, a - 2)}};
      if (b >= a) return {{ev(B.kind, b + 2), ev(A.kind, a)}};
      break;
  }
  return std::nullopt;
}

// Window rewrite of one move; fills the event index map old -> new (-1 for
// dropped events) and the column shift for rotations.
struct Rewrite {
  int new_base;
  std::vector<Event> events;
  std::vector<int> event_map;
  int col_shift = 0;  // new column j corresponds to old column j + col_shift
};

Rewrite rewrite_for(const FrontDiagram& d, const MoveSite& site) {
  const auto& w = d.events;
  const int n = static_cast<int>(w.size());
  Rewrite rw;
  rw.new_base = d.base_strands;
  auto identity_map = [&] {
    rw.event_map.resize(n);
    std::iota(rw.event_map.begin(), rw.event_map.end(), 0);
  };
  switch (site.kind) {
    case MoveKind::Commute: {
      int k = site.index;
      if (k < 0 || k + 1 >= n) throw std::invalid_argument("commute site out of range");
      auto sw = commute_pair(w[k], w[k + 1], site.variant);
      if (!sw) throw std::invalid_argument("events do not commute");
      rw.events = w;
      rw.events[k] = sw->first;
      rw.events[k + 1] = sw->second;
      identity_map();
      rw.event_map[k] = k + 1;
      rw.event_map[k + 1] = k;
      return rw;
    }
    case MoveKind::TriplePoint: {
      int k = site.index;
      if (k < 0 || k + 2 >= n) throw std::invalid_argument("triple point site out of range");
      const Event &e0 = w[k], &e1 = w[k + 1], &e2 = w[k + 2];
      if (e0.kind != EventKind::Crossing || e1.kind != EventKind::Crossing ||
          e2.kind != EventKind::Crossing)
        throw std::invalid_argument("triple point needs three crossings");
      int a = e0.position;
      int other;
      if (e1.position == a + 1 && e2.position == a) other = a + 1;
      else if (e1.position == a - 1 && e2.position == a) other = a - 1;
      else throw std::invalid_argument("not a braid-relation window");
      rw.events = w;
      rw.events[k] = {EventKind::Crossing, other};
      rw.events[k + 1] = {EventKind::Crossing, a};
      rw.events[k + 2] = {EventKind::Crossing, other};
      identity_map();
      return rw;
    }
    case MoveKind::CuspThroughStrand: {
      int k = site.index;
      auto v = static_cast<CuspPass>(site.variant);
      if (!site.expand) {
        if (k < 0 || k + 2 >= n) throw std::invalid_argument("contract site out of range");
        const Event &e0 = w[k], &e1 = w[k + 1], &e2 = w[k + 2];
        Event contracted;
        int cusp_at;  // old index of the surviving cusp
        switch (v) {
          case CuspPass::LeftCuspStrandBelow:
            if (!(e0.kind == EventKind::LeftCusp && is(e1, EventKind::Crossing, e0.position + 1) &&
                  is(e2, EventKind::Crossing, e0.position)))
              throw std::invalid_argument("window does not match");
            contracted = {EventKind::LeftCusp, e0.position + 1};
            cusp_at = k;
            break;
          case CuspPass::LeftCuspStrandAbove:
            if (!(e0.kind == EventKind::LeftCusp && e0.position >= 2 &&
                  is(e1, EventKind::Crossing, e0.position - 1) &&
                  is(e2, EventKind::Crossing, e0.position)))
              throw std::invalid_argument("window does not match");
            contracted = {EventKind::LeftCusp, e0.position - 1};
            cusp_at = k;
            break;
          case CuspPass::RightCuspStrandAbove:
            if (!(e0.kind == EventKind::Crossing && e0.position >= 2 &&
                  is(e1, EventKind::Crossing, e0.position - 1) &&
                  is(e2, EventKind::RightCusp, e0.position)))
              throw std::invalid_argument("window does not match");
            contracted = {EventKind::RightCusp, e0.position - 1};
            cusp_at = k + 2;
            break;
          case CuspPass::RightCuspStrandBelow:
            if (!(e0.kind == EventKind::Crossing && is(e1, EventKind::Crossing, e0.position + 1) &&
                  is(e2, EventKind::RightCusp, e0.position)))
              throw std::invalid_argument("window does not match");
            contracted = {EventKind::RightCusp, e0.position + 1};
            cusp_at = k + 2;
            break;
          default:
            throw std::invalid_argument("unknown variant");
        }
        rw.events.assign(w.begin(), w.begin() + k);
        rw.events.push_back(contracted);
        rw.events.insert(rw.events.end(), w.begin() + k + 3, w.end());
        rw.event_map.assign(n, -1);
        for (int j = 0; j < k; ++j) rw.event_map[j] = j;
        rw.event_map[cusp_at] = k;
        for (int j = k + 3; j < n; ++j) rw.event_map[j] = j - 2;
        return rw;
      }
      // expand: one cusp grows its two crossings with a neighbouring strand
      if (k < 0 || k >= n) throw std::invalid_argument("expand site out of range");
      const Event& e = w[k];
      std::vector<int> counts = column_counts(d);
      std::vector<Event> window;
      int cusp_new;  // new index of the cusp
      switch (v) {
        case CuspPass::LeftCuspStrandBelow:
          if (e.kind != EventKind::LeftCusp || e.position < 2)
            throw std::invalid_argument("no strand below the cusp");
          window = {{EventKind::LeftCusp, e.position - 1},
                    {EventKind::Crossing, e.position},
                    {EventKind::Crossing, e.position - 1}};
          cusp_new = k;
          break;
        case CuspPass::LeftCuspStrandAbove:
          if (e.kind != EventKind::LeftCusp || e.position > counts[k])
            throw std::invalid_argument("no strand above the cusp");
          window = {{EventKind::LeftCusp, e.position + 1},
                    {EventKind::Crossing, e.position},
                    {EventKind::Crossing, e.position + 1}};
          cusp_new = k;
          break;
        case CuspPass::RightCuspStrandAbove:
          if (e.kind != EventKind::RightCusp || e.position + 2 > counts[k])
            throw std::invalid_argument("no strand above the cusp");
          window = {{EventKind::Crossing, e.position + 1},
                    {EventKind::Crossing, e.position},
                    {EventKind::RightCusp, e.position + 1}};
          cusp_new = k + 2;
          break;
        case CuspPass::RightCuspStrandBelow:
          if (e.kind != EventKind::RightCusp || e.position < 2)
            throw std::invalid_argument("no strand below the cusp");
          window = {{EventKind::Crossing, e.position - 1},
                    {EventKind::Crossing, e.position},
                    {EventKind::RightCusp, e.position - 1}};
          cusp_new = k + 2;
          break;
        default:
          throw std::invalid_argument("unknown variant");
      }
      rw.events.assign(w.begin(), w.begin() + k);
      rw.events.insert(rw.events.end(), window.begin(), window.end());
      rw.events.insert(rw.events.end(), w.begin() + k + 1, w.end());
      rw.event_map.assign(n, -1);
      for (int j = 0; j < k; ++j) rw.event_map[j] = j;
      rw.event_map[k] = cusp_new;
      for (int j = k + 1; j < n; ++j) rw.event_map[j] = j + 2;
      return rw;
    }
    case MoveKind::ZigzagSlide: {
      int k = site.index;
      if (k < 0 || k + 3 >= n) throw std::invalid_argument("zigzag slide out of range");
      auto zig_base = [](const Event& l, const Event& r) -> int {
        if (l.kind != EventKind::LeftCusp || r.kind != EventKind::RightCusp) return -1;
        if (r.position == l.position + 1 || l.position == r.position + 1)
          return std::min(l.position, r.position);
        return -1;
      };
      int p1 = zig_base(w[k], w[k + 1]);
      int p2 = zig_base(w[k + 2], w[k + 3]);
      if (p1 < 0 || p2 < 0 || p1 != p2)
        throw std::invalid_argument("window is not a pair of zigzags on one strand");
      rw.events = w;
      rw.events[k] = w[k + 2];
      rw.events[k + 1] = w[k + 3];
      rw.events[k + 2] = w[k];
      rw.events[k + 3] = w[k + 1];
      identity_map();
      rw.event_map[k] = k + 2;
      rw.event_map[k + 1] = k + 3;
      rw.event_map[k + 2] = k;
      rw.event_map[k + 3] = k + 1;
      return rw;
    }
    case MoveKind::RotateBasepoint: {
      if (n == 0) {  // nothing to slide across
        rw.events = w;
        identity_map();
        return rw;
      }
      std::vector<int> counts = column_counts(d);
      rw.event_map.assign(n, -1);
      if (site.variant >= 0) {
        rw.new_base = counts[1];
        rw.events.assign(w.begin() + 1, w.end());
        rw.events.push_back(w[0]);
        rw.event_map[0] = n - 1;
        for (int j = 1; j < n; ++j) rw.event_map[j] = j - 1;
        rw.col_shift = 1;
      } else {
        rw.new_base = counts[n - 1];
        rw.events.assign(w.end() - 1, w.end());
        rw.events.insert(rw.events.end(), w.begin(), w.end() - 1);
        rw.event_map[n - 1] = 0;
        for (int j = 0; j + 1 < n; ++j) rw.event_map[j] = j + 1;
        rw.col_shift = -1;
      }
      return rw;
    }
  }
  throw std::invalid_argument("unknown move kind");
}

void normalize_fields(FrontDiagram& d) {
  bool all_plus = std::all_of(d.orientations.begin(), d.orientations.end(),
                              [](std::int8_t s) { return s == 1; });
  if (all_plus) d.orientations.clear();
  bool identity = true;
  for (size_t i = 0; i < d.order.size(); ++i)
    if (d.order[i] != static_cast<int>(i)) identity = false;
  if (identity) d.order.clear();
}

// Rebuilds a diagram around a rewritten word, carrying component identity,
// orientation and link order across via witnesses: a surviving cusp of the
// component, or for cusp-free components a strand in a preserved column.
MoveApplication retarget(const FrontDiagram& old_d, const Rewrite& rw) {
  Trace old_tr = Trace::compute(old_d);
  FrontDiagram nd{rw.new_base, rw.events, {}, {}};
  Trace new_tr = Trace::compute(nd);
  const int ncomp = old_tr.component_count();
  if (new_tr.component_count() != ncomp)
    throw std::logic_error("move changed the component count");

  std::vector<int> comp_map(ncomp, -1);
  std::vector<std::int8_t> signs(ncomp, 1);
  const int old_witness_col = rw.col_shift == 1 ? 1 : 0;
  for (int c = 0; c < ncomp; ++c) {
    int new_c = -1, old_dir = 0, new_dir = 0;
    for (int e = 0; e < static_cast<int>(old_d.events.size()); ++e) {
      if (old_tr.cusp_owner(e) != c || rw.event_map[e] < 0) continue;
      int e2 = rw.event_map[e];
      bool left = old_d.events[e].kind == EventKind::LeftCusp;
      SegmentRef w_old{left ? e + 1 : e, old_d.events[e].position};
      SegmentRef w_new{left ? e2 + 1 : e2, rw.events[e2].position};
      old_dir = old_tr.direction_of(w_old);
      new_c = new_tr.component_of(w_new);
      new_dir = new_tr.direction_of(w_new);
      break;
    }
    if (new_c < 0) {
      // cusp-free components run through every column
      for (int p = 1; p <= old_tr.strand_count(old_witness_col); ++p) {
        SegmentRef w_old{old_witness_col, p};
        if (old_tr.component_of(w_old) != c) continue;
        SegmentRef w_new{old_witness_col - rw.col_shift, p};
        old_dir = old_tr.direction_of(w_old);
        new_c = new_tr.component_of(w_new);
        new_dir = new_tr.direction_of(w_new);
        break;
      }
    }
    if (new_c < 0) throw std::logic_error("no witness for component");
    comp_map[c] = new_c;
    signs[new_c] = (new_dir == old_dir) ? 1 : -1;
  }
  nd.orientations = signs;
  std::vector<int> old_order = old_d.order;
  if (old_order.empty()) {
    old_order.resize(ncomp);
    std::iota(old_order.begin(), old_order.end(), 0);
  }
  nd.order.resize(ncomp);
  for (int i = 0; i < ncomp; ++i) nd.order[i] = comp_map[old_order[i]];
  normalize_fields(nd);
  return {std::move(nd), std::move(comp_map)};
}

}  // namespace

std::vector<MoveSite> applicable_moves(const FrontDiagram& d) {
  const auto& w = d.events;
  const int n = static_cast<int>(w.size());
  std::vector<int> counts = column_counts(d);
  std::vector<MoveSite> sites;
  for (int k = 0; k + 2 < n; ++k) {
    if (w[k].kind == EventKind::Crossing && w[k + 1].kind == EventKind::Crossing &&
        w[k + 2].kind == EventKind::Crossing) {
      int a = w[k].position;
      if ((w[k + 1].position == a + 1 || w[k + 1].position == a - 1) &&
          w[k + 2].position == a)
        sites.push_back({MoveKind::TriplePoint, k, 0, false});
    }
    // contraction windows
    if (w[k].kind == EventKind::LeftCusp) {
      int p = w[k].position;
      if (is(w[k + 1], EventKind::Crossing, p + 1) && is(w[k + 2], EventKind::Crossing, p))
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::LeftCuspStrandBelow), false});
      if (p >= 2 && is(w[k + 1], EventKind::Crossing, p - 1) &&
          is(w[k + 2], EventKind::Crossing, p))
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::LeftCuspStrandAbove), false});
    }
    if (w[k].kind == EventKind::Crossing && w[k + 2].kind == EventKind::RightCusp) {
      int a = w[k].position;
      if (a >= 2 && is(w[k + 1], EventKind::Crossing, a - 1) &&
          w[k + 2].position == a)
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::RightCuspStrandAbove), false});
      if (is(w[k + 1], EventKind::Crossing, a + 1) && w[k + 2].position == a)
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::RightCuspStrandBelow), false});
    }
  }
  for (int k = 0; k < n; ++k) {
    if (w[k].kind == EventKind::LeftCusp) {
      if (w[k].position >= 2)
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::LeftCuspStrandBelow), true});
      if (w[k].position <= counts[k])
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::LeftCuspStrandAbove), true});
    }
    if (w[k].kind == EventKind::RightCusp) {
      if (w[k].position + 2 <= counts[k])
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::RightCuspStrandAbove), true});
      if (w[k].position >= 2)
        sites.push_back({MoveKind::CuspThroughStrand, k,
                         static_cast<int>(CuspPass::RightCuspStrandBelow), true});
    }
  }
  for (int k = 0; k + 3 < n; ++k) {
    auto zig_base = [&](int i) -> int {
      if (w[i].kind != EventKind::LeftCusp || w[i + 1].kind != EventKind::RightCusp) return -1;
      if (w[i + 1].position == w[i].position + 1 || w[i].position == w[i + 1].position + 1)
        return std::min(w[i].position, w[i + 1].position);
      return -1;
    };
    int p1 = zig_base(k), p2 = zig_base(k + 2);
    if (p1 >= 0 && p1 == p2 && !(w[k] == w[k + 2] && w[k + 1] == w[k + 3]))
      sites.push_back({MoveKind::ZigzagSlide, k, 0, false});
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (commute_pair(w[k], w[k + 1])) sites.push_back({MoveKind::Commute, k, 0, false});
    if (commute_pair(w[k], w[k + 1], 1)) sites.push_back({MoveKind::Commute, k, 1, false});
  }
  sites.push_back({MoveKind::RotateBasepoint, 0, +1, false});
  sites.push_back({MoveKind::RotateBasepoint, 0, -1, false});
  return sites;
}

MoveApplication apply_move(const FrontDiagram& d, const MoveSite& site) {
  return retarget(d, rewrite_for(d, site));
}

MoveSite inverse_move(const FrontDiagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::Commute: {
      // the inverse variant is whichever swap maps the result pair back
      const Event& a = d.events.at(site.index);
      const Event& b = d.events.at(site.index + 1);
      auto fwd = commute_pair(a, b, site.variant);
      if (!fwd) throw std::invalid_argument("events do not commute");
      for (int v = 0; v <= 1; ++v) {
        auto back = commute_pair(fwd->first, fwd->second, v);
        if (back && back->first == a && back->second == b)
          return {MoveKind::Commute, site.index, v, false};
      }
      throw std::logic_error("commute has no inverse variant");
    }
    case MoveKind::TriplePoint:
    case MoveKind::ZigzagSlide:
      return site;
    case MoveKind::CuspThroughStrand:
      return {site.kind, site.index, site.variant, !site.expand};
    case MoveKind::RotateBasepoint:
      return {site.kind, site.index, -site.variant, false};
  }
  throw std::invalid_argument("unknown move kind");
}

namespace {

struct StabSite {
  int word_index;
  int position;
  int direction;
};

StabSite stabilization_site(const FrontDiagram& d, const Trace& tr, int component) {
  if (component < 0 || component >= tr.component_count())
    throw std::out_of_range("unknown component id");
  for (int p = 1; p <= tr.strand_count(0); ++p)
    if (tr.component_of({0, p}) == component)
      return {0, p, tr.direction_of({0, p})};
  for (int e = 0; e < static_cast<int>(d.events.size()); ++e) {
    if (d.events[e].kind != EventKind::LeftCusp) continue;
    SegmentRef lower{e + 1, d.events[e].position};
    if (tr.component_of(lower) == component)
      return {e + 1, d.events[e].position, tr.direction_of(lower)};
  }
  throw std::logic_error("component has neither base strand nor left cusp");
}

}  // namespace

FrontDiagram stabilize(const FrontDiagram& d, int component, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Trace tr = trace_components(d);
  StabSite at = stabilization_site(d, tr, component);
  int eff = sign * at.direction;
  std::vector<Event> zig;
  if (eff > 0)  // downward zigzag hung below the strand
    zig = {{EventKind::LeftCusp, at.position}, {EventKind::RightCusp, at.position + 1}};
  else
    zig = {{EventKind::LeftCusp, at.position + 1}, {EventKind::RightCusp, at.position}};
  FrontDiagram nd = d;
  nd.events.insert(nd.events.begin() + at.word_index, zig.begin(), zig.end());
  return nd;
}

std::optional<FrontDiagram> destabilize(const FrontDiagram& d, int component, int sign,
                                        int window) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (component < 0 || component >= component_count(d))
    throw std::out_of_range("unknown component id");

  // Search the commute/rotate orbit (bounded) for an adjacent zigzag pair
  // of the right sign on the right component.
  auto find_pair = [&](const FrontDiagram& cur, int comp) -> std::optional<FrontDiagram> {
    Trace tr = Trace::compute(cur);
    const auto& w = cur.events;
    for (int k = 0; k + 1 < static_cast<int>(w.size()); ++k) {
      if (w[k].kind != EventKind::LeftCusp || w[k + 1].kind != EventKind::RightCusp) continue;
      int i = w[k].position, j = w[k + 1].position;
      if (j != i + 1 && i != j + 1) continue;  // the eye pattern [L@i, R@i] is a component
      if (tr.cusp_owner(k) != comp || tr.cusp_owner(k + 1) != comp) continue;
      bool down = tr.cusp_is_down(k);
      if (tr.cusp_is_down(k + 1) != down) continue;
      if ((down ? 1 : -1) != sign) continue;
      Rewrite rw;
      rw.new_base = cur.base_strands;
      rw.events.assign(w.begin(), w.begin() + k);
      rw.events.insert(rw.events.end(), w.begin() + k + 2, w.end());
      rw.event_map.assign(w.size(), -1);
      for (int t = 0; t < k; ++t) rw.event_map[t] = t;
      for (int t = k + 2; t < static_cast<int>(w.size()); ++t) rw.event_map[t] = t - 2;
      return retarget(cur, rw).diagram;
    }
    return std::nullopt;
  };

  struct State {
    FrontDiagram d;
    int comp;
    int depth;
  };
  std::unordered_set<std::string> seen;
  std::deque<State> queue;
  queue.push_back({d, component, 0});
  seen.insert(encode(d));
  const size_t state_cap = 4096;
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    if (auto hit = find_pair(st.d, st.comp)) return hit;
    if (st.depth >= window || seen.size() >= state_cap) continue;
    for (const MoveSite& ms : applicable_moves(st.d)) {
      if (ms.kind != MoveKind::Commute && ms.kind != MoveKind::RotateBasepoint) continue;
      MoveApplication app = apply_move(st.d, ms);
      std::string key = encode(app.diagram);
      if (!seen.insert(key).second) continue;
      queue.push_back({std::move(app.diagram), app.component_map[st.comp], st.depth + 1});
    }
  }
  return std::nullopt;
}

std::string encode(const FrontDiagram& d) {
  std::string s = "b" + std::to_string(d.base_strands) + "|";
  for (const Event& e : d.events) {
    s += kind_char(e.kind);
    s += std::to_string(e.position);
    s += ',';
  }
  s += "|o";
  for (std::int8_t o : d.orientations) s += (o == 1 ? '+' : '-');
  s += "|r";
  for (int i : d.order) {
    s += std::to_string(i);
    s += ',';
  }
  return s;
}

std::string canonical_key(const FrontDiagram& d) {
  // Fingerprint of the diagram stable across RotateBasepoint and Commute:
  // per link position the classical invariants plus the canonical cyclic
  // word of features met along the oriented component -- cusps with their
  // z-direction, crossings with their front/back role, sign and the link
  // position of the partner strand.  None of these see where the basepoint
  // sits or the x-order of far-apart events.  The word orbit itself is not
  // enumerated (it grows fast); states that differ by other moves get
  // different keys through the crossing and cusp data.
  Trace tr = trace_components(d);
  std::vector<int> order = link_order(d);
  std::vector<int> pos_of(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos_of[order[i]] = static_cast<int>(i);

  std::string key = "n" + std::to_string(order.size()) + ";";
  for (size_t pos = 0; pos < order.size(); ++pos) {
    int comp = order[pos];
    ComponentInvariants inv = tr.invariants(comp);
    key += "c" + std::to_string(inv.tb) + "," + std::to_string(inv.rot) + "," +
           std::to_string(inv.winding) + ":";

    // feature word along the oriented cycle
    const std::vector<SegmentRef>& cyc = tr.component_cycle(comp);
    std::vector<std::string> feats;
    for (size_t i = 0; i < cyc.size(); ++i) {
      SegmentRef cur = cyc[i];
      SegmentRef nxt = cyc[(i + 1) % cyc.size()];
      int dir = tr.direction_of(cur);
      int boundary = dir > 0 ? cur.column + 1 : cur.column;  // 0..columns()-1 are events
      if (boundary == 0 || boundary == tr.columns()) continue;  // glue line, no feature
      int k = boundary - 1;
      if (nxt.column == cur.column) {
        // turned around at the cusp joining cur and nxt; rightward travel
        // can only turn at a right cusp, leftward at a left cusp
        feats.push_back(std::string(dir > 0 ? "r" : "l") +
                        (tr.cusp_is_down(k) ? "v" : "^"));
        continue;
      }
      if (tr.cusp_owner(k) >= 0) continue;  // passing a cusp of another strand pair
      int left_pos = dir > 0 ? cur.position : nxt.position;
      int right_pos = dir > 0 ? nxt.position : cur.position;
      if (left_pos == right_pos) continue;  // bystander at the crossing
      auto comps = tr.crossing_components(k);
      int partner = comps.first == comp && comps.second == comp
                        ? -1
                        : (comps.first == comp ? comps.second : comps.first);
      feats.push_back(std::string("x") + (right_pos < left_pos ? "f" : "b") +
                      (tr.crossing_sign(k) > 0 ? "+" : "-") +
                      (partner < 0 ? std::string("s") : std::to_string(pos_of[partner])));
    }
    // canonical rotation of the cyclic feature word
    std::string best;
    for (size_t r = 0; r < std::max((size_t)1, feats.size()); ++r) {
      std::string cand;
      for (size_t i = 0; i < feats.size(); ++i) cand += feats[(r + i) % feats.size()] + ".";
      if (best.empty() || cand < best) best = cand;
    }
    key += best + ";";
  }
  return key;
}

namespace {

struct InvariantSummary {
  std::vector<ComponentInvariants> per_position;
  std::vector<int> pair_sums;  // inter-component sums by ordered position pair
};

InvariantSummary summarize(const FrontDiagram& d) {
  Trace tr = trace_components(d);
  std::vector<int> order = link_order(d);
  InvariantSummary s;
  for (int id : order) s.per_position.push_back(tr.invariants(id));
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j)
      s.pair_sums.push_back(inter_component_crossing_sum(d, order[i], order[j]));
  return s;
}

}  // namespace

SearchResult search_isotopy(const FrontDiagram& d1, const FrontDiagram& d2, SearchBudget budget) {
  SearchResult res;
  InvariantSummary s1 = summarize(d1), s2 = summarize(d2);
  if (s1.per_position.size() != s2.per_position.size()) {
    res.verdict = SearchVerdict::NotIsotopic;
    res.reason = "component counts differ";
    return res;
  }
  for (size_t i = 0; i < s1.per_position.size(); ++i) {
    if (!(s1.per_position[i] == s2.per_position[i])) {
      res.verdict = SearchVerdict::NotIsotopic;
      res.reason = "classical invariants differ at link position " + std::to_string(i);
      return res;
    }
  }
  if (s1.pair_sums != s2.pair_sums) {
    res.verdict = SearchVerdict::NotIsotopic;
    res.reason = "inter-component crossing sums differ";
    return res;
  }

  struct Node {
    FrontDiagram diagram;
    std::string parent;
    MoveSite via{};
    int depth = 0;
  };
  using Map = std::unordered_map<std::string, Node>;
  Map fwd, bwd;
  std::deque<std::string> qf, qb;
  std::string k1 = encode(d1), k2 = encode(d2);
  fwd.emplace(k1, Node{d1, "", {}, 0});
  bwd.emplace(k2, Node{d2, "", {}, 0});
  qf.push_back(k1);
  qb.push_back(k2);
  long states = 2;

  // Assembles d1 -> meet -> d2 once the frontiers touch.
  auto build_path = [&](const std::string& meet) {
    std::vector<MoveSite> path;
    for (std::string at = meet; true;) {
      const Node& nd = fwd.at(at);
      if (nd.parent.empty()) break;
      path.push_back(nd.via);
      at = nd.parent;
    }
    std::reverse(path.begin(), path.end());
    for (std::string at = meet; true;) {
      const Node& nd = bwd.at(at);
      if (nd.parent.empty()) break;
      // nd.via was applied to parent to reach `at`; undo it
      path.push_back(inverse_move(bwd.at(nd.parent).diagram, nd.via));
      at = nd.parent;
    }
    return path;
  };

  if (bwd.count(k1)) {
    res.verdict = SearchVerdict::Found;
    res.path = build_path(k1);
    res.states = states;
    return res;
  }

  int depth_f = 0, depth_b = 0;
  while (!qf.empty() && !qb.empty() && depth_f + depth_b < budget.max_depth &&
         states < budget.max_states) {
    bool expand_fwd = qf.size() <= qb.size();
    Map& mine = expand_fwd ? fwd : bwd;
    Map& other = expand_fwd ? bwd : fwd;
    std::deque<std::string>& layer = expand_fwd ? qf : qb;
    (expand_fwd ? depth_f : depth_b)++;
    std::deque<std::string> next;
    for (const std::string& key : layer) {
      const FrontDiagram cur = mine.at(key).diagram;
      int cur_depth = mine.at(key).depth;
      for (const MoveSite& ms : applicable_moves(cur)) {
        MoveApplication app = apply_move(cur, ms);
        std::string child = encode(app.diagram);
        if (mine.count(child)) continue;
        mine.emplace(child, Node{std::move(app.diagram), key, ms, cur_depth + 1});
        next.push_back(child);
        ++states;
        if (other.count(child)) {
          res.verdict = SearchVerdict::Found;
          res.path = build_path(child);
          res.states = states;
          return res;
        }
        if (states >= budget.max_states) break;
      }
      if (states >= budget.max_states) break;
    }
    layer = std::move(next);
  }
  res.verdict = SearchVerdict::NotFoundWithinBudget;
  res.states = states;
  res.reason = "budget exhausted; inconclusive";
  return res;
}

}  // namespace jetfront
