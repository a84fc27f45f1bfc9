#include "jetfront/front.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jetfront {

namespace {

int delta(EventKind k) {
  switch (k) {
    case EventKind::Crossing: return 0;
    case EventKind::LeftCusp: return 2;
    case EventKind::RightCusp: return -2;
  }
  return 0;
}

}  // namespace

ValidationReport validate(const FrontDiagram& d) {
  ValidationReport rep;
  auto fail = [&](int idx, std::string rule) {
    rep.ok = false;
    rep.violations.push_back({idx, std::move(rule)});
  };
  if (d.base_strands < 0) {
    fail(-1, "base strand count must be >= 0");
    return rep;
  }
  int count = d.base_strands;
  for (int k = 0; k < static_cast<int>(d.events.size()); ++k) {
    const Event& e = d.events[k];
    if (e.position < 1) {
      fail(k, "event position must be >= 1");
      return rep;
    }
    switch (e.kind) {
      case EventKind::Crossing:
        if (e.position + 1 > count) {
          fail(k, "crossing needs two strands");
          return rep;
        }
        break;
      case EventKind::LeftCusp:
        if (e.position > count + 1) {
          fail(k, "left cusp position out of range");
          return rep;
        }
        break;
      case EventKind::RightCusp:
        if (e.position + 1 > count) {
          fail(k, "right cusp needs two strands");
          return rep;
        }
        break;
    }
    count += delta(e.kind);
  }
  if (count != d.base_strands) {
    fail(-1, "strand count does not close up at x = 2pi");
    return rep;
  }
  // Structure is sound; check the component-indexed fields against the trace.
  Trace tr = Trace::compute(FrontDiagram{d.base_strands, d.events, {}, {}});
  int n = tr.component_count();
  if (!d.orientations.empty()) {
    if (static_cast<int>(d.orientations.size()) != n)
      fail(-1, "orientation list does not match the component count");
    for (std::int8_t s : d.orientations)
      if (s != 1 && s != -1) fail(-1, "orientation sign must be + or -");
  }
  if (!d.order.empty()) {
    std::vector<int> sorted = d.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 0);
    if (sorted != want) fail(-1, "order is not a permutation of the components");
  }
  return rep;
}

Trace Trace::compute(const FrontDiagram& d) {
  Trace t;
  t.events_ = d.events;
  const int ne = static_cast<int>(d.events.size());
  t.counts_.resize(ne + 1);
  t.counts_[0] = d.base_strands;
  for (int k = 0; k < ne; ++k) t.counts_[k + 1] = t.counts_[k] + delta(d.events[k].kind);
  t.offsets_.resize(ne + 1, 0);
  for (int k = 0; k < ne; ++k) t.offsets_[k + 1] = t.offsets_[k] + t.counts_[k];
  const int total = t.offsets_[ne] + t.counts_[ne];

  // Ports: 2*seg = left end, 2*seg + 1 = right end.  mate[] is the perfect
  // matching given by crossings, cusp joints and the cyclic gluing.
  std::vector<int> mate(2 * total, -1);
  auto seg = [&](int col, int pos) { return t.offsets_[col] + pos - 1; };
  auto connect = [&](int port_a, int port_b) {
    mate[port_a] = port_b;
    mate[port_b] = port_a;
  };
  for (int k = 0; k < ne; ++k) {
    const Event& e = d.events[k];
    const int i = e.position;
    const int cnt = t.counts_[k];
    switch (e.kind) {
      case EventKind::Crossing:
        for (int j = 1; j <= cnt; ++j) {
          int j2 = (j == i) ? i + 1 : (j == i + 1) ? i : j;
          connect(2 * seg(k, j) + 1, 2 * seg(k + 1, j2));
        }
        break;
      case EventKind::LeftCusp:
        for (int j = 1; j <= cnt; ++j)
          connect(2 * seg(k, j) + 1, 2 * seg(k + 1, j < i ? j : j + 2));
        connect(2 * seg(k + 1, i), 2 * seg(k + 1, i + 1));
        break;
      case EventKind::RightCusp:
        for (int j = 1; j <= cnt; ++j) {
          if (j == i || j == i + 1) continue;
          connect(2 * seg(k, j) + 1, 2 * seg(k + 1, j < i ? j : j - 2));
        }
        connect(2 * seg(k, i) + 1, 2 * seg(k, i + 1) + 1);
        break;
    }
  }
  for (int j = 1; j <= t.counts_[ne]; ++j) connect(2 * seg(ne, j) + 1, 2 * seg(0, j));

  // Partition the segments into components by walking the closed curves.
  t.seg_component_.assign(total, -1);
  t.seg_direction_.assign(total, 0);
  std::vector<std::vector<int>> members;
  for (int s0 = 0; s0 < total; ++s0) {
    if (t.seg_component_[s0] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    int port = 2 * s0;  // enter s0 at its left end
    while (true) {
      int s = port / 2;
      if (t.seg_component_[s] >= 0) break;
      t.seg_component_[s] = id;
      members[id].push_back(s);
      int exit_port = port ^ 1;  // traverse the segment to its other end
      port = mate[exit_port];
    }
  }

  // Component ids: ascending smallest base position first, then first left
  // cusp for components without base strands.
  const int raw_n = static_cast<int>(members.size());
  std::vector<int> min_base(raw_n, -1), first_cusp(raw_n, -1);
  for (int j = 1; j <= t.counts_[0]; ++j) {
    int c = t.seg_component_[seg(0, j)];
    if (min_base[c] < 0) min_base[c] = j;
  }
  for (int k = 0; k < ne; ++k) {
    if (d.events[k].kind != EventKind::LeftCusp) continue;
    int c = t.seg_component_[seg(k + 1, d.events[k].position)];
    if (first_cusp[c] < 0) first_cusp[c] = k;
  }
  std::vector<int> ids(raw_n);
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    bool ba = min_base[a] >= 0, bb = min_base[b] >= 0;
    if (ba != bb) return ba;
    if (ba) return min_base[a] < min_base[b];
    return first_cusp[a] < first_cusp[b];
  });
  std::vector<int> relabel(raw_n);
  for (int r = 0; r < raw_n; ++r) relabel[ids[r]] = r;
  for (int s = 0; s < total; ++s) t.seg_component_[s] = relabel[t.seg_component_[s]];
  t.num_components_ = raw_n;

  // Orient: walk each component from its anchor, then flip by the stored sign.
  std::vector<int> anchor(raw_n, -1);
  for (int j = 1; j <= t.counts_[0]; ++j) {
    int c = t.seg_component_[seg(0, j)];
    if (anchor[c] < 0) anchor[c] = seg(0, j);
  }
  for (int k = 0; k < ne; ++k) {
    if (d.events[k].kind != EventKind::LeftCusp) continue;
    int s = seg(k + 1, d.events[k].position);
    int c = t.seg_component_[s];
    if (anchor[c] < 0) anchor[c] = s;
  }
  t.cycles_.assign(raw_n, {});
  auto ref_of = [&](int s) {
    int col = 0;
    while (col + 1 <= ne && t.offsets_[col + 1] <= s) ++col;
    return SegmentRef{col, s - t.offsets_[col] + 1};
  };
  for (int c = 0; c < raw_n; ++c) {
    int sign = 1;
    if (c < static_cast<int>(d.orientations.size())) sign = d.orientations[c];
    // walk the cycle from the anchor; with sign -1 the oriented traversal is
    // the reverse of the walk
    int port = 2 * anchor[c];  // enter at the left end == move rightward
    while (t.seg_direction_[port / 2] == 0) {
      int s = port / 2;
      t.seg_direction_[s] = (port % 2 == 0 ? 1 : -1) * sign;
      t.cycles_[c].push_back(ref_of(s));
      port = mate[port ^ 1];
    }
    if (sign == -1) std::reverse(t.cycles_[c].begin(), t.cycles_[c].end());
  }

  t.winding_.assign(raw_n, 0);
  for (int j = 1; j <= t.counts_[0]; ++j) {
    int s = seg(0, j);
    t.winding_[t.seg_component_[s]] += t.seg_direction_[s];
  }

  t.cusp_owner_.assign(ne, -1);
  t.cusp_down_.assign(ne, -1);
  for (int k = 0; k < ne; ++k) {
    const Event& e = d.events[k];
    if (e.kind == EventKind::Crossing) continue;
    // z increases through a cusp when the traversal enters the lower branch
    // moving toward the cusp point.
    int lower = (e.kind == EventKind::LeftCusp) ? seg(k + 1, e.position) : seg(k, e.position);
    t.cusp_owner_[k] = t.seg_component_[lower];
    bool upward = (e.kind == EventKind::LeftCusp) ? (t.seg_direction_[lower] == -1)
                                                  : (t.seg_direction_[lower] == 1);
    t.cusp_down_[k] = upward ? 0 : 1;
  }
  return t;
}

std::vector<SegmentRef> Trace::segments_of(int component) const {
  std::vector<SegmentRef> out;
  for (int c = 0; c < columns(); ++c)
    for (int p = 1; p <= counts_[c]; ++p)
      if (seg_component_[offsets_[c] + p - 1] == component) out.push_back({c, p});
  return out;
}

int Trace::crossing_sign(int event_index) const {
  if (event_index < 0 || event_index >= static_cast<int>(events_.size()) ||
      events_[event_index].kind != EventKind::Crossing)
    throw std::invalid_argument("event is not a crossing");
  int i = events_[event_index].position;
  int a = offsets_[event_index] + i - 1;
  int b = offsets_[event_index] + i;
  return seg_direction_[a] * seg_direction_[b];
}

std::pair<int, int> Trace::crossing_components(int event_index) const {
  if (event_index < 0 || event_index >= static_cast<int>(events_.size()) ||
      events_[event_index].kind != EventKind::Crossing)
    throw std::invalid_argument("event is not a crossing");
  int i = events_[event_index].position;
  int a = offsets_[event_index] + i - 1;
  int b = offsets_[event_index] + i;
  return {seg_component_[a], seg_component_[b]};
}

ComponentInvariants Trace::invariants(int component) const {
  if (component < 0 || component >= num_components_)
    throw std::out_of_range("unknown component id");
  ComponentInvariants inv;
  inv.winding = winding_[component];
  int cusps = 0, down = 0;
  for (int k = 0; k < static_cast<int>(events_.size()); ++k) {
    if (events_[k].kind == EventKind::Crossing) {
      auto [a, b] = crossing_components(k);
      if (a == component && b == component) inv.tb += crossing_sign(k);
    } else if (cusp_owner_[k] == component) {
      ++cusps;
      if (cusp_down_[k]) ++down;
    }
  }
  inv.tb -= cusps / 2;
  inv.rot = (down - (cusps - down)) / 2;
  return inv;
}

Trace trace_components(const FrontDiagram& d) {
  ValidationReport rep = validate(d);
  if (!rep.ok) throw std::invalid_argument("invalid front diagram: " + rep.violations[0].rule);
  return Trace::compute(d);
}

int component_count(const FrontDiagram& d) { return trace_components(d).component_count(); }

int crossing_sign(const FrontDiagram& d, int event_index) {
  return trace_components(d).crossing_sign(event_index);
}

ComponentInvariants invariants(const FrontDiagram& d, int component) {
  return trace_components(d).invariants(component);
}

int inter_component_crossing_sum(const FrontDiagram& d, int a, int b) {
  if (a == b) throw std::invalid_argument("components must be distinct");
  Trace tr = trace_components(d);
  if (a < 0 || b < 0 || a >= tr.component_count() || b >= tr.component_count())
    throw std::out_of_range("unknown component id");
  int sum = 0;
  for (int k = 0; k < static_cast<int>(d.events.size()); ++k) {
    if (d.events[k].kind != EventKind::Crossing) continue;
    auto [x, y] = tr.crossing_components(k);
    if ((x == a && y == b) || (x == b && y == a)) sum += tr.crossing_sign(k);
  }
  return sum;
}

std::vector<int> link_order(const FrontDiagram& d) {
  if (!d.order.empty()) return d.order;
  std::vector<int> id(component_count(d));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

FrontDiagram lambda_front(int n) {
  if (n < 1) throw std::invalid_argument("lambda_front needs n >= 1");
  return FrontDiagram{n, {}, {}, {}};
}

FrontDiagram meridian_eye_front() {
  return FrontDiagram{1,
                      {{EventKind::LeftCusp, 2},
                       {EventKind::Crossing, 1},
                       {EventKind::Crossing, 1},
                       {EventKind::RightCusp, 2}},
                      {},
                      {}};
}

FrontDiagram torus_braid_front(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus braid needs p,q >= 1");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("torus braid closure is connected only for coprime p,q");
  FrontDiagram d{q, {}, {}, {}};
  for (int rep = 0; rep < p; ++rep)
    for (int i = q - 1; i >= 1; --i) d.events.push_back({EventKind::Crossing, i});
  return d;
}

FrontDiagram cable_link_front(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("cable front needs p,q >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("cable class must be coprime");
  FrontDiagram d{q + 1, {}, {}, {}};
  for (int rep = 0; rep < p; ++rep) {
    for (int i = q; i >= 2; --i) d.events.push_back({EventKind::Crossing, i});
    // dip: the lowest cable strand wraps once around the core
    d.events.push_back({EventKind::Crossing, 1});
    d.events.push_back({EventKind::Crossing, 1});
  }
  return d;
}

}  // namespace jetfront
