#!/usr/bin/env python3
"""Smoke tests for the python extension: every exposed operation gets at
least one call with a known answer."""

import _jetfront as jf


def check(cond, msg):
    assert cond, msg


# fronts and invariants
lam = jf.lambda_front(1)
inv = jf.invariants(lam, 0)
check((inv.tb, inv.rot, inv.winding) == (0, 0, 1), "trivial front invariants")

eye = jf.meridian_eye_front()
check(jf.component_count(eye) == 2, "eye components")
check(tuple(jf.invariants(eye, 1)) == (-1, 0, 0), "eye invariants")
check(jf.inter_component_crossing_sum(eye, 0, 1) == 2, "eye pairing")

braid = jf.torus_braid_front(2, 3)
check(tuple(jf.invariants(braid, 0)) == (4, 0, 3), "braid invariants")
check(jf.crossing_sign(braid, 0) == 1, "braid crossing sign")

cable = jf.cable_link_front(2, 3)
check(jf.inter_component_crossing_sum(cable, 0, 1) == 4, "cable pairing")

bad = jf.FrontDiagram()
bad.base_strands = 1
bad.events = [jf.Event(jf.EventKind.Crossing, 1)]
check(len(jf.validate(bad)) == 1, "validation flags the bad crossing")

# text format round trip
text = jf.serialize_front(cable)
check(jf.parse_front(text) == cable, "serialize/parse round trip")

svg = jf.render_svg(eye)
check(svg.startswith("<svg") and svg.count("<path") == 2, "svg render")

# moves and search
s = jf.stabilize(lam, 0, +1)
check(tuple(jf.invariants(s, 0)) == (-1, 1, 1), "stabilization")
back = jf.destabilize(s, 0, +1)
check(back == lam, "destabilization undoes")
check(jf.destabilize(lam, 0, +1) is None, "nothing to destabilize")
check(jf.canonical_key(s) != jf.canonical_key(lam), "keys separate stabilizations")
check(jf.move_count(braid) > 0, "move enumeration")

pm = jf.stabilize(jf.stabilize(lam, 0, +1), 0, -1)
mp = jf.stabilize(jf.stabilize(lam, 0, -1), 0, +1)
res = jf.search_isotopy(pm, mp, depth=10)
check(res["verdict"] == "found", "stabilizations commute")
res = jf.search_isotopy(lam, s)
check(res["verdict"] == "not-isotopic", "invariant mismatch is conclusive")

# slope calculus
check(jf.kanda_twist(2) == -1, "kanda twist")
check(jf.twist_on_torus(4, 2, 3) == -2, "torus twisting")
check((1, 0) in jf.admissible_slopes(0, 2), "slope infinity")
check(jf.min_intersection(2, 3, 1) == 4, "minimal intersection")
check(jf.tb_max_oracle(2, 3, 1) == 4, "oracle")

# classification
check(jf.helix_normal_form(-3, 1) == (2, 1), "normal form")
r = jf.classify_helix(0, 0, 0, 0)
check(r["verdict"] == "exceptional-pair", "exceptional pair")
r = jf.classify_helix(-1, 1, 0, 0, height_order="first-above")
check(r["verdict"] == "isotopic", "stabilized helix class")
check(jf.tb_max(2, 3, 1) == 4 and jf.tb_max(-3, 2, 1) == -7, "tb ceilings")
check(jf.rot_at_tb_max(-3, 2, 1) is None, "unknown rot range")
check(jf.check_realizable(2, 3, 1, 1, 5, 0)[0] == "not-realizable", "tb above ceiling")
r = jf.classify_cable(2, 3, 1, 1, 4, 0, 1, 1, 4, 0)
check(r["verdict"] == "isotopic", "cable classification")
rng = jf.enumerate_mountain_range(0, 1, 0, -1)
check(set(rng) == {(0, 0), (-1, 1), (-1, -1)}, "mountain range")

# dictionary into the sphere
check(jf.cable_type_to_s3(2, 3) == (-3, 1), "cable type dictionary")
check(jf.tb_to_s3(4, 3) == -5, "tb dictionary")
check(jf.m_to_s3(2) == 3, "m dictionary")
check(jf.reverse_orientation(3, -2, 3, 1) == (-3, 2, 3, -1), "orientation reversal")
check(jf.cor_noimage_gap(2, 5) == 2, "gap")
check(jf.s3_positive_torus_tb_max(-3, -2) == 1, "torus knot ceiling")

print("python smoke: all checks passed")
