#include "jetfront/classify.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace jetfront {

namespace {

void check_normalized(int p, int q) {
  if (q < 0) throw std::invalid_argument("type must be normalized to q >= 0");
  if (q == 0 && p != 1) throw std::invalid_argument("q = 0 requires p = 1");
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw std::invalid_argument("cable type must be coprime");
}

bool helix_realizable(int tb, int rot) {
  return tb + std::abs(rot) <= 0 && ((tb - rot) % 2) == 0;
}

std::string ho_name(HeightOrder h) {
  return h == HeightOrder::FirstBelow ? "first-below" : "first-above";
}

}  // namespace

std::pair<int, int> helix_normal_form(int tb, int rot) {
  if (!helix_realizable(tb, rot))
    throw std::invalid_argument("not realizable: needs tb + |rot| <= 0 and tb = rot (mod 2)");
  return {(-tb + rot) / 2, (-tb - rot) / 2};
}

ClassResult classify_helix(ComponentClass first, ComponentClass second,
                           std::optional<HeightOrder> height_order) {
  auto [k0, l0] = helix_normal_form(first.tb, first.rot);
  auto [k1, l1] = helix_normal_form(second.tb, second.rot);
  ClassResult res;
  res.normal_form = HelixNormalForm{k0, l0, k1, l1};
  if (first.tb == 0 && second.tb == 0) {
    if (!height_order) {
      res.verdict = Verdict::ExceptionalPair;
      res.detail = "2 classes: unstabilized copies are separated by the height order";
      return res;
    }
    res.verdict = Verdict::Isotopic;
    res.height_order = height_order;
    res.detail = "exceptional class " + ho_name(*height_order);
    return res;
  }
  // At least one stabilization: the height order is immaterial.
  res.verdict = Verdict::Isotopic;
  res.detail = "class determined by (k0,l0,k1,l1)";
  return res;
}

ClassResult classify_helix_pair(ComponentClass a_first, ComponentClass a_second,
                                std::optional<HeightOrder> a_order,
                                ComponentClass b_first, ComponentClass b_second,
                                std::optional<HeightOrder> b_order) {
  ClassResult ca = classify_helix(a_first, a_second, a_order);
  ClassResult cb = classify_helix(b_first, b_second, b_order);
  ClassResult res;
  res.normal_form = ca.normal_form;
  if (!(*ca.normal_form == *cb.normal_form)) {
    res.verdict = Verdict::NotIsotopic;
    res.detail = "classical invariants differ";
    return res;
  }
  bool exceptional = a_first.tb == 0 && a_second.tb == 0;
  if (exceptional) {
    if (!a_order || !b_order) {
      res.verdict = Verdict::ExceptionalPair;
      res.detail = "ambiguous: height order not supplied for an unstabilized pair";
      return res;
    }
    if (*a_order != *b_order) {
      res.verdict = Verdict::NotIsotopic;
      res.detail = "unstabilized copies with opposite height order";
      return res;
    }
    res.height_order = a_order;
  }
  res.verdict = Verdict::Isotopic;
  return res;
}

int tb_max(int p, int q, int m) {
  check_normalized(p, q);
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (p == 0) return 0;                      // helix: core type itself
  if (q == 0) return -1;                     // meridian: trivial knot linked once
  if (p >= 1) return p * (q - 1);
  return (m * q + p < 0) ? p * q + m * q + p : p * q;
}

std::optional<int> rot_at_tb_max(int p, int q, int m) {
  check_normalized(p, q);
  (void)m;
  if (p >= 0) return 0;
  return std::nullopt;  // governed by the S^3 rotation-range formulas, not tracked here
}

CableDescriptor normalize_descriptor(CableDescriptor d) {
  if (d.q < 0 || (d.q == 0 && d.p < 0)) {
    d.p = -d.p;
    d.q = -d.q;
    d.rot1 = -d.rot1;
  }
  return d;
}

RealizabilityReport check_realizable(const CableDescriptor& in) {
  CableDescriptor d = normalize_descriptor(in);
  check_normalized(d.p, d.q);
  if (d.m < 0) return {Realizability::NotRealizable, "m must be >= 0"};
  if (d.m < std::abs(d.rot0))
    return {Realizability::NotRealizable, "core violates tb + |rot| <= 0"};
  if ((d.m - d.rot0) % 2 != 0)
    return {Realizability::NotRealizable, "core tb/rot parity mismatch"};
  int ceiling = tb_max(d.p, d.q, d.m);
  if (d.tb1 > ceiling)
    return {Realizability::NotRealizable, "tb1 exceeds the maximal tb for this type"};
  std::optional<int> rot_base = rot_at_tb_max(d.p, d.q, d.m);
  if (!rot_base)
    return {Realizability::Unknown, "rot range at maximal tb not determined by this calculus"};
  int drop = ceiling - d.tb1;
  int shift = std::abs(d.rot1 - *rot_base);
  if (shift > drop) return {Realizability::NotRealizable, "rot1 outside the stabilization lattice"};
  if ((drop - shift) % 2 != 0)
    return {Realizability::NotRealizable, "tb1/rot1 parity mismatch"};
  return {Realizability::Realizable, ""};
}

ClassResult classify_cable(const CableDescriptor& a_in, const CableDescriptor& b_in) {
  CableDescriptor a = normalize_descriptor(a_in);
  CableDescriptor b = normalize_descriptor(b_in);
  check_normalized(a.p, a.q);
  check_normalized(b.p, b.q);
  ClassResult res;
  if (a.p != b.p || a.q != b.q) {
    res.verdict = Verdict::NotIsotopic;
    res.detail = "different oriented link types";
    return res;
  }
  if (check_realizable(a).status == Realizability::NotRealizable ||
      check_realizable(b).status == Realizability::NotRealizable)
    throw std::invalid_argument("descriptor is not realizable");
  if (a.m != b.m || a.rot0 != b.rot0 || a.tb1 != b.tb1 || a.rot1 != b.rot1) {
    res.verdict = Verdict::NotIsotopic;
    res.detail = "classical invariants differ";
    return res;
  }
  bool exceptional = a.p == 0 && a.q == 1 && a.m == 0 && a.tb1 == 0;
  if (exceptional) {
    if (!a.height_order || !b.height_order) {
      res.verdict = Verdict::ExceptionalPair;
      res.detail = "2 classes: unstabilized copies are separated by the height order";
      return res;
    }
    if (*a.height_order != *b.height_order) {
      res.verdict = Verdict::NotIsotopic;
      res.detail = "unstabilized copies with opposite height order";
      return res;
    }
    res.height_order = a.height_order;
  }
  res.verdict = Verdict::Isotopic;
  res.detail = "classical invariants agree";
  return res;
}

std::set<std::pair<int, int>> enumerate_mountain_range(int p, int q, int m, int tb_floor) {
  std::optional<int> rot_base = rot_at_tb_max(p, q, m);
  if (!rot_base)
    throw std::domain_error(
        "rot at maximal tb unknown for p < 0; check_realizable gives the partial answer");
  int peak = tb_max(p, q, m);
  if (tb_floor > peak) throw std::invalid_argument("tb_floor above the maximal tb");
  std::set<std::pair<int, int>> out;
  for (int k = 0; peak - k >= tb_floor; ++k)
    for (int l = 0; peak - k - l >= tb_floor; ++l)
      out.insert({peak - k - l, *rot_base + k - l});
  return out;
}

PermutationGroup allowed_permutations(CopySetting setting, int n) {
  switch (setting) {
    case CopySetting::J1Helix2CopyUnstabilized:
      return {PermutationGroup::Kind::Trivial, 2, 1};
    case CopySetting::J1Helix2CopyStabilized:
      return {PermutationGroup::Kind::Symmetric, 2, 2};
    case CopySetting::S3UnknotNCopy:
      if (n < 1) throw std::invalid_argument("n must be >= 1");
      return {PermutationGroup::Kind::Cyclic, n, n};
  }
  throw std::invalid_argument("unknown setting");
}

}  // namespace jetfront
