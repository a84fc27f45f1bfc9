#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "jetfront/slopes.hpp"

namespace jetfront {

// Position of the link's first component relative to the second, the extra
// datum that separates the two classes of the unstabilized two-copy.  Not
// computable from classical invariants, so it is caller-supplied.
enum class HeightOrder { FirstBelow, FirstAbove };

enum class Verdict { Isotopic, NotIsotopic, ExceptionalPair, UnknownCase4Rot };

// Stabilization exponents (k, l) per component: the link is isotopic to
// S_+^k0 S_-^l0 (first) together with S_+^k1 S_-^l1 (second).
struct HelixNormalForm {
  int k0, l0, k1, l1;
  bool operator==(const HelixNormalForm&) const = default;
};

struct ClassResult {
  Verdict verdict;
  std::optional<HelixNormalForm> normal_form;
  std::optional<HeightOrder> height_order;  // set only in the exceptional classes
  std::string detail;
};

// Classical invariants (tb, rot) of one oriented component.
struct ComponentClass {
  int tb = 0;
  int rot = 0;
};

// Oriented (p,q)-cable link data: class of the cable component, m = -tb of
// the core, rotation of the core, tb and rot of the cable.
struct CableDescriptor {
  int p = 0;
  int q = 1;
  int m = 0;
  int rot0 = 0;
  int tb1 = 0;
  int rot1 = 0;
  std::optional<HeightOrder> height_order;
};

enum class Realizability { Realizable, NotRealizable, Unknown };

struct RealizabilityReport {
  Realizability status;
  std::string reason;
};

// (k, l) = ((-tb + rot)/2, (-tb - rot)/2).  Throws unless tb + |rot| <= 0
// and tb = rot (mod 2).
std::pair<int, int> helix_normal_form(int tb, int rot);

// Canonical class of one realization of the helix link type.  Both tb zero
// without a height order yields the two-class ambiguity verdict.
ClassResult classify_helix(ComponentClass first, ComponentClass second,
                           std::optional<HeightOrder> height_order = std::nullopt);

// Isotopy decision for two realizations of the helix link type.
ClassResult classify_helix_pair(ComponentClass a_first, ComponentClass a_second,
                                std::optional<HeightOrder> a_order,
                                ComponentClass b_first, ComponentClass b_second,
                                std::optional<HeightOrder> b_order);

// Maximal tb of the (p,q)-cable of a core with tb = -m, by the case split:
//   (0,1) -> 0,  (1,0) -> -1,  p,q >= 1 -> p(q-1),
//   p < 0: mq+p < 0 -> pq+mq+p, otherwise pq.
int tb_max(int p, int q, int m);

// Rotation number at maximal tb where this calculus pins it down:
// 0 in all cases with p >= 0; unknown (nullopt) for p < 0.
std::optional<int> rot_at_tb_max(int p, int q, int m);

// Normalizes a descriptor to q >= 0 (and p = 1 when q = 0) by reversing the
// cable orientation if needed.
CableDescriptor normalize_descriptor(CableDescriptor d);

RealizabilityReport check_realizable(const CableDescriptor& d);

// Isotopy decision for two oriented cable links of the same type, by
// comparison of classical invariants, with the unstabilized-two-copy
// exception routed through the height order.
ClassResult classify_cable(const CableDescriptor& a, const CableDescriptor& b);

// All (tb1, rot1) realisable by stabilization from the maximal-tb cable,
// down to tb_floor.  Throws for p < 0 where the peak rotation is unknown.
std::set<std::pair<int, int>> enumerate_mountain_range(int p, int q, int m, int tb_floor);

enum class CopySetting {
  J1Helix2CopyUnstabilized,
  J1Helix2CopyStabilized,
  S3UnknotNCopy,
};

struct PermutationGroup {
  enum class Kind { Trivial, Symmetric, Cyclic } kind;
  int degree;  // number of permuted components
  int order;
};

// Component permutations realisable by Legendrian isotopy in each setting.
PermutationGroup allowed_permutations(CopySetting setting, int n = 2);

}  // namespace jetfront
