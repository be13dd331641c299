#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "clasp/braid.hpp"
#include "clasp/error.hpp"

namespace clasp {

/// One crossing. arcs holds the four arc ids counterclockwise, starting at
/// the under strand entering the crossing in the reference orientation.
/// sign is the actual sign under the current component orientations.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A link component. Arc components list their arcs in reference traversal
/// order; a crossingless loop has no arcs and refers to an entry of loops().
struct Component {
  std::vector<int> arcs;
  int loop = -1;
  int orientation = 1;
  friend bool operator==(const Component&, const Component&) = default;
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

/// Annular link diagram in PD form. Arc ids are 0-based here and 1-based in
/// the text format. ray[a] counts signed crossings of arc a with a fixed ray
/// out of the axis puncture, measured along the reference direction.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  PlanarDiagram(std::vector<Crossing> crossings, std::vector<Component> arc_components,
                std::vector<int> ray, std::vector<int> loops)
      : crossings_(std::move(crossings)), ray_(std::move(ray)), loops_(std::move(loops)),
        components_(std::move(arc_components)) {
    for (std::size_t l = 0; l < loops_.size(); ++l) components_.push_back({{}, static_cast<int>(l), 1});
    validate();
  }

  [[nodiscard]] const std::vector<Crossing>& crossings() const { return crossings_; }
  [[nodiscard]] int crossing_count() const { return static_cast<int>(crossings_.size()); }
  [[nodiscard]] int arc_count() const { return static_cast<int>(ray_.size()); }
  [[nodiscard]] const std::vector<int>& ray() const { return ray_; }
  [[nodiscard]] const std::vector<int>& loops() const { return loops_; }
  [[nodiscard]] const std::vector<Component>& components() const { return components_; }
  [[nodiscard]] int component_count() const { return static_cast<int>(components_.size()); }
  [[nodiscard]] int n_plus() const { return n_plus_; }
  [[nodiscard]] int n_minus() const { return n_minus_; }

  [[nodiscard]] SlotRef head(int arc) const { return head_[static_cast<std::size_t>(arc)]; }
  [[nodiscard]] SlotRef tail(int arc) const { return tail_[static_cast<std::size_t>(arc)]; }
  [[nodiscard]] int arc_component(int arc) const { return arc_component_[static_cast<std::size_t>(arc)]; }

  /// Sign the crossing would have if every component kept its reference orientation.
  [[nodiscard]] int reference_sign(int x) const {
    const Crossing& c = crossings_[static_cast<std::size_t>(x)];
    return c.sign * orientation(arc_component(c.arcs[0])) * orientation(arc_component(c.arcs[1]));
  }
  [[nodiscard]] int under_component(int x) const { return arc_component(crossings_[static_cast<std::size_t>(x)].arcs[0]); }
  [[nodiscard]] int over_component(int x) const { return arc_component(crossings_[static_cast<std::size_t>(x)].arcs[1]); }
  [[nodiscard]] int orientation(int comp) const { return components_[static_cast<std::size_t>(comp)].orientation; }

  /// True when the arc in this slot leaves the crossing (reference direction).
  [[nodiscard]] bool slot_is_outgoing(int x, int slot) const {
    if (slot == 0) return false;
    if (slot == 2) return true;
    return (reference_sign(x) > 0) == (slot == 1);
  }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_ && a.ray_ == b.ray_ && a.loops_ == b.loops_ &&
           a.components_ == b.components_;
  }

  /// Flips component c. Signs of crossings between c and another component
  /// flip; a loop's winding is negated instead of carrying a flag.
  [[nodiscard]] PlanarDiagram reversed(int c) const {
    if (c < 0 || c >= component_count()) throw InputError("component " + std::to_string(c + 1) + " does not exist");
    PlanarDiagram out = *this;
    Component& comp = out.components_[static_cast<std::size_t>(c)];
    if (comp.loop >= 0) {
      out.loops_[static_cast<std::size_t>(comp.loop)] *= -1;
      return out;
    }
    comp.orientation *= -1;
    for (std::size_t x = 0; x < out.crossings_.size(); ++x) {
      const int u = under_component(static_cast<int>(x)), o = over_component(static_cast<int>(x));
      if ((u == c) != (o == c)) out.crossings_[x].sign *= -1;
    }
    out.count_signs();
    return out;
  }

  /// Switches every crossing; the shadow and the ray data are unchanged.
  [[nodiscard]] PlanarDiagram mirrored() const {
    PlanarDiagram out = *this;
    for (std::size_t x = 0; x < crossings_.size(); ++x) {
      const Crossing& c = crossings_[x];
      // the old over strand becomes the under strand; rotate so it enters at slot 0
      const int shift = reference_sign(static_cast<int>(x)) > 0 ? 3 : 1;
      for (int k = 0; k < 4; ++k) out.crossings_[x].arcs[static_cast<std::size_t>(k)] = c.arcs[static_cast<std::size_t>((k + shift) % 4)];
      out.crossings_[x].sign = -c.sign;
    }
    out.validate();
    return out;
  }

 private:
  void count_signs() {
    n_plus_ = n_minus_ = 0;
    for (const Crossing& c : crossings_) (c.sign > 0 ? n_plus_ : n_minus_)++;
  }

  void validate() {
    const int arcs = arc_count();
    arc_component_.assign(static_cast<std::size_t>(arcs), -1);
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
      const Component& comp = components_[ci];
      if (comp.orientation != 1 && comp.orientation != -1) throw InputError("orientation must be +1 or -1");
      if (comp.loop >= 0) {
        if (!comp.arcs.empty()) throw InputError("loop component with arcs");
        continue;
      }
      if (comp.arcs.empty()) throw InputError("component " + std::to_string(ci + 1) + " has no arcs");
      for (int a : comp.arcs) {
        if (a < 0 || a >= arcs) throw InputError("arc " + std::to_string(a + 1) + " out of range");
        if (arc_component_[static_cast<std::size_t>(a)] != -1)
          throw InputError("arc " + std::to_string(a + 1) + " listed in two components");
        arc_component_[static_cast<std::size_t>(a)] = static_cast<int>(ci);
      }
    }
    for (int a = 0; a < arcs; ++a)
      if (arc_component_[static_cast<std::size_t>(a)] == -1)
        throw InputError("arc " + std::to_string(a + 1) + " belongs to no component");

    head_.assign(static_cast<std::size_t>(arcs), {});
    tail_.assign(static_cast<std::size_t>(arcs), {});
    for (std::size_t x = 0; x < crossings_.size(); ++x) {
      const Crossing& c = crossings_[x];
      if (c.sign != 1 && c.sign != -1) throw InputError("crossing sign must be +1 or -1");
      for (int a : c.arcs)
        if (a < 0 || a >= arcs) throw InputError("crossing " + std::to_string(x + 1) + " refers to a missing arc");
      if (arc_component(c.arcs[0]) != arc_component(c.arcs[2]) || arc_component(c.arcs[1]) != arc_component(c.arcs[3]))
        throw InputError("crossing " + std::to_string(x + 1) + " joins arcs of different components across a strand");
      for (int s = 0; s < 4; ++s) {
        const int a = c.arcs[static_cast<std::size_t>(s)];
        SlotRef& end = slot_is_outgoing(static_cast<int>(x), s) ? tail_[static_cast<std::size_t>(a)] : head_[static_cast<std::size_t>(a)];
        if (end.crossing != -1)
          throw InputError("arc " + std::to_string(a + 1) + " is used twice in the same direction");
        end = {static_cast<int>(x), s};
      }
    }
    for (int a = 0; a < arcs; ++a)
      if (head_[static_cast<std::size_t>(a)].crossing == -1 || tail_[static_cast<std::size_t>(a)].crossing == -1)
        throw InputError("arc " + std::to_string(a + 1) + " does not appear in exactly two crossing slots");

    // consecutive arcs of a component must pass straight through a crossing
    for (const Component& comp : components_) {
      for (std::size_t k = 0; k < comp.arcs.size(); ++k) {
        const SlotRef h = head(comp.arcs[k]);
        const SlotRef t = tail(comp.arcs[(k + 1) % comp.arcs.size()]);
        if (h.crossing != t.crossing || t.slot != (h.slot + 2) % 4)
          throw InputError("component arcs are not listed in traversal order");
      }
    }
    count_signs();
  }

  std::vector<Crossing> crossings_;
  std::vector<int> ray_;
  std::vector<int> loops_;
  std::vector<Component> components_;
  std::vector<int> arc_component_;
  std::vector<SlotRef> head_, tail_;
  int n_plus_ = 0, n_minus_ = 0;
};

inline PlanarDiagram reverse_component(const PlanarDiagram& d, int c) { return d.reversed(c); }
inline PlanarDiagram mirror(const PlanarDiagram& d) { return d.mirrored(); }

/// Half the signed count of crossings between two distinct components.
inline int linking_number(const PlanarDiagram& d, int c1, int c2) {
  if (c1 == c2) throw InputError("linking number needs two distinct components");
  for (int c : {c1, c2})
    if (c < 0 || c >= d.component_count()) throw InputError("component " + std::to_string(c + 1) + " does not exist");
  int sum = 0;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int u = d.under_component(x), o = d.over_component(x);
    if ((u == c1 && o == c2) || (u == c2 && o == c1)) sum += d.crossings()[static_cast<std::size_t>(x)].sign;
  }
  if (sum % 2 != 0) throw InternalError("odd crossing sum between two components");
  return sum / 2;
}

/// Linking number of component c with the union of all other components.
inline int linking_with_rest(const PlanarDiagram& d, int c) {
  int lk = 0;
  for (int o = 0; o < d.component_count(); ++o)
    if (o != c) lk += linking_number(d, c, o);
  return lk;
}

// ---------------------------------------------------------------------------
// Resolutions

/// Slot joined to `slot` by the smoothing: 0 pairs (a,b),(c,d); 1 pairs (a,d),(b,c).
inline int smoothing_partner(int slot, bool one) { return one ? 3 - slot : slot ^ 1; }

struct Circle {
  std::vector<int> arcs;  // traversal order; empty for a crossingless loop
  int loop = -1;
  int winding = 0;
  [[nodiscard]] bool essential() const { return winding != 0; }
};

struct ResolvedState {
  std::vector<bool> state;
  std::vector<Circle> circles;
  std::vector<int> arc_circle;
};

/// Reusable workspace for tracing the circles of many states over one
/// diagram. Circles are numbered by their smallest arc; loops come last.
class StateResolver {
 public:
  explicit StateResolver(const PlanarDiagram& d) : d_(&d) {
    if (d.crossing_count() > 62) throw InputError("too many crossings for the cube of resolutions");
  }

  /// Fills arc_circle and winding for the state given as a bit mask.
  void trace(std::uint64_t state, std::vector<int>& arc_circle, std::vector<int>& winding,
             std::vector<std::vector<int>>* circle_arcs = nullptr) const {
    const PlanarDiagram& d = *d_;
    arc_circle.assign(static_cast<std::size_t>(d.arc_count()), -1);
    winding.clear();
    if (circle_arcs) circle_arcs->clear();
    for (int start = 0; start < d.arc_count(); ++start) {
      if (arc_circle[static_cast<std::size_t>(start)] != -1) continue;
      const int id = static_cast<int>(winding.size());
      int w = 0;
      int arc = start;
      bool forward = true;
      if (circle_arcs) circle_arcs->emplace_back();
      for (;;) {
        arc_circle[static_cast<std::size_t>(arc)] = id;
        if (circle_arcs) circle_arcs->back().push_back(arc);
        w += forward ? d.ray()[static_cast<std::size_t>(arc)] : -d.ray()[static_cast<std::size_t>(arc)];
        const SlotRef end = forward ? d.head(arc) : d.tail(arc);
        const bool one = (state >> end.crossing) & 1U;
        const int slot = smoothing_partner(end.slot, one);
        arc = d.crossings()[static_cast<std::size_t>(end.crossing)].arcs[static_cast<std::size_t>(slot)];
        forward = d.slot_is_outgoing(end.crossing, slot);
        if (arc == start && forward) break;
      }
      if (w < -1 || w > 1) throw InternalError("resolution circle winds more than once around the axis");
      winding.push_back(w);
    }
    for (int lw : d.loops()) {
      winding.push_back(lw);
      if (circle_arcs) circle_arcs->emplace_back();
    }
  }

 private:
  const PlanarDiagram* d_;
};

inline ResolvedState resolve(const PlanarDiagram& d, const std::vector<bool>& state) {
  if (static_cast<int>(state.size()) != d.crossing_count())
    throw InputError("state length does not match the crossing count");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < state.size(); ++k)
    if (state[k]) mask |= std::uint64_t{1} << k;
  ResolvedState out;
  out.state = state;
  std::vector<int> winding;
  std::vector<std::vector<int>> arcs;
  StateResolver(d).trace(mask, out.arc_circle, winding, &arcs);
  const std::size_t arc_circles = winding.size() - d.loops().size();
  for (std::size_t c = 0; c < winding.size(); ++c) {
    Circle circle;
    circle.arcs = std::move(arcs[c]);
    circle.winding = winding[c];
    if (c >= arc_circles) circle.loop = static_cast<int>(c - arc_circles);
    out.circles.push_back(std::move(circle));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Building diagrams from plane geometry

/// Assembles a diagram from crossings whose four slots are numbered
/// counterclockwise, joined by edges. A strand passes straight through a
/// crossing (slot s to s+2); over_pair 0 puts slots {0,2} on top, 1 puts {1,3}.
class DiagramBuilder {
 public:
  struct Node {
    int crossing = -1;
    int slot = -1;
    friend bool operator==(const Node&, const Node&) = default;
  };

  int add_crossing(int over_pair) {
    over_.push_back(over_pair);
    node_edge_.push_back({-1, -1, -1, -1});
    return static_cast<int>(over_.size()) - 1;
  }

  /// Joins two slots; ray is the signed ray count in the direction from -> to.
  int connect(Node from, Node to, int ray = 0) {
    const int e = static_cast<int>(edges_.size());
    edges_.push_back({from, to, ray});
    for (Node n : {from, to}) {
      int& slot = node_edge_[static_cast<std::size_t>(n.crossing)][static_cast<std::size_t>(n.slot)];
      if (slot != -1) throw InternalError("diagram builder: slot joined twice");
      slot = e;
    }
    return e;
  }

  void add_loop(int winding) { loops_.push_back(winding); }

  /// Traces components starting from the given edges (walked from -> to),
  /// in order; seeds on an already traced component are skipped.
  /// orientations[k] applies to the component of seeds[k].
  [[nodiscard]] PlanarDiagram build(const std::vector<int>& seeds, const std::vector<int>& orientations) const {
    std::vector<int> arc_of_edge(edges_.size(), -1);
    std::vector<bool> edge_forward(edges_.size(), true);
    std::vector<std::array<int, 2>> in_slot(over_.size(), {-1, -1});  // entering slots of the two passes
    std::vector<Component> comps;
    int next_arc = 0;
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      const int seed = seeds[k];
      if (arc_of_edge[static_cast<std::size_t>(seed)] != -1) continue;
      Component comp;
      comp.orientation = orientations.at(k);
      int e = seed;
      bool fwd = true;
      do {
        if (arc_of_edge[static_cast<std::size_t>(e)] != -1) throw InternalError("diagram builder: edge traced twice");
        arc_of_edge[static_cast<std::size_t>(e)] = next_arc;
        edge_forward[static_cast<std::size_t>(e)] = fwd;
        comp.arcs.push_back(next_arc++);
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        const Node at = fwd ? edge.to : edge.from;
        auto& passes = in_slot[static_cast<std::size_t>(at.crossing)];
        (passes[0] == -1 ? passes[0] : passes[1]) = at.slot;
        const Node out{at.crossing, (at.slot + 2) % 4};
        e = node_edge_[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.slot)];
        if (e == -1) throw InternalError("diagram builder: open slot");
        fwd = edges_[static_cast<std::size_t>(e)].from == out;
      } while (!(e == seed && fwd));
      comps.push_back(std::move(comp));
    }
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (arc_of_edge[e] == -1) throw InternalError("diagram builder: component without seed");

    std::vector<int> ray(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e)
      ray[static_cast<std::size_t>(arc_of_edge[e])] = edge_forward[e] ? edges_[e].ray : -edges_[e].ray;

    std::vector<Crossing> crossings(over_.size());
    std::vector<int> arc_comp(edges_.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int a : comps[c].arcs) arc_comp[static_cast<std::size_t>(a)] = static_cast<int>(c);
    for (std::size_t x = 0; x < over_.size(); ++x) {
      const auto [p0, p1] = in_slot[x];
      const bool p0_over = (p0 % 2) == over_[x];
      const int under_in = p0_over ? p1 : p0;
      const int over_in = p0_over ? p0 : p1;
      Crossing& c = crossings[x];
      for (int k = 0; k < 4; ++k) {
        const int e = node_edge_[x][static_cast<std::size_t>((under_in + k) % 4)];
        c.arcs[static_cast<std::size_t>(k)] = arc_of_edge[static_cast<std::size_t>(e)];
      }
      // positive iff the over strand enters at the slot just clockwise of under_in
      const int ref = (over_in == (under_in + 3) % 4) ? 1 : -1;
      c.sign = ref * comps[static_cast<std::size_t>(arc_comp[static_cast<std::size_t>(c.arcs[0])])].orientation *
               comps[static_cast<std::size_t>(arc_comp[static_cast<std::size_t>(c.arcs[1])])].orientation;
    }
    return PlanarDiagram(std::move(crossings), std::move(comps), std::move(ray), loops_);
  }

 private:
  struct Edge {
    Node from, to;
    int ray = 0;
  };
  std::vector<int> over_;
  std::vector<std::array<int, 4>> node_edge_;
  std::vector<Edge> edges_;
  std::vector<int> loops_;
};

// ---------------------------------------------------------------------------
// Closures of braids

enum class ClosureKind { Braid, Clasp, AugmentedBraid, AugmentedClasp };

inline std::string to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::Braid: return "braid";
    case ClosureKind::Clasp: return "clasp";
    case ClosureKind::AugmentedBraid: return "augmented-braid";
    case ClosureKind::AugmentedClasp: return "augmented-clasp";
  }
  return "?";
}

inline ClosureKind parse_closure_kind(std::string_view s) {
  if (s == "braid") return ClosureKind::Braid;
  if (s == "clasp") return ClosureKind::Clasp;
  if (s == "augmented-braid" || s == "augmented_braid") return ClosureKind::AugmentedBraid;
  if (s == "augmented-clasp" || s == "augmented_clasp") return ClosureKind::AugmentedClasp;
  throw InputError("unknown closure kind '" + std::string(s) + "'");
}

struct ClosureOptions {
  /// +1 or -1; -1 reverses the axis of augmented closures.
  int axis_orientation = 1;
  /// +1 or -1; -1 builds the mirrored clasp.
  int clasp_chirality = 1;
};

/// Closes an n-braid around the axis. Strands run downward through the braid
/// box and return around the puncture, each return arc crossing the ray once.
/// Every component is oriented so that it runs downward at its leftmost top
/// position; the axis, when present, is the last component.
inline PlanarDiagram build_closure(const BraidWord& w, ClosureKind kind, ClosureOptions opt = {}) {
  const int n = w.strands();
  const bool clasp = kind == ClosureKind::Clasp || kind == ClosureKind::AugmentedClasp;
  const bool axis = kind == ClosureKind::AugmentedBraid || kind == ClosureKind::AugmentedClasp;
  if (clasp && n < 2) throw InputError("the clasp closure needs at least two strands");
  if (std::abs(opt.axis_orientation) != 1 || std::abs(opt.clasp_chirality) != 1)
    throw InputError("orientation and chirality flags must be +1 or -1");

  using Node = DiagramBuilder::Node;
  enum { NW = 0, SW = 1, SE = 2, NE = 3 };
  enum { N = 0, W = 1, S = 2, E = 3 };
  DiagramBuilder b;
  std::vector<std::optional<Node>> top(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
  auto attach = [&](int p, Node node) {
    auto& pending = bottom[static_cast<std::size_t>(p)];
    if (pending) b.connect(*pending, node);
    else top[static_cast<std::size_t>(p)] = node;
  };

  int axis_seed = -1;
  if (axis) {
    std::vector<int> upper(static_cast<std::size_t>(n)), lower(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      upper[static_cast<std::size_t>(p)] = b.add_crossing(1);  // axis on top
      lower[static_cast<std::size_t>(p)] = b.add_crossing(0);  // strand on top
      attach(p, {upper[static_cast<std::size_t>(p)], N});
      b.connect({upper[static_cast<std::size_t>(p)], S}, {lower[static_cast<std::size_t>(p)], N});
      bottom[static_cast<std::size_t>(p)] = Node{lower[static_cast<std::size_t>(p)], S};
    }
    for (int p = 0; p + 1 < n; ++p) b.connect({upper[static_cast<std::size_t>(p)], E}, {upper[static_cast<std::size_t>(p + 1)], W});
    b.connect({upper.back(), E}, {lower.back(), E});
    for (int p = n - 1; p > 0; --p) b.connect({lower[static_cast<std::size_t>(p)], W}, {lower[static_cast<std::size_t>(p - 1)], E});
    axis_seed = b.connect({lower.front(), W}, {upper.front(), W});
  }

  for (const Letter& l : w.letters()) {
    const int x = b.add_crossing(l.sign > 0 ? 1 : 0);
    attach(l.gen - 1, {x, NW});
    attach(l.gen, {x, NE});
    bottom[static_cast<std::size_t>(l.gen - 1)] = Node{x, SW};
    bottom[static_cast<std::size_t>(l.gen)] = Node{x, SE};
  }

  if (clasp) {
    // cup from the two rightmost braid bottoms, cap feeding their return arcs
    const int over_pair = opt.clasp_chirality > 0 ? 0 : 1;
    const int xl = b.add_crossing(over_pair), xr = b.add_crossing(over_pair);
    attach(n - 2, {xl, NW});
    b.connect({xl, SE}, {xr, SW});
    attach(n - 1, {xr, NE});
    b.connect({xl, NE}, {xr, NW});
    bottom[static_cast<std::size_t>(n - 2)] = Node{xl, SW};
    bottom[static_cast<std::size_t>(n - 1)] = Node{xr, SE};
  }

  std::vector<int> seeds, orient;
  for (int p = 0; p < n; ++p) {
    if (!top[static_cast<std::size_t>(p)]) {
      b.add_loop(1);
      continue;
    }
    seeds.push_back(b.connect(*bottom[static_cast<std::size_t>(p)], *top[static_cast<std::size_t>(p)], 1));
    orient.push_back(1);
  }
  if (axis) {
    seeds.push_back(axis_seed);
    orient.push_back(opt.axis_orientation);
  }
  return b.build(seeds, orient);
}

// ---------------------------------------------------------------------------
// PD text format

inline void write_pd(std::ostream& os, const PlanarDiagram& d) {
  for (const Crossing& c : d.crossings())
    os << "X[" << c.arcs[0] + 1 << ',' << c.arcs[1] + 1 << ',' << c.arcs[2] + 1 << ',' << c.arcs[3] + 1
       << "] sign=" << (c.sign > 0 ? "+1" : "-1") << '\n';
  for (int w : d.loops()) os << "loop winding=" << w << '\n';
  int k = 0;
  for (const Component& comp : d.components()) {
    if (comp.loop >= 0) continue;
    os << "component " << ++k << ':';
    for (int a : comp.arcs) os << ' ' << a + 1;
    os << " (orientation=" << (comp.orientation > 0 ? "+1" : "-1") << ")\n";
  }
  for (int a = 0; a < d.arc_count(); ++a)
    if (d.ray()[static_cast<std::size_t>(a)] != 0)
      os << "ray: arc=" << a + 1 << " count=" << d.ray()[static_cast<std::size_t>(a)] << '\n';
}

inline std::string to_pd(const PlanarDiagram& d) {
  std::ostringstream os;
  write_pd(os, d);
  return os.str();
}

inline PlanarDiagram read_pd(std::istream& is) {
  static const std::regex crossing_re(R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s+sign=([+-]?1))");
  static const std::regex loop_re(R"(loop\s+winding=([+-]?\d+))");
  static const std::regex comp_re(R"(component\s+(\d+)\s*:\s*([\d\s]*)\(orientation=([+-]?1)\))");
  static const std::regex ray_re(R"(ray:\s*arc=(\d+)\s+count=([+-]?\d+))");
  std::vector<Crossing> crossings;
  std::vector<int> loops;
  std::vector<Component> comps;
  std::map<int, int> rays;
  std::string line;
  int lineno = 0;
  auto to_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw InputError("PD line " + std::to_string(lineno) + ": number out of range");
    }
  };
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(first, last - first + 1);
    std::smatch m;
    if (std::regex_match(body, m, crossing_re)) {
      Crossing c;
      for (int k = 0; k < 4; ++k) c.arcs[static_cast<std::size_t>(k)] = to_int(m[k + 1]) - 1;
      c.sign = to_int(m[5]);
      crossings.push_back(c);
    } else if (std::regex_match(body, m, loop_re)) {
      loops.push_back(to_int(m[1]));
    } else if (std::regex_match(body, m, comp_re)) {
      if (to_int(m[1]) != static_cast<int>(comps.size()) + 1)
        throw InputError("PD line " + std::to_string(lineno) + ": components must be numbered 1, 2, ... in order");
      Component comp;
      std::istringstream arcs(m[2].str());
      for (int a; arcs >> a;) comp.arcs.push_back(a - 1);
      comp.orientation = to_int(m[3]);
      comps.push_back(std::move(comp));
    } else if (std::regex_match(body, m, ray_re)) {
      if (!rays.emplace(to_int(m[1]) - 1, to_int(m[2])).second)
        throw InputError("PD line " + std::to_string(lineno) + ": duplicate ray entry");
    } else {
      throw InputError("PD line " + std::to_string(lineno) + ": cannot parse '" + body + "'");
    }
  }
  int arcs = 0;
  for (const Component& c : comps) arcs += static_cast<int>(c.arcs.size());
  std::vector<int> ray(static_cast<std::size_t>(arcs), 0);
  for (const auto& [a, count] : rays) {
    if (a < 0 || a >= arcs) throw InputError("ray entry for a missing arc");
    ray[static_cast<std::size_t>(a)] = count;
  }
  return PlanarDiagram(std::move(crossings), std::move(comps), std::move(ray), std::move(loops));
}

inline PlanarDiagram parse_pd(const std::string& text) {
  std::istringstream is(text);
  return read_pd(is);
}

}  // namespace clasp
