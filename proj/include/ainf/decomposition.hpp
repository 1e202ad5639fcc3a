#pragma once

#include "ainf/cvector.hpp"
#include "ainf/triangulation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

struct SupportDescriptor {
  std::vector<Arc> explicit_arcs;
  std::vector<std::pair<int, i64>> tails;  // family, from
  bool empty() const { return explicit_arcs.empty() && tails.empty(); }
};

SupportDescriptor support(const CoVector& c);
// supp a is contained in supp b
bool support_subset(const Triangulation& t, const CoVector& a, const CoVector& b);

bool in_X(const Triangulation& t, const Point& e, const Point& f, const CoVector& c);

std::vector<Arc> maximal_pairs(const Triangulation& t);

struct OrderDescriptor {
  bool finite = true;
  std::size_t size = 0;  // finite only
  bool head = false;     // omega
  std::size_t middle = 0;
  bool tail = false;     // omega*
  std::string str() const;
  bool operator==(const OrderDescriptor&) const = default;
};

inline constexpr int kAccAtE = -1;
inline constexpr int kAccAtF = -2;

// tail members m >= from all cross, accumulating at e, f or inside the chord (fountain gap)
struct Ray {
  int family = 0;
  i64 from = 0;
  bool increasing = true;
  int acc = 0;
};

struct OrderedCrossingSet {
  Point e, f;
  std::vector<Arc> explicit_members;  // sorted along the chord
  std::vector<Ray> rays;
  OrderDescriptor order;
};

OrderedCrossingSet crossing_order(const Triangulation& t, const Point& e, const Point& f);

bool y_less(const OrderedCrossingSet& y, const Arc& a, const Arc& b);
std::optional<Arc> y_pred(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a);
std::optional<Arc> y_succ(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a);
std::optional<Arc> y_least(const Triangulation& t, const OrderedCrossingSet& y);
std::optional<Arc> y_greatest(const Triangulation& t, const OrderedCrossingSet& y);
bool y_contains(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a);

// element of Y_ext
struct YElem {
  bool neg_inf = false;
  Arc arc;
  bool operator==(const YElem&) const = default;
  auto operator<=>(const YElem&) const = default;
};
std::string to_string(const YElem& y);

bool has_neg_inf(const OrderedCrossingSet& y);
std::string y_ext_str(const OrderedCrossingSet& y);
// the first n and the last n elements of Y_ext (all of it when finite), in order
std::vector<YElem> y_ext_window(const Triangulation& t, const OrderedCrossingSet& y, std::size_t n);

// eps_pos - eps_neg
struct Root {
  YElem pos, neg;
  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
};
std::string to_string(const Root& r);

YElem pred_ext(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a);
Root psi(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a, const Arc& b);
Root root_of_arc(const Triangulation& t, const Point& e, const Point& f, const Arc& v);
std::vector<Root> delta_plus(const std::vector<YElem>& window);

std::string root_system_label(const OrderedCrossingSet& y);

struct AcyclicityReport {
  bool acyclic = false;
  std::vector<Arc> pairs;
  bool consistent = true;  // acyclic implies exactly one pair
  std::optional<std::array<Point, 3>> football;
  std::optional<Triangle> internal_triangle;
};
AcyclicityReport unique_maximal_iff_acyclic_report(const Triangulation& t);

}  // namespace ainf
