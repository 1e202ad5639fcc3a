#pragma once

#include "ainf/homindex.hpp"
#include "ainf/triangulation.hpp"

#include <array>
#include <map>
#include <vector>

namespace ainf {

// "every member of family f with parameter m >= from carries coeff"
struct TailIndicator {
  int family = 0;
  i64 from = 0;
  i64 coeff = 0;
  bool operator==(const TailIndicator&) const = default;
};

// integer functional on the split Grothendieck group of T
class CoVector {
 public:
  std::map<Arc, i64> explicit_part;
  std::vector<TailIndicator> tails;

  i64 eval(const Triangulation& t, const Arc& d) const;
  bool is_zero() const { return explicit_part.empty() && tails.empty(); }
  bool positive() const;
  bool negative() const;
  bool sign_coherent() const { return positive() || negative(); }
  CoVector scaled(i64 s) const;
  // values on the core of a finite triangulation, in core order
  std::vector<i64> dense(const Triangulation& t) const;
  bool operator==(const CoVector&) const = default;
};

Triangulation suspend(const Triangulation& t);

i64 cvector_eval(const Triangulation& t, const Triangulation& u, const Arc& uarc, const Arc& tarc);
i64 cvector_bar_eval(const Triangulation& t, const Triangulation& u, const Arc& uarc, const Arc& tarc);

// crossing indicator of a virtual arc
CoVector dimension_vector(const Triangulation& t, const Arc& a);

struct Exchange {
  Arc partner;
  std::array<std::vector<Arc>, 2> middles;  // edges dropped
};
Exchange exchange_partner(const Triangulation& u, const Arc& d);

std::optional<Arc> image_arc(const Triangulation& t, const Arc& u, const Arc& ustar);

struct SignedCVector {
  int sign = 0;
  Arc arc;
  CoVector vec;
};
SignedCVector cvector_full(const Triangulation& t, const Triangulation& u, const Arc& uarc);

struct Realization {
  Triangulation u;
  Arc uarc;
  // the intermediate triangulation with c_bar(ubar_arc, ubar) = dim(v)
  Triangulation ubar;
  Arc ubar_arc;
};
Realization realize_dimension_vector(const Triangulation& t, const Arc& v);

}  // namespace ainf
