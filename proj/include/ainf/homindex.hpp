#pragma once

#include "ainf/triangulation.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ainf {

Arc suspend(const ZModel& z, const Arc& a);
Arc unsuspend(const ZModel& z, const Arc& a);

bool hom_nonzero(const ZModel& z, const Arc& x, const Arc& y);
bool ext_nonzero(const ZModel& z, const Arc& x, const Arc& y);

// element of the split Grothendieck group of a triangulation; zeros are never stored
class KVector {
 public:
  KVector() = default;
  static KVector unit(const Arc& a) {
    KVector v;
    v.add(a, 1);
    return v;
  }

  void add(const Arc& a, i64 c);
  void add(const KVector& o, i64 scale = 1);
  i64 at(const Arc& a) const;
  bool empty() const { return terms_.empty(); }
  const std::map<Arc, i64>& terms() const { return terms_; }

  KVector operator-() const;
  friend KVector operator+(KVector a, const KVector& b) {
    a.add(b);
    return a;
  }
  friend KVector operator-(KVector a, const KVector& b) {
    a.add(b, -1);
    return a;
  }
  bool operator==(const KVector&) const = default;

 private:
  std::map<Arc, i64> terms_;
};

std::string to_string(const KVector& v);

struct ZigZagPath {
  Vertex e, f;
  std::vector<Vertex> vertices;
};

inline constexpr std::size_t kDefaultStepCap = 1'000'000;

ZigZagPath zigzag(const Triangulation& t, Vertex e, Vertex f, std::size_t step_cap = kDefaultStepCap);

KVector index(const Triangulation& t, const Arc& a);
KVector index(const Triangulation& t, const KVector& s);
KVector index_bar(const Triangulation& t, const Arc& a);
KVector index_bar(const Triangulation& t, const KVector& s);

struct DualityFailure {
  std::string direction;
  Arc start;
  KVector middle;
  KVector result;
};

struct DualityReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<DualityFailure> failures;
};

// ind_T . ind_bar_U = id on the T window, ind_bar_U . ind_T = id on the U window
DualityReport check_duality(const Triangulation& t, const Triangulation& u,
                            const std::vector<Arc>& t_window, const std::vector<Arc>& u_window);

}  // namespace ainf
