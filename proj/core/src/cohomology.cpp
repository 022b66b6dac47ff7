#include "cubicsurf/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cubicsurf/catalog.hpp"

namespace cubicsurf {

long long euler_char(const DivisorClass& d) {
  const long long n = self_int(d) + degree(d);
  assert(n % 2 == 0);
  return n / 2 + 1;
}

long long genus(const DivisorClass& d) {
  const long long n = self_int(d) - degree(d);
  assert(n % 2 == 0);
  return n / 2 + 1;
}

bool is_nef(const DivisorClass& d) {
  for (const auto& L : lines())
    if (dot(d, L) < 0) return false;
  return true;
}

std::optional<FixedMoving> fixed_moving(const DivisorClass& d, StripOrder order) {
  const auto& ls = lines();  // sorted ascending
  FixedMoving fm;
  DivisorClass cur = d;
  for (;;) {
    if (degree(cur) < 0) return std::nullopt;
    const DivisorClass* neg = nullptr;
    long long mult = 0;
    if (order == StripOrder::lex_smallest) {
      for (const auto& L : ls) {
        const long long v = dot(cur, L);
        if (v < 0) {
          neg = &L;
          mult = -v;
          break;
        }
      }
    } else {
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        const long long v = dot(cur, *it);
        if (v < 0) {
          neg = &*it;
          mult = -v;
          break;
        }
      }
    }
    if (neg == nullptr) break;  // cur is nef
    // D.L = -k forces L into the base locus k times; strip the batch at once
    cur -= static_cast<int>(mult) * (*neg);
    for (long long i = 0; i < mult; ++i) fm.fixed_lines.push_back(*neg);
  }
  fm.moving = cur;
  std::sort(fm.fixed_lines.begin(), fm.fixed_lines.end());
  return fm;
}

long long h0(const DivisorClass& d) {
  // allocation-free strip in lex order; only the count matters here
  DivisorClass cur = d;
  const auto& ls = lines();
  for (;;) {
    if (degree(cur) < 0) return 0;
    const DivisorClass* neg = nullptr;
    for (const auto& L : ls) {
      const long long v = dot(cur, L);
      if (v < 0) {
        neg = &L;
        cur -= static_cast<int>(-v) * L;
        break;
      }
    }
    if (neg == nullptr) return euler_char(cur);
  }
}

Positivity positivity(const DivisorClass& d) {
  Positivity p;
  p.nef = true;
  p.ample = self_int(d) > 0;
  for (const auto& L : lines()) {
    const long long v = dot(d, L);
    if (v < 0) p.nef = false;
    if (v <= 0) p.ample = false;
    if (!p.nef && !p.ample) break;
  }
  p.effective = h0(d) > 0;
  return p;
}

CohomologyTriple h_vector(const DivisorClass& d) {
  CohomologyTriple t;
  t.h0 = h0(d);
  t.h2 = h0(-hyperplane_class() - d);
  t.h1 = t.h0 + t.h2 - euler_char(d);
  if (t.h1 < 0) throw std::logic_error("h_vector: negative h1, section-count algorithm is broken");
  return t;
}

}  // namespace cubicsurf
