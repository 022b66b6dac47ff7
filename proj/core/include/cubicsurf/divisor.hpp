#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>

namespace cubicsurf {

/// A divisor class on the cubic surface, written in the blow-up basis:
/// coords[0]*l + coords[1]*b1 + ... + coords[6]*b6, where l is the pullback
/// of a plane line and b1..b6 are the exceptional divisors.  The Picard
/// lattice is all of Z^7 with the pairing l.l = 1, bi.bi = -1, mixed = 0.
struct DivisorClass {
  std::array<int, 7> c{};

  constexpr DivisorClass() = default;
  constexpr explicit DivisorClass(const std::array<int, 7>& a) : c(a) {}
  constexpr DivisorClass(int l, int b1, int b2, int b3, int b4, int b5, int b6)
      : c{l, b1, b2, b3, b4, b5, b6} {}

  constexpr int& operator[](std::size_t i) { return c[i]; }
  constexpr int operator[](std::size_t i) const { return c[i]; }

  constexpr DivisorClass& operator+=(const DivisorClass& o) {
    for (std::size_t i = 0; i < 7; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr DivisorClass& operator-=(const DivisorClass& o) {
    for (std::size_t i = 0; i < 7; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend constexpr DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend constexpr DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend constexpr DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r;
    for (std::size_t i = 0; i < 7; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend constexpr DivisorClass operator*(int k, DivisorClass a) {
    for (std::size_t i = 0; i < 7; ++i) a.c[i] *= k;
    return a;
  }

  friend constexpr bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  constexpr bool is_zero() const {
    for (int v : c)
      if (v != 0) return false;
    return true;
  }
};

constexpr DivisorClass ell() { return DivisorClass(1, 0, 0, 0, 0, 0, 0); }

constexpr DivisorClass b(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("exceptional index must be in 1..6");
  DivisorClass d;
  d.c[static_cast<std::size_t>(i)] = 1;
  return d;
}

/// Hyperplane class H = 3l - b1 - ... - b6; the canonical class is K = -H.
constexpr DivisorClass hyperplane_class() { return DivisorClass(3, -1, -1, -1, -1, -1, -1); }
constexpr DivisorClass canonical_class() { return -hyperplane_class(); }

/// Intersection pairing: fixed Gram matrix diag(1,-1,-1,-1,-1,-1,-1),
/// signature (1,6).  Accumulation in 64-bit; coordinates stay tiny
/// (|coord| <= 20) for everything the classification touches.
constexpr long long dot(const DivisorClass& a, const DivisorClass& b) {
  long long s = static_cast<long long>(a.c[0]) * b.c[0];
  for (std::size_t i = 1; i < 7; ++i) s -= static_cast<long long>(a.c[i]) * b.c[i];
  return s;
}

constexpr long long self_int(const DivisorClass& d) { return dot(d, d); }

/// degree(D) = D.H = 3*c0 + c1 + ... + c6.
constexpr long long degree(const DivisorClass& d) {
  long long s = 3LL * d.c[0];
  for (std::size_t i = 1; i < 7; ++i) s += d.c[i];
  return s;
}

/// Integer linear combination; the empty sum is the zero class.
constexpr DivisorClass combine(std::span<const std::pair<int, DivisorClass>> terms) {
  DivisorClass r;
  for (const auto& [k, d] : terms) r += k * d;
  return r;
}

inline DivisorClass combine(std::initializer_list<std::pair<int, DivisorClass>> terms) {
  return combine(std::span<const std::pair<int, DivisorClass>>(terms.begin(), terms.size()));
}

/// Explicit symmetric bilinear form.  The standard instance is what `dot`
/// hardcodes; the verification suite also accepts a (deliberately) corrupted
/// form as a negative control.
struct IntersectionForm {
  std::array<std::array<int, 7>, 7> gram{};

  static constexpr IntersectionForm standard() {
    IntersectionForm f;
    f.gram[0][0] = 1;
    for (std::size_t i = 1; i < 7; ++i) f.gram[i][i] = -1;
    return f;
  }

  constexpr long long pair(const DivisorClass& a, const DivisorClass& b) const {
    long long s = 0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        s += static_cast<long long>(a.c[i]) * gram[i][j] * b.c[j];
    return s;
  }

  friend constexpr bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : d.c) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cubicsurf
