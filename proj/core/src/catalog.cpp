#include "cubicsurf/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cubicsurf {

namespace {

using ClassSet = std::unordered_set<DivisorClass, DivisorClassHash>;

// Scan every class with the given (self-intersection, degree) signature.
// Bounds: writing s = square, d = degree, the coordinates satisfy
// sum a_i = d - 3*a0 and sum a_i^2 = a0^2 - s, so Cauchy-Schwarz gives
// (d - 3*a0)^2 <= 6 (a0^2 - s) and |a_i| <= sqrt(a0^2 - s).
std::vector<DivisorClass> scan_signature(long long square, long long deg, int a0_lo, int a0_hi,
                                         int box) {
  std::vector<DivisorClass> out;
  DivisorClass d;
  for (int a0 = a0_lo; a0 <= a0_hi; ++a0) {
    d.c[0] = a0;
    const long long rest_sq = static_cast<long long>(a0) * a0 - square;
    const long long rest_sum = deg - 3LL * a0;
    if (rest_sq < 0) continue;
    // depth-first over the six b-coordinates with running sum/square pruning
    std::array<int, 6> a{};
    auto rec = [&](auto&& self, int pos, long long sum, long long sq) -> void {
      if (sq > rest_sq) return;
      if (pos == 6) {
        if (sum == rest_sum && sq == rest_sq) {
          for (int i = 0; i < 6; ++i) d.c[static_cast<std::size_t>(i + 1)] = a[static_cast<std::size_t>(i)];
          out.push_back(d);
        }
        return;
      }
      const int remaining = 6 - pos - 1;
      for (int v = -box; v <= box; ++v) {
        // remaining coordinates can move the sum by at most box each
        if (sum + v - static_cast<long long>(remaining) * box > rest_sum) continue;
        if (sum + v + static_cast<long long>(remaining) * box < rest_sum) continue;
        a[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, sum + v, sq + static_cast<long long>(v) * v);
      }
    };
    rec(rec, 0, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Catalog {
  std::vector<DivisorClass> lines, conics, cubics, roots;
  std::vector<Sixer> sixers;
  ClassSet line_set, conic_set, cubic_set, root_set;
  std::unordered_map<DivisorClass, NamedClassLabel, DivisorClassHash> labels;

  Catalog() {
    // lines: a0 in {0,1,2} from 3a0^2 - 6a0 - 5 <= 0; |a_i| <= sqrt(a0^2+1) <= 3
    lines = scan_signature(-1, 1, 0, 2, 3);
    // conics: a0 in {1,2,3}; |a_i| <= a0 <= 3
    conics = scan_signature(0, 2, 1, 3, 3);
    // roots: a0 in [-2,2]; |a_i| <= sqrt(a0^2+2) <= 3
    roots = scan_signature(-2, 0, -2, 2, 3);
    // cubics: a0 in [1,5]; |a_i| <= sqrt(24) < 5.  Every (1,3)-class is a
    // twisted cubic class (D -> H - D is a bijection onto the roots).
    cubics = scan_signature(1, 3, 1, 5, 5);

    line_set = ClassSet(lines.begin(), lines.end());
    conic_set = ClassSet(conics.begin(), conics.end());
    cubic_set = ClassSet(cubics.begin(), cubics.end());
    root_set = ClassSet(roots.begin(), roots.end());

    build_sixers();
    build_labels();
  }

  void build_sixers() {
    std::array<DivisorClass, 6> cur;
    auto rec = [&](auto&& self, std::size_t start, std::size_t have) -> void {
      if (have == 6) {
        Sixer s;
        s.members = cur;
        s.normalize();
        sixers.push_back(s);
        return;
      }
      for (std::size_t i = start; i < lines.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < have; ++j)
          if (dot(lines[i], cur[j]) != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur[have] = lines[i];
        self(self, i + 1, have + 1);
      }
    };
    rec(rec, 0, 0);
    std::sort(sixers.begin(), sixers.end());
  }

  void build_labels() {
    auto put = [&](NamedFamily f, std::array<int, 3> idx) {
      NamedClassLabel lab{f, idx};
      labels.emplace(named_class(lab), lab);
    };
    for (int i = 1; i <= 6; ++i) {
      put(NamedFamily::L_i, {i, 0, 0});
      put(NamedFamily::L_up, {i, 0, 0});
      put(NamedFamily::C_i, {i, 0, 0});
      put(NamedFamily::C_up, {i, 0, 0});
      for (int j = 1; j <= 6; ++j) {
        if (j == i) continue;
        put(NamedFamily::T_i_up_j, {i, j, 0});
        if (j > i) {
          put(NamedFamily::L_ij, {i, j, 0});
          put(NamedFamily::C_up_ij, {i, j, 0});
          for (int k = j + 1; k <= 6; ++k) {
            put(NamedFamily::T_ijk, {i, j, k});
            put(NamedFamily::T_up_ijk, {i, j, k});
          }
        }
      }
    }
    put(NamedFamily::T_0, {0, 0, 0});
    put(NamedFamily::T_up_0, {0, 0, 0});
  }
};

const Catalog& catalog() {
  static const Catalog c;
  return c;
}

void check_indices(const NamedClassLabel& label) {
  const int n = label.arity();
  for (int i = 0; i < n; ++i) {
    const int v = label.idx[static_cast<std::size_t>(i)];
    if (v < 1 || v > 6) throw std::invalid_argument("named class index out of 1..6");
    for (int j = 0; j < i; ++j)
      if (label.idx[static_cast<std::size_t>(j)] == v)
        throw std::invalid_argument("named class indices must be distinct");
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::line: return "line";
    case Family::conic: return "conic";
    case Family::cubic: return "cubic";
    case Family::root: return "root";
    case Family::exceptional: return "exceptional";
    case Family::none: return "none";
  }
  return "none";
}

int NamedClassLabel::arity() const {
  switch (family) {
    case NamedFamily::T_0:
    case NamedFamily::T_up_0: return 0;
    case NamedFamily::L_i:
    case NamedFamily::L_up:
    case NamedFamily::C_i:
    case NamedFamily::C_up: return 1;
    case NamedFamily::L_ij:
    case NamedFamily::C_up_ij:
    case NamedFamily::T_i_up_j: return 2;
    case NamedFamily::T_ijk:
    case NamedFamily::T_up_ijk: return 3;
  }
  return 0;
}

std::string NamedClassLabel::str() const {
  auto i1 = std::to_string(idx[0]);
  auto i2 = std::to_string(idx[1]);
  auto i3 = std::to_string(idx[2]);
  switch (family) {
    case NamedFamily::L_i: return "L[" + i1 + "]";
    case NamedFamily::L_ij: return "L[" + i1 + "," + i2 + "]";
    case NamedFamily::L_up: return "L^[" + i1 + "]";
    case NamedFamily::C_i: return "C[" + i1 + "]";
    case NamedFamily::C_up_ij: return "C^[" + i1 + "," + i2 + "]";
    case NamedFamily::C_up: return "C^[" + i1 + "]";
    case NamedFamily::T_0: return "T[]";
    case NamedFamily::T_ijk: return "T[" + i1 + "," + i2 + "," + i3 + "]";
    case NamedFamily::T_i_up_j: return "T[" + i1 + "|" + i2 + "]";
    case NamedFamily::T_up_ijk: return "T^[" + i1 + "," + i2 + "," + i3 + "]";
    case NamedFamily::T_up_0: return "T^[]";
  }
  return "?";
}

DivisorClass named_class(const NamedClassLabel& label) {
  check_indices(label);
  const int i = label.idx[0], j = label.idx[1], k = label.idx[2];
  DivisorClass d;
  auto bput = [&](int pos, int v) { d.c[static_cast<std::size_t>(pos)] = v; };
  switch (label.family) {
    case NamedFamily::L_i:
      bput(i, 1);
      return d;
    case NamedFamily::L_ij:
      d.c[0] = 1;
      bput(i, -1);
      bput(j, -1);
      return d;
    case NamedFamily::L_up:
      d.c[0] = 2;
      for (int t = 1; t <= 6; ++t)
        if (t != i) bput(t, -1);
      return d;
    case NamedFamily::C_i:
      d.c[0] = 1;
      bput(i, -1);
      return d;
    case NamedFamily::C_up_ij:
      d.c[0] = 2;
      for (int t = 1; t <= 6; ++t)
        if (t != i && t != j) bput(t, -1);
      return d;
    case NamedFamily::C_up:
      d.c[0] = 3;
      for (int t = 1; t <= 6; ++t) bput(t, t == i ? -2 : -1);
      return d;
    case NamedFamily::T_0:
      d.c[0] = 1;
      return d;
    case NamedFamily::T_ijk:
      d.c[0] = 2;
      bput(i, -1);
      bput(j, -1);
      bput(k, -1);
      return d;
    case NamedFamily::T_i_up_j:
      d.c[0] = 3;
      for (int t = 1; t <= 6; ++t) {
        if (t == i)
          bput(t, -2);
        else if (t != j)
          bput(t, -1);
      }
      return d;
    case NamedFamily::T_up_ijk:
      d.c[0] = 4;
      for (int t = 1; t <= 6; ++t) bput(t, (t == i || t == j || t == k) ? -1 : -2);
      return d;
    case NamedFamily::T_up_0:
      d.c[0] = 5;
      for (int t = 1; t <= 6; ++t) bput(t, -2);
      return d;
  }
  throw std::invalid_argument("unknown named class family");
}

std::optional<NamedClassLabel> label_of(const DivisorClass& d) {
  const auto& m = catalog().labels;
  auto it = m.find(d);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

void Sixer::normalize() { std::sort(members.begin(), members.end()); }

bool Sixer::valid() const {
  for (std::size_t i = 0; i < 6; ++i) {
    if (self_int(members[i]) != -1 || degree(members[i]) != 1) return false;
    for (std::size_t j = i + 1; j < 6; ++j)
      if (dot(members[i], members[j]) != 0) return false;
  }
  return true;
}

const std::vector<DivisorClass>& lines() { return catalog().lines; }
const std::vector<DivisorClass>& conics() { return catalog().conics; }
const std::vector<DivisorClass>& cubics() { return catalog().cubics; }
const std::vector<DivisorClass>& roots() { return catalog().roots; }
const std::vector<DivisorClass>& exceptional_vectors() { return catalog().lines; }
const std::vector<Sixer>& sixers() { return catalog().sixers; }

bool is_line(const DivisorClass& d) { return catalog().line_set.count(d) != 0; }
bool is_conic(const DivisorClass& d) { return catalog().conic_set.count(d) != 0; }
bool is_cubic(const DivisorClass& d) { return catalog().cubic_set.count(d) != 0; }
bool is_root(const DivisorClass& d) { return catalog().root_set.count(d) != 0; }

std::vector<DivisorClass> rational_classes(int d) { return rational_classes(d, 2 * d); }

std::vector<DivisorClass> rational_classes(int d, int a0_cap) {
  if (d <= 0) throw std::invalid_argument("rational_classes needs d >= 1");
  if (d > 8) throw std::invalid_argument("rational_classes supports d <= 8 only");
  if (d == 1) return lines();
  if (d == 2) return conics();

  const auto& ls = lines();
  ClassSet out;
  // a0*l - sum m_i b_i with sorted m, then close under permutations
  const int a0_lo = (d + 2) / 3;
  for (int a0 = a0_lo; a0 <= a0_cap; ++a0) {
    std::array<int, 6> m{};
    auto rec = [&](auto&& self, int pos, int sum, int cap) -> void {
      if (pos == 6) {
        if (3 * a0 - sum != d) return;
        DivisorClass cand;
        cand.c[0] = a0;
        for (int i = 0; i < 6; ++i) cand.c[static_cast<std::size_t>(i + 1)] = -m[static_cast<std::size_t>(i)];
        if (self_int(cand) != d - 2 || self_int(cand) <= 0) return;
        std::array<int, 6> perm = m;
        // m is non-increasing, so start permutations from the sorted ascending order
        std::sort(perm.begin(), perm.end());
        do {
          DivisorClass v;
          v.c[0] = a0;
          for (int i = 0; i < 6; ++i) v.c[static_cast<std::size_t>(i + 1)] = -perm[static_cast<std::size_t>(i)];
          bool eff = true;
          for (const auto& L : ls)
            if (dot(v, L) < 0) {
              eff = false;
              break;
            }
          if (eff) out.insert(v);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return;
      }
      for (int v = 0; v <= cap; ++v) {
        if (sum + v > 3 * a0) break;
        m[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, sum + v, v);
      }
    };
    rec(rec, 0, 0, a0);
  }
  std::vector<DivisorClass> res(out.begin(), out.end());
  std::sort(res.begin(), res.end());
  return res;
}

Family classify_membership(const DivisorClass& d) {
  const long long s = self_int(d), deg = degree(d);
  if (s == -1 && deg == 1 && is_line(d)) return Family::line;
  if (s == 0 && deg == 2 && is_conic(d)) return Family::conic;
  if (s == 1 && deg == 3 && is_cubic(d)) return Family::cubic;
  if (s == -2 && deg == 0 && is_root(d)) return Family::root;
  return Family::none;
}

DivisorClass companion(const DivisorClass& d) {
  switch (classify_membership(d)) {
    case Family::line:
    case Family::conic: return hyperplane_class() - d;
    case Family::cubic: return 2 * hyperplane_class() - d;
    default: throw std::domain_error("companion: class is not a line, conic or cubic");
  }
}

}  // namespace cubicsurf
