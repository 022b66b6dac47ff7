#include "cubicsurf/weyl.hpp"

#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace cubicsurf {

namespace {

constexpr char kCacheFileName[] = "weyl-e6-closure-v1.bin";
constexpr char kCacheMagic[8] = {'C', 'S', 'W', 'E', '6', 'v', '1', '\n'};
constexpr std::size_t kGroupOrder = 51840;

std::string g_cache_dir;  // set before first weyl_group() use
std::mutex g_cache_dir_mutex;

std::vector<WeylElement> compute_group() {
  std::vector<WeylElement> gens;
  for (const auto& alpha : simple_roots()) gens.push_back(WeylElement::reflection(alpha));

  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  seen.insert(WeylElement::identity());
  queue.push_back(WeylElement::identity());
  while (!queue.empty()) {
    WeylElement g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElement h = s.compose(g);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  return out;
}

}  // namespace

WeylElement WeylElement::identity() {
  WeylElement w;
  for (int i = 0; i < 7; ++i) w.m[static_cast<std::size_t>(i * 7 + i)] = 1;
  return w;
}

WeylElement WeylElement::reflection(const DivisorClass& root) {
  if (self_int(root) != -2) throw std::domain_error("reflection: not a root (v.v != -2)");
  // s_v = I + v (Gv)^T where G = diag(1,-1,...,-1)
  WeylElement w = identity();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      const int gv = (j == 0 ? root.c[0] : -root.c[static_cast<std::size_t>(j)]);
      const int entry = w.m[static_cast<std::size_t>(i * 7 + j)] + root.c[static_cast<std::size_t>(i)] * gv;
      if (entry < -128 || entry > 127) throw std::overflow_error("reflection entry out of int8 range");
      w.m[static_cast<std::size_t>(i * 7 + j)] = static_cast<std::int8_t>(entry);
    }
  }
  return w;
}

DivisorClass WeylElement::apply(const DivisorClass& d) const {
  DivisorClass r;
  for (int i = 0; i < 7; ++i) {
    int s = 0;
    for (int j = 0; j < 7; ++j) s += m[static_cast<std::size_t>(i * 7 + j)] * d.c[static_cast<std::size_t>(j)];
    r.c[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement r;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      int s = 0;
      for (int k = 0; k < 7; ++k)
        s += m[static_cast<std::size_t>(i * 7 + k)] * other.m[static_cast<std::size_t>(k * 7 + j)];
      if (s < -128 || s > 127) throw std::overflow_error("composition entry out of int8 range");
      r.m[static_cast<std::size_t>(i * 7 + j)] = static_cast<std::int8_t>(s);
    }
  return r;
}

bool WeylElement::preserves(const IntersectionForm& form) const {
  // M^T G M == G
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      long long s = 0;
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l)
          s += static_cast<long long>(m[static_cast<std::size_t>(k * 7 + i)]) * form.gram[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] *
               m[static_cast<std::size_t>(l * 7 + j)];
      if (s != form.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    }
  return true;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int8_t v : w.m) {
    h ^= static_cast<std::uint8_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

DivisorClass reflect(const DivisorClass& alpha, const DivisorClass& d) {
  if (self_int(alpha) != -2) throw std::domain_error("reflect: alpha is not a root");
  return d + static_cast<int>(dot(d, alpha)) * alpha;
}

const std::array<DivisorClass, 6>& simple_roots() {
  static const std::array<DivisorClass, 6> roots = {
      DivisorClass(1, -1, -1, -1, 0, 0, 0),  // l - b1 - b2 - b3
      DivisorClass(0, 1, -1, 0, 0, 0, 0),    // b1 - b2
      DivisorClass(0, 0, 1, -1, 0, 0, 0),
      DivisorClass(0, 0, 0, 1, -1, 0, 0),
      DivisorClass(0, 0, 0, 0, 1, -1, 0),
      DivisorClass(0, 0, 0, 0, 0, 1, -1),
  };
  return roots;
}

void set_group_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
  g_cache_dir = dir;
}

bool store_group_cache_file(const std::string& path, const std::vector<WeylElement>& elems) {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) return false;
  outf.write(kCacheMagic, 8);
  const std::uint32_t count = static_cast<std::uint32_t>(elems.size());
  outf.write(reinterpret_cast<const char*>(&count), sizeof count);
  for (const auto& e : elems) outf.write(reinterpret_cast<const char*>(e.m.data()), 49);
  return outf.good();
}

std::vector<WeylElement> load_group_cache_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kCacheMagic, 8) != 0) return {};
  std::uint32_t count = 0;
  if (!in.read(reinterpret_cast<char*>(&count), sizeof count) || count != kGroupOrder) return {};
  std::vector<WeylElement> elems(count);
  for (auto& e : elems)
    if (!in.read(reinterpret_cast<char*>(e.m.data()), 49)) return {};
  const auto form = IntersectionForm::standard();
  const auto K = canonical_class();
  for (const auto& e : elems)
    if (!e.preserves(form) || e.apply(K) != K) return {};
  return elems;
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::string dir;
    {
      std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
      dir = g_cache_dir;
    }
    if (!dir.empty()) {
      const std::string path = dir + "/" + kCacheFileName;
      std::vector<WeylElement> elems = load_group_cache_file(path);
      if (!elems.empty()) return elems;
      elems = compute_group();
      store_group_cache_file(path, elems);  // best effort
      return elems;
    }
    return compute_group();
  }();
  return group;
}

std::vector<DivisorClass> orbit(const DivisorClass& d) {
  std::unordered_set<DivisorClass, DivisorClassHash> seen{d};
  std::deque<DivisorClass> queue{d};
  while (!queue.empty()) {
    DivisorClass cur = queue.front();
    queue.pop_front();
    for (const auto& alpha : simple_roots()) {
      DivisorClass next = reflect(alpha, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<DivisorClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sixer> sixer_orbit(const Sixer& start) {
  auto act = [](const DivisorClass& alpha, const Sixer& s) {
    Sixer r;
    for (std::size_t i = 0; i < 6; ++i) r.members[i] = reflect(alpha, s.members[i]);
    r.normalize();
    return r;
  };
  std::set<Sixer> seen{start};
  std::deque<Sixer> queue{start};
  while (!queue.empty()) {
    Sixer cur = queue.front();
    queue.pop_front();
    for (const auto& alpha : simple_roots()) {
      Sixer next = act(alpha, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<Sixer>(seen.begin(), seen.end());
}

DivisorClass sixer_root(const Sixer& s) {
  if (!s.valid()) throw std::domain_error("sixer_root: not a valid sixer");
  // The published map reads (v_1..v_6) -> (-2 kappa - sum v_i)/3, which is
  // not integral on the standard sixer; the + sign is forced by integrality
  // (roots come in +- pairs).
  DivisorClass num = -2 * hyperplane_class();
  for (const auto& v : s.members) num += v;
  DivisorClass w;
  for (std::size_t i = 0; i < 7; ++i) {
    if (num.c[i] % 3 != 0) throw std::logic_error("sixer_root: non-integral quotient");
    w.c[i] = num.c[i] / 3;
  }
  if (!is_root(w)) throw std::logic_error("sixer_root: result is not a root");
  return w;
}

}  // namespace cubicsurf
