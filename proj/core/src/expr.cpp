#include "cubicsurf/expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "cubicsurf/catalog.hpp"

namespace cubicsurf {

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer", start);
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }

  int index() {
    skip_ws();
    const std::size_t start = pos;
    const long long v = integer();
    if (v < 1 || v > 6) throw ParseError("index out of 1..6", start);
    return static_cast<int>(v);
  }

  // distinct sorted indices inside [...]; arity fixed per family
  std::vector<int> index_list(std::size_t open_pos) {
    std::vector<int> idx;
    if (accept(']')) return idx;
    idx.push_back(index());
    while (accept(',')) idx.push_back(index());
    expect(']', "']'");
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1]) throw ParseError("repeated index", open_pos);
    return sorted;
  }

  DivisorClass named(char head) {
    const bool up = accept('^');
    const std::size_t open_pos = pos;
    expect('[', "'['");
    if (head == 'T' && !up) {
      // T[] , T[0] , T[i,j,k] , T[i|j]
      skip_ws();
      if (accept(']')) return named_class({NamedFamily::T_0, {0, 0, 0}});
      const std::size_t first_pos = pos;
      const long long first = integer();
      if (accept('|')) {
        const int j = index();
        expect(']', "']'");
        if (first < 1 || first > 6) throw ParseError("index out of 1..6", first_pos);
        if (first == j) throw ParseError("repeated index", first_pos);
        return named_class({NamedFamily::T_i_up_j, {static_cast<int>(first), j, 0}});
      }
      if (accept(']')) {
        if (first == 0) return named_class({NamedFamily::T_0, {0, 0, 0}});
        throw ParseError("T[i,j,k] needs three indices", first_pos);
      }
      if (first < 1 || first > 6) throw ParseError("index out of 1..6", first_pos);
      expect(',', "','");
      const int j = index();
      expect(',', "','");
      const int k = index();
      expect(']', "']'");
      std::array<int, 3> idx{static_cast<int>(first), j, k};
      std::sort(idx.begin(), idx.end());
      if (idx[0] == idx[1] || idx[1] == idx[2]) throw ParseError("repeated index", first_pos);
      return named_class({NamedFamily::T_ijk, idx});
    }
    if (head == 'T') {  // T^[] , T^[0] , T^[i,j,k]
      skip_ws();
      if (accept(']')) return named_class({NamedFamily::T_up_0, {0, 0, 0}});
      const std::size_t first_pos = pos;
      const long long first = integer();
      if (accept(']')) {
        if (first == 0) return named_class({NamedFamily::T_up_0, {0, 0, 0}});
        throw ParseError("T^[i,j,k] needs three indices", first_pos);
      }
      if (first < 1 || first > 6) throw ParseError("index out of 1..6", first_pos);
      expect(',', "','");
      const int j = index();
      expect(',', "','");
      const int k = index();
      expect(']', "']'");
      std::array<int, 3> idx3{static_cast<int>(first), j, k};
      std::sort(idx3.begin(), idx3.end());
      if (idx3[0] == idx3[1] || idx3[1] == idx3[2]) throw ParseError("repeated index", first_pos);
      return named_class({NamedFamily::T_up_ijk, idx3});
    }
    std::vector<int> idx = index_list(open_pos);
    if (head == 'L') {
      if (up) {
        if (idx.size() == 1) return named_class({NamedFamily::L_up, {idx[0], 0, 0}});
        throw ParseError("L^[...] takes one index", open_pos);
      }
      if (idx.size() == 1) return named_class({NamedFamily::L_i, {idx[0], 0, 0}});
      if (idx.size() == 2) return named_class({NamedFamily::L_ij, {idx[0], idx[1], 0}});
      throw ParseError("L[...] takes one or two indices", open_pos);
    }
    // head == 'C'
    if (up) {
      if (idx.size() == 1) return named_class({NamedFamily::C_up, {idx[0], 0, 0}});
      if (idx.size() == 2) return named_class({NamedFamily::C_up_ij, {idx[0], idx[1], 0}});
      throw ParseError("C^[...] takes one or two indices", open_pos);
    }
    if (idx.size() == 1) return named_class({NamedFamily::C_i, {idx[0], 0, 0}});
    throw ParseError("C[...] takes one index", open_pos);
  }

  DivisorClass atom() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= s.size()) throw ParseError("expected class atom", start);
    const char c = s[pos];
    if (c == 'l') {
      ++pos;
      return ell();
    }
    if (c == 'b') {
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected digit after 'b'", pos);
      const int i = s[pos] - '0';
      if (i < 1 || i > 6) throw ParseError("index out of 1..6", pos);
      ++pos;
      return b(i);
    }
    if (c == 'H') {
      ++pos;
      return hyperplane_class();
    }
    if (c == 'K') {
      ++pos;
      return canonical_class();
    }
    if (c == 'L' || c == 'C' || c == 'T') {
      ++pos;
      return named(c);
    }
    if (c == '[') {
      ++pos;
      DivisorClass d;
      for (std::size_t i = 0; i < 7; ++i) {
        if (i > 0) expect(',', "','");
        const long long v = integer();
        d.c[i] = static_cast<int>(v);
      }
      expect(']', "']'");
      return d;
    }
    throw ParseError("expected class atom", start);
  }

  DivisorClass term() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long long k = integer();
      accept('*');
      return static_cast<int>(k) * atom();
    }
    return atom();
  }

  DivisorClass expr() {
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    DivisorClass d = sign * term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        d += term();
      else if (accept('-'))
        d -= term();
      else
        break;
    }
    if (!eof()) throw ParseError("trailing input", pos);
    return d;
  }
};

}  // namespace

DivisorClass parse_class(std::string_view text) {
  Parser p{text};
  return p.expr();
}

std::string print_class(const DivisorClass& d) {
  if (d.is_zero()) return "0l";
  std::string out;
  static const char* names[7] = {"l", "b1", "b2", "b3", "b4", "b5", "b6"};
  for (std::size_t i = 0; i < 7; ++i) {
    const int v = d.c[i];
    if (v == 0) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? "-" : "+";
    }
    const int a = v < 0 ? -v : v;
    if (a != 1) out += std::to_string(a);
    out += names[i];
  }
  return out;
}

}  // namespace cubicsurf
