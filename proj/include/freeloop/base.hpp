#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace freeloop {

using Int = boost::multiprecision::cpp_int;

// Coefficient ring: p == 0 means the integers, p > 0 means Z/p.
struct Ring {
  long p = 0;

  bool is_field() const { return p > 0; }

  Int norm(Int v) const {
    if (p == 0) return v;
    Int r = v % p;
    if (r < 0) r += p;
    return r;
  }

  Int neg(const Int& v) const { return norm(-v); }
  Int add(const Int& a, const Int& b) const { return norm(a + b); }
  Int mul(const Int& a, const Int& b) const { return norm(a * b); }

  // Multiplicative inverse mod p (p prime).
  Int inv(const Int& a) const;

  std::string name() const {
    if (p == 0) return "Z";
    return "Z/" + std::to_string(p);
  }

  static Ring parse(const std::string& s);

  bool operator==(const Ring& o) const { return p == o.p; }
};

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// Formal linear combination with string-labelled basis.
using Sum = std::map<std::string, Int>;

inline void add_to(Sum& s, const std::string& k, const Int& v, const Ring& R = Ring{}) {
  auto it = s.find(k);
  if (it == s.end()) {
    Int nv = R.norm(v);
    if (nv != 0) s.emplace(k, nv);
    return;
  }
  it->second = R.norm(it->second + v);
  if (it->second == 0) s.erase(it);
}

inline void add_scaled(Sum& dst, const Sum& src, const Int& c, const Ring& R = Ring{}) {
  if (c == 0) return;
  for (const auto& [k, v] : src) add_to(dst, k, c * v, R);
}

template <typename It>
std::string join(It begin, It end, const std::string& sep) {
  std::ostringstream os;
  bool first = true;
  for (It it = begin; it != end; ++it) {
    if (!first) os << sep;
    os << *it;
    first = false;
  }
  return os.str();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  return join(parts.begin(), parts.end(), sep);
}

[[noreturn]] inline void fail(const std::string& msg) { throw std::runtime_error(msg); }

inline void expect(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

}  // namespace freeloop
