#pragma once

// The fixed, globally ordered variable universe and sparse power products
// over it. The order a0 < ... < a8 < x1 < x2 < y1 < y2 < q0 < q1 < q2 <
// alpha < beta < gamma < delta < xi is baked in; all canonical-form and
// leading-term questions refer to it.

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binform {

enum class Var : std::uint8_t {
  a0 = 0, a1, a2, a3, a4, a5, a6, a7, a8,
  x1, x2, y1, y2,
  q0, q1, q2,
  alpha, beta, gamma, delta, xi,
};

inline constexpr int kVarCount = 21;
inline constexpr int kAVarCount = 9;   // a0..a8, so generic d-ics need d <= 8
inline constexpr int kMonoBytes = 24;  // kVarCount rounded up, tail always 0

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8",
    "x1", "x2", "y1", "y2",
    "q0", "q1", "q2",
    "alpha", "beta", "gamma", "delta", "xi"};

inline Var a_var(int i) {
  if (i < 0 || i >= kAVarCount) throw std::out_of_range("a-variable index");
  return static_cast<Var>(i);
}

inline std::string_view var_name(Var v) {
  return kVarNames[static_cast<int>(v)];
}

// Returns kVarCount when the name is not a variable.
inline int var_index_of(std::string_view name) {
  for (int i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == name) return i;
  return kVarCount;
}

struct Monomial {
  std::array<std::uint8_t, kMonoBytes> e{};

  int exponent(Var v) const { return e[static_cast<int>(v)]; }

  void set_exponent(Var v, int k) {
    if (k < 0 || k > 255) throw std::overflow_error("monomial exponent out of range");
    e[static_cast<int>(v)] = static_cast<std::uint8_t>(k);
  }

  int degree() const {
    int d = 0;
    for (int i = 0; i < kVarCount; ++i) d += e[i];
    return d;
  }

  template <class Pred>
  int degree_if(Pred keep) const {
    int d = 0;
    for (int i = 0; i < kVarCount; ++i)
      if (keep(static_cast<Var>(i))) d += e[i];
    return d;
  }

  bool is_one() const {
    for (int i = 0; i < kVarCount; ++i)
      if (e[i]) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    unsigned wrapped = 0;
    for (int i = 0; i < kVarCount; ++i) {
      unsigned s = unsigned(e[i]) + unsigned(o.e[i]);
      wrapped |= s >> 8;
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    if (wrapped) throw std::overflow_error("monomial exponent overflow");
    return r;
  }

  bool operator==(const Monomial& o) const {
    return std::memcmp(e.data(), o.e.data(), kMonoBytes) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Graded-lexicographic: compare total degree, then the exponent vector in
// universe order (earlier variable with larger exponent wins).
inline bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::memcmp(a.e.data(), b.e.data(), kVarCount) < 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMonoBytes; i += 8) {
      std::uint64_t w;
      std::memcpy(&w, m.e.data() + i, 8);
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Monomial monomial_one() { return Monomial{}; }

inline Monomial monomial_of(Var v, int k = 1) {
  Monomial m;
  m.set_exponent(v, k);
  return m;
}

}  // namespace binform
