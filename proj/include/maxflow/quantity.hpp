#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxflow/types.hpp"

namespace maxflow {

// Exact dyadic rational: mantissa / 2^shift, kept canonical
// (mantissa odd, or shift == 0).
class Quantity {
 public:
  using Int = boost::multiprecision::cpp_int;

  static constexpr int kDefaultShiftCap = 256;

  Quantity() = default;
  template <class I>
    requires std::is_integral_v<I> || std::is_same_v<I, cap_t>
  Quantity(I v) {  // NOLINT(implicit)
    if constexpr (sizeof(I) > 8) {
      *this = from_cap(static_cast<cap_t>(v));
    } else {
      m_ = static_cast<long long>(v);
    }
  }
  static Quantity from_cap(cap_t v);
  static Quantity dyadic(Int mantissa, int shift);
  // 2^e for any integer e.
  static Quantity pow2(int e);

  const Int& mantissa() const { return m_; }
  int shift() const { return s_; }

  Quantity operator-() const;
  Quantity& operator+=(const Quantity& o);
  Quantity& operator-=(const Quantity& o);
  Quantity& operator*=(const Quantity& o);
  friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
  friend Quantity operator*(Quantity a, const Quantity& b) { return a *= b; }

  // Multiply by 2^e (e may be negative).
  Quantity mul_pow2(int e) const;
  Quantity half() const { return mul_pow2(-1); }

  friend bool operator==(const Quantity& a, const Quantity& b) {
    return a.s_ == b.s_ && a.m_ == b.m_;
  }
  friend std::strong_ordering operator<=>(const Quantity& a, const Quantity& b);

  int sign() const { return m_.sign(); }
  bool is_zero() const { return m_.is_zero(); }
  bool is_integer() const { return s_ == 0; }
  Quantity abs() const;

  Quantity floor() const;
  Quantity ceil() const;
  // Mod(a, q) = a - q * floor(a / q), for q > 0. Result lies in [0, q).
  Quantity mod(const Quantity& q) const;
  // Largest multiple of q that is <= *this.
  Quantity floor_multiple(const Quantity& q) const;
  // Least power of two >= *this (requires *this > 0).
  Quantity ceil_pow2() const;
  bool is_pow2() const;
  // log2 of a power of two.
  int log2_exact() const;
  // Largest t with 2^t <= *this (requires *this > 0).
  int floor_log2() const;

  cap_t to_cap() const;  // throws unless integral and in range
  double to_double() const;
  // Exact decimal expansion (dyadic rationals always terminate).
  std::string str() const;

  static int shift_cap();
  static void set_shift_cap(int cap);

 private:
  Quantity(Int m, int s, bool) : m_(std::move(m)), s_(s) {}
  void normalize();

  Int m_ = 0;
  int s_ = 0;
};

inline Quantity min(const Quantity& a, const Quantity& b) { return b < a ? b : a; }
inline Quantity max(const Quantity& a, const Quantity& b) { return a < b ? b : a; }

}  // namespace maxflow
