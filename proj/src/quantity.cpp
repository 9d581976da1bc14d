#include "maxflow/quantity.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace maxflow {

namespace {

std::atomic<int> g_shift_cap{Quantity::kDefaultShiftCap};

using Int = Quantity::Int;

Int shl(const Int& v, int bits) { return bits == 0 ? v : Int(v << bits); }

}  // namespace

std::string to_string(cap_t v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  return std::string(out.rbegin(), out.rend());
}

cap_t parse_cap(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool neg = false;
  size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("bad integer: " + std::string(text));
  const unsigned __int128 limit = (static_cast<unsigned __int128>(1) << 126);
  unsigned __int128 acc = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + std::string(text));
    acc = acc * 10 + static_cast<unsigned>(c - '0');
    if (acc > limit) throw std::out_of_range("integer out of range: " + std::string(text));
  }
  cap_t v = static_cast<cap_t>(acc);
  return neg ? -v : v;
}

int Quantity::shift_cap() { return g_shift_cap.load(std::memory_order_relaxed); }
void Quantity::set_shift_cap(int cap) { g_shift_cap.store(cap, std::memory_order_relaxed); }

Quantity Quantity::from_cap(cap_t v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  Int m = Int(static_cast<std::uint64_t>(u >> 64));
  m <<= 64;
  m |= Int(static_cast<std::uint64_t>(u));
  if (neg) m = -m;
  return Quantity(std::move(m), 0, true);
}

Quantity Quantity::dyadic(Int mantissa, int shift) {
  Quantity q(std::move(mantissa), shift, true);
  q.normalize();
  return q;
}

Quantity Quantity::pow2(int e) {
  if (e >= 0) return Quantity(Int(1) << e, 0, true);
  Quantity q(Int(1), -e, true);
  q.normalize();
  return q;
}

void Quantity::normalize() {
  if (m_.is_zero()) {
    s_ = 0;
    return;
  }
  if (s_ < 0) {
    m_ <<= -s_;
    s_ = 0;
    return;
  }
  if (s_ > 0) {
    unsigned tz = boost::multiprecision::lsb(m_.sign() < 0 ? Int(-m_) : m_);
    int k = static_cast<int>(std::min<unsigned>(tz, static_cast<unsigned>(s_)));
    if (k > 0) {
      if (m_.sign() < 0) {
        m_ = -m_;
        m_ >>= k;
        m_ = -m_;
      } else {
        m_ >>= k;
      }
      s_ -= k;
    }
  }
  if (s_ > shift_cap())
    throw std::logic_error("Quantity shift cap exceeded (" + std::to_string(s_) + ")");
}

Quantity Quantity::operator-() const { return Quantity(Int(-m_), s_, true); }

Quantity& Quantity::operator+=(const Quantity& o) {
  if (o.m_.is_zero()) return *this;
  if (s_ == o.s_) {
    m_ += o.m_;
  } else if (s_ < o.s_) {
    m_ <<= (o.s_ - s_);
    s_ = o.s_;
    m_ += o.m_;
  } else {
    m_ += shl(o.m_, s_ - o.s_);
  }
  normalize();
  return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
  if (o.m_.is_zero()) return *this;
  if (s_ == o.s_) {
    m_ -= o.m_;
  } else if (s_ < o.s_) {
    m_ <<= (o.s_ - s_);
    s_ = o.s_;
    m_ -= o.m_;
  } else {
    m_ -= shl(o.m_, s_ - o.s_);
  }
  normalize();
  return *this;
}

Quantity& Quantity::operator*=(const Quantity& o) {
  m_ *= o.m_;
  s_ += o.s_;
  normalize();
  return *this;
}

Quantity Quantity::mul_pow2(int e) const {
  Quantity q(m_, s_ - e, true);
  q.normalize();
  return q;
}

std::strong_ordering operator<=>(const Quantity& a, const Quantity& b) {
  int sa = a.m_.sign(), sb = b.m_.sign();
  if (sa != sb) return sa <=> sb;
  int c;
  if (a.s_ == b.s_) {
    c = a.m_.compare(b.m_);
  } else if (a.s_ < b.s_) {
    c = shl(a.m_, b.s_ - a.s_).compare(b.m_);
  } else {
    c = a.m_.compare(shl(b.m_, a.s_ - b.s_));
  }
  return c <=> 0;
}

Quantity Quantity::abs() const { return m_.sign() < 0 ? -*this : *this; }

Quantity Quantity::floor() const {
  if (s_ == 0) return *this;
  if (m_.sign() >= 0) return Quantity(Int(m_ >> s_), 0, true);
  // Canonical form makes the mantissa odd here, so the division is inexact.
  Int t = Int(-m_) >> s_;
  return Quantity(Int(-(t + 1)), 0, true);
}

Quantity Quantity::ceil() const { return -((-*this).floor()); }

Quantity Quantity::mod(const Quantity& q) const {
  MF_REQUIRE(q.sign() > 0, "Quantity::mod requires a positive modulus");
  int s = std::max(s_, q.s_);
  Int a = shl(m_, s - s_);
  Int b = shl(q.m_, s - q.s_);
  Int r = a % b;
  if (r.sign() < 0) r += b;
  return dyadic(std::move(r), s);
}

Quantity Quantity::floor_multiple(const Quantity& q) const { return *this - mod(q); }

bool Quantity::is_pow2() const {
  if (m_.sign() <= 0) return false;
  if (s_ > 0) return m_ == 1;
  return Int(m_ & (m_ - 1)).is_zero();
}

int Quantity::log2_exact() const {
  MF_REQUIRE(is_pow2(), "log2_exact of a non power of two");
  return static_cast<int>(boost::multiprecision::msb(m_)) - s_;
}

int Quantity::floor_log2() const {
  MF_REQUIRE(sign() > 0, "floor_log2 requires a positive value");
  return static_cast<int>(boost::multiprecision::msb(m_)) - s_;
}

Quantity Quantity::ceil_pow2() const {
  MF_REQUIRE(sign() > 0, "ceil_pow2 requires a positive value");
  if (is_pow2()) return *this;
  int b = static_cast<int>(boost::multiprecision::msb(m_));
  return pow2(b + 1 - s_);
}

cap_t Quantity::to_cap() const {
  if (s_ != 0) throw std::logic_error("Quantity is not integral: " + str());
  Int a = m_.sign() < 0 ? Int(-m_) : m_;
  if (boost::multiprecision::msb(a.is_zero() ? Int(1) : a) >= 126)
    throw std::out_of_range("Quantity does not fit the capacity type");
  unsigned __int128 hi = static_cast<std::uint64_t>(a >> 64);
  unsigned __int128 lo = static_cast<std::uint64_t>(a & Int(std::numeric_limits<std::uint64_t>::max()));
  cap_t v = static_cast<cap_t>((hi << 64) | lo);
  return m_.sign() < 0 ? -v : v;
}

double Quantity::to_double() const {
  return std::ldexp(m_.convert_to<double>(), -s_);
}

std::string Quantity::str() const {
  if (s_ == 0) return m_.str();
  Int a = m_.sign() < 0 ? Int(-m_) : m_;
  Int ip = a >> s_;
  Int frac = a - (ip << s_);
  Int five = 1;
  for (int i = 0; i < s_; ++i) five *= 5;
  std::string digits = Int(frac * five).str();
  if (static_cast<int>(digits.size()) < s_)
    digits = std::string(static_cast<size_t>(s_) - digits.size(), '0') + digits;
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  std::string out = (m_.sign() < 0 ? "-" : "") + ip.str();
  if (!digits.empty()) out += "." + digits;
  return out;
}

}  // namespace maxflow
