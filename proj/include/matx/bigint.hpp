// Arbitrary-precision signed integers, base 2^32 magnitude with sign.
//
// Everything the library computes fits comfortably in 64 bits except
// Bareiss pivots (minors of boundary matrices) and a few checker-side
// products, so the implementation favors small-operand speed over
// asymptotics: schoolbook multiplication and Knuth algorithm D division.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matx {

class BigInt {
 public:
  BigInt() = default;

  BigInt(std::int64_t v) {  // NOLINT: implicit by design
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on INT64_MIN
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
  }

  static BigInt from_string(std::string_view s) {
    BigInt out;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      out.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (neg && !out.is_zero()) out.sign_ = -out.sign_;
    return out;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t m = mag_u64();
    if (sign_ >= 0) return m <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    return m <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
  }

  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    std::uint64_t m = mag_u64();
    if (sign_ >= 0) return static_cast<std::int64_t>(m);
    return static_cast<std::int64_t>(~m + 1);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    // peel decimal digits in 10^9 chunks
    std::vector<std::uint32_t> tmp = mag_;
    std::string out;
    while (!tmp.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = tmp.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      for (int d = 0; d < 9; ++d) {
        out.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt{};
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.mag_ = sub_mag(big.mag_, small.mag_);
      r.sign_ = big.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // floor-free C-style division: quotient truncated toward zero, remainder
  // has the sign of the dividend, a == q*b + r with |r| < |b|.
  static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      q = BigInt{};
      r = a;
      return;
    }
    q = BigInt{};
    r = BigInt{};
    divrem_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.trim();
    r.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divrem(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divrem(a, b, q, r);
    return r;
  }

  // exact division; throws if b does not divide a
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
    return q;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

 private:
  int sign_ = 0;                     // -1, 0, +1
  std::vector<std::uint32_t> mag_;   // little-endian limbs, no leading zeros

  std::uint64_t mag_u64() const {
    std::uint64_t m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return m;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  void mul_small_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      mag_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    sign_ = mag_.empty() ? 0 : 1;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
      borrow = cur < 0;
      if (cur < 0) cur += (1ll << 32);
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth TAOCP vol.2 algorithm D; requires |a| >= |b|, b nonzero.
  static void divrem_mag(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      std::uint64_t rem = 0;
      for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / b[0]);
        rem = cur % b[0];
      }
      r.clear();
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }
    // D1: normalize so the divisor's top limb has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    a = shl_bits(a, shift);
    b = shl_bits(b, shift);
    if (a.size() == 0) a.push_back(0);
    a.push_back(0);  // room for the D3 overflow limb
    const std::size_t n = b.size(), m = a.size() - n - 1;
    q.assign(m + 1, 0);
    const std::uint64_t btop = b[n - 1], bsecond = b[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
      // D3: estimate the quotient limb
      std::uint64_t num = (static_cast<std::uint64_t>(a[j + n]) << 32) | a[j + n - 1];
      std::uint64_t qhat = num / btop, rhat = num % btop;
      while (qhat >> 32 || qhat * bsecond > ((rhat << 32) | a[j + n - 2])) {
        --qhat;
        rhat += btop;
        if (rhat >> 32) break;
      }
      // D4: multiply-subtract
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t prod = qhat * b[i] + carry;
        carry = prod >> 32;
        std::int64_t cur = static_cast<std::int64_t>(a[i + j]) - borrow - static_cast<std::int64_t>(prod & 0xffffffffu);
        borrow = cur < 0;
        if (cur < 0) cur += (1ll << 32);
        a[i + j] = static_cast<std::uint32_t>(cur);
      }
      std::int64_t top = static_cast<std::int64_t>(a[j + n]) - borrow - static_cast<std::int64_t>(carry);
      if (top < 0) {
        // D6: estimate was one too large, add the divisor back
        --qhat;
        std::uint64_t c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t cur = c2 + a[i + j] + b[i];
          a[i + j] = static_cast<std::uint32_t>(cur);
          c2 = cur >> 32;
        }
        top += static_cast<std::int64_t>(c2);
      }
      a[j + n] = static_cast<std::uint32_t>(top);
      q[j] = static_cast<std::uint32_t>(qhat);
    }
    a.resize(n);
    r = shr_bits(a, shift);
  }

  static std::vector<std::uint32_t> shl_bits(const std::vector<std::uint32_t>& v, int s) {
    if (s == 0) return v;
    std::vector<std::uint32_t> r(v.size() + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] |= v[i] << s;
      r[i + 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<std::uint32_t> shr_bits(const std::vector<std::uint32_t>& v, int s) {
    if (s == 0) {
      auto r = v;
      while (!r.empty() && r.back() == 0) r.pop_back();
      return r;
    }
    std::vector<std::uint32_t> r(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] = v[i] >> s;
      if (i + 1 < v.size()) r[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i + 1]) << (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace matx
