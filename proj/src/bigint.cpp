#include "groupcx/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupcx {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                               : static_cast<unsigned long long>(v);
  while (u) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
    u >>= 32;
  }
}

BigInt::BigInt(const std::string& decimal) {
  size_t pos = 0;
  int sign = 1;
  if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
    if (decimal[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos >= decimal.size())
    throw std::invalid_argument("BigInt: empty decimal string");
  BigInt acc;
  for (; pos < decimal.size(); ++pos) {
    char c = decimal[pos];
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigInt: bad digit in decimal string");
    acc = acc * BigInt(10) + BigInt(c - '0');
  }
  *this = sign < 0 ? -acc : acc;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a,
                        const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<uint32_t> out(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = int64_t(a[i]) - (i < b.size() ? int64_t(b[i]) : 0) - borrow;
    if (d < 0) {
      d += int64_t(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = out[i + j] + uint64_t(a[i]) * b[j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Binary long division on magnitudes: a = q*b + r with 0 <= r < b.
void BigInt::divmod_mag(const std::vector<uint32_t>& a,
                        const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.assign(a.size(), 0);
  r.clear();
  if (compare_mag(a, b) < 0) {
    r = a;
    q.clear();
    return;
  }
  int total_bits = int(a.size()) * 32;
  for (int bit = total_bits - 1; bit >= 0; --bit) {
    // r = (r << 1) | a.bit(bit)
    uint32_t carry = (a[bit >> 5] >> (bit & 31)) & 1;
    for (size_t i = 0; i < r.size(); ++i) {
      uint32_t next = r[i] >> 31;
      r[i] = (r[i] << 1) | carry;
      carry = next;
    }
    if (carry) r.push_back(carry);
    if (compare_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[bit >> 5] |= uint32_t(1) << (bit & 31);
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int cmp = BigInt::compare_mag(a.mag_, b.mag_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) {
      out.sign_ = a.sign_;
      out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.sign_ == 0 || b.sign_ == 0) return out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  out.trim();
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (a.sign_ == 0) return;
  divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  q.trim();
  r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int cmp = BigInt::compare_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
}

bool BigInt::divisible_by(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  return r.is_zero();
}

BigInt BigInt::nearest_quotient(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  divmod(a, b, q, r);
  if (r.is_zero()) return q;
  // bump q by one when |r| > |b|/2, so |a - q*b| <= |b|/2
  BigInt two_r = r.abs() * BigInt(2);
  if (two_r > b.abs()) {
    int dir = a.sign() * b.sign();
    q += BigInt(dir);
  }
  return q;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> cur = mag_;
  std::string digits;
  // peel 9 decimal digits at a time with single-limb division
  const uint64_t base = 1000000000ULL;
  while (!cur.empty()) {
    uint64_t rem = 0;
    for (size_t i = cur.size(); i-- > 0;) {
      uint64_t v = (rem << 32) | cur[i];
      cur[i] = static_cast<uint32_t>(v / base);
      rem = v % base;
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(char('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out.append(digits.rbegin(), digits.rend());
  return out;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t v = (uint64_t(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= 0x7fffffffffffffffULL;
  return v <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
  uint64_t v = 0;
  if (mag_.size() >= 1) v |= mag_[0];
  if (mag_.size() >= 2) v |= uint64_t(mag_[1]) << 32;
  if (sign_ < 0) return -static_cast<long long>(v);
  return static_cast<long long>(v);
}

BigInt BigInt::binomial(long long n, long long k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt out(1);
  for (long long i = 0; i < k; ++i) {
    out *= BigInt(n - i);
    out = out / BigInt(i + 1);  // exact at every step
  }
  return out;
}

}  // namespace groupcx
