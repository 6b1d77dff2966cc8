#include "mmk/codec/natural.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mmk::codec {

Natural::Natural(std::uint64_t v) {
  if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void Natural::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  Natural r;
  std::size_t i = 0;
  while (i < s.size()) {
    // consume up to 9 digits per step: r = r * 10^k + chunk
    std::uint32_t chunk = 0, scale = 1;
    std::size_t k = 0;
    for (; k < 9 && i < s.size(); ++k, ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("invalid decimal digit");
      chunk = chunk * 10 + static_cast<std::uint32_t>(s[i] - '0');
      scale *= 10;
    }
    r.mul_small(scale);
    r.add_small(chunk);
  }
  return r;
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  Natural tmp = *this;
  std::vector<std::uint32_t> chunks;
  while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(1000000000u));
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::size_t Natural::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

std::uint64_t Natural::to_uint64() const {
  if (!fits_uint64()) throw std::overflow_error("Natural does not fit in 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = carry + limbs_[i];
    if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural Natural::operator*(const Natural& rhs) const {
  if (is_zero() || rhs.is_zero()) return Natural();
  Natural out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t a = limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

Natural& Natural::mul_small(std::uint32_t m) {
  if (m == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural& Natural::add_small(std::uint32_t a) {
  std::uint64_t carry = a;
  for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
    std::uint64_t cur = carry + limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::uint32_t Natural::divmod_small(std::uint32_t d) {
  if (d == 0) throw std::domain_error("division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

Natural Natural::pow(const Natural& base, std::uint64_t exp) {
  Natural result(1);
  Natural b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

int Natural::compare(const Natural& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace mmk::codec
