#include "hqsim/pauli.hpp"

#include <bit>

namespace hqsim {

bool PauliOperator::commutes(const PauliOperator& a, const PauliOperator& b) {
  uint64_t acc = 0;
  for (std::size_t k = 0; k < a.x_.word_count(); ++k) {
    acc ^= a.x_.word(k) & b.z_.word(k);
    acc ^= a.z_.word(k) & b.x_.word(k);
  }
  return (std::popcount(acc) & 1u) == 0;
}

void PauliOperator::mul(const PauliOperator& other) {
  // Per-site i-exponents of W1*W2 in the Hermitian-letter convention:
  //   Y*Z=+iX, X*Y=+iZ, Z*X=+iY and the reversed orders pick -i.
  long plus = 0, minus = 0;
  for (std::size_t k = 0; k < x_.word_count(); ++k) {
    const uint64_t x1 = x_.word(k), z1 = z_.word(k);
    const uint64_t x2 = other.x_.word(k), z2 = other.z_.word(k);
    const uint64_t y1 = x1 & z1;
    const uint64_t only_x1 = x1 & ~z1;
    const uint64_t only_z1 = ~x1 & z1;
    const uint64_t p = (y1 & ~x2 & z2) | (only_x1 & x2 & z2) |
                       (only_z1 & x2 & ~z2);
    const uint64_t m = (y1 & x2 & ~z2) | (only_x1 & ~x2 & z2) |
                       (only_z1 & x2 & z2);
    plus += std::popcount(p);
    minus += std::popcount(m);
    x_.word(k) = x1 ^ x2;
    z_.word(k) = z1 ^ z2;
  }
  phase_ = static_cast<uint8_t>(
      (phase_ + other.phase_ + ((plus - minus) % 4) + 8) & 3);
}

std::string PauliOperator::to_string() const {
  std::string s = negative() ? "-" : "+";
  for (std::size_t i = 0; i < num_sites(); ++i) {
    const bool xb = x(i), zb = z(i);
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

void conjugate_h(PauliOperator& p, std::size_t q) {
  const bool xb = p.x(q), zb = p.z(q);
  if (xb && zb) p.negate();
  p.set_x(q, zb);
  p.set_z(q, xb);
}

void conjugate_s(PauliOperator& p, std::size_t q) {
  const bool xb = p.x(q), zb = p.z(q);
  if (xb && zb) p.negate();
  p.set_z(q, zb ^ xb);
}

void conjugate_cx(PauliOperator& p, std::size_t control, std::size_t target) {
  const bool xc = p.x(control), zc = p.z(control);
  const bool xt = p.x(target), zt = p.z(target);
  if (xc && zt && !(xt ^ zc)) p.negate();
  p.set_x(target, xt ^ xc);
  p.set_z(control, zc ^ zt);
}

}  // namespace hqsim
