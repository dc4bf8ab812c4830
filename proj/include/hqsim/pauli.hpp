#pragma once

#include <cstdint>
#include <string>

#include "hqsim/bitvec.hpp"

namespace hqsim {

/// An L-site Pauli string stored as X/Z bit planes plus a phase.
///
/// The operator is i^phase * prod_j W_j with W_j in {I, X, Y, Z} picked by
/// (x_j, z_j). Stored generators keep phase in {0, 2} (real sign); the full
/// mod-4 accumulator only shows up transiently during multiplication.
class PauliOperator {
public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_sites)
      : x_(num_sites), z_(num_sites) {}

  std::size_t num_sites() const { return x_.size(); }

  bool x(std::size_t site) const { return x_.get(site); }
  bool z(std::size_t site) const { return z_.get(site); }
  void set_x(std::size_t site, bool v) { x_.set(site, v); }
  void set_z(std::size_t site, bool v) { z_.set(site, v); }

  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }
  BitVector& x_bits() { return x_; }
  BitVector& z_bits() { return z_; }

  /// Phase exponent of i, mod 4. Stored generators are Hermitian: 0 or 2.
  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t p) { phase_ = p & 3; }

  /// Sign of a Hermitian operator: +1 -> false, -1 -> true.
  bool negative() const { return phase_ == 2; }
  void negate() { phase_ = (phase_ + 2) & 3; }

  bool is_identity_bits() const { return !x_.any() && !z_.any(); }

  /// True when the two strings commute (symplectic product is even).
  static bool commutes(const PauliOperator& a, const PauliOperator& b);

  /// In-place product this <- this * other, with exact phase tracking.
  void mul(const PauliOperator& other);

  bool same_bits(const PauliOperator& o) const {
    return x_ == o.x_ && z_ == o.z_;
  }

  std::string to_string() const;

private:
  BitVector x_;
  BitVector z_;
  uint8_t phase_ = 0;
};

// Clifford conjugation rules for single Pauli strings.
void conjugate_h(PauliOperator& p, std::size_t q);
void conjugate_s(PauliOperator& p, std::size_t q);
void conjugate_cx(PauliOperator& p, std::size_t control, std::size_t target);

}  // namespace hqsim
