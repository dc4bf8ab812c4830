#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hqsim {

class RngStream;

/// Elementary gates used to factor every two-qubit Clifford element.
enum class ElementaryOp : uint8_t { H0, H1, S0, S1, CX01, CX10 };

/// The two-qubit Clifford group mod global phase has
/// |Sp(4,2)| * 2^4 = 720 * 16 = 11520 elements. A gate index encodes
/// (symplectic class, sign pattern) as index = sym * 16 + signs.
inline constexpr uint32_t kNumTwoQubitCliffords = 11520;
inline constexpr uint32_t kNumSymplectic2 = 720;

/// Conjugation action of one gate on the 16 two-qubit Hermitian Paulis.
/// Entry p (bits x0|z0<<1|x1<<2|z1<<3) gives the image bits and sign flip.
struct GateImageTable {
  std::array<uint8_t, 16> bits;
  std::array<uint8_t, 16> sign;  // 1 = flips the generator sign
};

/// Global gate table, built once on first use.
class CliffordGroup {
public:
  static const CliffordGroup& instance();

  const GateImageTable& table(uint32_t gate_index) const;

  /// Elementary-gate word realizing the symplectic part of `gate_index`;
  /// the sign part is a trailing Pauli correction, see sign_pauli_bits().
  const std::vector<ElementaryOp>& word(uint32_t gate_index) const {
    return words_[gate_index / 16];
  }

  /// Pauli P (bits x0|z0<<1|x1<<2|z1<<3) with gate = word * P. Conjugating
  /// by P flips image signs without moving bits.
  uint8_t sign_pauli_bits(uint32_t gate_index) const;

  /// Index of the gate whose image table matches (used by tests to locate
  /// named gates such as CNOT); returns kNumTwoQubitCliffords if absent.
  uint32_t find(const GateImageTable& t) const;

private:
  CliffordGroup();

  std::vector<GateImageTable> tables_;          // 11520 entries
  std::vector<std::vector<ElementaryOp>> words_;  // 720 entries
};

/// Uniform draw over all 11520 two-qubit Clifford elements.
uint32_t sample_uniform_clifford2(RngStream& rng);

}  // namespace hqsim
