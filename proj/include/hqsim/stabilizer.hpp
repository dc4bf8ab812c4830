#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hqsim/bitvec.hpp"
#include "hqsim/pauli.hpp"

namespace hqsim {

class RngStream;

/// Index into the 11,520-element two-qubit Clifford group (mod global phase).
using CliffordGateIndex = uint32_t;

/// Mixed stabilizer state on `num_sites` qubits: m <= L independent,
/// mutually commuting signed Pauli generators. m = L is pure; m < L mixed.
/// No destabilizer rows are kept, so measurement may cost O(m^2 L) bit ops
/// on the deterministic branch; that is the price of mixed-state support.
class StabilizerState {
public:
  StabilizerState() = default;

  /// |0...0> on L qubits.
  explicit StabilizerState(std::size_t num_sites);

  /// Maximally mixed state (no generators).
  static StabilizerState maximally_mixed(std::size_t num_sites);

  std::size_t num_sites() const { return num_sites_; }
  std::size_t num_generators() const { return gens_.size(); }

  const PauliOperator& generator(std::size_t i) const { return gens_[i]; }
  const std::vector<PauliOperator>& generators() const { return gens_; }

  // Elementary tableau updates.
  void h(std::size_t q);
  void s(std::size_t q);
  void cx(std::size_t control, std::size_t target);

  /// Conjugates every generator by the indexed two-qubit Clifford gate
  /// acting on (sites.first, sites.second).
  void apply_two_qubit_clifford(CliffordGateIndex gate,
                                std::pair<std::size_t, std::size_t> sites);

  /// Projective Z measurement. Returns the outcome bit; `rng` supplies the
  /// coin on the random branches.
  bool measure_z(std::size_t site, RngStream& rng);

  /// Reset channel: trace out `site` and re-prepare |0>.
  void reset_qubit(std::size_t site);

  /// m x 2|region| restriction of the generators: X block then Z block,
  /// phases dropped. `region` lists site indices.
  BitMatrix restrict_generators(const std::vector<std::size_t>& region) const;

  /// Full (x|z) matrix of all generators (m x 2L).
  BitMatrix generator_matrix() const;

  /// Appends a generator without checks (test/setup use).
  void push_generator(PauliOperator g) { gens_.push_back(std::move(g)); }

  /// Verifies mutual commutation, GF(2) independence and real phases;
  /// throws std::logic_error on violation.
  void validate() const;

private:
  void check_site(std::size_t site) const;

  std::size_t num_sites_ = 0;
  std::vector<PauliOperator> gens_;
};

}  // namespace hqsim
