#pragma once

#include <cstdint>
#include <vector>

#include "hqsim/stabilizer.hpp"

namespace hqsim {

/// A subsystem given as a list of site indices.
using Region = std::vector<std::size_t>;

Region left_half(std::size_t num_system_sites);
Region right_half(std::size_t num_system_sites);
Region full_system(std::size_t num_system_sites);

/// Von Neumann entropy of `region` in bits:
///   S = |region| - dim{ group elements supported inside region }
///     = |region| - (m - rank of the generators restricted to the rest).
double entropy(const StabilizerState& state, const Region& region);

/// I_{A:B} = S_A + S_B - S_{A u B}. Regions must be disjoint.
double mutual_information(const StabilizerState& state, const Region& a,
                          const Region& b);

/// Logarithmic negativity E_N = log2 ||rho^{T_B}||_1, computed as half the
/// GF(2) rank of G_B J G_B^T with J the symplectic form on B.
double log_negativity(const StabilizerState& state, const Region& b);

/// I_{AB:R} between the full system [0, L) and the reference site; the
/// reference is the extra site appended past the system.
double info_retention(const StabilizerState& state,
                      std::size_t reference_site);

}  // namespace hqsim
