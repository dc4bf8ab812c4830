#include "hqsim/observables.hpp"

#include <numeric>
#include <stdexcept>

namespace hqsim {

Region left_half(std::size_t n) {
  Region r(n / 2);
  std::iota(r.begin(), r.end(), std::size_t{0});
  return r;
}

Region right_half(std::size_t n) {
  Region r(n - n / 2);
  std::iota(r.begin(), r.end(), n / 2);
  return r;
}

Region full_system(std::size_t n) {
  Region r(n);
  std::iota(r.begin(), r.end(), std::size_t{0});
  return r;
}

namespace {

// Rank of the generators masked to a site set, packed word-aligned as
// [x words | z words] so no per-bit shuffling is needed.
std::size_t masked_rank(const StabilizerState& state, const BitVector& mask) {
  const std::size_t m = state.num_generators();
  const std::size_t w = mask.word_count();
  BitMatrix rows(m, 2 * 64 * w);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < w; ++k) {
      rows.row(i).word(k) = state.generator(i).x_bits().word(k) & mask.word(k);
      rows.row(i).word(w + k) =
          state.generator(i).z_bits().word(k) & mask.word(k);
    }
  }
  return gf2_rank(rows);
}

}  // namespace

double entropy(const StabilizerState& state, const Region& region) {
  BitVector complement(state.num_sites());
  for (std::size_t s = 0; s < state.num_sites(); ++s) complement.set(s, true);
  for (auto s : region) {
    if (s >= state.num_sites()) throw std::out_of_range("region site");
    complement.set(s, false);
  }
  const std::size_t m = state.num_generators();
  const std::size_t r = masked_rank(state, complement);
  return static_cast<double>(region.size()) - static_cast<double>(m - r);
}

double mutual_information(const StabilizerState& state, const Region& a,
                          const Region& b) {
  std::vector<char> seen(state.num_sites(), 0);
  for (auto s : a) seen[s] = 1;
  for (auto s : b) {
    if (seen[s]) throw std::invalid_argument("regions overlap");
    seen[s] = 1;
  }
  Region ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return entropy(state, a) + entropy(state, b) - entropy(state, ab);
}

double log_negativity(const StabilizerState& state, const Region& b) {
  const std::size_t m = state.num_generators();
  // K = G_B J G_B^T: K_ij is the symplectic product of rows i, j masked
  // to B. Masked row copies keep this at O(m^2 L / 64).
  BitVector mask(state.num_sites());
  for (auto s : b) {
    if (s >= state.num_sites()) throw std::out_of_range("region site");
    mask.set(s, true);
  }
  std::vector<BitVector> mx(m, BitVector(state.num_sites()));
  std::vector<BitVector> mz(m, BitVector(state.num_sites()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < mask.word_count(); ++k) {
      mx[i].word(k) = state.generator(i).x_bits().word(k) & mask.word(k);
      mz[i].word(k) = state.generator(i).z_bits().word(k) & mask.word(k);
    }
  }
  BitMatrix k(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool v =
          BitVector::dot(mx[i], mz[j]) ^ BitVector::dot(mz[i], mx[j]);
      k.set(i, j, v);
      k.set(j, i, v);
    }
  }
  return 0.5 * static_cast<double>(gf2_rank(k));
}

double info_retention(const StabilizerState& state,
                      std::size_t reference_site) {
  if (reference_site >= state.num_sites())
    throw std::invalid_argument("state has no reference site");
  Region system;
  for (std::size_t s = 0; s < state.num_sites(); ++s)
    if (s != reference_site) system.push_back(s);
  Region ref = {reference_site};
  Region all = full_system(state.num_sites());
  return entropy(state, system) + entropy(state, ref) - entropy(state, all);
}

}  // namespace hqsim
