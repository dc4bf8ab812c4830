#include "hqsim/stabilizer.hpp"

#include <stdexcept>

#include "hqsim/clifford_group.hpp"
#include "hqsim/rng.hpp"

namespace hqsim {

StabilizerState::StabilizerState(std::size_t num_sites)
    : num_sites_(num_sites) {
  gens_.reserve(num_sites);
  for (std::size_t i = 0; i < num_sites; ++i) {
    PauliOperator g(num_sites);
    g.set_z(i, true);
    gens_.push_back(std::move(g));
  }
}

StabilizerState StabilizerState::maximally_mixed(std::size_t num_sites) {
  StabilizerState s;
  s.num_sites_ = num_sites;
  return s;
}

void StabilizerState::check_site(std::size_t site) const {
  if (site >= num_sites_) throw std::out_of_range("site index out of range");
}

void StabilizerState::h(std::size_t q) {
  check_site(q);
  for (auto& g : gens_) conjugate_h(g, q);
}

void StabilizerState::s(std::size_t q) {
  check_site(q);
  for (auto& g : gens_) conjugate_s(g, q);
}

void StabilizerState::cx(std::size_t control, std::size_t target) {
  check_site(control);
  check_site(target);
  for (auto& g : gens_) conjugate_cx(g, control, target);
}

void StabilizerState::apply_two_qubit_clifford(
    CliffordGateIndex gate, std::pair<std::size_t, std::size_t> sites) {
  const auto [a, b] = sites;
  check_site(a);
  check_site(b);
  if (a == b) throw std::invalid_argument("gate sites must be distinct");
  const GateImageTable& tbl = CliffordGroup::instance().table(gate);
  for (auto& g : gens_) {
    const uint8_t p = static_cast<uint8_t>(g.x(a) | (g.z(a) << 1) |
                                           (g.x(b) << 2) | (g.z(b) << 3));
    const uint8_t q = tbl.bits[p];
    g.set_x(a, q & 1);
    g.set_z(a, (q >> 1) & 1);
    g.set_x(b, (q >> 2) & 1);
    g.set_z(b, (q >> 3) & 1);
    if (tbl.sign[p]) g.negate();
  }
}

bool StabilizerState::measure_z(std::size_t site, RngStream& rng) {
  check_site(site);
  // Branch (i): some generator anticommutes with Z_site, i.e. has X there.
  std::size_t pivot = gens_.size();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].x(site)) {
      pivot = i;
      break;
    }
  }
  if (pivot < gens_.size()) {
    for (std::size_t i = pivot + 1; i < gens_.size(); ++i) {
      if (gens_[i].x(site)) gens_[i].mul(gens_[pivot]);
    }
    const bool outcome = rng.fair_coin();
    PauliOperator zs(num_sites_);
    zs.set_z(site, true);
    if (outcome) zs.negate();
    gens_[pivot] = std::move(zs);
    return outcome;
  }

  // All generators commute with Z_site. Decide membership of the bit
  // pattern of Z_site in the generated group by eliminating over the
  // (x|z) columns; row products keep the sign exact.
  const auto bit_at = [this](const PauliOperator& g, std::size_t c) {
    return c < num_sites_ ? g.x(c) : g.z(c - num_sites_);
  };
  std::vector<PauliOperator> echelon;
  std::vector<std::size_t> pivot;
  echelon.reserve(gens_.size());
  for (const auto& gen : gens_) {
    PauliOperator row = gen;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (bit_at(row, pivot[k])) row.mul(echelon[k]);
    }
    const int px = row.x_bits().first_set();
    const int pz = row.z_bits().first_set();
    if (px >= 0 || pz >= 0) {
      pivot.push_back(px >= 0 ? static_cast<std::size_t>(px)
                              : num_sites_ + static_cast<std::size_t>(pz));
      echelon.push_back(std::move(row));
    }
  }
  PauliOperator acc(num_sites_);
  acc.set_z(site, true);  // reduce +Z_site; leftover bits mean "outside"
  for (std::size_t k = 0; k < echelon.size(); ++k) {
    if (bit_at(acc, pivot[k])) acc.mul(echelon[k]);
  }
  if (acc.is_identity_bits()) {
    // Branch (ii): +Z_site * (used rows) collapsed to +/- identity, so the
    // group contains -outcome- deterministically; state unchanged.
    return acc.negative();
  }

  // Branch (iii): Z_site lies outside the group; the direction is mixed.
  const bool outcome = rng.fair_coin();
  PauliOperator zs(num_sites_);
  zs.set_z(site, true);
  if (outcome) zs.negate();
  gens_.push_back(std::move(zs));
  return outcome;
}

void StabilizerState::reset_qubit(std::size_t site) {
  check_site(site);
  // Sweep the X column so at most one generator has X/Y on `site`.
  std::size_t xrow = gens_.size();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].x(site)) {
      if (xrow == gens_.size()) {
        xrow = i;
      } else {
        gens_[i].mul(gens_[xrow]);
      }
    }
  }
  // Among the remaining rows, sweep the Z column.
  std::size_t zrow = gens_.size();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i == xrow) continue;
    if (gens_[i].z(site)) {
      if (zrow == gens_.size()) {
        zrow = i;
      } else {
        gens_[i].mul(gens_[zrow]);
      }
    }
  }
  // Drop the rows still touching the site (partial trace), then re-prepare.
  std::vector<PauliOperator> kept;
  kept.reserve(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != xrow && i != zrow) kept.push_back(std::move(gens_[i]));
  }
  gens_ = std::move(kept);
  PauliOperator zs(num_sites_);
  zs.set_z(site, true);
  gens_.push_back(std::move(zs));
}

BitMatrix StabilizerState::restrict_generators(
    const std::vector<std::size_t>& region) const {
  for (auto s : region) check_site(s);
  BitMatrix m(gens_.size(), 2 * region.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < region.size(); ++j) {
      m.set(i, j, gens_[i].x(region[j]));
      m.set(i, region.size() + j, gens_[i].z(region[j]));
    }
  }
  return m;
}

BitMatrix StabilizerState::generator_matrix() const {
  // X block occupies columns [0, L), Z block [L, 2L).
  BitMatrix m(gens_.size(), 2 * num_sites_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < num_sites_; ++j) {
      m.set(i, j, gens_[i].x(j));
      m.set(i, num_sites_ + j, gens_[i].z(j));
    }
  }
  return m;
}

void StabilizerState::validate() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].phase() & 1)
      throw std::logic_error("generator with imaginary phase");
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (!PauliOperator::commutes(gens_[i], gens_[j]))
        throw std::logic_error("generators do not commute");
    }
  }
  if (gf2_rank(generator_matrix()) != gens_.size())
    throw std::logic_error("generators are GF(2)-dependent");
}

}  // namespace hqsim
