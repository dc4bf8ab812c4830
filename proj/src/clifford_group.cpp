#include "hqsim/clifford_group.hpp"

#include <map>
#include <stdexcept>

#include "hqsim/pauli.hpp"
#include "hqsim/rng.hpp"

namespace hqsim {

namespace {

// Images of X0, Z0, X1, Z1 under conjugation: a two-qubit tableau.
struct Tableau2 {
  PauliOperator img[4];

  static Tableau2 identity() {
    Tableau2 t;
    for (int j = 0; j < 4; ++j) t.img[j] = PauliOperator(2);
    t.img[0].set_x(0, true);
    t.img[1].set_z(0, true);
    t.img[2].set_x(1, true);
    t.img[3].set_z(1, true);
    return t;
  }

  void apply(ElementaryOp op) {
    for (auto& p : img) {
      switch (op) {
        case ElementaryOp::H0: conjugate_h(p, 0); break;
        case ElementaryOp::H1: conjugate_h(p, 1); break;
        case ElementaryOp::S0: conjugate_s(p, 0); break;
        case ElementaryOp::S1: conjugate_s(p, 1); break;
        case ElementaryOp::CX01: conjugate_cx(p, 0, 1); break;
        case ElementaryOp::CX10: conjugate_cx(p, 1, 0); break;
      }
    }
  }

  // 16-bit key of the sign-stripped images.
  uint16_t key() const {
    uint16_t k = 0;
    for (int j = 0; j < 4; ++j) {
      uint16_t b = static_cast<uint16_t>(img[j].x(0) | (img[j].z(0) << 1) |
                                         (img[j].x(1) << 2) |
                                         (img[j].z(1) << 3));
      k = static_cast<uint16_t>(k | (b << (4 * j)));
    }
    return k;
  }
};

uint8_t pauli2_to_bits(const PauliOperator& p) {
  return static_cast<uint8_t>(p.x(0) | (p.z(0) << 1) | (p.x(1) << 2) |
                              (p.z(1) << 3));
}

}  // namespace

CliffordGroup::CliffordGroup() {
  // Breadth-first enumeration of Sp(4, F2) from the identity tableau.
  static const ElementaryOp kOps[6] = {
      ElementaryOp::H0, ElementaryOp::H1,   ElementaryOp::S0,
      ElementaryOp::S1, ElementaryOp::CX01, ElementaryOp::CX10};

  std::map<uint16_t, std::vector<ElementaryOp>> words_by_key;
  std::vector<uint16_t> frontier;
  const Tableau2 ident = Tableau2::identity();
  words_by_key[ident.key()] = {};
  frontier.push_back(ident.key());

  auto replay = [](const std::vector<ElementaryOp>& word) {
    Tableau2 t = Tableau2::identity();
    for (auto op : word) t.apply(op);
    return t;
  };

  while (!frontier.empty()) {
    std::vector<uint16_t> next;
    for (uint16_t k : frontier) {
      const auto word = words_by_key.at(k);
      for (auto op : kOps) {
        Tableau2 t = replay(word);
        t.apply(op);
        const uint16_t nk = t.key();
        if (!words_by_key.count(nk)) {
          auto w = word;
          w.push_back(op);
          words_by_key[nk] = std::move(w);
          next.push_back(nk);
        }
      }
    }
    frontier = std::move(next);
  }
  if (words_by_key.size() != kNumSymplectic2)
    throw std::logic_error("two-qubit symplectic enumeration failed");

  // std::map iteration gives the canonical (key-sorted) class order.
  words_.reserve(kNumSymplectic2);
  for (auto& [k, w] : words_by_key) words_.push_back(w);

  tables_.resize(kNumTwoQubitCliffords);
  for (uint32_t sym = 0; sym < kNumSymplectic2; ++sym) {
    const Tableau2 base = replay(words_[sym]);
    for (uint32_t s = 0; s < 16; ++s) {
      PauliOperator img[4];
      for (int j = 0; j < 4; ++j) {
        img[j] = base.img[j];
        if ((s >> j) & 1) img[j].negate();
      }
      GateImageTable& tbl = tables_[sym * 16 + s];
      for (uint8_t p = 0; p < 16; ++p) {
        const bool xa = p & 1, za = (p >> 1) & 1;
        const bool xb = (p >> 2) & 1, zb = (p >> 3) & 1;
        PauliOperator prod(2);
        prod.set_phase(static_cast<uint8_t>((xa && za) + (xb && zb)));
        if (xa) prod.mul(img[0]);
        if (za) prod.mul(img[1]);
        if (xb) prod.mul(img[2]);
        if (zb) prod.mul(img[3]);
        if (prod.phase() & 1)
          throw std::logic_error("non-Hermitian Clifford image");
        tbl.bits[p] = pauli2_to_bits(prod);
        tbl.sign[p] = prod.negative() ? 1 : 0;
      }
    }
  }
}

const CliffordGroup& CliffordGroup::instance() {
  static const CliffordGroup group;
  return group;
}

const GateImageTable& CliffordGroup::table(uint32_t gate_index) const {
  if (gate_index >= kNumTwoQubitCliffords)
    throw std::out_of_range("Clifford gate index out of range");
  return tables_[gate_index];
}

uint8_t CliffordGroup::sign_pauli_bits(uint32_t gate_index) const {
  if (gate_index >= kNumTwoQubitCliffords)
    throw std::out_of_range("Clifford gate index out of range");
  const uint32_t s = gate_index % 16;
  const bool f_x0 = s & 1, f_z0 = (s >> 1) & 1;
  const bool f_x1 = (s >> 2) & 1, f_z1 = (s >> 3) & 1;
  // P anticommutes with X_q via its Z_q bit and vice versa.
  return static_cast<uint8_t>((f_z0 ? 1 : 0) | (f_x0 ? 2 : 0) |
                              (f_z1 ? 4 : 0) | (f_x1 ? 8 : 0));
}

uint32_t CliffordGroup::find(const GateImageTable& t) const {
  for (uint32_t g = 0; g < kNumTwoQubitCliffords; ++g) {
    if (tables_[g].bits == t.bits && tables_[g].sign == t.sign) return g;
  }
  return kNumTwoQubitCliffords;
}

uint32_t sample_uniform_clifford2(RngStream& rng) {
  return static_cast<uint32_t>(rng.uniform_int(kNumTwoQubitCliffords));
}

}  // namespace hqsim
