// Copyright (c) the qce authors. All rights reserved.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qce/broombridge.hpp"
#include "qce/errors.hpp"
#include "qce/pauli.hpp"

namespace qce {

/// Spatial orbital (0-based) plus spin. Flat index is block-ordered: all
/// alpha spin-orbitals first, then all beta.
struct SpinOrbital {
  int orbital = 0;
  Spin spin = Spin::Alpha;

  int flat_index(int n_orbitals) const {
    return orbital + (spin == Spin::Beta ? n_orbitals : 0);
  }
};

enum class FermionOpKind : std::uint8_t { Create, Annihilate };

struct FermionOp {
  FermionOpKind kind = FermionOpKind::Create;
  int index = 0;  // flat spin-orbital index

  friend bool operator==(const FermionOp&, const FermionOp&) = default;
  friend auto operator<=>(const FermionOp&, const FermionOp&) = default;
};

/// Product of ladder operators in canonical order: all creations first
/// (strictly descending flat index), then all annihilations (strictly
/// ascending). The map key of FermionHamiltonian.
using FermionOps = std::vector<FermionOp>;

namespace fermdetail {

/// Sorts a block of indices, counting transpositions. Returns false when a
/// repeated index makes the product vanish.
inline bool sort_block(std::vector<int>& idx, bool descending, int& sign) {
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (idx[j - 1] == idx[j]) return false;
      const bool out_of_order =
          descending ? idx[j - 1] < idx[j] : idx[j - 1] > idx[j];
      if (!out_of_order) break;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return true;
}

}  // namespace fermdetail

/// Normal-ordered fermionic operator with real coefficients (hartree) plus an
/// identity offset. Immutable after construction in practice; add_term is the
/// build-time mutator.
struct FermionHamiltonian {
  int n_spin_orbitals = 0;
  double identity_offset = 0.0;
  std::map<FermionOps, double> terms;

  /// Adds coefficient * ops where `ops` lists creations before annihilations
  /// (any order within the blocks). Reordering signs are absorbed; vanishing
  /// products (repeated operator) are dropped.
  void add_term(const FermionOps& ops, double coefficient) {
    std::vector<int> creations, annihilations;
    bool seen_annihilation = false;
    for (const auto& op : ops) {
      if (op.index < 0 || op.index >= n_spin_orbitals)
        throw IndexError("spin-orbital index " + std::to_string(op.index) +
                         " out of range");
      if (op.kind == FermionOpKind::Create) {
        if (seen_annihilation)
          throw ArgumentError(
              "add_term expects creation operators before annihilations");
        creations.push_back(op.index);
      } else {
        seen_annihilation = true;
        annihilations.push_back(op.index);
      }
    }
    int sign = 1;
    if (!fermdetail::sort_block(creations, /*descending=*/true, sign)) return;
    if (!fermdetail::sort_block(annihilations, /*descending=*/false, sign))
      return;
    FermionOps canonical;
    canonical.reserve(creations.size() + annihilations.size());
    for (int i : creations)
      canonical.push_back({FermionOpKind::Create, i});
    for (int i : annihilations)
      canonical.push_back({FermionOpKind::Annihilate, i});
    if (canonical.empty()) {
      identity_offset += sign * coefficient;
      return;
    }
    auto [it, inserted] = terms.try_emplace(std::move(canonical),
                                            sign * coefficient);
    if (!inserted) it->second += sign * coefficient;
  }

  /// Drops terms whose coefficients collapsed below `eps` during symmetrized
  /// accumulation.
  void prune(double eps = 1e-12) {
    for (auto it = terms.begin(); it != terms.end();)
      it = std::abs(it->second) < eps ? terms.erase(it) : std::next(it);
  }
};

/// Adjoint of a canonical operator sequence, itself in canonical order
/// (reversing a strictly ascending block yields a strictly descending one,
/// so no sign is picked up).
inline FermionOps adjoint(const FermionOps& ops) {
  FermionOps out;
  out.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    out.push_back({it->kind == FermionOpKind::Create
                       ? FermionOpKind::Annihilate
                       : FermionOpKind::Create,
                   it->index});
  return out;
}

/// H = sum_pq,s h_pq a+_ps a_qs
///   + 1/2 sum_pqrs,st g_pqrs a+_ps a+_rt a_st a_qs  + identity.
///
/// The stored Mulliken value (pq|rs) enters the two-body sum as
/// g * a+_{p,sigma} a+_{r,tau} a_{s,tau} a_{q,sigma}, i.e. the chemist
/// (pq|rs) = <pr|qs> reindexing. This line is the single source of truth
/// for the convention; the exactdiag spectra and [H, N] = [H, Sz] = 0
/// checks in the test suite pin it.
inline FermionHamiltonian build_fermion_hamiltonian(
    const ProblemDescription& problem) {
  FermionHamiltonian h;
  const int n = problem.n_orbitals;
  h.n_spin_orbitals = 2 * n;
  h.identity_offset = problem.identity_offset();

  auto flat = [n](int orbital_1based, Spin s) {
    return (orbital_1based - 1) + (s == Spin::Beta ? n : 0);
  };
  constexpr Spin spins[2] = {Spin::Alpha, Spin::Beta};

  for (const auto& [key, value] : problem.one_electron_integrals) {
    const auto [p, q] = key;
    if (p > n || q > n)
      throw IndexError("one-electron integral index out of range");
    for (Spin s : spins) {
      h.add_term({{FermionOpKind::Create, flat(p, s)},
                  {FermionOpKind::Annihilate, flat(q, s)}},
                 value);
      if (p != q)  // symmetrized h_pq = h_qp
        h.add_term({{FermionOpKind::Create, flat(q, s)},
                    {FermionOpKind::Annihilate, flat(p, s)}},
                   value);
    }
  }

  for (const auto& [key, value] : problem.two_electron_integrals) {
    if (*std::max_element(key.begin(), key.end()) > n)
      throw IndexError("two-electron integral index out of range");
    // Expand the canonical class to its distinct symmetry images.
    std::set<TwoElectronKey> images;
    const auto [p, q, r, s] = key;
    for (const auto& im : {TwoElectronKey{p, q, r, s}, {q, p, r, s},
                           {p, q, s, r}, {q, p, s, r}, {r, s, p, q},
                           {s, r, p, q}, {r, s, q, p}, {s, r, q, p}})
      images.insert(im);
    for (const auto& im : images) {
      for (Spin sig : spins) {
        for (Spin tau : spins) {
          h.add_term({{FermionOpKind::Create, flat(im[0], sig)},
                      {FermionOpKind::Create, flat(im[2], tau)},
                      {FermionOpKind::Annihilate, flat(im[3], tau)},
                      {FermionOpKind::Annihilate, flat(im[1], sig)}},
                     0.5 * value);
        }
      }
    }
  }

  h.prune();
  return h;
}

// ---------------------------------------------------------------------------
// Jordan-Wigner transformation
// ---------------------------------------------------------------------------

namespace jwdetail {

/// Operator as a complex combination of Pauli strings (intermediate form).
using PauliSum = std::map<PauliString, std::complex<double>>;

/// a_p   = Z_{0..p-1} (X_p + iY_p)/2
/// a+_p  = Z_{0..p-1} (X_p - iY_p)/2
inline PauliSum ladder_pauli(const FermionOp& op) {
  const std::uint64_t zchain = (1ULL << op.index) - 1;
  const std::uint64_t bit = 1ULL << op.index;
  const std::complex<double> yfac =
      op.kind == FermionOpKind::Create ? std::complex<double>(0, -0.5)
                                       : std::complex<double>(0, 0.5);
  PauliSum sum;
  sum[PauliString{bit, zchain}] = 0.5;         // X_p with Z chain
  sum[PauliString{bit, zchain | bit}] = yfac;  // Y_p with Z chain
  return sum;
}

inline PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      auto [p, k] = pauli_product(pa, pb);
      static constexpr std::complex<double> kI[4] = {
          {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const auto c = ca * cb * kI[k];
      auto [it, inserted] = out.try_emplace(p, c);
      if (!inserted) it->second += c;
    }
  }
  return out;
}

}  // namespace jwdetail

/// Maps a canonical fermionic Hamiltonian to Pauli form. The spectrum of the
/// result (as a dense matrix) equals the spectrum of the fermionic operator.
inline PauliHamiltonian jordan_wigner(const FermionHamiltonian& h,
                                      int qubit_limit = kMaxQubits) {
  if (h.n_spin_orbitals > qubit_limit)
    throw CapacityError("Jordan-Wigner needs " +
                        std::to_string(h.n_spin_orbitals) +
                        " qubits, limit is " + std::to_string(qubit_limit));
  PauliHamiltonian out;
  out.n_qubits = h.n_spin_orbitals;
  out.identity_coefficient = h.identity_offset;

  jwdetail::PauliSum acc;
  for (const auto& [ops, coeff] : h.terms) {
    jwdetail::PauliSum prod{{PauliString{}, {coeff, 0.0}}};
    for (const auto& op : ops)
      prod = jwdetail::multiply(prod, jwdetail::ladder_pauli(op));
    for (const auto& [p, c] : prod) {
      auto [it, inserted] = acc.try_emplace(p, c);
      if (!inserted) it->second += c;
    }
  }

  for (const auto& [p, c] : acc) {
    // Hermiticity of the source guarantees real coefficients.
    if (std::abs(c.imag()) > 1e-10)
      throw Error("Jordan-Wigner produced a non-real coefficient; "
                  "source operator is not Hermitian");
    if (std::abs(c.real()) < 1e-12) continue;
    if (p.is_identity())
      out.identity_coefficient += c.real();
    else
      out.terms.emplace(p, c.real());
  }
  return out;
}

}  // namespace qce
