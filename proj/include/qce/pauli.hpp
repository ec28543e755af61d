// Copyright (c) the qce authors. All rights reserved.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qce/errors.hpp"
#include "qce/util.hpp"

namespace qce {

inline constexpr int kMaxQubits = 24;  // 2^24 amplitudes ~ 256 MiB, desk ceiling

/// Pauli string over up to 64 qubits as an (x, z) bit-mask pair.
/// Per qubit: (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. The string denotes the
/// literal tensor product of the single-qubit matrices (no global phase).
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

  std::uint64_t support() const { return x | z; }
  int weight() const { return std::popcount(support()); }
  bool is_identity() const { return (x | z) == 0; }

  /// Number of Y factors.
  int y_count() const { return std::popcount(x & z); }

  /// P|b> = phase(b)|b ^ x> with phase(b) = i^{y_count} * (-1)^{popcount(b&z)}.
  std::complex<double> basis_phase(std::uint64_t b) const {
    static constexpr std::complex<double> kI[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> f = kI[y_count() & 3];
    if (std::popcount(b & z) & 1) f = -f;
    return f;
  }

  /// Single-qubit character at `qubit`.
  char at(int qubit) const {
    const bool bx = (x >> qubit) & 1, bz = (z >> qubit) & 1;
    return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }

  /// Characters indexed left-to-right from qubit 0, e.g. "XZI" = X0 Z1.
  std::string to_string(int n_qubits) const {
    std::string s(static_cast<size_t>(n_qubits), 'I');
    for (int q = 0; q < n_qubits; ++q) s[static_cast<size_t>(q)] = at(q);
    return s;
  }

  static PauliString from_string(const std::string& s) {
    PauliString p;
    if (s.size() > 64) throw ArgumentError("pauli string longer than 64");
    for (size_t q = 0; q < s.size(); ++q) {
      switch (s[q]) {
        case 'I': break;
        case 'X': p.x |= 1ULL << q; break;
        case 'Y': p.x |= 1ULL << q; p.z |= 1ULL << q; break;
        case 'Z': p.z |= 1ULL << q; break;
        default:
          throw ArgumentError(std::string("bad pauli character '") + s[q] +
                              "'");
      }
    }
    return p;
  }
};

/// Product of two Pauli strings: A*B = i^k * C. Returns (C, k mod 4).
inline std::pair<PauliString, int> pauli_product(const PauliString& a,
                                                 const PauliString& b) {
  PauliString c{a.x ^ b.x, a.z ^ b.z};
  int k = 0;
  std::uint64_t m = a.support() & b.support();
  while (m) {
    const int q = std::countr_zero(m);
    m &= m - 1;
    const int va = (((a.x >> q) & 1) << 1) | ((a.z >> q) & 1);  // X=2,Y=3,Z=1
    const int vb = (((b.x >> q) & 1) << 1) | ((b.z >> q) & 1);
    if (va == vb) continue;
    // sigma_a sigma_b = i^e sigma_c; e = +1 for cyclic (X,Y),(Y,Z),(Z,X),
    // e = 3 for anticyclic. In the (x,z) encoding X=2, Y=3, Z=1 the cyclic
    // order is 2 -> 3 -> 1 -> 2.
    const bool cyclic = (va == 2 && vb == 3) || (va == 3 && vb == 1) ||
                        (va == 1 && vb == 2);
    k += cyclic ? 1 : 3;
  }
  return {c, k & 3};
}

/// Hermitian operator as a real combination of Pauli strings plus an
/// identity offset, coefficients in hartree.
struct PauliHamiltonian {
  int n_qubits = 0;
  double identity_coefficient = 0.0;
  std::map<PauliString, double> terms;

  void add(const PauliString& p, double coeff) {
    if (p.is_identity()) {
      identity_coefficient += coeff;
      return;
    }
    auto [it, inserted] = terms.try_emplace(p, coeff);
    if (!inserted) it->second += coeff;
  }

  std::size_t term_count() const { return terms.size(); }
};

/// Sum of |c_j| over non-identity terms. The identity only contributes a
/// global phase to any evolution built from the term set, so it is excluded.
inline double l1_norm(const PauliHamiltonian& h) {
  double s = 0.0;
  for (const auto& [p, c] : h.terms) s += std::abs(c);
  return s;
}

/// Drop every term with |coefficient| < threshold. Identity untouched.
inline PauliHamiltonian truncate_terms(const PauliHamiltonian& h,
                                       double threshold) {
  if (threshold < 0) throw ArgumentError("truncation threshold must be >= 0");
  PauliHamiltonian out;
  out.n_qubits = h.n_qubits;
  out.identity_coefficient = h.identity_coefficient;
  for (const auto& [p, c] : h.terms)
    if (!(std::abs(c) < threshold)) out.terms.emplace(p, c);
  return out;
}

/// CSV lines `pauli_string,coefficient`, string indexed from qubit 0.
inline void export_pauli_csv(const PauliHamiltonian& h, std::ostream& os) {
  os << "pauli_string,coefficient\n";
  if (h.identity_coefficient != 0.0) {
    os << PauliString{}.to_string(h.n_qubits) << ','
       << format_double(h.identity_coefficient) << '\n';
  }
  for (const auto& [p, c] : h.terms)
    os << p.to_string(h.n_qubits) << ',' << format_double(c) << '\n';
}

}  // namespace qce
