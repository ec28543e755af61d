// Copyright (c) the qce authors. All rights reserved.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "qce/errors.hpp"
#include "qce/util.hpp"

namespace qce {

enum class Spin : std::uint8_t { Alpha = 0, Beta = 1 };

enum class LadderKind : std::uint8_t { Raise, Lower };

/// One creation/annihilation token of a trial-wavefunction expansion.
/// Orbitals are 1-based here, matching the on-disk schema; consumers
/// convert to 0-based flat indices at their boundary.
struct LadderToken {
  int orbital = 0;
  Spin spin = Spin::Alpha;
  LadderKind kind = LadderKind::Raise;

  friend bool operator==(const LadderToken&, const LadderToken&) = default;
};

struct AnsatzTerm {
  double coefficient = 0.0;
  std::vector<LadderToken> ladder_ops;  // vacuum marker implicit at the end
};

struct InitialStateAnsatz {
  std::string label;
  std::optional<double> energy;
  std::vector<AnsatzTerm> terms;
};

struct FciEnergy {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> value;
};

using OneElectronKey = std::pair<int, int>;     // (p, q) with p >= q
using TwoElectronKey = std::array<int, 4>;      // canonical 8-fold class key

/// Lexicographically smallest tuple among the 8 symmetry images of a
/// Mulliken-ordered real-orbital integral index (pq|rs).
inline TwoElectronKey canonical_two_electron_key(int p, int q, int r, int s) {
  const TwoElectronKey images[8] = {
      {p, q, r, s}, {q, p, r, s}, {p, q, s, r}, {q, p, s, r},
      {r, s, p, q}, {s, r, p, q}, {r, s, q, p}, {s, r, q, p}};
  TwoElectronKey best = images[0];
  for (const auto& im : images)
    if (im < best) best = im;
  return best;
}

inline TwoElectronKey canonical_two_electron_key(const TwoElectronKey& k) {
  return canonical_two_electron_key(k[0], k[1], k[2], k[3]);
}

inline OneElectronKey canonical_one_electron_key(int p, int q) {
  return p >= q ? OneElectronKey{p, q} : OneElectronKey{q, p};
}

/// One Broombridge `integral_sets` entry, canonicalized. Energies in
/// hartree; orbital indices 1-based as on disk.
struct ProblemDescription {
  int n_orbitals = 0;
  int n_electrons = 0;
  double coulomb_repulsion = 0.0;
  double energy_offset = 0.0;
  double scf_energy = 0.0;
  std::optional<FciEnergy> fci_energy;
  std::map<OneElectronKey, double> one_electron_integrals;
  std::map<TwoElectronKey, double> two_electron_integrals;
  std::vector<InitialStateAnsatz> initial_state_suggestions;
  // Unrecognized keys (geometry, basis_set, metadata, ...) preserved verbatim,
  // in original order, for forward compatibility.
  std::vector<std::pair<std::string, YAML::Node>> extra_fields;
  std::vector<std::pair<std::string, YAML::Node>> hamiltonian_extra_fields;

  const InitialStateAnsatz& find_ansatz(const std::string& label) const {
    for (const auto& a : initial_state_suggestions)
      if (a.label == label) return a;
    throw UnknownLabelError("no initial state labeled '" + label + "'");
  }

  /// Total identity contribution to the Hamiltonian.
  double identity_offset() const { return coulomb_repulsion + energy_offset; }
};

struct BroombridgeDocument {
  std::string format_version = "0.1";
  std::vector<ProblemDescription> problems;
  std::vector<std::pair<std::string, YAML::Node>> extra_fields;
};

// ---------------------------------------------------------------------------
// Wavefunction token grammar: (Na)+ (Nb)+ (Na) (Nb), terminated by |vacuum>.
// ---------------------------------------------------------------------------

inline constexpr const char* kVacuumMarker = "|vacuum>";

inline LadderToken parse_ladder_token(const std::string& tok,
                                      const std::string& path) {
  // (digits)(a|b)')' optionally followed by '+'
  size_t i = 0;
  auto fail = [&](const std::string& why) -> LadderToken {
    throw SchemaError(path, "bad wavefunction token '" + tok + "': " + why);
  };
  if (i >= tok.size() || tok[i] != '(') return fail("expected '('");
  ++i;
  size_t d0 = i;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
    ++i;
  if (i == d0) return fail("expected orbital number");
  const int orbital = std::stoi(tok.substr(d0, i - d0));
  if (i >= tok.size() || (tok[i] != 'a' && tok[i] != 'b'))
    return fail("expected spin 'a' or 'b'");
  const Spin spin = tok[i] == 'a' ? Spin::Alpha : Spin::Beta;
  ++i;
  if (i >= tok.size() || tok[i] != ')') return fail("expected ')'");
  ++i;
  LadderKind kind = LadderKind::Lower;
  if (i < tok.size() && tok[i] == '+') {
    kind = LadderKind::Raise;
    ++i;
  }
  if (i != tok.size()) return fail("trailing characters");
  return LadderToken{orbital, spin, kind};
}

inline std::string format_ladder_token(const LadderToken& t) {
  std::string s = "(" + std::to_string(t.orbital) +
                  (t.spin == Spin::Alpha ? "a" : "b") + ")";
  if (t.kind == LadderKind::Raise) s += "+";
  return s;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace bbdetail {

inline double node_as_double(const YAML::Node& n, const std::string& path) {
  if (!n || !n.IsScalar()) throw SchemaError(path, "expected a number");
  try {
    return n.as<double>();
  } catch (const YAML::Exception&) {
    throw SchemaError(path, "expected a number, got '" + n.Scalar() + "'");
  }
}

inline int node_as_int(const YAML::Node& n, const std::string& path) {
  if (!n || !n.IsScalar()) throw SchemaError(path, "expected an integer");
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    throw SchemaError(path, "expected an integer, got '" + n.Scalar() + "'");
  }
}

inline std::string node_as_string(const YAML::Node& n,
                                  const std::string& path) {
  if (!n || !n.IsScalar()) throw SchemaError(path, "expected a string");
  return n.Scalar();
}

inline void require_hartree(const YAML::Node& block, const std::string& path) {
  const auto units = node_as_string(block["units"], path + ".units");
  if (units != "hartree")
    throw SchemaError(path + ".units",
                      "unsupported unit '" + units + "' (expected hartree)");
}

/// Reads a {units: hartree, value: x} energy block.
inline double parse_energy_block(const YAML::Node& block,
                                 const std::string& path) {
  if (!block || !block.IsMap()) throw SchemaError(path, "missing energy block");
  require_hartree(block, path);
  if (!block["value"]) throw SchemaError(path + ".value", "missing value");
  return node_as_double(block["value"], path + ".value");
}

inline void check_orbital_index(int idx, int n_orbitals,
                                const std::string& path) {
  if (idx < 1 || idx > n_orbitals)
    throw SchemaError(path, "orbital index " + std::to_string(idx) +
                                " out of range [1, " +
                                std::to_string(n_orbitals) + "]");
}

inline constexpr double kDuplicateTolerance = 1e-10;

}  // namespace bbdetail

inline ProblemDescription parse_problem(const YAML::Node& node,
                                        const std::string& path) {
  using namespace bbdetail;
  if (!node || !node.IsMap())
    throw SchemaError(path, "integral set must be a map");
  ProblemDescription p;

  if (!node["n_orbitals"])
    throw SchemaError(path + ".n_orbitals", "missing required key");
  p.n_orbitals = node_as_int(node["n_orbitals"], path + ".n_orbitals");
  if (p.n_orbitals <= 0)
    throw SchemaError(path + ".n_orbitals", "must be a positive integer");

  if (!node["n_electrons"])
    throw SchemaError(path + ".n_electrons", "missing required key");
  p.n_electrons = node_as_int(node["n_electrons"], path + ".n_electrons");
  if (p.n_electrons <= 0)
    throw SchemaError(path + ".n_electrons", "must be a positive integer");
  if (p.n_electrons > 2 * p.n_orbitals)
    throw SchemaError(path + ".n_electrons",
                      "more electrons than spin-orbitals");

  if (!node["coulomb_repulsion"])
    throw SchemaError(path + ".coulomb_repulsion", "missing required key");
  p.coulomb_repulsion =
      parse_energy_block(node["coulomb_repulsion"], path + ".coulomb_repulsion");
  if (!node["energy_offset"])
    throw SchemaError(path + ".energy_offset", "missing required key");
  p.energy_offset =
      parse_energy_block(node["energy_offset"], path + ".energy_offset");
  if (!node["scf_energy"])
    throw SchemaError(path + ".scf_energy", "missing required key");
  p.scf_energy = parse_energy_block(node["scf_energy"], path + ".scf_energy");

  if (node["fci_energy"]) {
    const auto fpath = path + ".fci_energy";
    const YAML::Node f = node["fci_energy"];
    if (!f.IsMap()) throw SchemaError(fpath, "expected a map");
    require_hartree(f, fpath);
    FciEnergy fe;
    if (!f["lower"]) throw SchemaError(fpath + ".lower", "missing lower bound");
    if (!f["upper"]) throw SchemaError(fpath + ".upper", "missing upper bound");
    fe.lower = node_as_double(f["lower"], fpath + ".lower");
    fe.upper = node_as_double(f["upper"], fpath + ".upper");
    if (f["value"]) fe.value = node_as_double(f["value"], fpath + ".value");
    if (fe.lower > fe.upper)
      throw SchemaError(fpath, "lower bound exceeds upper bound");
    p.fci_energy = fe;
  }

  const YAML::Node ham = node["hamiltonian"];
  const auto hpath = path + ".hamiltonian";
  if (!ham || !ham.IsMap())
    throw SchemaError(hpath, "missing required key");

  {
    const YAML::Node one = ham["one_electron_integrals"];
    const auto opath = hpath + ".one_electron_integrals";
    if (!one || !one.IsMap()) throw SchemaError(opath, "missing required key");
    require_hartree(one, opath);
    if (one["format"] &&
        node_as_string(one["format"], opath + ".format") != "sparse")
      throw SchemaError(opath + ".format", "only sparse format is supported");
    const YAML::Node vals = one["values"];
    if (!vals || !vals.IsSequence())
      throw SchemaError(opath + ".values", "missing values list");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const auto vpath = opath + ".values[" + std::to_string(i) + "]";
      const YAML::Node row = vals[i];
      if (!row.IsSequence() || row.size() != 3)
        throw SchemaError(vpath, "expected [p, q, value]");
      const int a = node_as_int(row[0], vpath);
      const int b = node_as_int(row[1], vpath);
      check_orbital_index(a, p.n_orbitals, vpath);
      check_orbital_index(b, p.n_orbitals, vpath);
      const double v = node_as_double(row[2], vpath);
      const auto key = canonical_one_electron_key(a, b);
      auto [it, inserted] = p.one_electron_integrals.try_emplace(key, v);
      if (!inserted && std::abs(it->second - v) > kDuplicateTolerance)
        throw SchemaError(vpath, "duplicate one-electron entry for pair {" +
                                     std::to_string(key.first) + "," +
                                     std::to_string(key.second) +
                                     "} with conflicting value");
    }
  }

  {
    const YAML::Node two = ham["two_electron_integrals"];
    const auto tpath = hpath + ".two_electron_integrals";
    if (!two || !two.IsMap()) throw SchemaError(tpath, "missing required key");
    require_hartree(two, tpath);
    if (two["format"] &&
        node_as_string(two["format"], tpath + ".format") != "sparse")
      throw SchemaError(tpath + ".format", "only sparse format is supported");
    const auto convention =
        node_as_string(two["index_convention"], tpath + ".index_convention");
    if (convention != "mulliken")
      throw SchemaError(tpath + ".index_convention",
                        "unsupported index convention '" + convention + "'");
    const YAML::Node vals = two["values"];
    if (!vals || !vals.IsSequence())
      throw SchemaError(tpath + ".values", "missing values list");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const auto vpath = tpath + ".values[" + std::to_string(i) + "]";
      const YAML::Node row = vals[i];
      if (!row.IsSequence() || row.size() != 5)
        throw SchemaError(vpath, "expected [p, q, r, s, value]");
      int idx[4];
      for (int k = 0; k < 4; ++k) {
        idx[k] = node_as_int(row[static_cast<std::size_t>(k)], vpath);
        check_orbital_index(idx[k], p.n_orbitals, vpath);
      }
      const double v = node_as_double(row[4], vpath);
      const auto key =
          canonical_two_electron_key(idx[0], idx[1], idx[2], idx[3]);
      auto [it, inserted] = p.two_electron_integrals.try_emplace(key, v);
      if (!inserted && std::abs(it->second - v) > kDuplicateTolerance)
        throw SchemaError(
            vpath, "duplicate two-electron entry in symmetry class (" +
                       std::to_string(key[0]) + "," + std::to_string(key[1]) +
                       "|" + std::to_string(key[2]) + "," +
                       std::to_string(key[3]) + ") with conflicting value");
    }
  }

  for (const auto& kv : ham) {
    const auto key = kv.first.Scalar();
    if (key == "one_electron_integrals" || key == "two_electron_integrals")
      continue;
    p.hamiltonian_extra_fields.emplace_back(key, YAML::Clone(kv.second));
  }

  if (node["initial_state_suggestions"]) {
    const YAML::Node sugg = node["initial_state_suggestions"];
    const auto spath = path + ".initial_state_suggestions";
    if (!sugg.IsSequence() && !sugg.IsNull())
      throw SchemaError(spath, "expected a list");
    for (std::size_t i = 0; sugg.IsSequence() && i < sugg.size(); ++i) {
      const auto ipath = spath + "[" + std::to_string(i) + "]";
      const YAML::Node item = sugg[i];
      const YAML::Node st = item.IsMap() ? item["state"] : YAML::Node();
      if (!st || !st.IsMap())
        throw SchemaError(ipath, "expected a map with a 'state' entry");
      InitialStateAnsatz a;
      a.label = node_as_string(st["label"], ipath + ".state.label");
      if (st["energy"])
        a.energy = parse_energy_block(st["energy"], ipath + ".state.energy");
      const YAML::Node sup = st["superposition"];
      const auto sppath = ipath + ".state.superposition";
      if (!sup || !sup.IsSequence())
        throw SchemaError(sppath, "missing superposition list");
      for (std::size_t t = 0; t < sup.size(); ++t) {
        const auto tpath = sppath + "[" + std::to_string(t) + "]";
        const YAML::Node row = sup[t];
        if (!row.IsSequence() || row.size() < 2)
          throw SchemaError(tpath,
                            "expected [coefficient, tokens..., |vacuum>]");
        AnsatzTerm term;
        term.coefficient = node_as_double(row[0], tpath + "[0]");
        const std::size_t last = row.size() - 1;
        if (node_as_string(row[last],
                           tpath + "[" + std::to_string(last) + "]") !=
            kVacuumMarker)
          throw SchemaError(tpath, "term must end with the vacuum marker");
        for (std::size_t j = 1; j < last; ++j) {
          const auto jpath = tpath + "[" + std::to_string(j) + "]";
          const auto tok = parse_ladder_token(node_as_string(row[j], jpath),
                                              jpath);
          check_orbital_index(tok.orbital, p.n_orbitals, jpath);
          term.ladder_ops.push_back(tok);
        }
        a.terms.push_back(std::move(term));
      }
      p.initial_state_suggestions.push_back(std::move(a));
    }
  }

  static const std::array<const char*, 8> known = {
      "n_orbitals",     "n_electrons", "coulomb_repulsion",
      "energy_offset",  "scf_energy",  "fci_energy",
      "hamiltonian",    "initial_state_suggestions"};
  for (const auto& kv : node) {
    const auto key = kv.first.Scalar();
    bool is_known = false;
    for (const char* k : known) is_known = is_known || key == k;
    if (!is_known) p.extra_fields.emplace_back(key, YAML::Clone(kv.second));
  }
  return p;
}

/// Parse and fully validate a Broombridge v0.1 document.
inline BroombridgeDocument parse_document(const std::string& text) {
  using namespace bbdetail;
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw SyntaxError(std::string("YAML parse failure: ") + e.what());
  }
  if (!root.IsMap()) throw SchemaError("document", "top level must be a map");

  BroombridgeDocument doc;
  const YAML::Node fmt = root["format"];
  if (!fmt || !fmt.IsMap())
    throw SchemaError("format", "missing required key");
  const auto version = node_as_string(fmt["version"], "format.version");
  if (version != "0.1")
    throw SchemaError("format.version",
                      "unsupported version '" + version + "' (expected 0.1)");
  doc.format_version = version;

  const YAML::Node sets = root["integral_sets"];
  if (!sets || !sets.IsSequence() || sets.size() == 0)
    throw SchemaError("integral_sets",
                      "missing or empty required list");
  for (std::size_t i = 0; i < sets.size(); ++i)
    doc.problems.push_back(
        parse_problem(sets[i], "integral_sets[" + std::to_string(i) + "]"));

  for (const auto& kv : root) {
    const auto key = kv.first.Scalar();
    if (key == "format" || key == "integral_sets") continue;
    doc.extra_fields.emplace_back(key, YAML::Clone(kv.second));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace bbdetail {

inline void emit_energy_block(YAML::Emitter& out, double value) {
  out << YAML::Flow << YAML::BeginMap;
  out << YAML::Key << "units" << YAML::Value << "hartree";
  out << YAML::Key << "value" << YAML::Value << value;
  out << YAML::EndMap;
}

}  // namespace bbdetail

/// Serialize to canonical YAML. Output parses back to an equivalent
/// document: canonical integral maps, scalars to 12 significant digits.
inline std::string serialize_document(const BroombridgeDocument& doc) {
  YAML::Emitter out;
  out.SetDoublePrecision(12);
  out << YAML::BeginMap;
  out << YAML::Key << "format" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "version" << YAML::Value << YAML::DoubleQuoted
      << doc.format_version;
  out << YAML::EndMap;
  for (const auto& [k, v] : doc.extra_fields)
    out << YAML::Key << k << YAML::Value << v;

  out << YAML::Key << "integral_sets" << YAML::Value << YAML::BeginSeq;
  for (const auto& p : doc.problems) {
    out << YAML::BeginMap;
    out << YAML::Key << "n_orbitals" << YAML::Value << p.n_orbitals;
    out << YAML::Key << "n_electrons" << YAML::Value << p.n_electrons;
    out << YAML::Key << "coulomb_repulsion" << YAML::Value;
    bbdetail::emit_energy_block(out, p.coulomb_repulsion);
    out << YAML::Key << "energy_offset" << YAML::Value;
    bbdetail::emit_energy_block(out, p.energy_offset);
    out << YAML::Key << "scf_energy" << YAML::Value;
    bbdetail::emit_energy_block(out, p.scf_energy);
    if (p.fci_energy) {
      out << YAML::Key << "fci_energy" << YAML::Value << YAML::Flow
          << YAML::BeginMap;
      out << YAML::Key << "units" << YAML::Value << "hartree";
      if (p.fci_energy->value)
        out << YAML::Key << "value" << YAML::Value << *p.fci_energy->value;
      out << YAML::Key << "upper" << YAML::Value << p.fci_energy->upper;
      out << YAML::Key << "lower" << YAML::Value << p.fci_energy->lower;
      out << YAML::EndMap;
    }

    out << YAML::Key << "hamiltonian" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "one_electron_integrals" << YAML::Value
        << YAML::BeginMap;
    out << YAML::Key << "units" << YAML::Value << "hartree";
    out << YAML::Key << "format" << YAML::Value << "sparse";
    out << YAML::Key << "values" << YAML::Value << YAML::BeginSeq;
    for (const auto& [key, v] : p.one_electron_integrals) {
      out << YAML::Flow << YAML::BeginSeq << key.first << key.second << v
          << YAML::EndSeq;
    }
    out << YAML::EndSeq << YAML::EndMap;
    out << YAML::Key << "two_electron_integrals" << YAML::Value
        << YAML::BeginMap;
    out << YAML::Key << "units" << YAML::Value << "hartree";
    out << YAML::Key << "format" << YAML::Value << "sparse";
    out << YAML::Key << "index_convention" << YAML::Value << "mulliken";
    out << YAML::Key << "values" << YAML::Value << YAML::BeginSeq;
    for (const auto& [key, v] : p.two_electron_integrals) {
      out << YAML::Flow << YAML::BeginSeq << key[0] << key[1] << key[2]
          << key[3] << v << YAML::EndSeq;
    }
    out << YAML::EndSeq << YAML::EndMap;
    for (const auto& [k, v] : p.hamiltonian_extra_fields)
      out << YAML::Key << k << YAML::Value << v;
    out << YAML::EndMap;  // hamiltonian

    out << YAML::Key << "initial_state_suggestions" << YAML::Value;
    if (p.initial_state_suggestions.empty()) {
      out << YAML::Flow << YAML::BeginSeq << YAML::EndSeq;
    } else {
      out << YAML::BeginSeq;
      for (const auto& a : p.initial_state_suggestions) {
        out << YAML::BeginMap << YAML::Key << "state" << YAML::Value
            << YAML::BeginMap;
        out << YAML::Key << "label" << YAML::Value << YAML::DoubleQuoted
            << a.label;
        if (a.energy) {
          out << YAML::Key << "energy" << YAML::Value;
          bbdetail::emit_energy_block(out, *a.energy);
        }
        out << YAML::Key << "superposition" << YAML::Value << YAML::BeginSeq;
        for (const auto& t : a.terms) {
          out << YAML::Flow << YAML::BeginSeq << t.coefficient;
          for (const auto& tok : t.ladder_ops)
            out << format_ladder_token(tok);
          out << kVacuumMarker << YAML::EndSeq;
        }
        out << YAML::EndSeq;
        out << YAML::EndMap << YAML::EndMap;
      }
      out << YAML::EndSeq;
    }

    for (const auto& [k, v] : p.extra_fields)
      out << YAML::Key << k << YAML::Value << v;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  if (!out.good())
    throw Error(std::string("YAML emit failure: ") + out.GetLastError());
  return std::string(out.c_str()) + "\n";
}

// ---------------------------------------------------------------------------
// Canonical comparison
// ---------------------------------------------------------------------------

namespace bbdetail {

inline bool scalar_close(double a, double b) { return close_to_digits(a, b, 12); }

inline bool ansatz_equivalent(const InitialStateAnsatz& a,
                              const InitialStateAnsatz& b) {
  if (a.label != b.label) return false;
  if (a.energy.has_value() != b.energy.has_value()) return false;
  if (a.energy && !scalar_close(*a.energy, *b.energy)) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!scalar_close(a.terms[i].coefficient, b.terms[i].coefficient))
      return false;
    if (a.terms[i].ladder_ops != b.terms[i].ladder_ops) return false;
  }
  return true;
}

inline bool extras_equivalent(
    const std::vector<std::pair<std::string, YAML::Node>>& a,
    const std::vector<std::pair<std::string, YAML::Node>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (YAML::Dump(a[i].second) != YAML::Dump(b[i].second)) return false;
  }
  return true;
}

}  // namespace bbdetail

/// Semantic equality on canonical form. When `compare_extras` is false the
/// opaque passthrough fields are ignored (useful when a mutation touched
/// only metadata).
inline bool problems_equivalent(const ProblemDescription& a,
                                const ProblemDescription& b,
                                bool compare_extras = true) {
  using bbdetail::scalar_close;
  if (a.n_orbitals != b.n_orbitals || a.n_electrons != b.n_electrons)
    return false;
  if (!scalar_close(a.coulomb_repulsion, b.coulomb_repulsion) ||
      !scalar_close(a.energy_offset, b.energy_offset) ||
      !scalar_close(a.scf_energy, b.scf_energy))
    return false;
  if (a.fci_energy.has_value() != b.fci_energy.has_value()) return false;
  if (a.fci_energy) {
    if (!scalar_close(a.fci_energy->lower, b.fci_energy->lower) ||
        !scalar_close(a.fci_energy->upper, b.fci_energy->upper))
      return false;
    if (a.fci_energy->value.has_value() != b.fci_energy->value.has_value())
      return false;
    if (a.fci_energy->value &&
        !scalar_close(*a.fci_energy->value, *b.fci_energy->value))
      return false;
  }
  if (a.one_electron_integrals.size() != b.one_electron_integrals.size())
    return false;
  for (const auto& [k, v] : a.one_electron_integrals) {
    auto it = b.one_electron_integrals.find(k);
    if (it == b.one_electron_integrals.end() || !scalar_close(v, it->second))
      return false;
  }
  if (a.two_electron_integrals.size() != b.two_electron_integrals.size())
    return false;
  for (const auto& [k, v] : a.two_electron_integrals) {
    auto it = b.two_electron_integrals.find(k);
    if (it == b.two_electron_integrals.end() || !scalar_close(v, it->second))
      return false;
  }
  if (a.initial_state_suggestions.size() != b.initial_state_suggestions.size())
    return false;
  for (std::size_t i = 0; i < a.initial_state_suggestions.size(); ++i)
    if (!bbdetail::ansatz_equivalent(a.initial_state_suggestions[i],
                                     b.initial_state_suggestions[i]))
      return false;
  if (compare_extras) {
    if (!bbdetail::extras_equivalent(a.extra_fields, b.extra_fields))
      return false;
    if (!bbdetail::extras_equivalent(a.hamiltonian_extra_fields,
                                     b.hamiltonian_extra_fields))
      return false;
  }
  return true;
}

inline bool documents_equivalent(const BroombridgeDocument& a,
                                 const BroombridgeDocument& b,
                                 bool compare_extras = true) {
  if (a.format_version != b.format_version) return false;
  if (a.problems.size() != b.problems.size()) return false;
  for (std::size_t i = 0; i < a.problems.size(); ++i)
    if (!problems_equivalent(a.problems[i], b.problems[i], compare_extras))
      return false;
  if (compare_extras &&
      !bbdetail::extras_equivalent(a.extra_fields, b.extra_fields))
    return false;
  return true;
}

}  // namespace qce
