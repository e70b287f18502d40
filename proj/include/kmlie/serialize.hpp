// Machine-readable text formats. All numbers are exact integers or "p/q"
// rationals, all record orders are deterministic, so identical inputs produce
// identical bytes. The format is versioned by the header line "kmlie.v1".
#pragma once

#include <sstream>
#include <string>

#include "kmlie/induction.hpp"
#include "kmlie/parabolic.hpp"
#include "kmlie/roots.hpp"

namespace kmlie {

inline const char* format_version() { return "kmlie.v1"; }

inline std::string weight_str(const Weight& w) {
  return "(" + vec_str(w.finite) + ";" + std::to_string(w.deg) + ")";
}

inline std::string serialize_roots(const RootSet& rs) {
  std::ostringstream os;
  os << format_version() << " roots type=" << to_string(rs.gcm.label) << " bound=" << rs.bound.get_str()
     << "\n";
  for (const auto& r : rs.roots)
    os << "root coeffs=" << vec_str(r.coeffs) << " kind=" << (r.imaginary() ? "im" : "re")
       << " mult=" << r.mult.get_str() << "\n";
  return os.str();
}

inline std::string serialize_flag(const Flag& f) {
  std::ostringstream os;
  os << format_version() << " flag type=" << to_string(f.gcm.label) << "\n";
  for (const auto& h : f.functionals) os << "functional " << vec_str(h) << "\n";
  return os.str();
}

inline std::string serialize_kind(const ParabolicKind& k) {
  std::string s = std::string("kind=") + kind_name(k.kind);
  if (k.s_index) s += " s=" + std::to_string(*k.s_index);
  return s + "\n";
}

inline std::string serialize_levi(const LeviData& levi, const Int& k_max = Int(4)) {
  std::ostringstream os;
  for (size_t i = 0; i < levi.components.size(); ++i) {
    const auto& c = levi.components[i];
    os << "component idx=" << i << " label=" << to_string(c.label)
       << " scale=" << c.delta_scale.get_str() << " basis=";
    for (size_t j = 0; j < c.basis.size(); ++j) {
      if (j) os << "|";
      os << "(" << vec_str(c.basis[j]) << ")";
    }
    os << "\n";
  }
  for (Int k = 1; k <= k_max; ++k)
    os << "complement k=" << k.get_str() << " dim=" << levi.complement_rank(k).get_str() << "\n";
  return os.str();
}

inline std::string serialize_table_rows(const std::vector<LeviTableRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "row ambient=" << to_string(r.ambient) << " alpha0=" << r.alpha0 << " S=";
    for (size_t i = 0; i < r.S.size(); ++i) {
      if (i) os << ",";
      os << r.S[i];
    }
    os << " levi=" << to_string(r.recognized) << "\n";
  }
  return os.str();
}

inline std::string serialize_character(const Character& direct, const Character& product) {
  std::ostringstream os;
  Character all = direct;
  for (const auto& [w, c] : product)
    if (!all.count(w)) all[w] = 0;
  for (const auto& [w, unused] : all) {
    auto d = direct.find(w);
    auto p = product.find(w);
    Int dv = d == direct.end() ? Int(0) : d->second;
    Int pv = p == product.end() ? Int(0) : p->second;
    os << "coeff weight=" << weight_str(w) << " basis=" << dv.get_str() << " product=" << pv.get_str()
       << " equal=" << (dv == pv ? 1 : 0) << "\n";
  }
  return os.str();
}

inline std::string serialize_primitive_report(const PrimitiveReport& rep) {
  std::ostringstream os;
  for (const auto& w : rep.windows)
    os << "window weight=" << weight_str(w.weight) << " dim=" << w.columns.size()
       << " kernel=" << w.kernel.size() << " top=" << w.top_dim << " excess=" << w.excess_dim << "\n";
  return os.str();
}

inline std::string serialize_verdict(const ReductionVerdict& v) {
  std::ostringstream os;
  os << "verdict=" << (v.outcome == ReductionVerdict::PASS ? "PASS" : "INCONCLUSIVE") << " detail=\""
     << v.detail << "\"\n";
  return os.str();
}

// module snapshot: window basis (labels + weights) and the exact action
// matrices of the given operators, in a byte-stable order
inline std::string serialize_snapshot(InducedModule& m, const std::vector<BasisElement>& ops) {
  std::ostringstream os;
  for (EntryId id : m.window())
    os << "basis id=" << id << " weight=" << weight_str(m.weight_of(id)) << " label=\""
       << m.entry_label(id) << "\"\n";
  for (size_t oi = 0; oi < ops.size(); ++oi) {
    for (EntryId id : m.window())
      for (const auto& [img, c] : m.act(ops[oi], id))
        os << "action op=" << oi << " from=" << id << " to=" << img << " coeff=" << rat_str(c)
           << "\n";
  }
  return os.str();
}

// the shipped GCM catalog: label, matrix, marks per admissible affine label
inline std::string catalog_text(int max_nodes = 9) {
  std::ostringstream os;
  os << format_version() << " gcm-catalog max-nodes=" << max_nodes << "\n";
  for (const auto& t : affine_catalog(max_nodes)) {
    Gcm g = affine_gcm(t);
    os << "gcm label=" << to_string(t) << " matrix=";
    for (int i = 0; i < g.n; ++i) {
      if (i) os << ";";
      os << vec_str(g.a[i]);
    }
    os << " marks=" << vec_str(g.marks) << "\n";
  }
  return os.str();
}

}  // namespace kmlie
