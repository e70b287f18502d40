// Series/rank/twist labels for finite and affine Cartan types, with the
// admissibility catalog and the "X<rank>~<twist>" serialization.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmlie {

// twist 0 denotes a finite type; twist 1..3 the affine families X_rank^(twist).
// For affine labels `rank` is the subscript of the underlying finite diagram
// (so D4~3 has a 3x3 matrix), not the matrix dimension.
struct TypeLabel {
  char series = 'A';
  int rank = 1;
  int twist = 1;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

inline bool admissible_finite(const TypeLabel& t) {
  if (t.twist != 0) return false;
  switch (t.series) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 3;  // the 2-node double edge is canonically C2
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

inline bool admissible_affine(const TypeLabel& t) {
  switch (t.twist) {
    case 1:
      switch (t.series) {
        case 'A': return t.rank >= 1;
        case 'B': return t.rank >= 3;
        case 'C': return t.rank >= 2;
        case 'D': return t.rank >= 4;
        case 'E': return t.rank >= 6 && t.rank <= 8;
        case 'F': return t.rank == 4;
        case 'G': return t.rank == 2;
        default: return false;
      }
    case 2:
      switch (t.series) {
        case 'A': return (t.rank >= 2 && t.rank % 2 == 0) || (t.rank >= 5 && t.rank % 2 == 1);
        case 'D': return t.rank >= 3;
        case 'E': return t.rank == 6;
        default: return false;
      }
    case 3: return t.series == 'D' && t.rank == 4;
    default: return false;
  }
}

inline std::string to_string(const TypeLabel& t) {
  std::string s(1, t.series);
  s += std::to_string(t.rank);
  if (t.twist > 0) {
    s += "~";
    s += std::to_string(t.twist);
  }
  return s;
}

// Accepts "A2~1", "D4~3", "C3" (finite).
inline TypeLabel parse_label(const std::string& s) {
  if (s.empty() || s[0] < 'A' || s[0] > 'G') throw std::invalid_argument("bad type label: '" + s + "'");
  TypeLabel t;
  t.series = s[0];
  size_t tilde = s.find('~');
  try {
    t.rank = std::stoi(s.substr(1, tilde == std::string::npos ? std::string::npos : tilde - 1));
    t.twist = tilde == std::string::npos ? 0 : std::stoi(s.substr(tilde + 1));
  } catch (...) {
    throw std::invalid_argument("bad type label: '" + s + "'");
  }
  if (t.twist == 0 ? !admissible_finite(t) : !admissible_affine(t))
    throw std::invalid_argument("inadmissible type label: '" + s + "'");
  return t;
}

// Every admissible affine label with matrix dimension <= max_nodes, in a fixed
// deterministic order. Used by the diagram recognizer.
inline std::vector<TypeLabel> affine_catalog(int max_nodes) {
  std::vector<TypeLabel> out;
  auto add = [&](char s, int r, int tw, int nodes) {
    if (nodes <= max_nodes) out.push_back({s, r, tw});
  };
  for (int r = 1; r + 1 <= max_nodes; ++r) add('A', r, 1, r + 1);
  for (int r = 3; r + 1 <= max_nodes; ++r) add('B', r, 1, r + 1);
  for (int r = 2; r + 1 <= max_nodes; ++r) add('C', r, 1, r + 1);
  for (int r = 4; r + 1 <= max_nodes; ++r) add('D', r, 1, r + 1);
  for (int r = 6; r <= 8; ++r) add('E', r, 1, r + 1);
  add('F', 4, 1, 5);
  add('G', 2, 1, 3);
  for (int n = 1; n <= max_nodes - 1; ++n) add('A', 2 * n, 2, n + 1);        // A_{2n}^(2)
  for (int n = 3; n <= max_nodes - 1; ++n) add('A', 2 * n - 1, 2, n + 1);    // A_{2n-1}^(2)
  for (int n = 3; n <= max_nodes; ++n) add('D', n, 2, n);                    // D_n^(2)
  add('E', 6, 2, 5);
  add('D', 4, 3, 3);
  return out;
}

inline std::vector<TypeLabel> finite_catalog(int max_nodes) {
  std::vector<TypeLabel> out;
  for (int r = 1; r <= max_nodes; ++r) out.push_back({'A', r, 0});
  for (int r = 2; r <= max_nodes; ++r) out.push_back({'C', r, 0});
  for (int r = 3; r <= max_nodes; ++r) out.push_back({'B', r, 0});
  for (int r = 4; r <= max_nodes; ++r) out.push_back({'D', r, 0});
  for (int r = 6; r <= 8 && r <= max_nodes; ++r) out.push_back({'E', r, 0});
  if (max_nodes >= 4) out.push_back({'F', 4, 0});
  if (max_nodes >= 2) out.push_back({'G', 2, 0});
  return out;
}

}  // namespace kmlie
