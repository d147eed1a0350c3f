#pragma once

#include <map>
#include <memory>
#include <vector>

#include "dfb/module.hpp"

namespace dfb {

/// Minimal graded free resolution F_length -> ... -> F_0 -> M.
struct FreeResolution {
  ModPtr module;                         // minimal presentation of the input, coker d_1
  ModPtr input;                          // the module as given
  Matrix to_min;                         // input generators in terms of F_0
  std::vector<int> kept;                 // input generators that form F_0
  std::vector<std::vector<int>> degrees; // generator degrees of F_i, i = 0..length
  std::vector<Matrix> maps;              // maps[i-1] = d_i : F_i -> F_{i-1}
  bool minimal = true;

  int length() const { return static_cast<int>(degrees.size()) - 1; }
  const Matrix& d(int i) const { return maps.at(i - 1); }
  int rank(int i) const { return static_cast<int>(degrees.at(i).size()); }
  std::vector<int> betti() const;
  // degree -> multiplicity for each homological index
  std::vector<std::map<int, int>> graded_betti() const;
  // coker d_{i+1} = Syz^i M presented by d_{i+1} (i >= 1)
  ModPtr syzygy_module(int i) const;
};

/// Minimal resolution to the given length; cached on the module object.
std::shared_ptr<const FreeResolution> free_resolution(const ModPtr& M, int length);

struct ResolutionCheck {
  bool composites_vanish = true;  // d_i d_{i+1} = 0
  bool exact = true;              // ker d_i = im d_{i+1}, checked by elimination
  bool minimal = true;            // no unit entries
  bool ok() const { return composites_vanish && exact && minimal; }
};
ResolutionCheck verify_resolution(const FreeResolution& F);

}  // namespace dfb
