#pragma once

#include <optional>
#include <string>

#include "dfb/ext.hpp"

namespace dfb {

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undetermined };
std::string verdict_name(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undetermined;
  // M(-twist) ≅ N; zero unless twist normalization was requested.
  int twist = 0;
  // Isomorphism twist(M, -twist) -> N when the verdict is Isomorphic.
  std::optional<ModuleMap> map;
  std::string reason;

  bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

/// Decides M ≅ N by invariants and a deterministic search for a surjection
/// in Hom(M, N)_0. With up_to_twist, M is first shifted so that the lowest
/// generator degrees agree.
IsoResult is_isomorphic(const ModPtr& M, const ModPtr& N, bool up_to_twist = false);

// Map M -> minimal presentation and back, from prune().
ModuleMap to_minimal(const ModPtr& M, const Pruned& p);
ModuleMap from_minimal(const ModPtr& M, const Pruned& p);

}  // namespace dfb
