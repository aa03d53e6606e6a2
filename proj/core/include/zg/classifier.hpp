#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zg/group.hpp"
#include "zg/ring.hpp"
#include "zg/units.hpp"

namespace zg {

/// Which case of the criterion a finite group falls into.
enum class CriterionBranch { Abelian, Hamiltonian2Group, NonNormalSubgroup, HamiltonianOddTorsion };

const char* to_string(CriterionBranch b);

/**
 * Whether the symmetric units of ZG form a group, for finite G. The answer
 * is yes exactly for abelian groups and hamiltonian 2-groups. For finite
 * groups every element is torsion, so no ordering hypothesis enters.
 */
struct CriterionReport {
  std::string group_description;
  Classification flags;
  bool prediction = false;
  CriterionBranch branch = CriterionBranch::Abelian;
};

CriterionReport criterion(const FiniteGroup& group, std::string description = {});

/// Explicit noncommuting symmetric units for a group whose criterion is
/// false. Throws PreconditionViolation when the prediction is true.
SymmetricPairReport find_counterexample(const GroupPtr& group);

/// Upper bound on (2*bound+1)^|G| candidate vectors for bounded_unit_search.
inline constexpr double kMaxSearchCandidates = 1e7;

struct SearchResult {
  long long bound = 0;
  /// Normalized units with coefficients in [-bound, bound], sorted by
  /// coefficient vector.
  std::vector<UnitCertificate> units_found;
  bool all_trivial = true;
};

/// Enumerates every augmentation-1 coefficient vector in the box and keeps
/// the certified units. `threads` > 1 splits the box; the result does not
/// depend on it. Throws SizeLimitExceeded above kMaxSearchCandidates.
SearchResult bounded_unit_search(const GroupPtr& group, long long bound, unsigned threads = 1);

/// Falsification probe for groups with a true prediction: builds seeded
/// samples of symmetric units and checks that all pairwise products are
/// symmetric and all pairs commute. True when no violation is found.
bool closure_probe(const GroupPtr& group, std::size_t samples, std::uint64_t seed);

}  // namespace zg
