#pragma once

#include "quillen/collection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quillen {

struct SearchLimits {
  std::uint64_t cap = default_enumeration_cap();
  unsigned max_rank = 4;
  /// Stop after this many collections; 0 means collect all of them.
  std::size_t max_results = 1;
  /// Wall-clock budget in seconds; 0 disables it.
  double time_budget = 0;
  /// Skip the central p-element short-circuit and search anyway.
  bool force = false;
  /// Quantify over line frames instead of all ordered bases.
  bool frame_reduction = true;
  /// Search one maximal E per G-conjugacy class. Off by default; negative
  /// verdicts are always produced without it.
  bool conjugacy_reduction = false;
  /// Re-run is_admissible (enumerated maximality) on every hit.
  bool verify_hits = true;
};

enum class SearchOutcome { Found, ExhaustivelyNone, Obstructed, Capped };
const char *to_string(SearchOutcome o);

struct SearchStats {
  std::uint64_t group_order = 0;
  unsigned p_rank = 0;
  std::size_t maximal_subgroups = 0;
  std::size_t subgroups_searched = 0;
  std::size_t skipped_by_rank = 0;
  std::size_t frames = 0;          // ordered bases tried
  std::size_t candidate_sets = 0; // distinct (hyperplane, line) filters
  std::size_t tuples_tested = 0;  // complete c-tuples reached
  std::size_t nodes_visited = 0;  // backtracking nodes
  double seconds = 0;
};

struct SearchResult {
  std::string group;
  unsigned p = 0;
  SearchOutcome outcome = SearchOutcome::Capped;
  std::vector<Collection> found;
  std::optional<ObstructionCertificate> obstruction;
  SearchStats stats;
  std::string detail;
};

/// Exhaustive search for admissible collections on every maximal elementary
/// abelian p-subgroup of an enumerable G.
SearchResult search_admissible(const GroupSpec &G, unsigned p,
                               const SearchLimits &limits = {});

} // namespace quillen
