#ifndef HARDBOARD_SEARCH_HPP_
#define HARDBOARD_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hardboard/gadget_template.hpp"
#include "hardboard/rules.hpp"

namespace hardboard {

enum class SearchOutcome { Achievable, NotAchievable, BudgetExhausted };
const char* to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NotAchievable;
  std::vector<Move> principal_line;
  uint64_t nodes = 0;
};

struct SearchLimits {
  uint64_t max_nodes = 200'000'000;  // BudgetExhausted when hit
};

// Depth-bounded AND-OR search: the attacker tries to realize the
// objective within ply_budget plies, the defender to prevent it. A
// position repeated with the same side to move along the current line
// scores as not achieved for the attacker. Results are exact for the
// given budget unless the node cap aborts the search.
SearchResult search_objective(const BoardPosition& start, Color attacker,
                              Objective objective, Coord target,
                              int ply_budget, const FrozenMask* frozen,
                              const SearchLimits& limits = {});

}  // namespace hardboard

#endif  // HARDBOARD_SEARCH_HPP_
