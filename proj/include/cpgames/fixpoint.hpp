#pragma once

#include "cpgames/core.hpp"

namespace cpgames {

// Exhaustive subset enumeration is limited to this many situations
// (32768 subsets); use cp_equilibria for anything larger.
inline constexpr std::size_t kExhaustiveSituationLimit = 15;

// Closes a subset of situations under the change-of-mind relation:
// the result contains every situation reachable in zero or more
// change-of-mind steps from a member of `subset`.
std::set<std::string> update(const CpGame &game, const std::set<std::string> &subset);

bool is_fixed_point(const CpGame &game, const std::set<std::string> &subset);

// All nonempty fixed points of `update` that have no nonempty proper
// subset mapped into itself. Enumerates every subset of the situation
// set; deliberately independent of the SCC-based equilibrium route.
std::set<std::set<std::string>> least_nonempty_fixed_points(const CpGame &game);

// True iff the least nonempty fixed points coincide with cp_equilibria.
bool verify_lemma_least_fp(const CpGame &game);

} // namespace cpgames
