#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpgames {

// Raised for every validation or contract failure in the library.
struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SituationPair = std::pair<std::string, std::string>;

// Finite binary relation over situation names, stored extensionally as a
// set of ordered pairs. The same carrier is used for conversion, preference
// and change of mind. No structural property (transitivity, irreflexivity)
// is assumed or enforced; self-pairs are allowed.
class Relation {
public:
    Relation() = default;
    Relation(std::initializer_list<SituationPair> pairs);
    explicit Relation(const std::vector<SituationPair> &pairs);

    void add(const std::string &from, const std::string &to);
    bool contains(const std::string &from, const std::string &to) const;
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    const std::set<SituationPair> &pairs() const { return pairs_; }

    // All t with (from, t) in the relation.
    std::set<std::string> successors(const std::string &from) const;
    // Every name occurring on either side of a pair.
    std::set<std::string> endpoints() const;

    Relation intersect(const Relation &other) const;
    Relation unite(const Relation &other) const;

    bool operator==(const Relation &) const = default;
    auto operator<=>(const Relation &) const = default;

private:
    std::set<SituationPair> pairs_;
};

// Transitive closure of a relation: (a, c) is in the result iff a path of
// one or more steps leads from a to c. The input is not modified.
Relation close_transitive(const Relation &relation);

// A finite game: agents, situations, and one conversion and one preference
// relation per agent. Immutable after construction; build through
// build_game, which validates. Agent and situation lists are kept sorted.
struct CpGame {
    std::vector<std::string> agents;
    std::vector<std::string> situations;
    std::map<std::string, Relation> conversion;
    std::map<std::string, Relation> preference;

    bool has_agent(const std::string &name) const;
    bool has_situation(const std::string &name) const;
};

// Validates and assembles a game. Relations are deduplicated; no closure
// (reflexive, transitive or symmetric) is ever applied to the inputs.
// Throws GameError on duplicate names, empty lists, relation endpoints
// that are not declared situations, or relation maps whose key set is not
// exactly the agent list.
CpGame build_game(const std::vector<std::string> &agents,
                  const std::vector<std::string> &situations,
                  const std::map<std::string, std::vector<SituationPair>> &conversion,
                  const std::map<std::string, std::vector<SituationPair>> &preference);

// conversion[agent] intersected with preference[agent].
Relation change_of_mind_agent(const CpGame &game, const std::string &agent);

// Union of the per-agent changes of mind.
Relation change_of_mind(const CpGame &game);

// True iff no agent can convert `situation` to anything it prefers, i.e.
// the situation has no outgoing change-of-mind edge. A self-pair present
// in both relations counts as an outgoing edge.
bool is_abstract_nash(const CpGame &game, const std::string &situation);

// True iff both games have the same change-of-mind relation. Requires
// identical situation sets; agent sets may differ.
bool com_equivalent(const CpGame &a, const CpGame &b);

} // namespace cpgames
