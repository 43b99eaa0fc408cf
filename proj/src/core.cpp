#include "cpgames/core.hpp"

#include <algorithm>
#include <deque>

namespace cpgames {

Relation::Relation(std::initializer_list<SituationPair> pairs) : pairs_(pairs) {}

Relation::Relation(const std::vector<SituationPair> &pairs)
    : pairs_(pairs.begin(), pairs.end()) {}

void Relation::add(const std::string &from, const std::string &to) {
    pairs_.emplace(from, to);
}

bool Relation::contains(const std::string &from, const std::string &to) const {
    return pairs_.count({from, to}) > 0;
}

std::set<std::string> Relation::successors(const std::string &from) const {
    std::set<std::string> result;
    for (auto it = pairs_.lower_bound({from, std::string()});
         it != pairs_.end() && it->first == from; ++it) {
        result.insert(it->second);
    }
    return result;
}

std::set<std::string> Relation::endpoints() const {
    std::set<std::string> result;
    for (const auto &[from, to] : pairs_) {
        result.insert(from);
        result.insert(to);
    }
    return result;
}

Relation Relation::intersect(const Relation &other) const {
    Relation result;
    for (const auto &pair : pairs_) {
        if (other.pairs_.count(pair)) {
            result.pairs_.insert(pair);
        }
    }
    return result;
}

Relation Relation::unite(const Relation &other) const {
    Relation result = *this;
    result.pairs_.insert(other.pairs_.begin(), other.pairs_.end());
    return result;
}

Relation close_transitive(const Relation &relation) {
    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto &[from, to] : relation.pairs()) {
        adjacency[from].push_back(to);
    }

    // One BFS per source; every node reached in >= 1 step becomes a pair.
    Relation closed;
    for (const auto &[source, direct] : adjacency) {
        std::set<std::string> seen;
        std::deque<std::string> queue(direct.begin(), direct.end());
        while (!queue.empty()) {
            std::string node = queue.front();
            queue.pop_front();
            if (!seen.insert(node).second) {
                continue;
            }
            closed.add(source, node);
            auto next = adjacency.find(node);
            if (next != adjacency.end()) {
                queue.insert(queue.end(), next->second.begin(), next->second.end());
            }
        }
    }
    return closed;
}

bool CpGame::has_agent(const std::string &name) const {
    return std::binary_search(agents.begin(), agents.end(), name);
}

bool CpGame::has_situation(const std::string &name) const {
    return std::binary_search(situations.begin(), situations.end(), name);
}

namespace {

std::set<std::string> unique_names(const std::vector<std::string> &names,
                                   const std::string &what) {
    if (names.empty()) {
        throw GameError(what + " list is empty");
    }
    std::set<std::string> seen;
    for (const auto &name : names) {
        if (name.empty()) {
            throw GameError("empty " + what + " name");
        }
        if (!seen.insert(name).second) {
            throw GameError("duplicate " + what + " name '" + name + "'");
        }
    }
    return seen;
}

std::map<std::string, Relation>
checked_relations(const std::map<std::string, std::vector<SituationPair>> &input,
                  const std::set<std::string> &agents,
                  const std::set<std::string> &situations,
                  const std::string &what) {
    for (const auto &agent : agents) {
        if (!input.count(agent)) {
            throw GameError(what + " relation missing for agent '" + agent + "'");
        }
    }
    std::map<std::string, Relation> result;
    for (const auto &[agent, pairs] : input) {
        if (!agents.count(agent)) {
            throw GameError(what + " relation given for unknown agent '" + agent + "'");
        }
        Relation relation;
        for (const auto &[from, to] : pairs) {
            for (const auto &name : {from, to}) {
                if (!situations.count(name)) {
                    throw GameError(what + "[" + agent + "]: unknown situation '" + name +
                                    "' in pair (" + from + ", " + to + ")");
                }
            }
            relation.add(from, to);
        }
        result.emplace(agent, std::move(relation));
    }
    return result;
}

} // namespace

CpGame build_game(const std::vector<std::string> &agents,
                  const std::vector<std::string> &situations,
                  const std::map<std::string, std::vector<SituationPair>> &conversion,
                  const std::map<std::string, std::vector<SituationPair>> &preference) {
    std::set<std::string> agent_set = unique_names(agents, "agent");
    std::set<std::string> situation_set = unique_names(situations, "situation");

    CpGame game;
    game.agents.assign(agent_set.begin(), agent_set.end());
    game.situations.assign(situation_set.begin(), situation_set.end());
    game.conversion = checked_relations(conversion, agent_set, situation_set, "conversion");
    game.preference = checked_relations(preference, agent_set, situation_set, "preference");
    return game;
}

Relation change_of_mind_agent(const CpGame &game, const std::string &agent) {
    if (!game.has_agent(agent)) {
        throw GameError("unknown agent '" + agent + "'");
    }
    return game.conversion.at(agent).intersect(game.preference.at(agent));
}

Relation change_of_mind(const CpGame &game) {
    Relation result;
    for (const auto &agent : game.agents) {
        result = result.unite(change_of_mind_agent(game, agent));
    }
    return result;
}

bool is_abstract_nash(const CpGame &game, const std::string &situation) {
    if (!game.has_situation(situation)) {
        throw GameError("unknown situation '" + situation + "'");
    }
    for (const auto &agent : game.agents) {
        const Relation &preference = game.preference.at(agent);
        for (const auto &target : game.conversion.at(agent).successors(situation)) {
            if (preference.contains(situation, target)) {
                return false;
            }
        }
    }
    return true;
}

bool com_equivalent(const CpGame &a, const CpGame &b) {
    if (a.situations != b.situations) {
        throw GameError("situation sets differ");
    }
    return change_of_mind(a) == change_of_mind(b);
}

} // namespace cpgames
