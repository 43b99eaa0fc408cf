#pragma once

#include "cpgames/core.hpp"

namespace cpgames {

// The change-of-mind graph of a game: its situations plus the union
// change-of-mind relation as edge set.
struct ComGraph {
    std::vector<std::string> vertices; // sorted
    Relation edges;
};

ComGraph com_graph(const CpGame &game);

struct Scc {
    std::set<std::string> members;
    int index = 0;
};

// Quotient of a graph by its SCC partition: one node per component, an arc
// (i, j) iff some edge runs from component i to component j with i != j.
// Acyclic by construction.
struct Condensation {
    std::vector<Scc> components; // reverse topological order
    std::set<std::pair<int, int>> arcs;
};

// SCC partition of the graph in O(|V| + |E|), components emitted in
// reverse topological order (sinks first). Iterative, no recursion.
std::vector<Scc> tarjan_scc(const ComGraph &graph);

// Throws GameError if `sccs` is not a partition of the vertex set.
Condensation condense(const ComGraph &graph, const std::vector<Scc> &sccs);

// Member sets of the sink components of the condensation of the
// change-of-mind graph. Nonempty for every valid game.
std::set<std::set<std::string>> cp_equilibria(const CpGame &game);

struct EquilibriumReport {
    std::set<std::set<std::string>> equilibria;
    // Singleton equilibria without a change-of-mind self-loop. A singleton
    // sink *with* a self-loop is reported as dynamic instead.
    std::set<std::string> abstract_nash;
    std::set<std::set<std::string>> dynamic;
};

EquilibriumReport classify(const CpGame &game);

} // namespace cpgames
