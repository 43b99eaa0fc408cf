#include "cpgames/equilibria.hpp"

#include <algorithm>
#include <unordered_map>

namespace cpgames {

ComGraph com_graph(const CpGame &game) {
    return ComGraph{game.situations, change_of_mind(game)};
}

namespace {

struct IndexedGraph {
    std::unordered_map<std::string, int> ids;
    std::vector<const std::string *> names;
    std::vector<std::vector<int>> adjacency;
};

IndexedGraph index_graph(const ComGraph &graph) {
    IndexedGraph g;
    g.ids.reserve(graph.vertices.size());
    g.names.reserve(graph.vertices.size());
    for (const auto &name : graph.vertices) {
        if (!g.ids.emplace(name, static_cast<int>(g.names.size())).second) {
            throw GameError("duplicate vertex '" + name + "'");
        }
        g.names.push_back(&name);
    }
    g.adjacency.resize(g.names.size());
    for (const auto &[from, to] : graph.edges.pairs()) {
        auto f = g.ids.find(from);
        auto t = g.ids.find(to);
        if (f == g.ids.end() || t == g.ids.end()) {
            throw GameError("edge endpoint '" + (f == g.ids.end() ? from : to) +
                            "' is not a vertex");
        }
        g.adjacency[f->second].push_back(t->second);
    }
    return g;
}

} // namespace

std::vector<Scc> tarjan_scc(const ComGraph &graph) {
    IndexedGraph g = index_graph(graph);
    const int n = static_cast<int>(g.names.size());

    std::vector<int> number(n, -1);
    std::vector<int> low(n, 0);
    std::vector<signed char> on_stack(n, 0);
    std::vector<int> stack;
    stack.reserve(n);
    // Explicit DFS stack of (vertex, next edge index); product-space games
    // can produce chains deep enough to overflow the call stack.
    std::vector<std::pair<int, std::size_t>> frames;
    std::vector<Scc> result;
    int counter = 0;

    for (int root = 0; root < n; ++root) {
        if (number[root] != -1) {
            continue;
        }
        frames.emplace_back(root, 0);
        while (!frames.empty()) {
            const int v = frames.back().first;
            std::size_t edge = frames.back().second;
            if (edge == 0) {
                number[v] = low[v] = counter++;
                on_stack[v] = 1;
                stack.push_back(v);
            }
            bool descended = false;
            const std::vector<int> &successors = g.adjacency[v];
            while (edge < successors.size()) {
                const int w = successors[edge++];
                if (number[w] == -1) {
                    frames.back().second = edge;
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
            }
            if (descended) {
                continue;
            }
            if (low[v] == number[v]) {
                Scc component;
                component.index = static_cast<int>(result.size());
                int member;
                do {
                    member = stack.back();
                    stack.pop_back();
                    on_stack[member] = 0;
                    component.members.insert(*g.names[member]);
                } while (member != v);
                result.push_back(std::move(component));
            }
            frames.pop_back();
            if (!frames.empty()) {
                low[frames.back().first] = std::min(low[frames.back().first], low[v]);
            }
        }
    }
    return result;
}

Condensation condense(const ComGraph &graph, const std::vector<Scc> &sccs) {
    std::map<std::string, int> component_of;
    std::size_t covered = 0;
    for (std::size_t i = 0; i < sccs.size(); ++i) {
        if (sccs[i].members.empty()) {
            throw GameError("empty component in SCC partition");
        }
        for (const auto &member : sccs[i].members) {
            if (!component_of.emplace(member, static_cast<int>(i)).second) {
                throw GameError("SCC partition repeats vertex '" + member + "'");
            }
            ++covered;
        }
    }
    if (covered != graph.vertices.size()) {
        throw GameError("SCC partition does not cover the vertex set");
    }
    for (const auto &vertex : graph.vertices) {
        if (!component_of.count(vertex)) {
            throw GameError("SCC partition misses vertex '" + vertex + "'");
        }
    }

    Condensation condensation;
    condensation.components = sccs;
    for (const auto &[from, to] : graph.edges.pairs()) {
        const int a = component_of.at(from);
        const int b = component_of.at(to);
        if (a != b) {
            condensation.arcs.emplace(a, b);
        }
    }
    return condensation;
}

std::set<std::set<std::string>> cp_equilibria(const CpGame &game) {
    const ComGraph graph = com_graph(game);
    const Condensation condensation = condense(graph, tarjan_scc(graph));

    std::vector<bool> has_out(condensation.components.size(), false);
    for (const auto &[from, to] : condensation.arcs) {
        has_out[from] = true;
    }
    std::set<std::set<std::string>> result;
    for (std::size_t i = 0; i < condensation.components.size(); ++i) {
        if (!has_out[i]) {
            result.insert(condensation.components[i].members);
        }
    }
    return result;
}

EquilibriumReport classify(const CpGame &game) {
    const Relation com = change_of_mind(game);

    EquilibriumReport report;
    report.equilibria = cp_equilibria(game);
    for (const auto &equilibrium : report.equilibria) {
        const bool singleton = equilibrium.size() == 1;
        if (singleton && !com.contains(*equilibrium.begin(), *equilibrium.begin())) {
            report.abstract_nash.insert(*equilibrium.begin());
        } else {
            report.dynamic.insert(equilibrium);
        }
    }
    return report;
}

} // namespace cpgames
