#include "umlxml/validator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace umlxml {

namespace {

Location at(const UmlClass& c, std::string path = {}) {
    Location loc;
    loc.class_name = c.name;
    loc.path = std::move(path);
    return loc;
}

std::string indexed(std::string_view field, std::size_t i) {
    return std::string(field) + "[" + std::to_string(i) + "]";
}

// Child -> parent generalization graph over the first occurrence of each
// class name. Self-edges and unknown targets are left out; they have their
// own rules.
struct GeneralizationGraph {
    std::vector<std::vector<std::size_t>> parents;

    explicit GeneralizationGraph(const Diagram& d, const std::map<std::string, std::size_t>& index) {
        parents.resize(d.classes.size());
        for (std::size_t i = 0; i < d.classes.size(); ++i) {
            const auto& c = d.classes[i];
            const std::size_t node = index.at(c.name);
            for (const auto& r : c.relationships) {
                if (r.kind() != RelationKind::Generalization) continue;
                auto it = index.find(r.target());
                if (it == index.end() || it->second == node) continue;
                parents[node].push_back(it->second);
            }
        }
    }

    // Tarjan's algorithm; components come out with arbitrary order.
    std::vector<std::vector<std::size_t>> strongly_connected() const {
        const std::size_t n = parents.size();
        std::vector<int> order(n, -1), low(n, 0);
        std::vector<bool> on_stack(n, false);
        std::vector<std::size_t> stack;
        std::vector<std::vector<std::size_t>> components;
        int counter = 0;

        std::function<void(std::size_t)> visit = [&](std::size_t v) {
            order[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = true;
            for (auto w : parents[v]) {
                if (order[w] < 0) {
                    visit(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
            }
            if (low[v] == order[v]) {
                std::vector<std::size_t> component;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                components.push_back(std::move(component));
            }
        };
        for (std::size_t v = 0; v < n; ++v) {
            if (order[v] < 0) visit(v);
        }
        return components;
    }

    // Shortest cycle through `start` using only nodes of `component`.
    std::vector<std::size_t> witness_cycle(std::size_t start,
                                           const std::set<std::size_t>& component) const {
        std::map<std::size_t, std::size_t> came_from;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            const auto v = frontier.front();
            frontier.pop();
            for (auto w : parents[v]) {
                if (!component.count(w)) continue;
                if (w == start) {
                    std::vector<std::size_t> cycle{v};
                    while (cycle.back() != start) cycle.push_back(came_from.at(cycle.back()));
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
                if (!came_from.count(w)) {
                    came_from[w] = v;
                    frontier.push(w);
                }
            }
        }
        return {start};
    }
};

}  // namespace

std::vector<Diagnostic> validate_diagram(const Diagram& d) {
    std::map<std::string, std::size_t> first_index;
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
        first_index.emplace(d.classes[i].name, i);
    }

    // R4 findings, keyed by the class they are reported on.
    std::map<std::size_t, std::vector<std::size_t>> cycles;
    const GeneralizationGraph graph(d, first_index);
    for (const auto& component : graph.strongly_connected()) {
        if (component.size() < 2) continue;
        const auto start = *std::min_element(component.begin(), component.end());
        const std::set<std::size_t> members(component.begin(), component.end());
        cycles[start] = graph.witness_cycle(start, members);
    }

    std::vector<Diagnostic> out;
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
        const auto& c = d.classes[i];

        // R1
        if (first_index.at(c.name) != i) {
            out.push_back(make_error(codes::kDuplicateClassName,
                                     "class name '" + c.name + "' is already used by class #" +
                                         std::to_string(first_index.at(c.name) + 1),
                                     at(c)));
        }

        // R2
        for (std::size_t r = 0; r < c.relationships.size(); ++r) {
            const auto& rel = c.relationships[r];
            if (!first_index.count(rel.target())) {
                out.push_back(make_error(codes::kUnknownTarget,
                                         std::string(to_string(rel.kind())) + " targets unknown class '" +
                                             rel.target() + "'",
                                         at(c, indexed("relationships", r))));
            }
        }

        // R3
        for (std::size_t r = 0; r < c.relationships.size(); ++r) {
            const auto& rel = c.relationships[r];
            if (rel.kind() == RelationKind::Generalization) continue;
            if (!rel.cardinality() || !rel.cardinality()->valid()) {
                out.push_back(make_error(codes::kBadCardinality,
                                         std::string(to_string(rel.kind())) + " to '" + rel.target() +
                                             "' has no valid cardinality",
                                         at(c, indexed("relationships", r))));
            }
        }

        // R4
        for (std::size_t r = 0; r < c.relationships.size(); ++r) {
            const auto& rel = c.relationships[r];
            if (rel.kind() == RelationKind::Generalization && rel.target() == c.name) {
                out.push_back(make_error(codes::kSelfGeneralization,
                                         "class '" + c.name + "' generalizes itself",
                                         at(c, indexed("relationships", r))));
            }
        }
        if (auto it = cycles.find(i); it != cycles.end()) {
            std::string names;
            for (auto node : it->second) {
                if (!names.empty()) names += ", ";
                names += d.classes[node].name;
            }
            out.push_back(make_error(codes::kGeneralizationCycle,
                                     "generalization cycle [" + names + "]", at(c)));
        }

        // R5
        std::set<std::string> seen;
        for (std::size_t a = 0; a < c.attributes.size(); ++a) {
            if (!seen.insert(c.attributes[a].name).second) {
                out.push_back(make_error(codes::kDuplicateMember,
                                         "duplicate attribute '" + c.attributes[a].name + "'",
                                         at(c, indexed("attributes", a))));
            }
        }
        seen.clear();
        for (std::size_t m = 0; m < c.methods.size(); ++m) {
            if (!seen.insert(c.methods[m].name).second) {
                out.push_back(make_error(codes::kDuplicateMember,
                                         "duplicate method '" + c.methods[m].name + "'",
                                         at(c, indexed("methods", m))));
            }
        }

        // R6
        for (std::size_t r = 0; r < c.relationships.size(); ++r) {
            const auto& rel = c.relationships[r];
            if (rel.kind() != RelationKind::Generalization && rel.target() == c.name) {
                out.push_back(make_warning(codes::kSelfRelationWarning,
                                           std::string(to_string(rel.kind())) + " of '" + c.name +
                                               "' targets its own class",
                                           at(c, indexed("relationships", r))));
            }
        }
    }
    return out;
}

}  // namespace umlxml
