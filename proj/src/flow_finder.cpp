// Copyright 2026 The mbqc-flow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbqc/flow_finder.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mbqc {

namespace {

/// Dense index over the vertex list, for the search's constraint graph.
struct Indexer {
    explicit Indexer(const OpenGraphState &g) : vertices(g.vertices()) {
        for (size_t k = 0; k < vertices.size(); k++) {
            index[vertices[k]] = k;
        }
    }
    size_t operator()(Vertex v) const {
        return index.at(v);
    }
    std::vector<Vertex> vertices;
    std::map<Vertex, size_t> index;
};

/// Constraint pairs (lower, upper) contributed by one measured vertex.
void append_constraints(const OpenGraphState &g, Vertex i, Vertex fi, bool loop,
                        std::vector<std::pair<Vertex, Vertex>> &out) {
    if (!loop) {
        out.emplace_back(i, fi);
    }
    for (Vertex k : g.neighbors(fi)) {
        if (k != i) {
            out.emplace_back(i, k);
        }
    }
}

/// Directed "strictly below" relation with edge multiplicities so that the
/// backtracking search can undo insertions.
class ConstraintGraph {
   public:
    explicit ConstraintGraph(size_t n) : count_(n, std::vector<int>(n, 0)) {
    }

    bool reaches(size_t from, size_t to) const {
        if (from == to) {
            return true;
        }
        std::vector<char> seen(count_.size(), 0);
        std::vector<size_t> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < count_.size(); w++) {
                if (count_[u][w] > 0 && !seen[w]) {
                    if (w == to) {
                        return true;
                    }
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return false;
    }

    /// Adds lo < hi; returns false (and adds nothing) if that closes a cycle.
    bool try_add(size_t lo, size_t hi) {
        if (count_[lo][hi] == 0 && reaches(hi, lo)) {
            return false;
        }
        count_[lo][hi]++;
        return true;
    }

    void remove(size_t lo, size_t hi) {
        count_[lo][hi]--;
    }

   private:
    std::vector<std::vector<int>> count_;
};

class FlowSearch {
   public:
    FlowSearch(const OpenGraphState &g, const std::set<Vertex> &loopable)
        : g_(g), loopable_(loopable), index_(g), constraints_(g.vertices().size()), measured_(g.measured()) {
    }

    bool run() {
        return assign(0);
    }

    std::map<Vertex, Vertex> f;
    std::set<Vertex> loops;

   private:
    std::vector<Vertex> candidates(Vertex i) const {
        std::vector<Vertex> out;
        for (Vertex k : g_.neighbors(i)) {
            if (!g_.is_input(k) && !used_.count(k)) {
                out.push_back(k);
            }
        }
        if (loopable_.count(i) && !g_.is_input(i) && !used_.count(i)) {
            out.push_back(i);
        }
        return out;
    }

    bool assign(size_t pos) {
        if (pos == measured_.size()) {
            return true;
        }
        Vertex i = measured_[pos];
        for (Vertex fi : candidates(i)) {
            bool loop = fi == i;
            std::vector<std::pair<Vertex, Vertex>> pairs;
            append_constraints(g_, i, fi, loop, pairs);

            size_t added = 0;
            bool consistent = true;
            for (const auto &[lo, hi] : pairs) {
                if (!constraints_.try_add(index_(lo), index_(hi))) {
                    consistent = false;
                    break;
                }
                added++;
            }
            if (consistent) {
                used_.insert(fi);
                f[i] = fi;
                if (loop) {
                    loops.insert(i);
                }
                if (assign(pos + 1)) {
                    return true;
                }
                used_.erase(fi);
                f.erase(i);
                loops.erase(i);
            }
            for (size_t k = 0; k < added; k++) {
                constraints_.remove(index_(pairs[k].first), index_(pairs[k].second));
            }
        }
        return false;
    }

    const OpenGraphState &g_;
    const std::set<Vertex> &loopable_;
    Indexer index_;
    ConstraintGraph constraints_;
    std::vector<Vertex> measured_;
    std::set<Vertex> used_;
};

FlowSearchResult finish(const OpenGraphState &g, std::map<Vertex, Vertex> f, std::set<Vertex> loops) {
    FlowSearchResult result;
    auto order = dependency_order(g, f, loops);
    if (!order.acyclic()) {
        return result;
    }
    result.found = true;
    result.flow.f = std::move(f);
    result.flow.loops = std::move(loops);
    result.flow.levels = std::move(order.levels);
    result.depth = result.flow.depth();
    return result;
}

FlowSearchResult search(const OpenGraphState &g, const std::set<Vertex> &loopable) {
    if (g.measured().size() > g.prepared().size()) {
        return {};
    }
    FlowSearch s(g, loopable);
    if (!s.run()) {
        return {};
    }
    return finish(g, std::move(s.f), std::move(s.loops));
}

}  // namespace

DependencyOrder dependency_order(const OpenGraphState &g, const std::map<Vertex, Vertex> &f,
                                 const std::set<Vertex> &loops) {
    Indexer index(g);
    size_t n = index.vertices.size();

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto &[i, fi] : f) {
        append_constraints(g, i, fi, fi == i && loops.count(i), pairs);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<std::vector<size_t>> above(n);
    std::vector<size_t> indegree(n, 0);
    for (const auto &[lo, hi] : pairs) {
        above[index(lo)].push_back(index(hi));
        indegree[index(hi)]++;
    }

    // Kahn's algorithm, tracking the longest chain into each vertex.
    std::vector<int> level(n, 0);
    std::vector<size_t> ready;
    for (size_t v = 0; v < n; v++) {
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    size_t processed = 0;
    while (!ready.empty()) {
        size_t u = ready.back();
        ready.pop_back();
        processed++;
        for (size_t w : above[u]) {
            level[w] = std::max(level[w], level[u] + 1);
            if (--indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }

    DependencyOrder result;
    if (processed == n) {
        for (size_t v = 0; v < n; v++) {
            result.levels[index.vertices[v]] = level[v];
        }
        return result;
    }

    // Every unprocessed vertex has an unprocessed predecessor; walking
    // predecessors from any of them must revisit a vertex.
    std::vector<std::vector<size_t>> below(n);
    for (const auto &[lo, hi] : pairs) {
        below[index(hi)].push_back(index(lo));
    }
    size_t start = 0;
    while (indegree[start] == 0) {
        start++;
    }
    std::vector<int> seen_at(n, -1);
    std::vector<size_t> walk;
    size_t u = start;
    while (seen_at[u] < 0) {
        seen_at[u] = static_cast<int>(walk.size());
        walk.push_back(u);
        for (size_t p : below[u]) {
            if (indegree[p] > 0) {
                u = p;
                break;
            }
        }
    }
    // walk[seen_at[u]..] traverses the cycle downwards; reverse for "<" order.
    std::vector<Vertex> cycle;
    for (size_t k = walk.size(); k-- > static_cast<size_t>(seen_at[u]);) {
        cycle.push_back(index.vertices[walk[k]]);
    }
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    cycle.push_back(cycle.front());
    result.cycle = std::move(cycle);
    return result;
}

FlowSearchResult find_flow(const OpenGraphState &g, bool allow_loops) {
    std::set<Vertex> loopable;
    if (allow_loops) {
        auto m = g.measured();
        loopable.insert(m.begin(), m.end());
    }
    return find_flow(g, loopable);
}

FlowSearchResult find_flow(const OpenGraphState &g, const std::set<Vertex> &loopable) {
    auto plain = search(g, {});
    if (plain.found || loopable.empty()) {
        return plain;
    }
    return search(g, loopable);
}

BiflowResult find_biflow(const OpenGraphState &g) {
    return {find_flow(g), find_flow(g.dual())};
}

FlowSearchResult brute_force_flow_oracle(const OpenGraphState &g, bool allow_loops, std::size_t max_vertices) {
    if (g.vertices().size() > max_vertices) {
        throw std::length_error("brute-force flow oracle limited to " + std::to_string(max_vertices) +
                                " vertices, graph has " + std::to_string(g.vertices().size()));
    }
    const auto measured = g.measured();
    const auto prepared = g.prepared();
    if (measured.size() > prepared.size()) {
        return {};
    }

    std::map<Vertex, Vertex> f;
    std::set<Vertex> loops;
    std::set<Vertex> used;
    FlowSearchResult result;

    std::function<bool(size_t)> enumerate = [&](size_t pos) -> bool {
        if (pos == measured.size()) {
            auto order = dependency_order(g, f, loops);
            if (!order.acyclic()) {
                return false;
            }
            result.found = true;
            result.flow.f = f;
            result.flow.loops = loops;
            result.flow.levels = std::move(order.levels);
            result.depth = result.flow.depth();
            return true;
        }
        Vertex i = measured[pos];
        for (Vertex target : prepared) {
            if (used.count(target)) {
                continue;
            }
            bool loop = target == i;
            if (loop ? !allow_loops : !g.adjacent(i, target)) {
                continue;
            }
            used.insert(target);
            f[i] = target;
            if (loop) {
                loops.insert(i);
            }
            if (enumerate(pos + 1)) {
                return true;
            }
            used.erase(target);
            f.erase(i);
            loops.erase(i);
        }
        return false;
    };
    enumerate(0);
    return result;
}

}  // namespace mbqc
