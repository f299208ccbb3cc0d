#include "dessin/combinatorial_map.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace dessin {

namespace {

bool is_permutation_of_range(const std::vector<Dart>& p) {
    std::vector<char> seen(p.size(), 0);
    for (Dart v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

} // namespace

CombinatorialMap::CombinatorialMap(std::vector<Dart> vertex_rotation,
                                   std::vector<Dart> edge_reversal)
    : rho0_(std::move(vertex_rotation)), rho1_(std::move(edge_reversal)) {
    const int darts = static_cast<int>(rho0_.size());
    if (darts == 0 || darts % 2 != 0)
        throw std::invalid_argument("combinatorial map needs a positive even number of darts");
    if (rho1_.size() != rho0_.size())
        throw std::invalid_argument("vertex rotation and edge reversal differ in size");
    if (!is_permutation_of_range(rho0_) || !is_permutation_of_range(rho1_))
        throw std::invalid_argument("dart maps must be permutations of 0..2n-1");
    for (Dart d = 0; d < darts; ++d) {
        if (rho1_[d] == d) throw std::invalid_argument("edge reversal has a fixed point");
        if (rho1_[rho1_[d]] != d) throw std::invalid_argument("edge reversal is not an involution");
    }

    // Vertex cycles of rho0, ids in first-dart order.
    vertex_of_dart_.assign(darts, -1);
    for (Dart d = 0; d < darts; ++d) {
        if (vertex_of_dart_[d] != -1) continue;
        const int id = static_cast<int>(vertex_cycles_.size());
        std::vector<Dart> cycle;
        Dart cur = d;
        do {
            vertex_of_dart_[cur] = id;
            cycle.push_back(cur);
            cur = rho0_[cur];
        } while (cur != d);
        vertex_cycles_.push_back(std::move(cycle));
    }

    // Face cycles of rho0∘rho1.
    std::vector<char> on_face(darts, 0);
    for (Dart d = 0; d < darts; ++d) {
        if (on_face[d]) continue;
        ++face_count_;
        Dart cur = d;
        do {
            on_face[cur] = 1;
            cur = rho0_[rho1_[cur]];
        } while (cur != d);
    }

    // Connectedness: darts must form one orbit under {rho0, rho1}.
    std::vector<char> reached(darts, 0);
    std::vector<Dart> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (Dart next : {rho0_[d], rho1_[d]}) {
            if (!reached[next]) {
                reached[next] = 1;
                ++count;
                stack.push_back(next);
            }
        }
    }
    if (count != darts) throw std::invalid_argument("map is not connected");

    const int euler = vertex_count() - edge_count() + face_count_;
    if (euler > 2 || (2 - euler) % 2 != 0)
        throw std::invalid_argument("inconsistent Euler characteristic");
}

std::vector<int> CombinatorialMap::degree_profile() const {
    std::vector<int> profile;
    profile.reserve(vertex_cycles_.size());
    for (const auto& cycle : vertex_cycles_) profile.push_back(static_cast<int>(cycle.size()));
    std::sort(profile.begin(), profile.end());
    return profile;
}

bool is_plane_tree(const CombinatorialMap& map) {
    return map.is_unicellular() && map.vertex_count() == map.edge_count() + 1;
}

PlaneTree::PlaneTree(CombinatorialMap map) : map_(std::move(map)) {
    if (!map_.is_unicellular())
        throw std::invalid_argument("plane tree must have exactly one face");
    if (map_.vertex_count() != map_.edge_count() + 1)
        throw std::invalid_argument("plane tree must have genus 0");

    // Root the tree at vertex 0 and accumulate subtree vertex counts; the
    // branch through dart d = (u -> v) then has weight size[v] when v lies
    // below u, and n + 1 - size[u] otherwise.
    const int n = map_.edge_count();
    const int vertices = map_.vertex_count();
    std::vector<int> parent(vertices, -1);
    std::vector<int> order;
    order.reserve(vertices);
    order.push_back(0);
    std::vector<char> visited(vertices, 0);
    visited[0] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        const int u = order[i];
        for (Dart d : map_.vertex_cycles()[u]) {
            const int v = map_.vertex_of(map_.reverse(d));
            if (!visited[v]) {
                visited[v] = 1;
                parent[v] = u;
                order.push_back(v);
            }
        }
    }
    std::vector<int> size(vertices, 1);
    for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];

    branch_weight_.assign(map_.dart_count(), 0);
    for (Dart d = 0; d < map_.dart_count(); ++d) {
        const int u = map_.vertex_of(d);
        const int v = map_.vertex_of(map_.reverse(d));
        branch_weight_[d] = (parent[v] == u) ? size[v] : n + 1 - size[u];
    }
}

int PlaneTree::branch_weight(Dart d) const {
    if (d < 0 || d >= map_.dart_count()) throw std::invalid_argument("dart out of range");
    return branch_weight_[d];
}

std::vector<BranchPair> PlaneTree::adjacent_branch_pairs() const {
    std::vector<BranchPair> pairs;
    pairs.reserve(map_.dart_count());
    for (int v = 0; v < map_.vertex_count(); ++v) {
        const auto& cycle = map_.vertex_cycles()[v];
        const int k = static_cast<int>(cycle.size());
        for (int j = 0; j < k; ++j) {
            pairs.push_back({v, branch_weight_[cycle[j]], branch_weight_[cycle[(j + 1) % k]]});
        }
    }
    return pairs;
}

int PlaneTree::odd_vertex_count() const {
    int odd = 0;
    for (const auto& cycle : map_.vertex_cycles())
        if (cycle.size() % 2 == 1) ++odd;
    return odd;
}

} // namespace dessin
