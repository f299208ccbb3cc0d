#include "dessin/oracle.hpp"

#include <stdexcept>

#include "dessin/cover.hpp"
#include "dessin/enumerate.hpp"
#include "dessin/invariants.hpp"
#include "dessin/io.hpp"

namespace dessin {

namespace {

void require_divisor_of_edges(const CombinatorialMap& map, int d) {
    if (!map.is_unicellular())
        throw std::invalid_argument("block oracle needs a one-faced map");
    if (d <= 0) throw std::invalid_argument("block oracle needs a positive divisor");
    if (map.edge_count() % d != 0)
        throw std::invalid_argument("block oracle needs a divisor of the edge count");
}

} // namespace

std::optional<DartInvolution> induced_block_reversal(const CombinatorialMap& map, int d) {
    require_divisor_of_edges(map, d);
    const FaceLabelling labelling = to_involution(map);
    const int m = map.dart_count();
    const int blocks = 2 * d;

    // Image block of each residue block under the edge reversal; every
    // member must land in the same block.
    std::vector<int> image_block(blocks, -1);
    for (int x = 0; x < m; ++x) {
        const int source = x % blocks;
        const int target = labelling.involution(x) % blocks;
        if (image_block[source] == -1) {
            image_block[source] = target;
        } else if (image_block[source] != target) {
            return std::nullopt;
        }
    }
    for (int r = 0; r < blocks; ++r) {
        if (image_block[r] == r) return std::nullopt;
        if (image_block[image_block[r]] != r) return std::nullopt;
    }
    return DartInvolution(std::move(image_block));
}

bool semiconjugacy_cover_check(const CombinatorialMap& map, int d) {
    require_divisor_of_edges(map, d);
    const int m = map.dart_count();
    const int blocks = 2 * d;
    // Face semiconjugacy: the full cycle advances block r to block r+1.
    for (int x = 0; x < m; ++x)
        if ((x + 1) % m % blocks != (x % blocks + 1) % blocks) return false;
    return induced_block_reversal(map, d).has_value();
}

bool block_system_uniqueness_check(int n, int d) {
    if (n <= 0 || n > 6)
        throw std::invalid_argument("exhaustive partition scan is guarded to 1 <= n <= 6");
    if (d <= 0 || n % d != 0)
        throw std::invalid_argument("partition scan needs a divisor of n");
    const int m = 2 * n;
    const int blocks = 2 * d;
    const int block_size = m / blocks;

    std::vector<int> block_of(m, -1);
    std::vector<int> fill(blocks, 0);
    int preserved = 0;
    bool residues_preserved = false;

    auto cycle_preserves = [&]() {
        for (int r = 0; r < blocks; ++r) {
            int target = -1;
            for (int x = 0; x < m; ++x) {
                if (block_of[x] != r) continue;
                const int image = block_of[(x + 1) % m];
                if (target == -1) target = image;
                else if (target != image) return false;
            }
        }
        return true;
    };
    auto is_residue_partition = [&]() {
        for (int x = 0; x < m; ++x)
            if (block_of[x] != block_of[x % blocks]) return false;
        return true;
    };

    // Canonical assignment: each element joins an open block or starts the
    // first empty one, so every equal-block partition appears once.
    auto scan = [&](auto&& self, int x, int used) -> void {
        if (x == m) {
            if (cycle_preserves()) {
                ++preserved;
                if (is_residue_partition()) residues_preserved = true;
            }
            return;
        }
        for (int b = 0; b < used; ++b) {
            if (fill[b] == block_size) continue;
            block_of[x] = b;
            ++fill[b];
            self(self, x + 1, used);
            --fill[b];
        }
        if (used < blocks) {
            block_of[x] = used;
            ++fill[used];
            self(self, x + 1, used + 1);
            --fill[used];
        }
        block_of[x] = -1;
    };
    scan(scan, 0, 0);
    return preserved == 1 && residues_preserved;
}

bool quotient_tower_check(const DartInvolution& phi) {
    const int n = phi.edge_count();
    for (int d1 = 1; d1 <= n; ++d1) {
        if (n % d1 != 0) continue;
        const CoverReport small = covers_dessin(phi, d1);
        if (!small.covers) continue;
        for (int d2 = 2; d1 * d2 <= n; ++d2) {
            if (n % (d1 * d2) != 0) continue;
            const CoverReport big = covers_dessin(phi, d1 * d2);
            if (!big.covers) continue;
            const CoverReport mid = covers_dessin(*big.quotient, d1);
            if (!mid.covers) return false;
            if (canonical_form(*mid.quotient) != canonical_form(*small.quotient)) return false;
        }
    }
    return true;
}

std::vector<DartInvolution> leafless_star_congruence(int n) {
    if (n <= 0) throw std::invalid_argument("scan needs a positive edge count");
    const int m = 2 * n;
    std::vector<DartInvolution> flagged;
    std::vector<int> image(m, -1);
    auto scan = [&](auto&& self, int x) -> void {
        if (x == m) {
            bool congruence = true;
            for (int i = 0; i < m && congruence; ++i)
                congruence = (image[i] + image[(i + 1) % m] - 2 * i - 1) % m == 0;
            bool leaf = false;
            for (int i = 0; i < m && !leaf; ++i) leaf = (image[i] + 1) % m == i;
            if (congruence && !leaf) flagged.emplace_back(image);
            return;
        }
        if (image[x] != -1) {
            self(self, x + 1);
            return;
        }
        for (int y = x + 1; y < m; ++y) {
            if (image[y] != -1) continue;
            image[x] = y;
            image[y] = x;
            self(self, x + 1);
            image[x] = -1;
            image[y] = -1;
        }
    };
    scan(scan, 0);
    return flagged;
}

namespace {

bool quotient_is_chain_shape(const DartInvolution& q) {
    const CombinatorialMap map = to_map(q);
    if (!is_plane_tree(map)) return false;
    const int d = q.edge_count();
    std::vector<int> expected(d + 1, 2);
    expected[0] = expected[1] = 1;
    return map.degree_profile() == expected;
}

bool quotient_is_star_shape(const DartInvolution& q) {
    const CombinatorialMap map = to_map(q);
    if (!is_plane_tree(map)) return false;
    const int d = q.edge_count();
    std::vector<int> expected(d + 1, 1);
    expected[d] = d;
    return map.degree_profile() == expected;
}

void check_tree(const DartInvolution& phi, std::vector<Discrepancy>& out) {
    const CombinatorialMap map = to_map(phi);
    const PlaneTree tree(map);
    const int n = phi.edge_count();

    if (!displacements_match_branch_weights(tree))
        out.push_back({phi, 0, "displacement identity", {{"matches_branch_weights", 0}}});
    if (!has_odd_displacements(phi))
        out.push_back({phi, 0, "displacement parity", {{"all_odd", 0}}});

    int max_chain_branch = 0, max_chain_congruence = 0;
    int max_star_branch = 0, max_star_congruence = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const CoverReport tree_report = covers_tree(phi, d);
        const CoverReport dessin_report = covers_dessin(phi, d);
        if (tree_report.covers != dessin_report.covers)
            out.push_back({phi, d, "tree covering shortcut",
                           {{"periodicity_only", tree_report.covers},
                            {"full_conditions", dessin_report.covers}}});

        const std::optional<DartInvolution> induced = induced_block_reversal(map, d);
        if (induced.has_value() != semiconjugacy_cover_check(map, d) ||
            induced.has_value() != dessin_report.covers)
            out.push_back({phi, d, "covering detection",
                           {{"congruences", dessin_report.covers},
                            {"block_oracle", induced.has_value()}}});

        const bool branch_chain = covers_chain_by_branches(tree, d);
        const bool congruence_chain = covers_chain(phi, d);
        const bool shape_chain =
            tree_report.covers && quotient_is_chain_shape(*tree_report.quotient);
        const bool oracle_chain = induced.has_value() && is_chain_closed_form(*induced);
        if (!(branch_chain == congruence_chain && branch_chain == shape_chain &&
              branch_chain == oracle_chain))
            out.push_back({phi, d, "covers chain",
                           {{"branch_sums", branch_chain},
                            {"congruence", congruence_chain},
                            {"quotient_shape", shape_chain},
                            {"block_oracle_closed_form", oracle_chain}}});

        const bool branch_star = covers_star_by_branches(tree, d);
        const bool congruence_star = covers_star(phi, d);
        const bool shape_star =
            tree_report.covers && quotient_is_star_shape(*tree_report.quotient);
        const bool oracle_star = induced.has_value() && is_star_closed_form(*induced);
        if (!(branch_star == congruence_star && branch_star == shape_star &&
              branch_star == oracle_star))
            out.push_back({phi, d, "covers star",
                           {{"branch_differences", branch_star},
                            {"congruence", congruence_star},
                            {"quotient_shape", shape_star},
                            {"block_oracle_closed_form", oracle_star}}});

        if (branch_chain) {
            max_chain_branch = d;
            if (!odd_vertex_divisibility_check(tree, d))
                out.push_back({phi, d, "odd vertex divisibility", {{"all_divisible", 0}}});
        }
        if (congruence_chain) max_chain_congruence = d;
        if (branch_star) max_star_branch = d;
        if (congruence_star) max_star_congruence = d;
    }

    const int dc = chain_invariant(tree);
    if (dc != max_chain_branch || dc != max_chain_congruence)
        out.push_back({phi, 0, "chain invariant",
                       {{"gcd_formula", dc},
                        {"max_divisor_branch", max_chain_branch},
                        {"max_divisor_congruence", max_chain_congruence}}});
    const int ds = star_invariant(tree);
    if (ds != max_star_branch || ds != max_star_congruence)
        out.push_back({phi, 0, "star invariant",
                       {{"gcd_formula", ds},
                        {"max_divisor_branch", max_star_branch},
                        {"max_divisor_congruence", max_star_congruence}}});

    if (!quotient_tower_check(phi))
        out.push_back({phi, 0, "quotient tower", {{"compatible", 0}}});
}

} // namespace

CrossCheckReport cross_check_all(int max_edges) {
    if (max_edges <= 0) throw std::invalid_argument("cross check needs a positive edge bound");
    CrossCheckReport report;
    report.trees_per_edge_count.assign(max_edges + 1, 0);
    for (int n = 1; n <= max_edges; ++n) {
        TreeStream stream(n, TreeStream::Mode::Unrooted);
        while (auto phi = stream.next()) {
            ++report.trees_per_edge_count[n];
            check_tree(*phi, report.discrepancies);
        }
    }
    return report;
}

std::string describe(const Discrepancy& discrepancy) {
    std::string line = "subject=\"" + discrepancy.subject + "\"";
    line += " n=" + std::to_string(discrepancy.tree.edge_count());
    if (discrepancy.d > 0) line += " d=" + std::to_string(discrepancy.d);
    for (const auto& [name, value] : discrepancy.methods)
        line += " " + name + "=" + std::to_string(value);
    line += " phi=[" + to_involution_line(discrepancy.tree) + "]";
    return line;
}

} // namespace dessin
