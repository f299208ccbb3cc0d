#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dessin/enumerate.hpp"
#include "dessin/invariants.hpp"
#include "dessin/io.hpp"

using namespace dessin;

namespace {

// Catalan numbers by the recurrence C(0)=1, C(k+1) = sum C(i)C(k-i).
std::vector<long long> catalan_upto(int n) {
    std::vector<long long> c{1};
    for (int k = 0; k < n; ++k) {
        long long next = 0;
        for (int i = 0; i <= k; ++i) next += c[i] * c[k - i];
        c.push_back(next);
    }
    return c;
}

// All balanced strings by brute force over bit patterns.
std::set<std::string> balanced_strings(int n) {
    std::set<std::string> result;
    for (int bits = 0; bits < (1 << (2 * n)); ++bits) {
        std::string s(2 * n, ')');
        for (int i = 0; i < 2 * n; ++i)
            if (bits & (1 << i)) s[i] = '(';
        int depth = 0;
        bool ok = true;
        for (char ch : s) {
            depth += ch == '(' ? 1 : -1;
            if (depth < 0) {
                ok = false;
                break;
            }
        }
        if (ok && depth == 0) result.insert(s);
    }
    return result;
}

} // namespace

TEST_CASE("rooted streams count Catalan numbers") {
    const std::vector<long long> catalan = catalan_upto(8);
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long long>(rooted_trees(n).size()) == catalan[n]);
    CHECK(rooted_trees(1) == std::vector<DartInvolution>{DartInvolution({1, 0})});
    CHECK_THROWS_AS(TreeStream(0, TreeStream::Mode::Rooted), std::invalid_argument);
}

TEST_CASE("rooted streams are the balanced strings in ascending order") {
    for (int n : {3, 4, 5}) {
        std::vector<std::string> walks;
        for (const DartInvolution& phi : rooted_trees(n)) walks.push_back(to_walk_string(phi));
        CHECK(walks.front() == std::string(n, '(') + std::string(n, ')'));
        std::string alternating;
        for (int k = 0; k < n; ++k) alternating += "()";
        CHECK(walks.back() == alternating);
        for (size_t i = 1; i < walks.size(); ++i) CHECK(walks[i - 1] < walks[i]);
        CHECK(std::set<std::string>(walks.begin(), walks.end()) == balanced_strings(n));
    }
}

TEST_CASE("every yielded involution is a tree in good standing") {
    for (int n = 1; n <= 6; ++n)
        for (const DartInvolution& phi : rooted_trees(n)) {
            CHECK(genus(phi) == 0);
            CHECK(displacements_match_branch_weights(PlaneTree(to_map(phi))));
        }
}

TEST_CASE("unrooted streams agree with canonical-form deduplication") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<int>> dedup;
        for (const DartInvolution& phi : rooted_trees(n))
            dedup.insert(canonical_form(phi).image());
        const std::vector<DartInvolution> unrooted = unrooted_trees(n);
        CHECK(unrooted.size() == dedup.size());
        for (const DartInvolution& phi : unrooted) {
            CHECK(is_canonical(phi));
            CHECK(dedup.count(phi.image()) == 1);
        }
    }
}

TEST_CASE("small unrooted counts") {
    CHECK(unrooted_trees(1).size() == 1);
    CHECK(unrooted_trees(2).size() == 1);
    const std::vector<DartInvolution> three = unrooted_trees(3);
    REQUIRE(three.size() == 2);
    // The two 3-edge plane trees are the chain and the star.
    std::set<std::vector<int>> forms;
    for (const DartInvolution& phi : three) forms.insert(phi.image());
    CHECK(forms == std::set<std::vector<int>>{{1, 0, 5, 4, 3, 2}, {1, 0, 3, 2, 5, 4}});
}

TEST_CASE("rotation orbit sizes divide the dart count") {
    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<int>, int> orbit_sizes;
        for (const DartInvolution& phi : rooted_trees(n))
            ++orbit_sizes[canonical_form(phi).image()];
        for (const auto& [form, size] : orbit_sizes) CHECK(2 * n % size == 0);
    }
}

TEST_CASE("search finds the pinned witnesses") {
    const std::optional<PlaneTree> chain = search_genus_order(0, 1, 4);
    REQUIRE(chain.has_value());
    CHECK(chain->odd_vertex_count() == 2);
    CHECK(chain->edge_count() == 1);

    const std::optional<PlaneTree> order2 = search_genus_order(1, 2, 8);
    REQUIRE(order2.has_value());
    CHECK(order2->odd_vertex_count() == 4);
    CHECK(order2->edge_count() / chain_invariant(*order2) == 2);

    const std::optional<PlaneTree> order3 = search_genus_order(1, 3, 8);
    REQUIRE(order3.has_value());
    CHECK(order3->odd_vertex_count() == 4);
    CHECK(order3->edge_count() / chain_invariant(*order3) == 3);
}

TEST_CASE("search reports absence inside the bound") {
    CHECK_FALSE(search_genus_order(1, 7, 6).has_value());
    CHECK_FALSE(search_genus_order(5, 2, 8).has_value());
    CHECK_THROWS_AS(search_genus_order(-1, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(search_genus_order(1, 0, 8), std::invalid_argument);
}

TEST_CASE("streams can be drained incrementally") {
    TreeStream stream(3, TreeStream::Mode::Unrooted);
    int count = 0;
    while (stream.next()) ++count;
    CHECK(count == 2);
    CHECK_FALSE(stream.next().has_value());
    CHECK_FALSE(stream.next().has_value());
}
