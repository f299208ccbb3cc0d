#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dessin/cli.hpp"
#include "dessin/cover.hpp"
#include "dessin/involution.hpp"
#include "dessin/io.hpp"

using namespace dessin;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    RunResult result;
    result.code = run_cli(args, in, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace

TEST_CASE("invariants report") {
    const RunResult r = run({"invariants", "()()()((()))"});
    CHECK(r.code == 0);
    CHECK(r.out == "n=6\no=4\ngenus=1\nd_c=2\nd_s=2\norder=3\n");

    const RunResult chain = run({"invariants", "--format", "involution", "5 4 3 2 1 0"});
    CHECK(chain.code == 0);
    CHECK(chain.out == "n=3\no=2\ngenus=0\nd_c=3\nd_s=1\norder=1\n");

    const RunResult torus = run({"invariants", "2 3 0 1"});
    CHECK(torus.code == 2);
    CHECK(torus.err.find("plane tree") != std::string::npos);
}

TEST_CASE("invariants from rotation lines on standard input") {
    const RunResult r = run({"invariants", "-"}, "0: 1\n1: 0 2\n2: 1 3\n3: 2\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=3\n") != std::string::npos);
    CHECK(r.out.find("d_c=3\n") != std::string::npos);
}

TEST_CASE("invariants from a file") {
    const std::string path = "cli_test_tree.txt";
    {
        std::ofstream file(path);
        file << "()()((()))";
    }
    const RunResult r = run({"invariants", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out == "n=5\no=4\ngenus=1\nd_c=1\nd_s=1\norder=5\n");
}

TEST_CASE("phi printing and canonical flag") {
    CHECK(run({"phi", "((()))"}).out == "5 4 3 2 1 0\n");
    CHECK(run({"phi", "--canonical", "((()))"}).out == "1 0 5 4 3 2\n");
    // Two rotations of one tree print one canonical form.
    CHECK(run({"phi", "--canonical", "3 2 1 0 5 4"}).out ==
          run({"phi", "--canonical", "5 4 3 2 1 0"}).out);
    CHECK(run({"phi", "()()"}).out == "1 0 3 2\n");
}

TEST_CASE("covering tests with expectations") {
    const RunResult chain2 = run({"covers", "--target", "chain", "--d", "2", "()()()((()))"});
    CHECK(chain2.code == 0);
    CHECK(chain2.out.find("covers=true\n") != std::string::npos);
    CHECK(chain2.out.find("quotient=1 0 3 2\n") != std::string::npos);

    CHECK(run({"covers", "--target", "chain", "--d", "2", "--expect", "yes",
               "()()()((()))"}).code == 0);
    CHECK(run({"covers", "--target", "chain", "--d", "2", "--expect", "no",
               "()()()((()))"}).code == 1);

    const RunResult tree3 = run({"covers", "--target", "tree", "--d", "3", "()()()((()))"});
    CHECK(tree3.code == 0);
    CHECK(tree3.out.find("covers=false\n") != std::string::npos);
    CHECK(tree3.out.find("reason=periodicity\n") != std::string::npos);

    const RunResult star2 = run({"covers", "--target", "star", "--d", "2", "()()()((()))"});
    CHECK(star2.out.find("covers=true\n") != std::string::npos);

    const RunResult shape = run({"covers", "--target", "star", "--d", "3", "((()))((()))((()))"});
    CHECK(shape.code == 0);
    CHECK(shape.out.find("covers=false\n") != std::string::npos);
    CHECK(shape.out.find("reason=quotient-shape\n") != std::string::npos);

    const RunResult divisibility =
        run({"covers", "--target", "tree", "--d", "4", "--expect", "no", "()()()((()))"});
    CHECK(divisibility.code == 0);
    CHECK(divisibility.out.find("reason=divisibility\n") != std::string::npos);

    // The square gluing covers nothing at d=1: its blocks map to themselves.
    const RunResult torus = run({"covers", "--target", "tree", "--d", "1", "2 3 0 1"});
    CHECK(torus.out.find("covers=false\n") != std::string::npos);
    CHECK(torus.out.find("reason=fixed-block\n") != std::string::npos);
}

TEST_CASE("quotient emission and round trip") {
    const RunResult involution = run({"quotient", "--d", "2", "()()()((()))"});
    CHECK(involution.code == 0);
    CHECK(involution.out == "1 0 3 2\n");

    const RunResult walk = run({"quotient", "--d", "2", "--out-format", "walk",
                                "()()()((()))"});
    CHECK(walk.code == 0);
    CHECK(walk.out == "()()\n");

    const RunResult rotation = run({"quotient", "--d", "2", "--out-format", "rotation",
                                    "()()()((()))"});
    CHECK(rotation.code == 0);
    CHECK(canonical_form(to_involution(parse_rotation(rotation.out).map()).involution) ==
          canonical_form(parse_involution(involution.out)));

    const RunResult failing = run({"quotient", "--d", "3", "()()()((()))"});
    CHECK(failing.code == 1);
    CHECK(failing.out.find("covers=false\n") != std::string::npos);
    CHECK(failing.out.find("reason=periodicity\n") != std::string::npos);
}

TEST_CASE("enumeration listing, counting, filtering") {
    const RunResult count = run({"enumerate", "--edges", "3", "--count-only"});
    CHECK(count.code == 0);
    CHECK(count.out == "count=5\n");

    CHECK(run({"enumerate", "--edges", "3", "--mode", "unrooted", "--count-only"}).out ==
          "count=2\n");

    const RunResult listing = run({"enumerate", "--edges", "3"});
    CHECK(listing.out == "((()))\n(()())\n(())()\n()(())\n()()()\n");

    // Both valency-3 trees plus the (1,1,1,2) spider have four odd
    // vertices and trivial chain invariant.
    const RunResult filtered = run({"enumerate", "--edges", "5", "--mode", "unrooted",
                                    "--filter", "genus=1,order=5", "--count-only"});
    CHECK(filtered.code == 0);
    CHECK(filtered.out == "count=3\n");

    // genus here is the curve genus (o-2)/2, so the 3-star passes in both
    // of its rooted labellings.
    const RunResult positive = run({"enumerate", "--edges", "3", "--filter", "genus>=1",
                                    "--count-only"});
    CHECK(positive.out == "count=2\n");

    const RunResult none = run({"enumerate", "--edges", "3", "--filter", "o>=6",
                                "--count-only"});
    CHECK(none.out == "count=0\n");

    CHECK(run({"enumerate", "--edges", "3", "--filter", "bogus=1"}).code == 2);
    CHECK(run({"enumerate", "--edges", "3", "--filter", "genus"}).code == 2);
    CHECK(run({"enumerate", "--edges", "0"}).code == 2);
}

TEST_CASE("search output") {
    const RunResult found = run({"search", "--genus", "1", "--order", "3"});
    CHECK(found.code == 0);
    CHECK(found.out.find("found=true\n") != std::string::npos);
    CHECK(found.out.find("o=4\n") != std::string::npos);
    CHECK(found.out.find("order=3\n") != std::string::npos);
    CHECK(found.out.find("walk=") != std::string::npos);

    const RunResult missing = run({"search", "--genus", "5", "--order", "2",
                                   "--max-edges", "8"});
    CHECK(missing.code == 0);
    CHECK(missing.out == "found=false\n");
}

TEST_CASE("verification run") {
    const RunResult r = run({"verify", "--max-edges", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("trees_n3=2\n") != std::string::npos);
    CHECK(r.out.find("trees_n5=6\n") != std::string::npos);
    CHECK(r.out.find("leafless_star_flags_n2=1\n") != std::string::npos);
    CHECK(r.out.find("discrepancies=0\n") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"covers", "--target", "chain", "()"}).code == 2);
    CHECK(run({"covers", "--target", "moon", "--d", "2", "()"}).code == 2);
    CHECK(run({"covers", "--target", "chain", "--d", "0", "()"}).code == 2);
    CHECK(run({"invariants", "(()"}).code == 2);
    CHECK(run({"invariants", "not a tree at all"}).code == 2);
    CHECK(run({"quotient", "--d", "2", "--out-format", "walk", "2 3 0 1"}).code == 2);
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("invariants") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
}
