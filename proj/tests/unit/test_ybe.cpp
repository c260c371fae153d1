#include <doctest.h>

#include "braces/constructors.hpp"
#include "braces/json_io.hpp"
#include "braces/ybe.hpp"

using namespace braces;

TEST_CASE("flip solution") {
    Solution s = flip_solution(4);
    CHECK(validate_solution(s).empty());
    CHECK(multipermutation_level(s) == 1);
    CHECK(retraction_tower_sizes(s) == std::vector<int>{4, 1});
}

TEST_CASE("one-point solution is a fixed point at level 0") {
    Solution s = flip_solution(1);
    CHECK(multipermutation_level(s) == 0);
    Retraction r = retract(s);
    CHECK(r.quotient.n == 1);
}

TEST_CASE("trivial brace on an abelian group yields the flip") {
    SkewBrace b(cyclic_group(5), cyclic_group(5));
    Solution s = solution_from_brace(b);
    CHECK(s.lam == flip_solution(5).lam);
    CHECK(s.rho == flip_solution(5).rho);
}

TEST_CASE("fixture solutions validate and retract as expected") {
    Solution s1 = solution_from_brace(paper_example_nonnilpotent_type());
    CHECK(validate_solution(s1).empty());  // all 216 braid triples
    CHECK_FALSE(multipermutation_level(s1).has_value());

    Solution s2 = solution_from_brace(paper_example_c4c2());
    CHECK(validate_solution(s2).empty());  // all 512 braid triples
    auto level = multipermutation_level(s2);
    REQUIRE(level.has_value());
    auto sizes = retraction_tower_sizes(s2);
    CHECK(sizes.front() == 8);
    CHECK(sizes.back() == 1);
    for (size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] < sizes[i - 1]);
}

TEST_CASE("retraction of a valid solution stays valid with shrinking size") {
    Solution s = solution_from_brace(SkewBrace(dihedral_group(8), dihedral_group(8)));
    Retraction r = retract(s);
    CHECK(validate_solution(r.quotient).empty());
    CHECK(r.quotient.n <= s.n);
    CHECK(static_cast<int>(r.class_of.size()) == s.n);
}

TEST_CASE("invalid solutions are rejected") {
    Solution s = flip_solution(3);
    s.lam[0][0] = 1;  // breaks the row permutation
    CHECK_FALSE(validate_solution(s).empty());

    // degenerate: constant pair map
    Solution bad;
    bad.n = 2;
    bad.lam = {{0, 0}, {0, 0}};
    bad.rho = {{0, 0}, {0, 0}};
    CHECK_FALSE(validate_solution(bad).empty());
}

TEST_CASE("solution JSON round trip rejects invalid tables") {
    Solution s = solution_from_brace(paper_example_c4c2());
    Solution s2 = solution_from_json(solution_to_json(s));
    CHECK(s2.lam == s.lam);
    CHECK(s2.rho == s.rho);

    Json j = solution_to_json(s);
    j["lam"][0][0] = j["lam"][0][1];
    CHECK_THROWS_AS(solution_from_json(j), BraceError);
}
