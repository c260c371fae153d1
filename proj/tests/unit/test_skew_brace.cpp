#include <doctest.h>

#include <algorithm>

#include "braces/constructors.hpp"
#include "braces/skew_brace.hpp"

using namespace braces;

namespace {

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace(g, g); }

}  // namespace

TEST_CASE("trivial brace has vanishing stars") {
    SkewBrace b = trivial_brace(symmetric3());
    for (Elem a = 0; a < b.order(); ++a)
        for (Elem c = 0; c < b.order(); ++c) CHECK(b.star(a, c) == 0);
    CHECK(star_span(b, full_carrier(6), full_carrier(6)) == SubSet{0});
}

TEST_CASE("distributivity failures are rejected with a witness") {
    FiniteGroup c4 = cyclic_group(4);
    // a relabelled C4 multiplication whose identity behaviour clashes with +
    FiniteGroup relabelled =
        group_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}});
    CHECK_THROWS_WITH_AS(SkewBrace(c4, relabelled),
                         doctest::Contains("DistributivityFails"), BraceError);
    // the Klein structure on the same carrier does satisfy the law
    FiniteGroup klein =
        group_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    CHECK_NOTHROW(SkewBrace(c4, klein));
}

TEST_CASE("fixture 1 lambda values match the construction data") {
    SkewBrace b = paper_example_nonnilpotent_type();
    // lambda_sigma = phi_g; carrier 0, s, 2s, t, s+t, 2s+t
    std::vector<Elem> phi_g{0, 1, 2, 4, 5, 3};
    CHECK(b.lambda_perm(1) == phi_g);
    CHECK(b.lambda_perm(5) == phi_g);  // lambda_{2s+t} = phi_g
    // lambda_tau = lambda_0 = id
    CHECK(b.lambda_perm(3) == std::vector<Elem>{0, 1, 2, 3, 4, 5});
    CHECK(b.lambda_perm(0) == std::vector<Elem>{0, 1, 2, 3, 4, 5});
    // lambda_{2s} = lambda_{s+t} = phi_g^-1, which sends tau to 2s+t
    CHECK(b.lambda(2, 3) == 5);
    CHECK(b.lambda_perm(2) == b.lambda_perm(4));
    // star identities: star(0,b) = star(a,0) = 0
    for (Elem a = 0; a < 6; ++a) {
        CHECK(b.star(0, a) == 0);
        CHECK(b.star(a, 0) == 0);
    }
    // lambda_sigma(tau) = sigma + tau
    CHECK(b.lambda(1, 3) == 4);
}

TEST_CASE("fixture 2 lambda values match the paper tables") {
    SkewBrace b = paper_example_c4c2();
    // carrier 0, a, 2a, 3a, b, a+b, 2a+b, 3a+b
    // lambda_{2a} = lambda_{2a+b} = phi_tau with phi_tau(a) = a+b
    CHECK(b.lambda_perm(2) == b.lambda_perm(6));
    CHECK(b.lambda(2, 1) == 5);
    CHECK(b.star(2, 1) == 4);  // (a+b) - a = b
    // lambda_{3a} = lambda_{3a+b} = phi_sigma phi_tau
    CHECK(b.lambda_perm(3) == b.lambda_perm(7));
    // phi_sigma(phi_tau(a)) = phi_sigma(a+b) = 3a+b+b = 3a
    CHECK(b.lambda(3, 1) == 3);
}

TEST_CASE("star spans reproduce the worked examples") {
    SkewBrace b1 = paper_example_nonnilpotent_type();
    SubSet all6 = full_carrier(6);
    CHECK(star_span(b1, all6, all6) == SubSet{0, 1, 2});  // <sigma>

    SkewBrace b2 = paper_example_c4c2();
    SubSet all8 = full_carrier(8);
    CHECK(star_span(b2, all8, all8) == SubSet{0, 2, 4, 6});  // <2a, b>
}

TEST_CASE("lambda is a homomorphism into Aut(B,+)") {
    for (const SkewBrace& b : {paper_example_nonnilpotent_type(), paper_example_c4c2(),
                               trivial_brace(dihedral_group(8))}) {
        for (Elem a = 0; a < b.order(); ++a) {
            CHECK(is_homomorphism(b.add(), b.add(), b.lambda_perm(a)));
            for (Elem c = 0; c < b.order(); ++c) {
                // a.b = a + lambda_a(b)
                CHECK(b.times(a, c) == b.plus(a, b.lambda(a, c)));
                // lambda_{ab} = lambda_a o lambda_b
                for (Elem x = 0; x < b.order(); ++x)
                    CHECK(b.lambda(b.times(a, c), x) == b.lambda(a, b.lambda(c, x)));
            }
        }
    }
}

TEST_CASE("ideal detection and the two characterizations") {
    SkewBrace b = paper_example_nonnilpotent_type();
    CHECK(is_ideal(b, SubSet{0}));
    CHECK(is_ideal(b, full_carrier(6)));
    CHECK(is_ideal(b, SubSet{0, 1, 2}));  // B^2 = <sigma>
    CHECK_FALSE(is_ideal(b, SubSet{0, 3}));
    IdealFlags f = ideal_flags(b, SubSet{0, 1, 2});
    CHECK(f.ideal() == f.ideal_via_lambda());
    CHECK(f.lambda_invariant);

    // lambda_x permutes the coset <sigma> + tau for every x
    for (Elem x = 0; x < 6; ++x) {
        SubSet coset{3, 4, 5}, image;
        for (Elem c : coset) image.push_back(b.lambda(x, c));
        std::sort(image.begin(), image.end());
        CHECK(image == coset);
    }
}

TEST_CASE("quotient brace by B^2") {
    SkewBrace b = paper_example_nonnilpotent_type();
    BraceQuotient q = quotient_brace(b, SubSet{0, 1, 2});
    CHECK(q.brace.order() == 2);
    // b + I = bI for all b is asserted inside; spot-check the coset map
    CHECK(q.coset_of[0] == 0);
    CHECK(q.coset_of[3] == q.coset_of[5]);
    CHECK_THROWS_WITH_AS(quotient_brace(b, SubSet{0, 3}), doctest::Contains("NotIdeal"),
                         BraceError);
}

TEST_CASE("brace centre") {
    SkewBrace ab = trivial_brace(cyclic_group(6));
    CHECK(brace_centre(ab) == full_carrier(6));
    SkewBrace ts3 = trivial_brace(symmetric3());
    CHECK(brace_centre(ts3) == SubSet{0});
    SkewBrace b = paper_example_nonnilpotent_type();
    SubSet z = brace_centre(b);
    CHECK(z == SubSet{0});  // exhaustive scan; must be a (trivial) proper ideal
    CHECK(is_ideal(b, z));
}

TEST_CASE("centre is contained in additive centre and Ker lambda") {
    for (const SkewBrace& b : {paper_example_c4c2(), trivial_brace(dihedral_group(8))}) {
        SubSet z = brace_centre(b);
        SubSet ker = kernel_lambda(b);
        SubSet zadd = group_centre(b.add());
        for (Elem x : z) {
            CHECK(contains(ker, x));
            CHECK(contains(zadd, x));
        }
        CHECK(is_ideal(b, z));
    }
}

TEST_CASE("lemma identity suite") {
    LemmaReport t = lemma_identities_check(trivial_brace(symmetric3()));
    CHECK(t.remark_holds);
    CHECK(t.b3_zero);
    CHECK(t.all_pass());

    LemmaReport r1 = lemma_identities_check(paper_example_nonnilpotent_type());
    CHECK(r1.remark_holds);
    CHECK(r1.b3_zero);
    CHECK(r1.part1);
    CHECK(r1.part2);
    CHECK(r1.part3);
    CHECK(r1.part4);

    LemmaReport r2 = lemma_identities_check(paper_example_c4c2());
    CHECK(r2.all_pass());
    CHECK(r2.b3_zero);
}

TEST_CASE("B^2 is a trivial sub-brace when B^3 = 0") {
    SkewBrace b = paper_example_c4c2();
    SubSet bsq = brace_square(b);
    for (Elem c : bsq)
        for (Elem d : bsq) CHECK(b.times(c, d) == b.plus(c, d));
}

TEST_CASE("kernel of lambda") {
    CHECK(kernel_lambda(paper_example_nonnilpotent_type()) == SubSet{0, 3});  // {0, tau}
    CHECK(kernel_lambda(paper_example_c4c2()) == SubSet{0, 4});               // <b>
}
