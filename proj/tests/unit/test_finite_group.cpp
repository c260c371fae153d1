#include <doctest.h>

#include <algorithm>
#include <set>

#include "braces/constructors.hpp"
#include "braces/finite_group.hpp"

using namespace braces;

TEST_CASE("trivial and C2 tables") {
    FiniteGroup t = group_from_table({{0}});
    CHECK(t.order() == 1);
    FiniteGroup c2 = group_from_table({{0, 1}, {1, 0}});
    CHECK(c2.order() == 2);
    CHECK(c2.inv(0) == 0);
    CHECK(c2.inv(1) == 1);
}

TEST_CASE("table validation names the violated axiom") {
    CHECK_THROWS_WITH_AS(group_from_table({{1, 0}, {0, 1}}),
                         doctest::Contains("NoIdentityAtZero"), GroupError);
    CHECK_THROWS_WITH_AS(group_from_table({{0, 1}, {1, 1}}),
                         doctest::Contains("NotLatinSquare"), GroupError);
    // order-5 loop with identity: Latin square but not associative
    CHECK_THROWS_WITH_AS(group_from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 3, 4, 0, 1},
                                           {3, 4, 1, 2, 0},
                                           {4, 2, 0, 1, 3}}),
                         doctest::Contains("NotAssociative"), GroupError);
}

TEST_CASE("named constructors") {
    FiniteGroup c6 = cyclic_group(6);
    CHECK(c6.is_abelian());
    CHECK(c6.elem_order(1) == 6);

    FiniteGroup d8 = dihedral_group(8);
    CHECK(d8.order() == 8);
    CHECK_FALSE(d8.is_abelian());
    // sigma = 1, tau = 4: sigma^4 = tau^2 = 1 and sigma tau = tau sigma^3
    CHECK(d8.elem_order(1) == 4);
    CHECK(d8.elem_order(4) == 2);
    CHECK(d8.op(1, 4) == d8.op(4, d8.op(1, d8.op(1, 1))));

    FiniteGroup p = direct_product(cyclic_group(4), cyclic_group(2));
    CHECK(p.order() == 8);
    CHECK(p.is_abelian());

    FiniteGroup s3 = symmetric3();
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    // 3*sigma = 2*tau = 0 and sigma + tau = tau + 2*sigma (carrier 1 = sigma, 3 = tau)
    CHECK(s3.elem_order(1) == 3);
    CHECK(s3.elem_order(3) == 2);
    CHECK(s3.op(1, 3) == s3.op(3, s3.op(1, 1)));

    FiniteGroup q8 = quaternion8();
    CHECK(q8.order() == 8);
    CHECK_FALSE(q8.is_abelian());
    int order2 = 0;
    for (Elem a = 1; a < 8; ++a)
        if (q8.elem_order(a) == 2) ++order2;
    CHECK(order2 == 1);  // only -1
}

TEST_CASE("subgroup closure") {
    FiniteGroup s3 = symmetric3();
    CHECK(subgroup_closure(s3, {}) == SubSet{0});
    CHECK(subgroup_closure(s3, {1}) == SubSet{0, 1, 2});
    FiniteGroup a = direct_product(cyclic_group(2), cyclic_group(4));  // fixture-2 numbering
    CHECK(subgroup_closure(a, {2, 4}) == SubSet{0, 2, 4, 6});
}

TEST_CASE("commutators") {
    FiniteGroup s3 = symmetric3();
    for (Elem a = 0; a < 6; ++a) CHECK(commutator(s3, a, a) == 0);
    FiniteGroup c6 = cyclic_group(6);
    CHECK(commutator_subgroup(c6, full_carrier(6), full_carrier(6)) == SubSet{0});
    // brute force over all 36 pairs
    std::set<Elem> comms;
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b) comms.insert(commutator(s3, a, b));
    CHECK(comms == std::set<Elem>{0, 1, 2});
    CHECK(commutator_subgroup(s3, full_carrier(6), full_carrier(6)) == SubSet{0, 1, 2});
}

TEST_CASE("central series and nilpotency class") {
    CHECK(nilpotency_class(cyclic_group(6)) == 1);
    CHECK(lower_central_series(cyclic_group(4)).back() == SubSet{0});
    CHECK_FALSE(nilpotency_class(symmetric3()).has_value());
    CHECK(nilpotency_class(dihedral_group(8)) == 2);
    CHECK(nilpotency_class(quaternion8()) == 2);
}

TEST_CASE("lower and upper central series agree on class") {
    for (const auto& [name, g] : groups_up_to_order(8)) {
        CAPTURE(name);
        auto lower = lower_central_series(g);
        auto upper = upper_central_series(g);
        CHECK(static_cast<int>(lower.size()) <= g.order() + 1);
        bool lower_nilpotent = lower.back() == SubSet{0};
        bool upper_nilpotent = static_cast<int>(upper.back().size()) == g.order();
        CHECK(lower_nilpotent == upper_nilpotent);
        if (lower_nilpotent) CHECK(lower.size() == upper.size());
    }
}

TEST_CASE("quotient groups") {
    FiniteGroup s3 = symmetric3();
    Quotient q = quotient_group(s3, {0, 1, 2});
    CHECK(q.group.order() == 2);
    CHECK(q.coset_of[0] == 0);
    CHECK(q.coset_of[4] == q.coset_of[3]);

    Quotient whole = quotient_group(s3, full_carrier(6));
    CHECK(whole.group.order() == 1);
    Quotient trivial = quotient_group(s3, {0});
    CHECK(trivial.group.order() == 6);
    CHECK(isomorphism(trivial.group, s3).has_value());

    CHECK_THROWS_AS(quotient_group(s3, SubSet{0, 3}), GroupError);  // not normal
}

TEST_CASE("quotient map is a homomorphism with kernel N") {
    FiniteGroup d8 = dihedral_group(8);
    SubSet n = subgroup_closure(d8, {2});  // centre, order 2
    Quotient q = quotient_group(d8, n);
    CHECK(is_homomorphism(d8, q.group, q.coset_of));
    SubSet kernel;
    for (Elem a = 0; a < 8; ++a)
        if (q.coset_of[a] == 0) kernel.push_back(a);
    CHECK(kernel == n);
}

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(cyclic_group(2)).size() == 1);
    CHECK(automorphisms(cyclic_group(6)).size() == 2);
    CHECK(automorphisms(symmetric3()).size() == 6);
    CHECK_THROWS_AS(automorphisms(cyclic_group(17)), GroupError);
}

TEST_CASE("Aut(S3) by full bijection scan oracle") {
    FiniteGroup s3 = symmetric3();
    std::vector<Elem> p{0, 1, 2, 3, 4, 5};
    int count = 0;
    do {
        if (p[0] != 0) continue;
        if (is_homomorphism(s3, s3, p)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(count == 6);
    CHECK(automorphisms(s3).size() == 6);
}

TEST_CASE("Aut(C4xC2) contains the fixture automorphism phi_sigma") {
    // fixture-2 numbering: element i*a + j*b at index i + 4j
    FiniteGroup a = direct_product(cyclic_group(2), cyclic_group(4));
    std::vector<Elem> phi_sigma(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) phi_sigma[i + 4 * j] = (3 * i) % 4 + 4 * ((i + j) % 2);
    auto auts = automorphisms(a);
    CHECK(std::find(auts.begin(), auts.end(), phi_sigma) != auts.end());
}

TEST_CASE("automorphisms form a group under composition for order <= 8") {
    for (const auto& [name, g] : groups_up_to_order(8)) {
        CAPTURE(name);
        auto auts = automorphisms(g);
        std::set<std::vector<Elem>> set(auts.begin(), auts.end());
        for (const auto& f : auts) {
            std::vector<Elem> finv(g.order());
            for (Elem x = 0; x < g.order(); ++x) finv[f[x]] = x;
            CHECK(set.count(finv) == 1);
            for (const auto& h : auts) {
                std::vector<Elem> comp(g.order());
                for (Elem x = 0; x < g.order(); ++x) comp[x] = f[h[x]];
                CHECK(set.count(comp) == 1);
            }
        }
    }
}

TEST_CASE("isomorphism testing is reflexive and symmetric on order <= 8 corpus") {
    auto groups = groups_up_to_order(8);
    for (size_t i = 0; i < groups.size(); ++i) {
        CHECK(isomorphism(groups[i].second, groups[i].second).has_value());
        for (size_t j = i + 1; j < groups.size(); ++j) {
            bool ij = isomorphism(groups[i].second, groups[j].second).has_value();
            bool ji = isomorphism(groups[j].second, groups[i].second).has_value();
            CHECK(ij == ji);
            CHECK_FALSE(ij);  // catalog entries are pairwise non-isomorphic
        }
    }
    CHECK(isomorphism(dihedral_group(6), symmetric3()).has_value());
    CHECK_FALSE(isomorphism(dihedral_group(8), quaternion8()).has_value());
}

TEST_CASE("subgroup enumeration") {
    auto subs = all_subgroups(symmetric3());
    CHECK(subs.size() == 6);  // 1, three C2, C3, S3
    auto d8subs = all_subgroups(dihedral_group(8));
    CHECK(d8subs.size() == 10);
    for (const auto& h : d8subs) CHECK(is_subgroup(dihedral_group(8), h));
}

TEST_CASE("restrict_to_subgroup round trip") {
    FiniteGroup s3 = symmetric3();
    FiniteGroup c3 = restrict_to_subgroup(s3, {0, 1, 2});
    CHECK(c3.order() == 3);
    CHECK(isomorphism(c3, cyclic_group(3)).has_value());
    CHECK_THROWS_AS(restrict_to_subgroup(s3, SubSet{0, 1}), GroupError);
}
