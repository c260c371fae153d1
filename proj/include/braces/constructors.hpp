#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braces/skew_brace.hpp"

namespace braces {

/// Data for building a brace from a bijective 1-cocycle delta: G -> A with
/// delta(xy) = delta(x) + phi_x(delta(y)).
struct DerivationInput {
    FiniteGroup source;  // (G,.)
    FiniteGroup target;  // (A,+)
    std::vector<std::vector<Elem>> phi;  // phi[g] is a permutation of A's carrier
    std::vector<Elem> delta;             // delta[g] in A's carrier
};

struct DerivationCheck {
    bool ok = false;
    std::string witness;
};

DerivationCheck check_derivation(const DerivationInput& in);

/// Brace on A's carrier with a.b = a + phi_{delta^-1(a)}(b); asserts the
/// multiplicative structure is isomorphic to G via delta.
SkewBrace brace_from_derivation(const DerivationInput& in,
                                std::vector<std::string> labels = {});

/// Round-trip input: G = (B,.), A = (B,+), phi = lambda, delta = identity.
DerivationInput identity_derivation(const SkewBrace& b);

/// Order-6 fixture: additive Sym(3), multiplicative C6 (non-nilpotent type).
DerivationInput nonnilpotent_type_input();
SkewBrace paper_example_nonnilpotent_type();

/// Order-8 fixture: additive C4 x C2, multiplicative D8 (abelian type).
DerivationInput c4c2_input();
SkewBrace paper_example_c4c2();

/// Catalog of all isomorphism classes of groups of order <= cap (cap <= 8),
/// with display names.
std::vector<std::pair<std::string, FiniteGroup>> groups_up_to_order(int cap);

/// Resolves a group name: Cn, D2n (by order), Q8, S3, or products like C4xC2.
std::optional<FiniteGroup> group_by_name(const std::string& name);

/// All skew brace multiplications on the given additive group, found as
/// regular subgroups of the holomorph (backtracking over the automorphism
/// component with closure propagation). Deterministic output order.
std::vector<SkewBrace> enumerate_braces(const FiniteGroup& add, bool dedup = true,
                                        int cap = 8);

/// Independent oracle: exhaustive scan over all maps carrier -> Aut(A) with
/// full table validation. Order <= 6 only.
std::vector<SkewBrace> enumerate_braces_direct(const FiniteGroup& add);

/// A bijection fixing 0 that is an isomorphism of both group structures.
std::optional<std::vector<Elem>> brace_isomorphism(const SkewBrace& b1, const SkewBrace& b2,
                                                   int cap = 8);

/// Removes brace-isomorphic duplicates, keeping first occurrences.
std::vector<SkewBrace> dedup_braces(const std::vector<SkewBrace>& list, int cap = 8);

}  // namespace braces
