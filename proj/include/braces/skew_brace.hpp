#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braces/finite_group.hpp"

namespace braces {

class BraceError : public std::runtime_error {
public:
    explicit BraceError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// One carrier with two group structures sharing identity 0, linked by
/// a(b+c) = ab - a + ac. Construction checks the law exhaustively.
class SkewBrace {
public:
    SkewBrace(FiniteGroup add, FiniteGroup mul, std::vector<std::string> labels = {});

    int order() const { return add_.order(); }
    const FiniteGroup& add() const { return add_; }
    const FiniteGroup& mul() const { return mul_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Elem plus(Elem a, Elem b) const { return add_.op(a, b); }
    Elem neg(Elem a) const { return add_.inv(a); }
    Elem times(Elem a, Elem b) const { return mul_.op(a, b); }
    Elem times_inv(Elem a) const { return mul_.inv(a); }

    /// lambda_a(b) = -a + ab
    Elem lambda(Elem a, Elem b) const { return add_.op(add_.inv(a), mul_.op(a, b)); }
    std::vector<Elem> lambda_perm(Elem a) const;

    /// a*b = lambda_a(b) - b
    Elem star(Elem a, Elem b) const { return add_.op(lambda(a, b), add_.inv(b)); }

    std::string label(Elem a) const;

private:
    FiniteGroup add_;
    FiniteGroup mul_;
    std::vector<std::string> labels_;
};

/// Additive closure of all pairwise stars x*y, x in X, y in Y.
SubSet star_span(const SkewBrace& b, const SubSet& x, const SubSet& y);

struct IdealFlags {
    bool additive_subgroup = false;
    bool normal_add = false;
    bool normal_mul = false;
    bool lambda_invariant = false;
    bool star_absorbing_left = false;   // I * B subset of I
    bool star_absorbing_right = false;  // B * I subset of I
    bool ideal() const {
        return additive_subgroup && normal_add && star_absorbing_left && star_absorbing_right;
    }
    /// the equivalent characterization; must agree with ideal()
    bool ideal_via_lambda() const {
        return additive_subgroup && normal_add && normal_mul && lambda_invariant;
    }
    std::string first_failure() const;
};

IdealFlags ideal_flags(const SkewBrace& b, const SubSet& subset);
bool is_ideal(const SkewBrace& b, const SubSet& subset);

struct BraceQuotient {
    SkewBrace brace;
    std::vector<Elem> coset_of;
    std::vector<Elem> rep_of;
};
BraceQuotient quotient_brace(const SkewBrace& b, const SubSet& ideal);

/// zeta(B) = {b | a*b = b*a = [a,b]_+ = 0 for all a}
SubSet brace_centre(const SkewBrace& b);

/// {a | lambda_a = id}
SubSet kernel_lambda(const SkewBrace& b);

/// B^2 = B * B
SubSet brace_square(const SkewBrace& b);

struct LemmaReport {
    bool remark_holds = false;   // (ab)*c = a*(b*c) + b*c + a*c, always required
    bool b3_zero = false;        // gate for parts 1-4
    bool part1 = false;          // ac = a+c for c in B^2
    bool part2 = false;          // (ab)*x = b*x + a*x
    bool part3 = false;          // [a,b]. * x = [-b*x, -a*x]_+
    bool part4 = false;          // (a+c)*x = c*x + a*x for c in B^2
    std::string witness;         // first failing tuple, if any
    bool all_pass() const { return remark_holds && (!b3_zero || (part1 && part2 && part3 && part4)); }
};

/// Checks the star-product identity suite; parts 1-4 are gated on a freshly
/// computed B^3 = 0.
LemmaReport lemma_identities_check(const SkewBrace& b);

}  // namespace braces
