#include "braces/skew_brace.hpp"

#include <algorithm>

namespace braces {

SkewBrace::SkewBrace(FiniteGroup add, FiniteGroup mul, std::vector<std::string> labels)
    : add_(std::move(add)), mul_(std::move(mul)), labels_(std::move(labels)) {
    if (add_.order() != mul_.order())
        throw BraceError("additive and multiplicative orders differ");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != add_.order())
        throw BraceError("label count does not match order");
    int n = add_.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                Elem lhs = mul_.op(a, add_.op(b, c));
                Elem rhs = add_.op(add_.op(mul_.op(a, b), add_.inv(a)), mul_.op(a, c));
                if (lhs != rhs)
                    throw BraceError("DistributivityFails: witness (" + std::to_string(a) +
                                     "," + std::to_string(b) + "," + std::to_string(c) + ")");
            }
}

std::vector<Elem> SkewBrace::lambda_perm(Elem a) const {
    std::vector<Elem> p(order());
    for (Elem b = 0; b < order(); ++b) p[b] = lambda(a, b);
    return p;
}

std::string SkewBrace::label(Elem a) const {
    if (labels_.empty()) return std::to_string(a);
    return labels_[a];
}

SubSet star_span(const SkewBrace& b, const SubSet& x, const SubSet& y) {
    SubSet gens;
    for (Elem a : x)
        for (Elem c : y) gens.push_back(b.star(a, c));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(b.add(), gens);
}

std::string IdealFlags::first_failure() const {
    if (!additive_subgroup) return "not an additive subgroup";
    if (!normal_add) return "not normal in (B,+)";
    if (!star_absorbing_left) return "I * B not contained in I";
    if (!star_absorbing_right) return "B * I not contained in I";
    if (!normal_mul) return "not normal in (B,.)";
    if (!lambda_invariant) return "not lambda-invariant";
    return "";
}

IdealFlags ideal_flags(const SkewBrace& b, const SubSet& subset) {
    IdealFlags f;
    f.additive_subgroup = is_subgroup(b.add(), subset);
    if (!f.additive_subgroup) return f;
    f.normal_add = is_normal(b.add(), subset);
    f.normal_mul = is_normal(b.mul(), subset);
    f.lambda_invariant = true;
    for (Elem a = 0; a < b.order() && f.lambda_invariant; ++a)
        for (Elem x : subset)
            if (!contains(subset, b.lambda(a, x))) {
                f.lambda_invariant = false;
                break;
            }
    f.star_absorbing_left = true;
    f.star_absorbing_right = true;
    for (Elem a = 0; a < b.order(); ++a)
        for (Elem x : subset) {
            if (!contains(subset, b.star(x, a))) f.star_absorbing_left = false;
            if (!contains(subset, b.star(a, x))) f.star_absorbing_right = false;
        }
    return f;
}

bool is_ideal(const SkewBrace& b, const SubSet& subset) {
    IdealFlags f = ideal_flags(b, subset);
    if (f.ideal() != f.ideal_via_lambda())
        throw BraceError("ideal characterizations disagree on subset");
    return f.ideal();
}

BraceQuotient quotient_brace(const SkewBrace& b, const SubSet& ideal) {
    IdealFlags f = ideal_flags(b, ideal);
    if (!f.ideal()) throw BraceError("NotIdeal: " + f.first_failure());
    Quotient qa = quotient_group(b.add(), ideal);
    // additive and multiplicative cosets must coincide: b + I = bI
    for (Elem a = 0; a < b.order(); ++a) {
        SubSet add_coset, mul_coset;
        for (Elem x : ideal) {
            add_coset.push_back(b.plus(a, x));
            mul_coset.push_back(b.times(a, x));
        }
        std::sort(add_coset.begin(), add_coset.end());
        std::sort(mul_coset.begin(), mul_coset.end());
        if (add_coset != mul_coset) throw BraceError("cosets of ideal differ between + and .");
    }
    int q = qa.group.order();
    std::vector<std::vector<Elem>> mul_table(q, std::vector<Elem>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            mul_table[i][j] = qa.coset_of[b.times(qa.rep_of[i], qa.rep_of[j])];
    SkewBrace quo(qa.group, FiniteGroup(std::move(mul_table)));
    return BraceQuotient{std::move(quo), std::move(qa.coset_of), std::move(qa.rep_of)};
}

SubSet brace_centre(const SkewBrace& b) {
    SubSet z;
    for (Elem x = 0; x < b.order(); ++x) {
        bool ok = true;
        for (Elem a = 0; a < b.order() && ok; ++a) {
            if (b.star(a, x) != 0 || b.star(x, a) != 0) ok = false;
            else if (b.plus(a, x) != b.plus(x, a)) ok = false;
        }
        if (ok) z.push_back(x);
    }
    return z;
}

SubSet kernel_lambda(const SkewBrace& b) {
    SubSet k;
    for (Elem a = 0; a < b.order(); ++a) {
        bool ident = true;
        for (Elem x = 0; x < b.order() && ident; ++x)
            if (b.lambda(a, x) != x) ident = false;
        if (ident) k.push_back(a);
    }
    return k;
}

SubSet brace_square(const SkewBrace& b) {
    SubSet all = full_carrier(b.order());
    return star_span(b, all, all);
}

LemmaReport lemma_identities_check(const SkewBrace& b) {
    LemmaReport r;
    int n = b.order();
    auto tup = [&](Elem a, Elem c, Elem x) {
        return "(" + std::to_string(a) + "," + std::to_string(c) + "," + std::to_string(x) + ")";
    };
    r.remark_holds = true;
    for (Elem a = 0; a < n && r.remark_holds; ++a)
        for (Elem c = 0; c < n && r.remark_holds; ++c)
            for (Elem x = 0; x < n; ++x) {
                Elem lhs = b.star(b.times(a, c), x);
                Elem rhs = b.plus(b.plus(b.star(a, b.star(c, x)), b.star(c, x)), b.star(a, x));
                if (lhs != rhs) {
                    r.remark_holds = false;
                    r.witness = "remark " + tup(a, c, x);
                    break;
                }
            }
    SubSet bsq = brace_square(b);
    SubSet bcube = star_span(b, full_carrier(n), bsq);
    r.b3_zero = (bcube == SubSet{0});
    if (!r.b3_zero) return r;

    r.part1 = true;
    for (Elem a = 0; a < n && r.part1; ++a)
        for (Elem c : bsq)
            if (b.times(a, c) != b.plus(a, c)) {
                r.part1 = false;
                r.witness = "part1 " + tup(a, c, 0);
                break;
            }
    r.part2 = true;
    for (Elem a = 0; a < n && r.part2; ++a)
        for (Elem c = 0; c < n && r.part2; ++c)
            for (Elem x = 0; x < n; ++x)
                if (b.star(b.times(a, c), x) != b.plus(b.star(c, x), b.star(a, x))) {
                    r.part2 = false;
                    r.witness = "part2 " + tup(a, c, x);
                    break;
                }
    // [a,c]. * x = [-c*x, -a*x]_+ under [u,v] = u v u^-1 v^-1
    r.part3 = true;
    for (Elem a = 0; a < n && r.part3; ++a)
        for (Elem c = 0; c < n && r.part3; ++c)
            for (Elem x = 0; x < n; ++x) {
                Elem lhs = b.star(commutator(b.mul(), a, c), x);
                Elem rhs = commutator(b.add(), b.neg(b.star(c, x)), b.neg(b.star(a, x)));
                if (lhs != rhs) {
                    r.part3 = false;
                    r.witness = "part3 " + tup(a, c, x);
                    break;
                }
            }
    r.part4 = true;
    for (Elem a = 0; a < n && r.part4; ++a)
        for (Elem c : bsq) {
            for (Elem x = 0; x < n; ++x)
                if (b.star(b.plus(a, c), x) != b.plus(b.star(c, x), b.star(a, x))) {
                    r.part4 = false;
                    r.witness = "part4 " + tup(a, c, x);
                    break;
                }
            if (!r.part4) break;
        }
    return r;
}

}  // namespace braces
