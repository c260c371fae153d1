#include "braces/series.hpp"

#include <algorithm>

namespace braces {

namespace {

const SubSet kZero{0};

// B^(j) / B^j for arbitrary j >= 1 from a stabilized chain.
const SubSet& term_at(const std::vector<SubSet>& chain, int j) {
    int idx = std::min(j - 1, static_cast<int>(chain.size()) - 1);
    return chain[idx];
}

}  // namespace

std::vector<SubSet> left_series(const SkewBrace& b) {
    SubSet all = full_carrier(b.order());
    std::vector<SubSet> chain{all};
    for (int step = 0; step <= b.order(); ++step) {
        SubSet next = star_span(b, all, chain.back());
        if (next == chain.back()) break;
        chain.push_back(next);
    }
    return chain;
}

std::vector<SubSet> right_series(const SkewBrace& b) {
    SubSet all = full_carrier(b.order());
    std::vector<SubSet> chain{all};
    for (int step = 0; step <= b.order(); ++step) {
        SubSet next = star_span(b, chain.back(), all);
        if (next == chain.back()) break;
        chain.push_back(next);
    }
    return chain;
}

std::optional<int> chain_class(const std::vector<SubSet>& chain) {
    for (size_t i = 0; i < chain.size(); ++i)
        if (chain[i] == kZero) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> central_class(const SkewBrace& b) {
    SubSet all = full_carrier(b.order());
    SubSet current{0};
    int steps = 0;
    while (current != all) {
        BraceQuotient q = quotient_brace(b, current);
        SubSet z = brace_centre(q.brace);
        SubSet next;
        for (Elem a = 0; a < b.order(); ++a)
            if (contains(z, q.coset_of[a])) next.push_back(a);
        if (next == current) return std::nullopt;
        current = std::move(next);
        ++steps;
    }
    return steps;
}

bool centrally_nilpotent_chain_search(const SkewBrace& b) {
    if (b.order() == 1) return true;
    SubSet z = brace_centre(b);
    for (const SubSet& h : all_subgroups(b.add())) {
        if (h == kZero) continue;
        if (!std::includes(z.begin(), z.end(), h.begin(), h.end())) continue;
        if (!is_ideal(b, h)) continue;
        if (centrally_nilpotent_chain_search(quotient_brace(b, h).brace)) return true;
    }
    return false;
}

SeriesReport series_report(const SkewBrace& b) {
    SeriesReport r;
    r.left_chain = left_series(b);
    r.right_chain = right_series(b);
    r.left_class = chain_class(r.left_chain);
    r.right_class = chain_class(r.right_chain);
    r.add_class_m = nilpotency_class(b.add());
    SubSet bsq = brace_square(b);
    r.bsq_class_r = nilpotency_class(restrict_to_subgroup(b.add(), bsq));
    r.central_class = central_class(b);
    return r;
}

Verdict theorem_a_check(const SkewBrace& b) {
    Verdict v;
    auto m = nilpotency_class(b.add());
    if (!m) {
        v.reason = "additive group not nilpotent";
        return v;
    }
    auto left = left_series(b);
    auto lc = chain_class(left);
    if (!lc || *lc > 2) {
        v.reason = "not left nilpotent of class <= 2";
        return v;
    }
    SubSet bsq = term_at(left, 2);
    auto r = nilpotency_class(restrict_to_subgroup(b.add(), bsq));
    v.m = *m;
    v.r = r ? *r : 0;
    v.bound = 2 + v.m * v.r;
    auto right = right_series(b);
    auto rc = chain_class(right);
    v.right_class = rc ? *rc : -1;
    bool central = central_class(b).has_value();
    if (rc && *rc <= v.bound && central) {
        v.kind = Verdict::Kind::Pass;
    } else {
        v.kind = Verdict::Kind::Fail;
        if (!rc)
            v.reason = "not right nilpotent";
        else if (*rc > v.bound)
            v.reason = "right class exceeds bound";
        else
            v.reason = "not centrally nilpotent";
    }
    return v;
}

Verdict abelian_corollary_check(const SkewBrace& b) {
    Verdict v;
    if (!b.add().is_abelian()) {
        v.reason = "not of abelian type";
        return v;
    }
    auto left = left_series(b);
    auto lc = chain_class(left);
    if (!lc || *lc > 2) {
        v.reason = "not left nilpotent of class <= 2";
        return v;
    }
    v.m = 1;
    v.r = term_at(left, 2) == kZero ? 0 : 1;
    v.bound = 3;
    auto right = right_series(b);
    auto rc = chain_class(right);
    v.right_class = rc ? *rc : -1;
    if (term_at(right, 4) == kZero) {
        v.kind = Verdict::Kind::Pass;
    } else {
        v.kind = Verdict::Kind::Fail;
        v.reason = "B^(4) != 0";
    }
    return v;
}

Verdict proposition_check(const SkewBrace& b) {
    Verdict v;
    auto m = nilpotency_class(b.add());
    if (!m) {
        v.reason = "additive group not nilpotent";
        return v;
    }
    auto left = left_series(b);
    auto lc = chain_class(left);
    if (!lc || *lc > 2) {
        v.reason = "not left nilpotent of class <= 2";
        return v;
    }
    v.m = *m;
    auto right = right_series(b);
    auto rc = chain_class(right);
    v.right_class = rc ? *rc : -1;
    SubSet zmul = group_centre(b.mul());
    v.kind = Verdict::Kind::Pass;
    for (int k = 2; k <= b.order() + 2; ++k) {
        const SubSet& term = term_at(right, k);
        if (!std::includes(zmul.begin(), zmul.end(), term.begin(), term.end())) continue;
        if (term_at(right, k + v.m + 1) != kZero) {
            v.kind = Verdict::Kind::Fail;
            v.reason = "B^(" + std::to_string(k) + ") central in (B,.) but B^(" +
                       std::to_string(k + v.m + 1) + ") != 0";
            return v;
        }
    }
    return v;
}

std::optional<SnChain> sn_chain(const SkewBrace& b) {
    auto m = nilpotency_class(b.add());
    if (!m) return std::nullopt;
    auto left = left_series(b);
    auto lc = chain_class(left);
    if (!lc || *lc > 2) return std::nullopt;
    SnChain c;
    c.m = *m;
    SubSet bsq = term_at(left, 2);
    FiniteGroup sub = restrict_to_subgroup(b.add(), bsq);
    auto ucs = upper_central_series(sub);
    if (static_cast<int>(ucs.back().size()) != sub.order()) return std::nullopt;
    c.r = static_cast<int>(ucs.size()) - 1;
    for (const SubSet& local : ucs) {
        SubSet ambient;
        for (Elem l : local) ambient.push_back(bsq[l]);
        std::sort(ambient.begin(), ambient.end());
        c.z_terms.push_back(std::move(ambient));
    }
    for (const SubSet& z : c.z_terms) {
        SubSet s;
        for (Elem a : bsq) {
            bool in_kernel = true;
            for (Elem x = 0; x < b.order() && in_kernel; ++x)
                if (!contains(z, b.star(a, x))) in_kernel = false;
            if (in_kernel) s.push_back(a);
        }
        c.s_terms.push_back(std::move(s));
    }
    return c;
}

ContainmentReport proof_containments_check(const SkewBrace& b) {
    ContainmentReport rep;
    auto chain = sn_chain(b);
    if (!chain) return rep;
    rep.applicable = true;
    rep.chain = *chain;
    const SnChain& c = rep.chain;
    for (int n = 0; n <= c.r; ++n)
        if (!is_ideal(b, c.s_terms[n]))
            rep.failures.push_back("S_" + std::to_string(n) + " is not an ideal");
    for (int n = 0; n < c.r; ++n)
        if (!std::includes(c.s_terms[n + 1].begin(), c.s_terms[n + 1].end(),
                           c.s_terms[n].begin(), c.s_terms[n].end()))
            rep.failures.push_back("S_" + std::to_string(n) + " not contained in S_" +
                                   std::to_string(n + 1));
    auto right = right_series(b);
    for (int k = 1; k <= c.r; ++k) {
        const SubSet& term = term_at(right, 2 + c.m * k);
        const SubSet& s = c.s_terms[c.r - k];
        if (!std::includes(s.begin(), s.end(), term.begin(), term.end()))
            rep.failures.push_back("B^(2+" + std::to_string(c.m) + "*" + std::to_string(k) +
                                   ") not contained in S_" + std::to_string(c.r - k));
    }
    // S_0 = Ker lambda cap B^2, and the final step B^(2+mr+1) = 0
    SubSet ker = kernel_lambda(b);
    SubSet bsq = term_at(left_series(b), 2);
    SubSet ker_cap;
    std::set_intersection(ker.begin(), ker.end(), bsq.begin(), bsq.end(),
                          std::back_inserter(ker_cap));
    if (c.s_terms[0] != ker_cap)
        rep.failures.push_back("S_0 differs from Ker lambda cap B^2");
    const SubSet& last = term_at(right, 2 + c.m * c.r);
    if (!std::includes(ker_cap.begin(), ker_cap.end(), last.begin(), last.end()))
        rep.failures.push_back("B^(2+mr) not contained in Ker lambda cap B^2");
    if (term_at(right, 2 + c.m * c.r + 1) != SubSet{0})
        rep.failures.push_back("B^(2+mr+1) != 0");
    rep.all_pass = rep.failures.empty();
    return rep;
}

std::vector<AttainmentEntry> bound_attainment_search(const std::vector<SkewBrace>& catalog) {
    std::vector<AttainmentEntry> out;
    for (size_t i = 0; i < catalog.size(); ++i) {
        Verdict v = theorem_a_check(catalog[i]);
        if (!v.applicable() || v.right_class < 0) continue;
        AttainmentEntry e;
        e.index = static_cast<int>(i);
        e.m = v.m;
        e.r = v.r;
        e.bound = v.bound;
        e.right_class = v.right_class;
        e.ratio = v.m * v.r > 0 ? double(v.right_class - 2) / double(v.m * v.r) : 0.0;
        e.attains_bound = (v.right_class == v.bound);
        e.nontrivial_mr = (v.m * v.r > 1);
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const AttainmentEntry& a, const AttainmentEntry& b) {
        if (a.ratio != b.ratio) return a.ratio > b.ratio;
        return a.index < b.index;
    });
    return out;
}

}  // namespace braces
