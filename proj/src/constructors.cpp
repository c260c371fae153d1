#include "braces/constructors.hpp"

#include <algorithm>
#include <map>

#include "braces/series.hpp"

namespace braces {

namespace {

bool is_permutation(const std::vector<Elem>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (Elem e : p) {
        if (e < 0 || e >= n || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

std::vector<Elem> compose(const std::vector<Elem>& f, const std::vector<Elem>& g) {
    std::vector<Elem> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

}  // namespace

DerivationCheck check_derivation(const DerivationInput& in) {
    DerivationCheck res;
    int n = in.source.order();
    if (in.target.order() != n || static_cast<int>(in.phi.size()) != n ||
        static_cast<int>(in.delta.size()) != n) {
        res.witness = "SizeMismatch";
        return res;
    }
    for (Elem g = 0; g < n; ++g) {
        if (!is_permutation(in.phi[g], n) ||
            !is_homomorphism(in.target, in.target, in.phi[g])) {
            res.witness = "phi[" + std::to_string(g) + "] is not an automorphism of the target";
            return res;
        }
    }
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h)
            if (in.phi[in.source.op(g, h)] != compose(in.phi[g], in.phi[h])) {
                res.witness = "phi is not a homomorphism at (" + std::to_string(g) + "," +
                              std::to_string(h) + ")";
                return res;
            }
    if (!is_permutation(in.delta, n) || in.delta[0] != 0) {
        res.witness = "delta is not a bijection with delta(1) = 0";
        return res;
    }
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h) {
            Elem lhs = in.delta[in.source.op(g, h)];
            Elem rhs = in.target.op(in.delta[g], in.phi[g][in.delta[h]]);
            if (lhs != rhs) {
                res.witness = "cocycle law fails at (" + std::to_string(g) + "," +
                              std::to_string(h) + ")";
                return res;
            }
        }
    res.ok = true;
    return res;
}

SkewBrace brace_from_derivation(const DerivationInput& in, std::vector<std::string> labels) {
    DerivationCheck chk = check_derivation(in);
    if (!chk.ok) throw BraceError("InvalidDerivation: " + chk.witness);
    int n = in.target.order();
    std::vector<Elem> dinv(n);
    for (Elem g = 0; g < n; ++g) dinv[in.delta[g]] = g;
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            mul[a][b] = in.target.op(a, in.phi[dinv[a]][b]);
    SkewBrace brace(in.target, FiniteGroup(mul), std::move(labels));
    if (!is_homomorphism(in.source, brace.mul(), in.delta))
        throw BraceError("derivation did not realize (B,.) isomorphic to G");
    return brace;
}

DerivationInput identity_derivation(const SkewBrace& b) {
    DerivationInput in{b.mul(), b.add(), {}, {}};
    for (Elem a = 0; a < b.order(); ++a) {
        in.phi.push_back(b.lambda_perm(a));
        in.delta.push_back(a);
    }
    return in;
}

DerivationInput nonnilpotent_type_input() {
    DerivationInput in{cyclic_group(6), symmetric3(), {}, {}};
    // phi_g fixes sigma and sends tau to sigma+tau; carrier 0,s,2s,t,s+t,2s+t
    std::vector<Elem> p{0, 1, 2, 4, 5, 3};
    std::vector<Elem> cur{0, 1, 2, 3, 4, 5};
    for (int k = 0; k < 6; ++k) {
        in.phi.push_back(cur);
        cur = compose(p, cur);
    }
    in.delta = {0, 5, 2, 3, 1, 4};
    return in;
}

SkewBrace paper_example_nonnilpotent_type() {
    return brace_from_derivation(
        nonnilpotent_type_input(),
        {"0", "sigma", "2sigma", "tau", "sigma+tau", "2sigma+tau"});
}

DerivationInput c4c2_input() {
    // additive carrier i*a + j*b numbered i + 4j
    DerivationInput in{dihedral_group(8), direct_product(cyclic_group(2), cyclic_group(4)),
                       {}, {}};
    std::vector<Elem> phi_s(8), phi_t(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) {
            phi_s[i + 4 * j] = (3 * i) % 4 + 4 * ((i + j) % 2);
            phi_t[i + 4 * j] = i + 4 * ((i + j) % 2);
        }
    in.phi.resize(8);
    for (int r = 0; r < 4; ++r)
        for (int f = 0; f < 2; ++f) {
            std::vector<Elem> m{0, 1, 2, 3, 4, 5, 6, 7};
            for (int k = 0; k < f; ++k) m = compose(phi_t, m);
            for (int k = 0; k < r; ++k) m = compose(phi_s, m);
            in.phi[r + 4 * f] = std::move(m);
        }
    in.delta = {0, 5, 4, 1, 2, 7, 6, 3};
    return in;
}

SkewBrace paper_example_c4c2() {
    return brace_from_derivation(c4c2_input(),
                                 {"0", "a", "2a", "3a", "b", "a+b", "2a+b", "3a+b"});
}

std::vector<std::pair<std::string, FiniteGroup>> groups_up_to_order(int cap) {
    std::vector<std::pair<std::string, FiniteGroup>> all;
    all.emplace_back("C1", cyclic_group(1));
    all.emplace_back("C2", cyclic_group(2));
    all.emplace_back("C3", cyclic_group(3));
    all.emplace_back("C4", cyclic_group(4));
    all.emplace_back("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
    all.emplace_back("C5", cyclic_group(5));
    all.emplace_back("C6", cyclic_group(6));
    all.emplace_back("S3", symmetric3());
    all.emplace_back("C7", cyclic_group(7));
    all.emplace_back("C8", cyclic_group(8));
    all.emplace_back("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)));
    all.emplace_back("C2xC2xC2",
                     direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                    cyclic_group(2)));
    all.emplace_back("D8", dihedral_group(8));
    all.emplace_back("Q8", quaternion8());
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (auto& g : all)
        if (g.second.order() <= cap) out.push_back(std::move(g));
    return out;
}

std::optional<FiniteGroup> group_by_name(const std::string& name) {
    auto atom = [](const std::string& s) -> std::optional<FiniteGroup> {
        if (s == "S3") return symmetric3();
        if (s == "Q8") return quaternion8();
        if (s.size() >= 2 && s[0] == 'C') {
            int n = std::atoi(s.c_str() + 1);
            if (n >= 1) return cyclic_group(n);
        }
        if (s.size() >= 2 && s[0] == 'D') {
            int n = std::atoi(s.c_str() + 1);
            if (n >= 2 && n % 2 == 0) return dihedral_group(n);
        }
        return std::nullopt;
    };
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    std::optional<FiniteGroup> acc;
    for (const auto& p : parts) {
        auto g = atom(p);
        if (!g) return std::nullopt;
        acc = acc ? direct_product(*acc, *g) : *g;
    }
    return acc;
}

namespace {

struct HolomorphSearch {
    const FiniteGroup& add;
    std::vector<std::vector<Elem>> auts;
    std::vector<std::vector<int>> comp;  // comp[i][j] = index of auts[i] o auts[j]
    int identity_index = 0;
    std::vector<SkewBrace> found;

    explicit HolomorphSearch(const FiniteGroup& a) : add(a) {
        auts = automorphisms(add);
        std::map<std::vector<Elem>, int> index;
        for (size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
        int k = static_cast<int>(auts.size());
        comp.assign(k, std::vector<int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) comp[i][j] = index.at(compose(auts[i], auts[j]));
        std::vector<Elem> id(add.order());
        for (int i = 0; i < add.order(); ++i) id[i] = i;
        identity_index = index.at(id);
    }

    // Enforces closure of {(a, lam_a)} in Hol(A): lam at a + lam_a(b) must be
    // the composition lam_a o lam_b. Returns false on contradiction.
    bool propagate(std::vector<int>& lam) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Elem a = 0; a < add.order(); ++a) {
                if (lam[a] < 0) continue;
                for (Elem b = 0; b < add.order(); ++b) {
                    if (lam[b] < 0) continue;
                    Elem c = add.op(a, auts[lam[a]][b]);
                    int k = comp[lam[a]][lam[b]];
                    if (lam[c] < 0) {
                        lam[c] = k;
                        changed = true;
                    } else if (lam[c] != k) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void run(std::vector<int>& lam) {
        Elem free = -1;
        for (Elem a = 0; a < add.order(); ++a)
            if (lam[a] < 0) {
                free = a;
                break;
            }
        if (free < 0) {
            emit(lam);
            return;
        }
        for (int k = 0; k < static_cast<int>(auts.size()); ++k) {
            std::vector<int> next = lam;
            next[free] = k;
            if (propagate(next)) run(next);
        }
    }

    void emit(const std::vector<int>& lam) {
        int n = add.order();
        std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) mul[a][b] = add.op(a, auts[lam[a]][b]);
        found.emplace_back(add, FiniteGroup(std::move(mul)));
    }
};

std::vector<int> brace_invariant_key(const SkewBrace& b) {
    std::vector<int> key;
    for (Elem a = 0; a < b.order(); ++a) key.push_back(b.mul().elem_order(a));
    std::sort(key.begin(), key.end());
    key.push_back(static_cast<int>(kernel_lambda(b).size()));
    for (const SubSet& s : left_series(b)) key.push_back(static_cast<int>(s.size()));
    key.push_back(-1);
    for (const SubSet& s : right_series(b)) key.push_back(static_cast<int>(s.size()));
    return key;
}

}  // namespace

std::vector<SkewBrace> enumerate_braces(const FiniteGroup& add, bool dedup, int cap) {
    if (add.order() > cap) throw GroupError("OrderCapExceeded");
    HolomorphSearch search(add);
    std::vector<int> lam(add.order(), -1);
    lam[0] = search.identity_index;
    search.run(lam);
    if (!dedup) return std::move(search.found);
    return dedup_braces(search.found, std::max(cap, add.order()));
}

std::vector<SkewBrace> enumerate_braces_direct(const FiniteGroup& add) {
    if (add.order() > 6) throw GroupError("OrderCapExceeded: direct oracle is order <= 6");
    auto auts = automorphisms(add);
    int n = add.order();
    int k = static_cast<int>(auts.size());
    std::vector<SkewBrace> out;
    std::vector<int> lam(n, 0);
    while (true) {
        std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) mul[a][b] = add.op(a, auts[lam[a]][b]);
        try {
            out.emplace_back(add, FiniteGroup(std::move(mul)));
        } catch (const std::runtime_error&) {
            // not a group (or not distributive): discard candidate
        }
        int pos = n - 1;
        while (pos >= 0 && lam[pos] == k - 1) lam[pos--] = 0;
        if (pos < 0) break;
        ++lam[pos];
    }
    return out;
}

std::optional<std::vector<Elem>> brace_isomorphism(const SkewBrace& b1, const SkewBrace& b2,
                                                   int cap) {
    if (b1.order() != b2.order()) return std::nullopt;
    if (b1.order() > cap) throw GroupError("OrderCapExceeded");
    auto base = isomorphism(b1.add(), b2.add(), cap);
    if (!base) return std::nullopt;
    for (const auto& alpha : automorphisms(b2.add(), cap)) {
        std::vector<Elem> f(b1.order());
        for (Elem a = 0; a < b1.order(); ++a) f[a] = alpha[(*base)[a]];
        bool ok = true;
        for (Elem a = 0; a < b1.order() && ok; ++a)
            for (Elem b = 0; b < b1.order(); ++b)
                if (f[b1.times(a, b)] != b2.times(f[a], f[b])) {
                    ok = false;
                    break;
                }
        if (ok) return f;
    }
    return std::nullopt;
}

std::vector<SkewBrace> dedup_braces(const std::vector<SkewBrace>& list, int cap) {
    std::vector<SkewBrace> reps;
    std::vector<std::vector<int>> keys;
    for (const SkewBrace& b : list) {
        std::vector<int> key = brace_invariant_key(b);
        bool duplicate = false;
        for (size_t i = 0; i < reps.size(); ++i) {
            if (keys[i] != key) continue;
            if (brace_isomorphism(reps[i], b, cap)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            reps.push_back(b);
            keys.push_back(std::move(key));
        }
    }
    return reps;
}

}  // namespace braces
