#include "braces/finite_group.hpp"

#include <algorithm>
#include <set>

namespace braces {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table)
    : order_(static_cast<int>(table.size())), table_(std::move(table)) {
    if (order_ <= 0) throw GroupError("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != order_)
            throw GroupError("table is not square");
        for (Elem e : row)
            if (e < 0 || e >= order_) throw GroupError("table entry out of range");
    }
    for (Elem a = 0; a < order_; ++a) {
        if (table_[0][a] != a || table_[a][0] != a)
            throw GroupError("NoIdentityAtZero: element " + std::to_string(a));
    }
    // Latin square: rows and columns are permutations.
    for (Elem a = 0; a < order_; ++a) {
        std::vector<bool> row_seen(order_, false), col_seen(order_, false);
        for (Elem b = 0; b < order_; ++b) {
            if (row_seen[table_[a][b]])
                throw GroupError("NotLatinSquare: repeated entry in row " + std::to_string(a));
            if (col_seen[table_[b][a]])
                throw GroupError("NotLatinSquare: repeated entry in column " + std::to_string(a));
            row_seen[table_[a][b]] = true;
            col_seen[table_[b][a]] = true;
        }
    }
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b)
            for (Elem c = 0; c < order_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw GroupError("NotAssociative: witness " + triple(a, b, c));
    inverse_.assign(order_, -1);
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b)
            if (table_[a][b] == 0) inverse_[a] = b;
}

int FiniteGroup::elem_order(Elem a) const {
    int k = 1;
    Elem x = a;
    while (x != 0) {
        x = op(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = a + 1; b < order_; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

void FiniteGroup::assert_valid() const {
    FiniteGroup check(table_);  // re-runs every axiom
    (void)check;
}

FiniteGroup group_from_table(const std::vector<std::vector<Elem>>& table) {
    return FiniteGroup(table);
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw GroupError("cyclic group order must be positive");
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(int order) {
    if (order < 2 || order % 2 != 0) throw GroupError("dihedral order must be even and >= 2");
    int n = order / 2;
    // (r1,f1)(r2,f2) = (r1 + (-1)^f1 r2, f1+f2)
    std::vector<std::vector<Elem>> t(order, std::vector<Elem>(order));
    for (int r1 = 0; r1 < n; ++r1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int r2 = 0; r2 < n; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    int r = ((f1 ? n - r2 : r2) + r1) % n;
                    int f = (f1 + f2) % 2;
                    t[r1 + n * f1][r2 + n * f2] = r + n * f;
                }
    return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    int n = g.order(), m = h.order();
    std::vector<std::vector<Elem>> t(n * m, std::vector<Elem>(n * m));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < m; ++d)
                    t[a * m + b][c * m + d] = g.op(a, c) * m + h.op(b, d);
    return FiniteGroup(std::move(t));
}

FiniteGroup symmetric3() { return dihedral_group(6); }

FiniteGroup quaternion8() {
    // i^r j^f numbered r + 4f; j i^r = i^{-r} j and j^2 = i^2.
    std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
    for (int r1 = 0; r1 < 4; ++r1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int r2 = 0; r2 < 4; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    int r = (r1 + (f1 ? 4 - r2 : r2) + (f1 && f2 ? 2 : 0)) % 4;
                    int f = (f1 + f2) % 2;
                    t[r1 + 4 * f1][r2 + 4 * f2] = r + 4 * f;
                }
    return FiniteGroup(std::move(t));
}

bool contains(const SubSet& s, Elem a) {
    return std::binary_search(s.begin(), s.end(), a);
}

SubSet full_carrier(int n) {
    SubSet s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

SubSet subgroup_closure(const FiniteGroup& g, const SubSet& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> work{0};
    in[0] = true;
    for (Elem e : gens)
        if (!in[e]) {
            in[e] = true;
            work.push_back(e);
        }
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t j = 0; j < work.size(); ++j) {
            Elem p = g.op(work[i], work[j]);
            if (!in[p]) {
                in[p] = true;
                work.push_back(p);
            }
        }
        Elem v = g.inv(work[i]);
        if (!in[v]) {
            in[v] = true;
            work.push_back(v);
        }
    }
    std::sort(work.begin(), work.end());
    return work;
}

bool is_subgroup(const FiniteGroup& g, const SubSet& h) {
    if (h.empty() || h[0] != 0) return false;
    for (Elem a : h) {
        if (!contains(h, g.inv(a))) return false;
        for (Elem b : h)
            if (!contains(h, g.op(a, b))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const SubSet& h) {
    if (!is_subgroup(g, h)) return false;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem x : h)
            if (!contains(h, g.conj(a, x))) return false;
    return true;
}

Elem commutator(const FiniteGroup& g, Elem a, Elem b) {
    return g.op(g.op(a, b), g.op(g.inv(a), g.inv(b)));
}

SubSet commutator_subgroup(const FiniteGroup& g, const SubSet& x, const SubSet& y) {
    SubSet gens;
    for (Elem a : x)
        for (Elem b : y) gens.push_back(commutator(g, a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(g, gens);
}

SubSet group_centre(const FiniteGroup& g) {
    SubSet z;
    for (Elem a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < g.order() && central; ++b)
            if (g.op(a, b) != g.op(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<SubSet> lower_central_series(const FiniteGroup& g) {
    std::vector<SubSet> chain{full_carrier(g.order())};
    SubSet all = full_carrier(g.order());
    for (int step = 0; step <= g.order(); ++step) {
        SubSet next = commutator_subgroup(g, chain.back(), all);
        if (next == chain.back()) break;
        chain.push_back(next);
    }
    return chain;
}

std::vector<SubSet> upper_central_series(const FiniteGroup& g) {
    std::vector<SubSet> chain{SubSet{0}};
    for (int step = 0; step <= g.order(); ++step) {
        Quotient q = quotient_group(g, chain.back());
        SubSet zq = group_centre(q.group);
        SubSet next;
        for (Elem a = 0; a < g.order(); ++a)
            if (contains(zq, q.coset_of[a])) next.push_back(a);
        if (next == chain.back()) break;
        chain.push_back(next);
    }
    return chain;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
    auto chain = lower_central_series(g);
    if (chain.back() != SubSet{0}) return std::nullopt;
    return static_cast<int>(chain.size()) - 1;
}

Quotient quotient_group(const FiniteGroup& g, const SubSet& normal_sub) {
    if (!is_normal(g, normal_sub)) throw GroupError("NotNormal");
    int n = g.order();
    std::vector<Elem> rep(n, -1);  // least member of each element's left coset
    std::vector<Elem> reps;
    for (Elem a = 0; a < n; ++a) {
        if (rep[a] != -1) continue;
        Elem least = a;
        for (Elem x : normal_sub) least = std::min(least, g.op(a, x));
        for (Elem x : normal_sub) rep[g.op(a, x)] = least;
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<Elem> coset_of(n);
    for (Elem a = 0; a < n; ++a)
        coset_of[a] = static_cast<Elem>(
            std::lower_bound(reps.begin(), reps.end(), rep[a]) - reps.begin());
    int q = static_cast<int>(reps.size());
    std::vector<std::vector<Elem>> table(q, std::vector<Elem>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = coset_of[g.op(reps[i], reps[j])];
    return Quotient{FiniteGroup(std::move(table)), std::move(coset_of), std::move(reps)};
}

FiniteGroup restrict_to_subgroup(const FiniteGroup& g, const SubSet& h) {
    if (!is_subgroup(g, h)) throw GroupError("NotASubgroup");
    int m = static_cast<int>(h.size());
    std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Elem p = g.op(h[i], h[j]);
            t[i][j] = static_cast<Elem>(std::lower_bound(h.begin(), h.end(), p) - h.begin());
        }
    return FiniteGroup(std::move(t));
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Elem>& image) {
    if (static_cast<int>(image.size()) != dom.order()) return false;
    if (image[0] != 0) return false;
    for (Elem a = 0; a < dom.order(); ++a)
        for (Elem b = 0; b < dom.order(); ++b)
            if (image[dom.op(a, b)] != cod.op(image[a], image[b])) return false;
    return true;
}

namespace {

std::vector<Elem> generating_sequence(const FiniteGroup& g) {
    std::vector<Elem> gens;
    SubSet span{0};
    for (Elem a = 0; a < g.order() && static_cast<int>(span.size()) < g.order(); ++a) {
        if (contains(span, a)) continue;
        gens.push_back(a);
        span = subgroup_closure(g, gens);
    }
    return gens;
}

// Extends generator images to a full map by right-multiplication closure,
// then verifies the homomorphism law and bijectivity.
std::optional<std::vector<Elem>> extend_hom(const FiniteGroup& g, const FiniteGroup& h,
                                            const std::vector<Elem>& gens,
                                            const std::vector<Elem>& images,
                                            bool require_bijective) {
    std::vector<Elem> img(g.order(), -1);
    img[0] = 0;
    std::vector<Elem> work{0};
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t k = 0; k < gens.size(); ++k) {
            Elem y = g.op(work[i], gens[k]);
            Elem iy = h.op(img[work[i]], images[k]);
            if (img[y] == -1) {
                img[y] = iy;
                work.push_back(y);
            } else if (img[y] != iy) {
                return std::nullopt;
            }
        }
    }
    for (Elem a = 0; a < g.order(); ++a)
        if (img[a] == -1) return std::nullopt;  // gens did not generate
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            if (img[g.op(a, b)] != h.op(img[a], img[b])) return std::nullopt;
    if (require_bijective) {
        std::vector<bool> hit(h.order(), false);
        for (Elem a = 0; a < g.order(); ++a) {
            if (hit[img[a]]) return std::nullopt;
            hit[img[a]] = true;
        }
        if (g.order() != h.order()) return std::nullopt;
    }
    return img;
}

void search_isos(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& gens,
                 std::vector<Elem>& images, size_t depth,
                 std::vector<std::vector<Elem>>& out, bool first_only) {
    if (first_only && !out.empty()) return;
    if (depth == gens.size()) {
        auto full = extend_hom(g, h, gens, images, true);
        if (full) out.push_back(*full);
        return;
    }
    int want = g.elem_order(gens[depth]);
    for (Elem c = 0; c < h.order(); ++c) {
        if (h.elem_order(c) != want) continue;
        images[depth] = c;
        search_isos(g, h, gens, images, depth + 1, out, first_only);
        if (first_only && !out.empty()) return;
    }
}

}  // namespace

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g, int cap) {
    if (g.order() > cap) throw GroupError("OrderCapExceeded");
    auto gens = generating_sequence(g);
    std::vector<std::vector<Elem>> out;
    if (gens.empty()) {
        out.push_back({0});
        return out;
    }
    std::vector<Elem> images(gens.size(), 0);
    search_isos(g, g, gens, images, 0, out, false);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Elem>> isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                             int cap) {
    if (g.order() > cap || h.order() > cap) throw GroupError("OrderCapExceeded");
    if (g.order() != h.order()) return std::nullopt;
    std::vector<int> og(g.order()), oh(h.order());
    for (Elem a = 0; a < g.order(); ++a) og[a] = g.elem_order(a);
    for (Elem a = 0; a < h.order(); ++a) oh[a] = h.elem_order(a);
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) return std::nullopt;
    auto gens = generating_sequence(g);
    std::vector<std::vector<Elem>> out;
    if (gens.empty()) return std::vector<Elem>{0};
    std::vector<Elem> images(gens.size(), 0);
    search_isos(g, h, gens, images, 0, out, true);
    if (out.empty()) return std::nullopt;
    return out.front();
}

std::vector<SubSet> all_subgroups(const FiniteGroup& g) {
    int n = g.order();
    std::set<SubSet> found;
    found.insert(subgroup_closure(g, {}));
    for (Elem a = 0; a < n; ++a) {
        found.insert(subgroup_closure(g, {a}));
        for (Elem b = a + 1; b < n; ++b) {
            found.insert(subgroup_closure(g, {a, b}));
            for (Elem c = b + 1; c < n; ++c)
                found.insert(subgroup_closure(g, {a, b, c}));
        }
    }
    return std::vector<SubSet>(found.begin(), found.end());
}

}  // namespace braces
