#include "braces/ybe.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace braces {

namespace {

bool perm_ok(const std::vector<Elem>& row, int n) {
    std::vector<bool> seen(n, false);
    if (static_cast<int>(row.size()) != n) return false;
    for (Elem e : row) {
        if (e < 0 || e >= n || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

using Triple = std::tuple<Elem, Elem, Elem>;

Triple r12(const Solution& s, Triple t) {
    auto [x, y, z] = t;
    return {s.lam[x][y], s.rho[y][x], z};
}

Triple r23(const Solution& s, Triple t) {
    auto [x, y, z] = t;
    return {x, s.lam[y][z], s.rho[z][y]};
}

}  // namespace

std::string validate_solution(const Solution& s) {
    int n = s.n;
    if (n <= 0) return "empty solution";
    if (static_cast<int>(s.lam.size()) != n || static_cast<int>(s.rho.size()) != n)
        return "table size mismatch";
    for (int x = 0; x < n; ++x) {
        if (!perm_ok(s.lam[x], n)) return "lam row " + std::to_string(x) + " is not a permutation";
        if (!perm_ok(s.rho[x], n)) return "rho row " + std::to_string(x) + " is not a permutation";
    }
    std::vector<bool> hit(n * n, false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int img = s.lam[x][y] * n + s.rho[y][x];
            if (hit[img]) return "pair map is not a bijection";
            hit[img] = true;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Triple t{x, y, z};
                Triple lhs = r12(s, r23(s, r12(s, t)));
                Triple rhs = r23(s, r12(s, r23(s, t)));
                if (lhs != rhs)
                    return "braid relation fails at (" + std::to_string(x) + "," +
                           std::to_string(y) + "," + std::to_string(z) + ")";
            }
    return "";
}

Solution solution_from_brace(const SkewBrace& b) {
    int n = b.order();
    Solution s;
    s.n = n;
    s.lam.assign(n, std::vector<Elem>(n));
    s.rho.assign(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            Elem l = b.lambda(x, y);
            s.lam[x][y] = l;
            s.rho[y][x] = b.times(b.times_inv(l), b.times(x, y));
        }
    std::string err = validate_solution(s);
    if (!err.empty()) throw BraceError("ConstructionInvariantFailed: " + err);
    return s;
}

Solution flip_solution(int n) {
    Solution s;
    s.n = n;
    s.lam.assign(n, std::vector<Elem>(n));
    s.rho.assign(n, std::vector<Elem>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            s.lam[x][y] = y;
            s.rho[y][x] = x;
        }
    return s;
}

Retraction retract(const Solution& s) {
    int n = s.n;
    // x ~ y iff lambda_x = lambda_y and rho_x = rho_y
    std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, int> cls_index;
    std::vector<int> class_of(n);
    std::vector<int> rep;
    for (int x = 0; x < n; ++x) {
        auto key = std::make_pair(s.lam[x], s.rho[x]);
        auto it = cls_index.find(key);
        if (it == cls_index.end()) {
            int idx = static_cast<int>(rep.size());
            cls_index.emplace(std::move(key), idx);
            class_of[x] = idx;
            rep.push_back(x);
        } else {
            class_of[x] = it->second;
        }
    }
    int q = static_cast<int>(rep.size());
    Solution quo;
    quo.n = q;
    quo.lam.assign(q, std::vector<Elem>(q));
    quo.rho.assign(q, std::vector<Elem>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            quo.lam[i][j] = class_of[s.lam[rep[i]][rep[j]]];
            quo.rho[i][j] = class_of[s.rho[rep[i]][rep[j]]];
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (class_of[s.lam[x][y]] != quo.lam[class_of[x]][class_of[y]] ||
                class_of[s.rho[x][y]] != quo.rho[class_of[x]][class_of[y]])
                throw BraceError("retraction is not well defined");
        }
    std::string err = validate_solution(quo);
    if (!err.empty()) throw BraceError("retraction produced invalid solution: " + err);
    return Retraction{std::move(quo), std::move(class_of)};
}

std::vector<int> retraction_tower_sizes(const Solution& s) {
    std::vector<int> sizes{s.n};
    Solution cur = s;
    while (sizes.back() > 1) {
        Retraction r = retract(cur);
        if (r.quotient.n == cur.n) break;
        sizes.push_back(r.quotient.n);
        cur = std::move(r.quotient);
    }
    return sizes;
}

std::optional<int> multipermutation_level(const Solution& s) {
    std::vector<int> sizes = retraction_tower_sizes(s);
    if (sizes.back() != 1) return std::nullopt;
    return static_cast<int>(sizes.size()) - 1;
}

}  // namespace braces
