#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braces/skew_brace.hpp"

namespace braces {

/// B^1 = B, B^{n+1} = B * B^n, until stabilization.
std::vector<SubSet> left_series(const SkewBrace& b);
/// B^(1) = B, B^(n+1) = B^(n) * B, until stabilization.
std::vector<SubSet> right_series(const SkewBrace& b);

/// Class extracted from a descending star chain: smallest n with chain
/// hitting {0} at term n+1; nullopt when the chain stabilizes above {0}.
std::optional<int> chain_class(const std::vector<SubSet>& chain);

struct SeriesReport {
    std::vector<SubSet> left_chain;
    std::vector<SubSet> right_chain;
    std::optional<int> left_class;
    std::optional<int> right_class;
    std::optional<int> add_class_m;    // nilpotency class of (B,+)
    std::optional<int> bsq_class_r;    // nilpotency class of (B^2,+)
    std::optional<int> central_class;
};

SeriesReport series_report(const SkewBrace& b);

/// Upper-central style chain of ideals: I_1 = zeta(B), I_{k+1} = preimage of
/// zeta(B/I_k). Class when the chain reaches B; nullopt otherwise.
std::optional<int> central_class(const SkewBrace& b);

/// Independent oracle: searches over all chains of ideals with central
/// quotients (the definitional existential). Order <= 8 only.
bool centrally_nilpotent_chain_search(const SkewBrace& b);

struct Verdict {
    enum class Kind { NotApplicable, Pass, Fail };
    Kind kind = Kind::NotApplicable;
    std::string reason;
    int m = 0;
    int r = 0;
    int bound = 0;
    int right_class = -1;  // -1 when not right nilpotent
    bool applicable() const { return kind != Kind::NotApplicable; }
    bool passed() const { return kind == Kind::Pass; }
};

/// Nilpotent type + B^3 = 0 implies right nilpotent of class <= 2+mr and
/// centrally nilpotent.
Verdict theorem_a_check(const SkewBrace& b);

/// Abelian type + B^3 = 0 implies B^(4) = 0.
Verdict abelian_corollary_check(const SkewBrace& b);

/// Nilpotent type + B^3 = 0: whenever B^(k) lies in the centre of (B,.),
/// B^(k+m+1) = 0.
Verdict proposition_check(const SkewBrace& b);

struct SnChain {
    int m = 0;  // class of (B,+)
    int r = 0;  // class of (B^2,+)
    std::vector<SubSet> z_terms;  // Z_0(B^2,+) .. Z_r(B^2,+), ambient elements
    std::vector<SubSet> s_terms;  // S_0 .. S_r, S_n = Ker lambda^(n) cap B^2
};

/// nullopt when B^3 != 0 or (B,+) not nilpotent.
std::optional<SnChain> sn_chain(const SkewBrace& b);

struct ContainmentReport {
    bool applicable = false;
    bool all_pass = false;
    std::vector<std::string> failures;
    SnChain chain;
};

/// Verifies the internal ideal chain: each S_n is an ideal, the S_n ascend,
/// B^(2+mk) lies in S_{r-k} for 1 <= k <= r, and B^(2+mr) lies in
/// Ker lambda cap B^2.
ContainmentReport proof_containments_check(const SkewBrace& b);

struct AttainmentEntry {
    int index = 0;  // position in the input catalog
    int m = 0, r = 0, bound = 0, right_class = 0;
    double ratio = 0.0;  // (right_class - 2) / (m*r)
    bool attains_bound = false;
    bool nontrivial_mr = false;  // m*r > 1
};

/// Ranks applicable braces by how close the right class comes to 2+mr.
std::vector<AttainmentEntry> bound_attainment_search(const std::vector<SkewBrace>& catalog);

}  // namespace braces
