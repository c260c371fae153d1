#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braces {

/// Carrier elements are plain indices in [0, n). Index 0 is the identity of
/// every group built on a carrier.
using Elem = int;

/// Sorted, duplicate-free element subset.
using SubSet = std::vector<Elem>;

class GroupError : public std::runtime_error {
public:
    explicit GroupError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// A finite group given by its full multiplication table. Construction
/// validates identity-at-0, the Latin square property and associativity,
/// and computes inverses. Immutable afterwards.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<Elem>> table);

    int order() const { return order_; }
    Elem op(Elem a, Elem b) const { return table_[a][b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem conj(Elem a, Elem b) const { return op(op(a, b), inv(a)); }  // a b a^-1
    const std::vector<std::vector<Elem>>& table() const { return table_; }

    int elem_order(Elem a) const;
    bool is_abelian() const;

    /// Re-runs all construction axioms; throws GroupError on violation.
    void assert_valid() const;

private:
    int order_;
    std::vector<std::vector<Elem>> table_;
    std::vector<Elem> inverse_;
};

/// A homomorphism given by its full image table. image[x] lives in the
/// codomain carrier.
struct GroupHom {
    int domain_order = 0;
    int codomain_order = 0;
    std::vector<Elem> image;
};

FiniteGroup group_from_table(const std::vector<std::vector<Elem>>& table);
FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n; element (rotation r, flip f) is numbered r + n*f.
FiniteGroup dihedral_group(int order);
/// Pairs (g, h) numbered g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Sym(3) in the additive numbering 0, s, 2s, t, s+t, 2s+t (same table as dihedral_group(6)).
FiniteGroup symmetric3();
FiniteGroup quaternion8();

bool contains(const SubSet& s, Elem a);
SubSet full_carrier(int n);

/// Smallest subgroup containing gens (identity always included).
SubSet subgroup_closure(const FiniteGroup& g, const SubSet& gens);
bool is_subgroup(const FiniteGroup& g, const SubSet& h);
bool is_normal(const FiniteGroup& g, const SubSet& h);

/// Commutator convention fixed repo-wide: [a,b] = a b a^-1 b^-1.
Elem commutator(const FiniteGroup& g, Elem a, Elem b);
SubSet commutator_subgroup(const FiniteGroup& g, const SubSet& x, const SubSet& y);

SubSet group_centre(const FiniteGroup& g);

/// gamma_1 = G, gamma_{k+1} = [gamma_k, G], until stabilization.
std::vector<SubSet> lower_central_series(const FiniteGroup& g);
/// Z_0 = {0}, Z_{k+1} = preimage of centre(G/Z_k), until stabilization.
std::vector<SubSet> upper_central_series(const FiniteGroup& g);
/// nullopt when not nilpotent.
std::optional<int> nilpotency_class(const FiniteGroup& g);

struct Quotient {
    FiniteGroup group;
    std::vector<Elem> coset_of;  // carrier -> quotient index
    std::vector<Elem> rep_of;    // quotient index -> least coset member
};
Quotient quotient_group(const FiniteGroup& g, const SubSet& normal_sub);

/// The subgroup h as a FiniteGroup of its own; local index i corresponds to h[i].
FiniteGroup restrict_to_subgroup(const FiniteGroup& g, const SubSet& h);

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Elem>& image);

/// All automorphisms (as permutations of the carrier), sorted lexicographically.
/// Throws GroupError when order exceeds the cap.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g, int cap = 16);

std::optional<std::vector<Elem>> isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                             int cap = 16);

/// Every subgroup of g; complete for order <= 8 (generator subsets up to size 3).
std::vector<SubSet> all_subgroups(const FiniteGroup& g);

}  // namespace braces
