#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "starmerge/fca.hpp"
#include "starmerge/relations.hpp"

namespace starmerge {

/// Thrown when an exhaustive enumeration would exceed its desk-scale
/// input bound.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// True iff (r, t) is a merging of p and q:
///   1. r is a bond from the contraordinal scale of p to that of q,
///   2. t is a bond the other way around,
///   3. r o t is contained in the order of p,
///   4. t o r is contained in the order of q.
/// Carriers of p and q must be disjoint.
bool is_merging(const Relation& r, const Relation& t, const Poset& p, const Poset& q);

/// r and the converse of t do not intersect.
bool is_proper_pair(const Relation& r, const Relation& t);

/// A merging (r, t) of two posets; the four merging conditions are
/// enforced at construction.
class Merging {
public:
    Merging(Poset p, Poset q, Relation r, Relation t);

    const Poset& p() const { return p_; }
    const Poset& q() const { return q_; }
    const Relation& r() const { return r_; }
    const Relation& t() const { return t_; }

    bool operator==(const Merging& other) const;
    bool operator!=(const Merging& other) const { return !(*this == other); }
    std::string key() const { return r_.key() + t_.key(); }

private:
    Poset p_;
    Poset q_;
    Relation r_;
    Relation t_;
};

bool is_proper(const Merging& m);

/// The quasi-order on the disjoint union of the carriers: block matrix
/// [order_P, r; t, order_Q]. No validity requirement on (r, t); the
/// result is a quasi-order exactly when (r, t) is a merging.
Relation combined_relation(const Poset& p, const Poset& q, const Relation& r, const Relation& t);
Relation induced_order(const Merging& m);

/// (r1, t1) <= (r2, t2) iff r1 is contained in r2 and t1 contains t2.
bool merging_leq(const Merging& a, const Merging& b);

Merging lattice_join(const Merging& a, const Merging& b);  // (r1|r2, t1&t2)
Merging lattice_meet(const Merging& a, const Merging& b);  // (r1&r2, t1|t2)

/// All proper mergings of p and q, sorted by canonical key.
class MergingLattice {
public:
    const Poset& p() const { return p_; }
    const Poset& q() const { return q_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const Merging& at(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
    const std::vector<Merging>& elements() const { return elements_; }

    bool leq(int a, int b) const;
    int bottom() const;
    int top() const;
    std::optional<int> index_of(const Merging& m) const;
    int join(int a, int b) const;
    int meet(int a, int b) const;

    /// The order as an explicit relation on synthetic node labels
    /// m0, m1, ... (materialized on demand).
    Relation order_relation() const;

private:
    Poset p_;
    Poset q_;
    std::vector<Merging> elements_;
    std::unordered_map<std::string, int> index_;

    friend MergingLattice enumerate_proper_mergings(const Poset& p, const Poset& q);
};

/// Brute-force enumeration, bonds first: r rows range over intents of
/// the contraordinal scale of q, t rows over intents of the scale of p;
/// the relational-product conditions and properness are filtered on the
/// bond pairs. Guarded by |P|*|Q| <= 20.
MergingLattice enumerate_proper_mergings(const Poset& p, const Poset& q);

bool is_chain_poset(const Poset& p);
bool is_antichain_poset(const Poset& p);
bool is_star_poset(const Poset& p);

/// Restriction map from star/chain mergings to antichain/chain mergings:
/// drops the s0 row of r and the s0 column of t. The antichain carrier
/// is the canonical a1..am ground set, identifying a_i with s_i.
Merging eta(const Merging& m);

/// Section of eta: adds an s0 row equal to the union of all antichain
/// rows of r and an empty s0 column to t.
Merging xi(const Merging& m);

/// Position of an antichain/chain merging in the (k1, k2, l) partition:
/// k1 = least chain index with a nonempty r-column (n+1 when r is empty),
/// k2 = greatest chain index with a nonempty t-row (0 when t is empty),
/// l  = greatest chain index whose t-row is all of the antichain (0 when none).
struct MergingClass {
    int k1;
    int k2;
    int l;
    bool operator==(const MergingClass&) const = default;
};

MergingClass classify(const Merging& m);

/// Indices (ascending) of the elements of all_sc that eta maps onto
/// target; an interval of the merging lattice.
std::vector<int> fiber(const Merging& target, const MergingLattice& all_sc);

}  // namespace starmerge
