#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "starmerge/relations.hpp"

namespace starmerge {

enum class Side { objects, attributes };

/// A formal context (objects, attributes, incidence) with the two
/// derivation operators.
class FormalContext {
public:
    FormalContext() = default;
    FormalContext(GroundSet objects, GroundSet attributes, Relation incidence);

    const GroundSet& objects() const { return objects_; }
    const GroundSet& attributes() const { return attributes_; }
    const Relation& incidence() const { return incidence_; }

    /// Common attributes of a set of objects; the empty set derives to
    /// the full attribute set.
    IndexSet derive_objects(const IndexSet& objs) const;
    /// Common objects of a set of attributes.
    IndexSet derive_attributes(const IndexSet& attrs) const;

    IndexSet object_closure(const IndexSet& objs) const;     // X''
    IndexSet attribute_closure(const IndexSet& attrs) const; // B''
    bool is_extent(const IndexSet& objs) const;
    bool is_intent(const IndexSet& attrs) const;

    bool operator==(const FormalContext& other) const;

private:
    GroundSet objects_;
    GroundSet attributes_;
    Relation incidence_;
    Relation transposed_;
};

IndexSet derive(const FormalContext& ctx, Side side, const IndexSet& subset);
IndexSet derive(const FormalContext& ctx, Side side, const std::vector<int>& subset);

/// The context (P, P, not >=) of a poset: (g, m) incident iff m <= g fails.
FormalContext contraordinal_scale(const Poset& p);

void write_context(std::ostream& out, const FormalContext& ctx);
FormalContext read_context(std::istream& in);

struct FormalConcept {
    IndexSet extent;
    IndexSet intent;
    bool operator==(const FormalConcept&) const = default;
};

/// All formal concepts of a context, ordered by extent inclusion.
/// Concepts are listed sorted by extent size, then lexicographically by
/// extent, so index 0 is the bottom and the last index the top.
class ConceptLattice {
public:
    const FormalContext& context() const { return context_; }
    int size() const { return static_cast<int>(concepts_.size()); }
    const FormalConcept& at(int i) const { return concepts_.at(static_cast<std::size_t>(i)); }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }

    const Relation& order() const { return order_; }
    bool leq(int a, int b) const { return order_.contains(a, b); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    int meet(int a, int b) const;
    int join(int a, int b) const;

    /// gamma: the concept generated by one object.
    int object_concept(int g) const { return gamma_.at(static_cast<std::size_t>(g)); }
    /// mu: the concept generated by one attribute.
    int attribute_concept(int m) const { return mu_.at(static_cast<std::size_t>(m)); }

    std::optional<int> index_of_extent(const IndexSet& extent) const;
    std::optional<int> index_of_intent(const IndexSet& intent) const;

private:
    FormalContext context_;
    std::vector<FormalConcept> concepts_;
    Relation order_;
    std::vector<int> gamma_;
    std::vector<int> mu_;
    std::unordered_map<std::string, int> by_extent_;
    std::unordered_map<std::string, int> by_intent_;

    friend ConceptLattice enumerate_concepts(const FormalContext& ctx);
};

/// NextClosure over attribute sets in lectic order; deterministic for a
/// fixed context.
ConceptLattice enumerate_concepts(const FormalContext& ctx);

/// rows of r are intents of k2, columns are extents of k1.
bool is_bond(const Relation& r, const FormalContext& k1, const FormalContext& k2);
/// rows of r are extents of k2, columns are extents of k1.
bool is_dual_bond(const Relation& r, const FormalContext& k1, const FormalContext& k2);

/// All bonds from k1 to k2, sorted by canonical key.
std::vector<Relation> enumerate_bonds(const FormalContext& k1, const FormalContext& k2);
/// All dual bonds from k1 to k2, sorted by canonical key.
std::vector<Relation> enumerate_dual_bonds(const FormalContext& k1, const FormalContext& k2);

/// An antitone adjoint pair between two concept lattices, stored as
/// concept-index maps.
struct GaloisConnection {
    ConceptLattice left;
    ConceptLattice right;
    std::vector<int> phi;  // left concept index -> right concept index
    std::vector<int> psi;  // right concept index -> left concept index
};

/// Synthesize (phi, psi) from a dual bond r between the contexts:
/// phi(X, X^I) = (X^r, X^rJ) and psi(Y, Y^J) = (Y^r, Y^rI).
GaloisConnection galois_from_dual_bond(const Relation& r, const FormalContext& k1,
                                       const FormalContext& k2);

/// Both maps antitone and both unit laws hold.
bool satisfies_galois_laws(const GaloisConnection& gc);

/// The dual bond {(g, h) : gamma g <= psi gamma h} induced by a
/// connection; recovers the bond the connection was built from.
Relation induced_dual_bond(const GaloisConnection& gc);

/// Turn a proper merging (empty, t) of a star and a chain into a dual
/// bond from the chain scale to the star scale: row i of the result is
/// the complement in S of row n+1-i of t (empty when that row is all
/// of S). Indices 1-based as in the cross-tables.
Relation dual_bond_from_proper_T(const Relation& t, const Poset& star, const Poset& chain);

/// Exhaustive count of dual bonds from the n-chain scale to the m-star
/// scale. Matches the closed form sum k^m for k = 1..n+1.
std::size_t count_galois_connections(int star_m, int chain_n);

/// Concept lattice of the m-star contraordinal scale: the Boolean
/// lattice with 2^m elements whose bottom is replaced by a 2-chain.
ConceptLattice build_balloon(int m);

}  // namespace starmerge
