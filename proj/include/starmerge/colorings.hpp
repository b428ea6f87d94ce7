#pragma once

#include <vector>

#include "starmerge/bigint.hpp"
#include "starmerge/mergings.hpp"
#include "starmerge/relations.hpp"

namespace starmerge {

/// Complete layered digraph: all edges run from each layer to the next
/// one, left to right. Layers may be empty; an empty layer carries no
/// edges on either side.
struct LayeredDigraph {
    std::vector<int> layer_sizes;

    explicit LayeredDigraph(std::vector<int> sizes);
    int layers() const { return static_cast<int>(layer_sizes.size()); }
    int vertex_count() const;
    int layer_offset(int layer) const;
};

LayeredDigraph complete_bipartite(int m);            // K_{m,m}
LayeredDigraph complete_tripartite(int a, int b, int c);

/// Vertex coloring weakly increasing along every edge; colors start at 1.
struct MonotoneColoring {
    LayeredDigraph graph;
    std::vector<int> colors;

    MonotoneColoring(LayeredDigraph g, std::vector<int> colors);
    bool operator==(const MonotoneColoring& other) const {
        return graph.layer_sizes == other.graph.layer_sizes && colors == other.colors;
    }
};

/// Number of monotone colorings with colors in 1..palette.
BigInt count_monotone_colorings(const LayeredDigraph& g, int palette);

/// The merging <-> coloring bijection on K_{m,m}: the first layer vertex
/// for a_i gets color |a_i^r| + 1, the second layer vertex gets color
/// n + 1 - |column of a_i in t|.
MonotoneColoring coloring_from_merging(const Merging& m);
Merging merging_from_coloring(const MonotoneColoring& c, int n);

/// The poset X + Y +_c Z: a singleton below a Boolean lattice on subsets
/// of {0..m}, coalesced with a Boolean lattice on subsets of {1..m}
/// (the top of Y identified with the bottom of Z). The coalesced element
/// is classified as part of Z.
enum class FarleyKind { bottom, lower_cube, upper_cube };

struct FarleyPoset {
    int m = 0;
    Poset poset;
    std::vector<FarleyKind> kind;      // per carrier element
    std::vector<IndexSet> subset;      // lower cube: over {0..m}; upper cube: over {1..m}
};

FarleyPoset build_farley_poset(int m);

/// An order-preserving map from an n-chain into the coalesced cube
/// poset, given by the images of c_1, ..., c_n (carrier indices,
/// weakly increasing).
struct FarleyChainMap {
    int n = 0;
    std::vector<int> images;
    bool operator==(const FarleyChainMap&) const = default;
};

/// Turns a chain map into a proper merging of an m-star and an n-chain:
///   image x          -> the chain element goes below all of S in t,
///   image in Y \ Z   -> (s0, c_i) in r iff 0 is in the subset, and
///                       (c_i, s_j) in t iff j is not in the subset,
///   image in Z       -> (s0, c_i) in r, and (s_j, c_i) in r iff j is
///                       in the subset.
Merging farley_map(const FarleyPoset& fp, const FarleyChainMap& z);

/// All order-preserving n-chain maps, ordered lexicographically by
/// image indices.
std::vector<FarleyChainMap> enumerate_farley_maps(const FarleyPoset& fp, int n);

/// Number of such maps (multichains of length n), computed by dynamic
/// programming over the poset.
BigInt count_farley_maps(const FarleyPoset& fp, int n);

}  // namespace starmerge
