#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "starmerge/colorings.hpp"
#include "starmerge/fca.hpp"
#include "starmerge/mergings.hpp"

namespace starmerge {

/// Covering pairs (a, b) of a partial order: a < b with nothing strictly
/// between. This is the transitive reduction used for Hasse diagrams.
std::vector<std::pair<int, int>> cover_pairs(const Relation& order);

/// DOT digraph of a Hasse diagram, edges pointing upward (rankdir=BT).
/// When clusters are given, each group of node indices is wrapped in a
/// subgraph cluster.
void write_hasse_dot(std::ostream& out, const std::vector<std::string>& node_labels,
                     const std::vector<std::pair<int, int>>& covers,
                     const std::vector<std::vector<int>>* clusters = nullptr);

/// Hasse diagram of a concept lattice with the usual reduced labeling:
/// attribute labels above the node, object labels below.
void write_concept_lattice_dot(std::ostream& out, const ConceptLattice& lat);

/// Hasse diagram of a merging lattice; nodes carry their element index.
/// Optional clusters (e.g. eta fibers) become subgraph clusters.
void write_merging_lattice_dot(std::ostream& out, const MergingLattice& lat,
                               const std::vector<std::vector<int>>* clusters = nullptr);

/// Hasse diagram of the partial order a proper merging induces on the
/// disjoint union of its carriers.
void write_merged_order_dot(std::ostream& out, const Merging& m);

/// Label pairs [object, attribute] of a relation, row-major.
std::vector<std::pair<std::string, std::string>> relation_label_pairs(const Relation& r);

std::string poset_element_list(const IndexSet& subset, const GroundSet& g);

/// {"schema":1,"concepts":[{"extent":[labels],"intent":[labels]}...]}
std::string to_json(const ConceptLattice& lat);
/// {"schema":1,"R":[[obj,attr]...],"T":[[obj,attr]...]}
std::string to_json(const Merging& m);
/// {"schema":1,"colors":[{"layer":..,"vertex":..,"color":..}...]}
std::string to_json(const MonotoneColoring& c);

}  // namespace starmerge
