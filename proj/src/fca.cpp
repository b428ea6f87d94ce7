#include "starmerge/fca.hpp"

#include <algorithm>
#include <stdexcept>

#include "starmerge/mergings.hpp"

namespace starmerge {

// ---------------------------------------------------------------------------
// FormalContext

FormalContext::FormalContext(GroundSet objects, GroundSet attributes, Relation incidence)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      incidence_(std::move(incidence)) {
    if (incidence_.domain() != objects_ || incidence_.codomain() != attributes_) {
        throw std::invalid_argument("FormalContext: incidence dimensions do not match");
    }
    transposed_ = incidence_.converse();
}

IndexSet FormalContext::derive_objects(const IndexSet& objs) const {
    if (objs.universe() != objects_.size()) {
        throw std::invalid_argument("derive_objects: universe mismatch");
    }
    IndexSet out = IndexSet::full(attributes_.size());
    objs.for_each([&](int g) { out &= incidence_.row(g); });
    return out;
}

IndexSet FormalContext::derive_attributes(const IndexSet& attrs) const {
    if (attrs.universe() != attributes_.size()) {
        throw std::invalid_argument("derive_attributes: universe mismatch");
    }
    IndexSet out = IndexSet::full(objects_.size());
    attrs.for_each([&](int m) { out &= transposed_.row(m); });
    return out;
}

IndexSet FormalContext::object_closure(const IndexSet& objs) const {
    return derive_attributes(derive_objects(objs));
}

IndexSet FormalContext::attribute_closure(const IndexSet& attrs) const {
    return derive_objects(derive_attributes(attrs));
}

bool FormalContext::is_extent(const IndexSet& objs) const { return object_closure(objs) == objs; }

bool FormalContext::is_intent(const IndexSet& attrs) const {
    return attribute_closure(attrs) == attrs;
}

bool FormalContext::operator==(const FormalContext& other) const {
    return objects_ == other.objects_ && attributes_ == other.attributes_ &&
           incidence_ == other.incidence_;
}

IndexSet derive(const FormalContext& ctx, Side side, const IndexSet& subset) {
    return side == Side::objects ? ctx.derive_objects(subset) : ctx.derive_attributes(subset);
}

IndexSet derive(const FormalContext& ctx, Side side, const std::vector<int>& subset) {
    int universe = side == Side::objects ? ctx.objects().size() : ctx.attributes().size();
    IndexSet s(universe);
    for (int i : subset) {
        if (i < 0 || i >= universe) {
            throw std::out_of_range("derive: index out of range");
        }
        s.set(i);
    }
    return derive(ctx, side, s);
}

FormalContext contraordinal_scale(const Poset& p) {
    // (g, m) incident iff not (m <= g), i.e. the complement of the
    // converse order.
    Relation incidence = p.order().converse().complemented();
    return FormalContext(p.carrier(), p.carrier(), std::move(incidence));
}

void write_context(std::ostream& out, const FormalContext& ctx) {
    write_cross_table(out, ctx.objects(), ctx.attributes(), ctx.incidence());
}

FormalContext read_context(std::istream& in) {
    CrossTable t = read_cross_table(in);
    return FormalContext(std::move(t.objects), std::move(t.attributes), std::move(t.incidence));
}

// ---------------------------------------------------------------------------
// Concept enumeration (NextClosure)

namespace {

std::vector<IndexSet> closed_intents_lectic(const FormalContext& ctx) {
    int k = ctx.attributes().size();
    std::vector<IndexSet> intents;
    IndexSet a = ctx.attribute_closure(IndexSet(k));
    intents.push_back(a);
    const IndexSet full = IndexSet::full(k);
    while (a != full) {
        bool advanced = false;
        for (int i = k - 1; i >= 0 && !advanced; --i) {
            if (a.test(i)) {
                continue;
            }
            IndexSet candidate = a.masked_below(i);
            candidate.set(i);
            candidate = ctx.attribute_closure(candidate);
            if (candidate.masked_below(i) == a.masked_below(i)) {
                a = candidate;
                intents.push_back(a);
                advanced = true;
            }
        }
        if (!advanced) {
            throw std::logic_error("NextClosure failed to advance");
        }
    }
    return intents;
}

GroundSet concept_node_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back("b" + std::to_string(i));
    }
    return GroundSet(std::move(labels));
}

}  // namespace

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
    ConceptLattice lat;
    lat.context_ = ctx;
    for (const IndexSet& intent : closed_intents_lectic(ctx)) {
        lat.concepts_.push_back(FormalConcept{ctx.derive_attributes(intent), intent});
    }
    std::sort(lat.concepts_.begin(), lat.concepts_.end(),
              [](const FormalConcept& a, const FormalConcept& b) {
                  int ca = a.extent.count();
                  int cb = b.extent.count();
                  if (ca != cb) {
                      return ca < cb;
                  }
                  return lex_less(a.extent, b.extent);
              });

    int n = lat.size();
    GroundSet nodes = concept_node_labels(n);
    lat.order_ = Relation(nodes, nodes);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (lat.concepts_[static_cast<std::size_t>(i)].extent.is_subset_of(
                    lat.concepts_[static_cast<std::size_t>(j)].extent)) {
                lat.order_.set(i, j);
            }
        }
        lat.by_extent_.emplace(lat.concepts_[static_cast<std::size_t>(i)].extent.key(), i);
        lat.by_intent_.emplace(lat.concepts_[static_cast<std::size_t>(i)].intent.key(), i);
    }

    for (int g = 0; g < ctx.objects().size(); ++g) {
        IndexSet single(ctx.objects().size());
        single.set(g);
        auto idx = lat.index_of_extent(ctx.object_closure(single));
        if (!idx) {
            throw std::logic_error("object concept missing from lattice");
        }
        lat.gamma_.push_back(*idx);
    }
    for (int m = 0; m < ctx.attributes().size(); ++m) {
        IndexSet single(ctx.attributes().size());
        single.set(m);
        auto idx = lat.index_of_extent(ctx.derive_attributes(single));
        if (!idx) {
            throw std::logic_error("attribute concept missing from lattice");
        }
        lat.mu_.push_back(*idx);
    }
    return lat;
}

int ConceptLattice::meet(int a, int b) const {
    IndexSet extent = at(a).extent & at(b).extent;
    auto idx = index_of_extent(extent);
    if (!idx) {
        throw std::logic_error("meet extent is not closed");
    }
    return *idx;
}

int ConceptLattice::join(int a, int b) const {
    IndexSet intent = at(a).intent & at(b).intent;
    auto idx = index_of_intent(intent);
    if (!idx) {
        throw std::logic_error("join intent is not closed");
    }
    return *idx;
}

std::optional<int> ConceptLattice::index_of_extent(const IndexSet& extent) const {
    auto it = by_extent_.find(extent.key());
    if (it == by_extent_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<int> ConceptLattice::index_of_intent(const IndexSet& intent) const {
    auto it = by_intent_.find(intent.key());
    if (it == by_intent_.end()) {
        return std::nullopt;
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Bonds and dual bonds

bool is_bond(const Relation& r, const FormalContext& k1, const FormalContext& k2) {
    if (r.domain() != k1.objects() || r.codomain() != k2.attributes()) {
        throw std::invalid_argument("is_bond: relation does not run objects(k1) x attributes(k2)");
    }
    for (int g = 0; g < r.rows(); ++g) {
        if (!k2.is_intent(r.row(g))) {
            return false;
        }
    }
    for (int m = 0; m < r.cols(); ++m) {
        if (!k1.is_extent(r.column(m))) {
            return false;
        }
    }
    return true;
}

bool is_dual_bond(const Relation& r, const FormalContext& k1, const FormalContext& k2) {
    if (r.domain() != k1.objects() || r.codomain() != k2.objects()) {
        throw std::invalid_argument("is_dual_bond: relation does not run objects(k1) x objects(k2)");
    }
    for (int g = 0; g < r.rows(); ++g) {
        if (!k2.is_extent(r.row(g))) {
            return false;
        }
    }
    for (int h = 0; h < r.cols(); ++h) {
        if (!k1.is_extent(r.column(h))) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<Relation> enumerate_row_constrained(const FormalContext& k1,
                                                const GroundSet& codomain,
                                                const std::vector<IndexSet>& row_choices) {
    int nrows = k1.objects().size();
    double candidates = 1.0;
    for (int i = 0; i < nrows; ++i) {
        candidates *= static_cast<double>(row_choices.size());
    }
    if (candidates > 5e7) {
        throw SizeGuardError("bond enumeration: candidate space too large");
    }

    std::vector<Relation> out;
    std::vector<int> pick(static_cast<std::size_t>(nrows), 0);
    auto emit = [&]() {
        Relation r(k1.objects(), codomain);
        for (int i = 0; i < nrows; ++i) {
            row_choices[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].for_each(
                [&](int j) { r.set(i, j); });
        }
        for (int j = 0; j < r.cols(); ++j) {
            if (!k1.is_extent(r.column(j))) {
                return;
            }
        }
        out.push_back(std::move(r));
    };

    if (row_choices.empty() && nrows > 0) {
        return out;
    }
    while (true) {
        emit();
        int i = nrows - 1;
        while (i >= 0 &&
               pick[static_cast<std::size_t>(i)] + 1 == static_cast<int>(row_choices.size())) {
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end(),
              [](const Relation& a, const Relation& b) { return a.key() < b.key(); });
    return out;
}

}  // namespace

std::vector<Relation> enumerate_bonds(const FormalContext& k1, const FormalContext& k2) {
    ConceptLattice lat2 = enumerate_concepts(k2);
    std::vector<IndexSet> intents;
    intents.reserve(static_cast<std::size_t>(lat2.size()));
    for (const auto& c : lat2.concepts()) {
        intents.push_back(c.intent);
    }
    return enumerate_row_constrained(k1, k2.attributes(), intents);
}

std::vector<Relation> enumerate_dual_bonds(const FormalContext& k1, const FormalContext& k2) {
    ConceptLattice lat2 = enumerate_concepts(k2);
    std::vector<IndexSet> extents;
    extents.reserve(static_cast<std::size_t>(lat2.size()));
    for (const auto& c : lat2.concepts()) {
        extents.push_back(c.extent);
    }
    return enumerate_row_constrained(k1, k2.objects(), extents);
}

// ---------------------------------------------------------------------------
// Galois connections

namespace {

IndexSet derive_rows_along(const Relation& r, const IndexSet& objs) {
    IndexSet out = IndexSet::full(r.cols());
    objs.for_each([&](int g) { out &= r.row(g); });
    return out;
}

IndexSet derive_cols_along(const Relation& r, const IndexSet& others) {
    IndexSet out = IndexSet::full(r.rows());
    others.for_each([&](int h) { out &= r.column(h); });
    return out;
}

}  // namespace

GaloisConnection galois_from_dual_bond(const Relation& r, const FormalContext& k1,
                                       const FormalContext& k2) {
    if (!is_dual_bond(r, k1, k2)) {
        throw std::invalid_argument("galois_from_dual_bond: relation is not a dual bond");
    }
    GaloisConnection gc;
    gc.left = enumerate_concepts(k1);
    gc.right = enumerate_concepts(k2);
    gc.phi.reserve(static_cast<std::size_t>(gc.left.size()));
    for (int i = 0; i < gc.left.size(); ++i) {
        IndexSet image = derive_rows_along(r, gc.left.at(i).extent);
        auto idx = gc.right.index_of_extent(image);
        if (!idx) {
            throw std::logic_error("phi image extent is not closed");
        }
        gc.phi.push_back(*idx);
    }
    gc.psi.reserve(static_cast<std::size_t>(gc.right.size()));
    for (int j = 0; j < gc.right.size(); ++j) {
        IndexSet image = derive_cols_along(r, gc.right.at(j).extent);
        auto idx = gc.left.index_of_extent(image);
        if (!idx) {
            throw std::logic_error("psi image extent is not closed");
        }
        gc.psi.push_back(*idx);
    }
    return gc;
}

bool satisfies_galois_laws(const GaloisConnection& gc) {
    const auto& l = gc.left;
    const auto& r = gc.right;
    for (int a = 0; a < l.size(); ++a) {
        for (int b = 0; b < l.size(); ++b) {
            if (l.leq(a, b) &&
                !r.leq(gc.phi[static_cast<std::size_t>(b)], gc.phi[static_cast<std::size_t>(a)])) {
                return false;
            }
        }
        if (!l.leq(a, gc.psi[static_cast<std::size_t>(gc.phi[static_cast<std::size_t>(a)])])) {
            return false;
        }
    }
    for (int a = 0; a < r.size(); ++a) {
        for (int b = 0; b < r.size(); ++b) {
            if (r.leq(a, b) &&
                !l.leq(gc.psi[static_cast<std::size_t>(b)], gc.psi[static_cast<std::size_t>(a)])) {
                return false;
            }
        }
        if (!r.leq(a, gc.phi[static_cast<std::size_t>(gc.psi[static_cast<std::size_t>(a)])])) {
            return false;
        }
    }
    return true;
}

Relation induced_dual_bond(const GaloisConnection& gc) {
    const FormalContext& k1 = gc.left.context();
    const FormalContext& k2 = gc.right.context();
    Relation out(k1.objects(), k2.objects());
    for (int g = 0; g < k1.objects().size(); ++g) {
        int cg = gc.left.object_concept(g);
        for (int h = 0; h < k2.objects().size(); ++h) {
            int ch = gc.right.object_concept(h);
            if (gc.left.leq(cg, gc.psi[static_cast<std::size_t>(ch)])) {
                out.set(g, h);
            }
        }
    }
    return out;
}

Relation dual_bond_from_proper_T(const Relation& t, const Poset& star, const Poset& chain) {
    Relation empty_r(star.carrier(), chain.carrier());
    if (!is_merging(empty_r, t, star, chain) || !is_proper_pair(empty_r, t)) {
        throw std::invalid_argument(
            "dual_bond_from_proper_T: (empty, t) is not a proper merging of the star and chain");
    }
    int n = chain.size();
    const IndexSet full_s = IndexSet::full(star.size());
    Relation out(chain.carrier(), star.carrier());
    for (int i = 0; i < n; ++i) {
        const IndexSet& src = t.row(n - 1 - i);
        if (src == full_s) {
            continue;
        }
        src.complemented().for_each([&](int j) { out.set(i, j); });
    }
    return out;
}

std::size_t count_galois_connections(int star_m, int chain_n) {
    if (star_m < 0 || chain_n < 0) {
        throw std::invalid_argument("count_galois_connections: negative parameters");
    }
    if ((star_m + 1) * chain_n > 20) {
        throw SizeGuardError("count_galois_connections: (m+1)*n exceeds the size guard of 20");
    }
    FormalContext chain_scale = contraordinal_scale(make_chain(chain_n));
    FormalContext star_scale = contraordinal_scale(make_star(star_m));
    return enumerate_dual_bonds(chain_scale, star_scale).size();
}

ConceptLattice build_balloon(int m) {
    return enumerate_concepts(contraordinal_scale(make_star(m)));
}

}  // namespace starmerge
