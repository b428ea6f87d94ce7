#include "starmerge/mergings.hpp"

#include <algorithm>
#include <mutex>

namespace starmerge {

namespace {

// Bond checks against the two contraordinal scales dominate merging
// validation; the scales depend only on (p, q), so they are memoized.
struct ScalePair {
    FormalContext scale_p;
    FormalContext scale_q;
};

const ScalePair& scales_for(const Poset& p, const Poset& q) {
    static std::mutex mutex;
    static std::unordered_map<std::string, std::unique_ptr<ScalePair>> cache;
    std::string key = p.order().key() + q.order().key();
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto entry = std::make_unique<ScalePair>(
            ScalePair{contraordinal_scale(p), contraordinal_scale(q)});
        it = cache.emplace(std::move(key), std::move(entry)).first;
    }
    return *it->second;
}

void check_merging_shape(const Relation& r, const Relation& t, const Poset& p, const Poset& q) {
    if (r.domain() != p.carrier() || r.codomain() != q.carrier()) {
        throw std::invalid_argument("merging: r must run P x Q");
    }
    if (t.domain() != q.carrier() || t.codomain() != p.carrier()) {
        throw std::invalid_argument("merging: t must run Q x P");
    }
    if (!p.carrier().disjoint_from(q.carrier())) {
        throw std::invalid_argument("merging: carriers of p and q must be disjoint");
    }
}

}  // namespace

bool is_merging(const Relation& r, const Relation& t, const Poset& p, const Poset& q) {
    check_merging_shape(r, t, p, q);
    const ScalePair& scales = scales_for(p, q);
    if (!is_bond(r, scales.scale_p, scales.scale_q)) {
        return false;
    }
    if (!is_bond(t, scales.scale_q, scales.scale_p)) {
        return false;
    }
    if (!relational_product(r, t).is_subset_of(p.order())) {
        return false;
    }
    if (!relational_product(t, r).is_subset_of(q.order())) {
        return false;
    }
    return true;
}

bool is_proper_pair(const Relation& r, const Relation& t) {
    return (r & t.converse()).none();
}

Merging::Merging(Poset p, Poset q, Relation r, Relation t)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), t_(std::move(t)) {
    if (!is_merging(r_, t_, p_, q_)) {
        throw std::invalid_argument("Merging: the pair (r, t) is not a merging of p and q");
    }
}

bool Merging::operator==(const Merging& other) const {
    return p_ == other.p_ && q_ == other.q_ && r_ == other.r_ && t_ == other.t_;
}

bool is_proper(const Merging& m) { return is_proper_pair(m.r(), m.t()); }

Relation combined_relation(const Poset& p, const Poset& q, const Relation& r, const Relation& t) {
    check_merging_shape(r, t, p, q);
    GroundSet carrier = concat(p.carrier(), q.carrier());
    int np = p.size();
    Relation out(carrier, carrier);
    for (int i = 0; i < np; ++i) {
        p.order().row(i).for_each([&](int j) { out.set(i, j); });
        r.row(i).for_each([&](int j) { out.set(i, np + j); });
    }
    for (int i = 0; i < q.size(); ++i) {
        t.row(i).for_each([&](int j) { out.set(np + i, j); });
        q.order().row(i).for_each([&](int j) { out.set(np + i, np + j); });
    }
    return out;
}

Relation induced_order(const Merging& m) {
    return combined_relation(m.p(), m.q(), m.r(), m.t());
}

bool merging_leq(const Merging& a, const Merging& b) {
    return a.r().is_subset_of(b.r()) && b.t().is_subset_of(a.t());
}

Merging lattice_join(const Merging& a, const Merging& b) {
    if (a.p() != b.p() || a.q() != b.q()) {
        throw std::invalid_argument("lattice_join: mergings over different posets");
    }
    return Merging(a.p(), a.q(), a.r() | b.r(), a.t() & b.t());
}

Merging lattice_meet(const Merging& a, const Merging& b) {
    if (a.p() != b.p() || a.q() != b.q()) {
        throw std::invalid_argument("lattice_meet: mergings over different posets");
    }
    return Merging(a.p(), a.q(), a.r() & b.r(), a.t() | b.t());
}

// ---------------------------------------------------------------------------
// MergingLattice

bool MergingLattice::leq(int a, int b) const { return merging_leq(at(a), at(b)); }

int MergingLattice::bottom() const {
    for (int i = 0; i < size(); ++i) {
        if (at(i).r().none() && at(i).t() == Relation::full(q_.carrier(), p_.carrier())) {
            return i;
        }
    }
    throw std::logic_error("merging lattice without bottom element");
}

int MergingLattice::top() const {
    for (int i = 0; i < size(); ++i) {
        if (at(i).t().none() && at(i).r() == Relation::full(p_.carrier(), q_.carrier())) {
            return i;
        }
    }
    throw std::logic_error("merging lattice without top element");
}

std::optional<int> MergingLattice::index_of(const Merging& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

int MergingLattice::join(int a, int b) const {
    auto idx = index_of(lattice_join(at(a), at(b)));
    if (!idx) {
        throw std::logic_error("join left the merging lattice");
    }
    return *idx;
}

int MergingLattice::meet(int a, int b) const {
    auto idx = index_of(lattice_meet(at(a), at(b)));
    if (!idx) {
        throw std::logic_error("meet left the merging lattice");
    }
    return *idx;
}

Relation MergingLattice::order_relation() const {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) {
        labels.push_back("m" + std::to_string(i));
    }
    GroundSet nodes{std::move(labels)};
    Relation out(nodes, nodes);
    for (int i = 0; i < size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            if (leq(i, j)) {
                out.set(i, j);
            }
        }
    }
    return out;
}

MergingLattice enumerate_proper_mergings(const Poset& p, const Poset& q) {
    if (!p.carrier().disjoint_from(q.carrier())) {
        throw std::invalid_argument("enumerate_proper_mergings: carriers must be disjoint");
    }
    if (p.size() * q.size() > 20) {
        throw SizeGuardError(
            "enumerate_proper_mergings: |P|*|Q| exceeds the size guard of 20");
    }
    const ScalePair& scales = scales_for(p, q);
    std::vector<Relation> r_bonds = enumerate_bonds(scales.scale_p, scales.scale_q);
    std::vector<Relation> t_bonds = enumerate_bonds(scales.scale_q, scales.scale_p);

    MergingLattice lat;
    lat.p_ = p;
    lat.q_ = q;
    for (const Relation& t : t_bonds) {
        Relation t_conv = t.converse();
        for (const Relation& r : r_bonds) {
            if (!(r & t_conv).none()) {
                continue;
            }
            if (!relational_product(r, t).is_subset_of(p.order())) {
                continue;
            }
            if (!relational_product(t, r).is_subset_of(q.order())) {
                continue;
            }
            lat.elements_.push_back(Merging(p, q, r, t));
        }
    }
    std::sort(lat.elements_.begin(), lat.elements_.end(),
              [](const Merging& a, const Merging& b) { return a.key() < b.key(); });
    for (int i = 0; i < lat.size(); ++i) {
        lat.index_.emplace(lat.elements_[static_cast<std::size_t>(i)].key(), i);
    }
    return lat;
}

// ---------------------------------------------------------------------------
// Structure predicates and the eta/xi quotient maps

bool is_chain_poset(const Poset& p) {
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
            if (p.leq(i, j) != (i <= j)) {
                return false;
            }
        }
    }
    return true;
}

bool is_antichain_poset(const Poset& p) {
    return p.order() == Relation::identity(p.carrier());
}

bool is_star_poset(const Poset& p) {
    if (p.size() < 1) {
        return false;
    }
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
            if (p.leq(i, j) != (i == j || i == 0)) {
                return false;
            }
        }
    }
    return true;
}

Merging eta(const Merging& m) {
    if (!is_star_poset(m.p()) || !is_chain_poset(m.q())) {
        throw std::invalid_argument("eta: expects a merging of a star and a chain");
    }
    int arms = m.p().size() - 1;
    Poset antichain = make_antichain(arms);
    Relation r_bar(antichain.carrier(), m.q().carrier());
    for (int i = 0; i < arms; ++i) {
        m.r().row(i + 1).for_each([&](int j) { r_bar.set(i, j); });
    }
    Relation t_bar(m.q().carrier(), antichain.carrier());
    for (int i = 0; i < m.q().size(); ++i) {
        m.t().row(i).for_each([&](int j) {
            if (j >= 1) {
                t_bar.set(i, j - 1);
            }
        });
    }
    return Merging(antichain, m.q(), std::move(r_bar), std::move(t_bar));
}

Merging xi(const Merging& m) {
    if (!is_antichain_poset(m.p()) || !is_chain_poset(m.q())) {
        throw std::invalid_argument("xi: expects a merging of an antichain and a chain");
    }
    int arms = m.p().size();
    Poset star = make_star(arms);
    Relation r_o(star.carrier(), m.q().carrier());
    IndexSet union_row(m.q().size());
    for (int i = 0; i < arms; ++i) {
        union_row |= m.r().row(i);
        m.r().row(i).for_each([&](int j) { r_o.set(i + 1, j); });
    }
    union_row.for_each([&](int j) { r_o.set(0, j); });
    Relation t_o(m.q().carrier(), star.carrier());
    for (int i = 0; i < m.q().size(); ++i) {
        m.t().row(i).for_each([&](int j) { t_o.set(i, j + 1); });
    }
    return Merging(star, m.q(), std::move(r_o), std::move(t_o));
}

MergingClass classify(const Merging& m) {
    if (!is_antichain_poset(m.p()) || !is_chain_poset(m.q())) {
        throw std::invalid_argument("classify: expects a merging of an antichain and a chain");
    }
    int arms = m.p().size();
    int n = m.q().size();
    MergingClass c{n + 1, 0, 0};
    for (int j = 0; j < n; ++j) {
        if (!m.r().column(j).empty()) {
            c.k1 = j + 1;
            break;
        }
    }
    const IndexSet full_arms = IndexSet::full(arms);
    for (int i = 0; i < n; ++i) {
        if (!m.t().row(i).empty()) {
            c.k2 = i + 1;
        }
        // a full row needs at least one arm, else l would escape 0..k2
        if (arms > 0 && m.t().row(i) == full_arms) {
            c.l = i + 1;
        }
    }
    if (!(c.k1 > c.k2 && c.k2 >= c.l)) {
        throw std::logic_error("classify: parameters violate k1 > k2 >= l");
    }
    return c;
}

std::vector<int> fiber(const Merging& target, const MergingLattice& all_sc) {
    std::vector<int> out;
    for (int i = 0; i < all_sc.size(); ++i) {
        if (eta(all_sc.at(i)) == target) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace starmerge
