#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starmerge {

/// Subset of {0, ..., universe-1}, packed into 64-bit words.
/// Unused tail bits of the last word are kept zero, so equal sets
/// compare equal word by word.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int universe);
    static IndexSet full(int universe);
    static IndexSet of(int universe, std::initializer_list<int> members);

    int universe() const { return universe_; }
    bool test(int i) const;
    void set(int i);
    void reset(int i);

    bool empty() const;
    int count() const;
    bool is_subset_of(const IndexSet& other) const;
    bool intersects(const IndexSet& other) const;

    IndexSet& operator|=(const IndexSet& other);
    IndexSet& operator&=(const IndexSet& other);
    IndexSet& operator-=(const IndexSet& other);
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { a |= b; return a; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { a &= b; return a; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { a -= b; return a; }

    IndexSet complemented() const;
    /// Members strictly below i.
    IndexSet masked_below(int i) const;

    std::vector<int> members() const;
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = __builtin_ctzll(bits);
                f(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const IndexSet&) const = default;
    void append_key(std::string& out) const;
    std::string key() const;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;

    void check_index(int i) const;
};

/// Ascending-member lexicographic order: decided by the lowest index
/// where membership differs. {0,2} < {1}, {1} < {1,2}.
bool lex_less(const IndexSet& a, const IndexSet& b);

/// An indexed finite set of uniquely labeled elements. Label order is
/// fixed at construction; copies share the label storage.
class GroundSet {
public:
    GroundSet();
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_->size()); }
    const std::string& label(int i) const;
    const std::vector<std::string>& labels() const { return *labels_; }
    std::optional<int> index_of(std::string_view label) const;
    int require_index(std::string_view label) const;

    GroundSet subset(const std::vector<int>& indices) const;
    bool disjoint_from(const GroundSet& other) const;

    bool operator==(const GroundSet& other) const;
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

GroundSet concat(const GroundSet& a, const GroundSet& b);

/// Binary relation between two ground sets, stored as a dense bit matrix
/// (one IndexSet per row). Values are plain data: build one, then treat
/// it as immutable wherever it is shared.
class Relation {
public:
    Relation() = default;
    Relation(GroundSet domain, GroundSet codomain);

    static Relation identity(const GroundSet& g);
    static Relation full(const GroundSet& domain, const GroundSet& codomain);
    static Relation from_pairs(const GroundSet& domain, const GroundSet& codomain,
                               std::initializer_list<std::pair<int, int>> pairs);
    static Relation from_label_pairs(
        const GroundSet& domain, const GroundSet& codomain,
        std::initializer_list<std::pair<const char*, const char*>> pairs);
    /// One string per row, `mark` for a set cell, any other char clear.
    static Relation from_rows(const GroundSet& domain, const GroundSet& codomain,
                              const std::vector<std::string>& rows, char mark = 'X');

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return codomain_.size(); }
    const GroundSet& domain() const { return domain_; }
    const GroundSet& codomain() const { return codomain_; }

    bool contains(int i, int j) const;
    void set(int i, int j);
    void reset(int i, int j);
    const IndexSet& row(int i) const;
    IndexSet column(int j) const;

    bool none() const;
    int count() const;
    bool is_subset_of(const Relation& other) const;

    Relation converse() const;
    Relation complemented() const;
    Relation& operator|=(const Relation& other);
    Relation& operator&=(const Relation& other);
    Relation& operator-=(const Relation& other);
    friend Relation operator|(Relation a, const Relation& b) { a |= b; return a; }
    friend Relation operator&(Relation a, const Relation& b) { a &= b; return a; }
    friend Relation operator-(Relation a, const Relation& b) { a -= b; return a; }

    /// Same cells, rows outside `keep` cleared; dimensions unchanged.
    Relation restricted_to_rows(const IndexSet& keep) const;
    Relation restricted_to_cols(const IndexSet& keep) const;
    /// Relabel one side; the new ground set must have the same size.
    Relation with_domain(GroundSet domain) const;
    Relation with_codomain(GroundSet codomain) const;

    bool operator==(const Relation& other) const;
    bool operator!=(const Relation& other) const { return !(*this == other); }

    /// Canonical byte encoding: ground-set labels, dimensions, then the
    /// cells row-major. Two relations are equal iff their keys are equal.
    std::string key() const;

private:
    GroundSet domain_;
    GroundSet codomain_;
    std::vector<IndexSet> rows_;

    void check_same_shape(const Relation& other) const;
};

Relation relational_product(const Relation& r, const Relation& s);
Relation transitive_closure(const Relation& r);

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_antisymmetric(const Relation& r);
bool is_quasi_order(const Relation& r);
bool is_partial_order(const Relation& r);

/// Finite partially ordered set; the order relation is validated at
/// construction (reflexive, antisymmetric, transitive endorelation).
class Poset {
public:
    Poset() = default;
    Poset(GroundSet carrier, Relation order);

    const GroundSet& carrier() const { return carrier_; }
    const Relation& order() const { return order_; }
    int size() const { return carrier_.size(); }
    bool leq(int a, int b) const { return order_.contains(a, b); }

    bool operator==(const Poset& other) const;
    bool operator!=(const Poset& other) const { return !(*this == other); }

private:
    GroundSet carrier_;
    Relation order_;
};

/// c1 <= c2 <= ... <= cn.
Poset make_chain(int n);
/// a1, ..., am pairwise incomparable.
Poset make_antichain(int m);
/// s0 below each of s1, ..., sm; the arms pairwise incomparable.
Poset make_star(int m);

/// Cross-table text format: "B", object count, attribute count, one
/// label per line (objects then attributes), then one row of X/. marks
/// per object. Round-trips bit-exactly.
struct CrossTable {
    GroundSet objects;
    GroundSet attributes;
    Relation incidence;
};

void write_cross_table(std::ostream& out, const GroundSet& objects,
                       const GroundSet& attributes, const Relation& incidence);
CrossTable read_cross_table(std::istream& in);

}  // namespace starmerge
