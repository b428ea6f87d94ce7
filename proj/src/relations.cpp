#include "starmerge/relations.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace starmerge {

namespace {

void append_int_key(std::string& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
        out.push_back(static_cast<char>(v & 0xff));
        v >>= 8;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(int universe) : universe_(universe) {
    if (universe < 0) {
        throw std::invalid_argument("IndexSet: negative universe");
    }
    words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

IndexSet IndexSet::full(int universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) {
        w = ~std::uint64_t{0};
    }
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

IndexSet IndexSet::of(int universe, std::initializer_list<int> members) {
    IndexSet s(universe);
    for (int i : members) {
        s.set(i);
    }
    return s;
}

void IndexSet::check_index(int i) const {
    if (i < 0 || i >= universe_) {
        throw std::out_of_range("IndexSet: index out of range");
    }
}

bool IndexSet::test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
}

void IndexSet::set(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
}

void IndexSet::reset(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool IndexSet::empty() const {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

int IndexSet::count() const {
    int c = 0;
    for (auto w : words_) {
        c += __builtin_popcountll(w);
    }
    return c;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

IndexSet IndexSet::complemented() const {
    IndexSet s = full(universe_);
    s -= *this;
    return s;
}

IndexSet IndexSet::masked_below(int i) const {
    if (i < 0 || i > universe_) {
        throw std::out_of_range("IndexSet: mask boundary out of range");
    }
    IndexSet s = *this;
    std::size_t word = static_cast<std::size_t>(i) / 64;
    for (std::size_t w = word; w < s.words_.size(); ++w) {
        if (w == word && i % 64 != 0) {
            s.words_[w] &= (std::uint64_t{1} << (i % 64)) - 1;
        } else {
            s.words_[w] = 0;
        }
    }
    return s;
}

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
}

void IndexSet::append_key(std::string& out) const {
    append_int_key(out, static_cast<std::uint64_t>(universe_));
    for (auto w : words_) {
        append_int_key(out, w);
    }
}

std::string IndexSet::key() const {
    std::string out;
    append_key(out);
    return out;
}

bool lex_less(const IndexSet& a, const IndexSet& b) {
    if (a.universe() != b.universe()) {
        throw std::invalid_argument("lex_less: universe mismatch");
    }
    int lowest_diff = -1;
    for (int i = 0; i < a.universe() && lowest_diff < 0; ++i) {
        if (a.test(i) != b.test(i)) {
            lowest_diff = i;
        }
    }
    return lowest_diff >= 0 && a.test(lowest_diff);
}

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet() : labels_(std::make_shared<const std::vector<std::string>>()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty() || l.find('\n') != std::string::npos) {
            throw std::invalid_argument("GroundSet: labels must be nonempty single-line strings");
        }
        if (!seen.insert(l).second) {
            throw std::invalid_argument("GroundSet: duplicate label '" + l + "'");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

const std::string& GroundSet::label(int i) const {
    if (i < 0 || i >= size()) {
        throw std::out_of_range("GroundSet: index out of range");
    }
    return (*labels_)[static_cast<std::size_t>(i)];
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
        if ((*labels_)[static_cast<std::size_t>(i)] == label) {
            return i;
        }
    }
    return std::nullopt;
}

int GroundSet::require_index(std::string_view label) const {
    if (auto i = index_of(label)) {
        return *i;
    }
    throw std::invalid_argument("GroundSet: no element labeled '" + std::string(label) + "'");
}

GroundSet GroundSet::subset(const std::vector<int>& indices) const {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) {
        out.push_back(label(i));
    }
    return GroundSet(std::move(out));
}

bool GroundSet::disjoint_from(const GroundSet& other) const {
    for (const auto& l : *labels_) {
        if (other.index_of(l)) {
            return false;
        }
    }
    return true;
}

bool GroundSet::operator==(const GroundSet& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
}

GroundSet concat(const GroundSet& a, const GroundSet& b) {
    if (!a.disjoint_from(b)) {
        throw std::invalid_argument("concat: ground sets share labels");
    }
    std::vector<std::string> out = a.labels();
    out.insert(out.end(), b.labels().begin(), b.labels().end());
    return GroundSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(GroundSet domain, GroundSet codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    rows_.assign(static_cast<std::size_t>(domain_.size()), IndexSet(codomain_.size()));
}

Relation Relation::identity(const GroundSet& g) {
    Relation r(g, g);
    for (int i = 0; i < g.size(); ++i) {
        r.set(i, i);
    }
    return r;
}

Relation Relation::full(const GroundSet& domain, const GroundSet& codomain) {
    Relation r(domain, codomain);
    for (auto& row : r.rows_) {
        row = IndexSet::full(codomain.size());
    }
    return r;
}

Relation Relation::from_pairs(const GroundSet& domain, const GroundSet& codomain,
                              std::initializer_list<std::pair<int, int>> pairs) {
    Relation r(domain, codomain);
    for (auto [i, j] : pairs) {
        r.set(i, j);
    }
    return r;
}

Relation Relation::from_label_pairs(
    const GroundSet& domain, const GroundSet& codomain,
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
    Relation r(domain, codomain);
    for (auto [a, b] : pairs) {
        r.set(domain.require_index(a), codomain.require_index(b));
    }
    return r;
}

Relation Relation::from_rows(const GroundSet& domain, const GroundSet& codomain,
                             const std::vector<std::string>& rows, char mark) {
    if (static_cast<int>(rows.size()) != domain.size()) {
        throw std::invalid_argument("Relation::from_rows: row count mismatch");
    }
    Relation r(domain, codomain);
    for (int i = 0; i < domain.size(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != codomain.size()) {
            throw std::invalid_argument("Relation::from_rows: row length mismatch");
        }
        for (int j = 0; j < codomain.size(); ++j) {
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == mark) {
                r.set(i, j);
            }
        }
    }
    return r;
}

bool Relation::contains(int i, int j) const { return row(i).test(j); }

void Relation::set(int i, int j) {
    if (i < 0 || i >= rows()) {
        throw std::out_of_range("Relation: row index out of range");
    }
    rows_[static_cast<std::size_t>(i)].set(j);
}

void Relation::reset(int i, int j) {
    if (i < 0 || i >= rows()) {
        throw std::out_of_range("Relation: row index out of range");
    }
    rows_[static_cast<std::size_t>(i)].reset(j);
}

const IndexSet& Relation::row(int i) const {
    if (i < 0 || i >= rows()) {
        throw std::out_of_range("Relation: row index out of range");
    }
    return rows_[static_cast<std::size_t>(i)];
}

IndexSet Relation::column(int j) const {
    if (j < 0 || j >= cols()) {
        throw std::out_of_range("Relation: column index out of range");
    }
    IndexSet col(rows());
    for (int i = 0; i < rows(); ++i) {
        if (rows_[static_cast<std::size_t>(i)].test(j)) {
            col.set(i);
        }
    }
    return col;
}

bool Relation::none() const {
    for (const auto& r : rows_) {
        if (!r.empty()) {
            return false;
        }
    }
    return true;
}

int Relation::count() const {
    int c = 0;
    for (const auto& r : rows_) {
        c += r.count();
    }
    return c;
}

void Relation::check_same_shape(const Relation& other) const {
    if (domain_ != other.domain_ || codomain_ != other.codomain_) {
        throw std::invalid_argument("Relation: ground-set mismatch");
    }
}

bool Relation::is_subset_of(const Relation& other) const {
    check_same_shape(other);
    for (int i = 0; i < rows(); ++i) {
        if (!rows_[static_cast<std::size_t>(i)].is_subset_of(other.rows_[static_cast<std::size_t>(i)])) {
            return false;
        }
    }
    return true;
}

Relation Relation::converse() const {
    Relation out(codomain_, domain_);
    for (int i = 0; i < rows(); ++i) {
        rows_[static_cast<std::size_t>(i)].for_each([&](int j) { out.set(j, i); });
    }
    return out;
}

Relation Relation::complemented() const {
    Relation out = *this;
    for (auto& r : out.rows_) {
        r = r.complemented();
    }
    return out;
}

Relation& Relation::operator|=(const Relation& other) {
    check_same_shape(other);
    for (int i = 0; i < rows(); ++i) {
        rows_[static_cast<std::size_t>(i)] |= other.rows_[static_cast<std::size_t>(i)];
    }
    return *this;
}

Relation& Relation::operator&=(const Relation& other) {
    check_same_shape(other);
    for (int i = 0; i < rows(); ++i) {
        rows_[static_cast<std::size_t>(i)] &= other.rows_[static_cast<std::size_t>(i)];
    }
    return *this;
}

Relation& Relation::operator-=(const Relation& other) {
    check_same_shape(other);
    for (int i = 0; i < rows(); ++i) {
        rows_[static_cast<std::size_t>(i)] -= other.rows_[static_cast<std::size_t>(i)];
    }
    return *this;
}

Relation Relation::restricted_to_rows(const IndexSet& keep) const {
    if (keep.universe() != rows()) {
        throw std::invalid_argument("restricted_to_rows: universe mismatch");
    }
    Relation out(domain_, codomain_);
    keep.for_each([&](int i) { out.rows_[static_cast<std::size_t>(i)] = rows_[static_cast<std::size_t>(i)]; });
    return out;
}

Relation Relation::restricted_to_cols(const IndexSet& keep) const {
    if (keep.universe() != cols()) {
        throw std::invalid_argument("restricted_to_cols: universe mismatch");
    }
    Relation out = *this;
    for (auto& r : out.rows_) {
        r &= keep;
    }
    return out;
}

Relation Relation::with_domain(GroundSet domain) const {
    if (domain.size() != rows()) {
        throw std::invalid_argument("with_domain: size mismatch");
    }
    Relation out = *this;
    out.domain_ = std::move(domain);
    return out;
}

Relation Relation::with_codomain(GroundSet codomain) const {
    if (codomain.size() != cols()) {
        throw std::invalid_argument("with_codomain: size mismatch");
    }
    Relation out = *this;
    out.codomain_ = std::move(codomain);
    return out;
}

bool Relation::operator==(const Relation& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && rows_ == other.rows_;
}

std::string Relation::key() const {
    std::string out;
    for (const auto& l : domain_.labels()) {
        out += l;
        out.push_back('\0');
    }
    out.push_back('\1');
    for (const auto& l : codomain_.labels()) {
        out += l;
        out.push_back('\0');
    }
    append_int_key(out, static_cast<std::uint64_t>(rows()));
    append_int_key(out, static_cast<std::uint64_t>(cols()));
    for (const auto& r : rows_) {
        r.append_key(out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Relational algebra and order predicates

Relation relational_product(const Relation& r, const Relation& s) {
    if (r.codomain() != s.domain()) {
        throw std::invalid_argument("relational_product: inner ground sets differ");
    }
    Relation out(r.domain(), s.codomain());
    for (int i = 0; i < r.rows(); ++i) {
        IndexSet acc(s.cols());
        r.row(i).for_each([&](int b) { acc |= s.row(b); });
        for (int j : acc.members()) {
            out.set(i, j);
        }
    }
    return out;
}

Relation transitive_closure(const Relation& r) {
    if (r.domain() != r.codomain()) {
        throw std::invalid_argument("transitive_closure: relation is not an endorelation");
    }
    Relation out = r;
    int n = r.rows();
    for (int k = 0; k < n; ++k) {
        IndexSet row_k = out.row(k);
        for (int i = 0; i < n; ++i) {
            if (out.contains(i, k)) {
                row_k.for_each([&](int j) { out.set(i, j); });
            }
        }
    }
    return out;
}

namespace {

void require_endorelation(const Relation& r) {
    if (r.domain() != r.codomain()) {
        throw std::invalid_argument("order predicate: relation is not an endorelation");
    }
}

}  // namespace

bool is_reflexive(const Relation& r) {
    require_endorelation(r);
    for (int i = 0; i < r.rows(); ++i) {
        if (!r.contains(i, i)) {
            return false;
        }
    }
    return true;
}

bool is_transitive(const Relation& r) {
    require_endorelation(r);
    for (int i = 0; i < r.rows(); ++i) {
        bool ok = true;
        r.row(i).for_each([&](int j) {
            if (ok && !r.row(j).is_subset_of(r.row(i))) {
                ok = false;
            }
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool is_antisymmetric(const Relation& r) {
    require_endorelation(r);
    for (int i = 0; i < r.rows(); ++i) {
        for (int j = i + 1; j < r.rows(); ++j) {
            if (r.contains(i, j) && r.contains(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool is_quasi_order(const Relation& r) { return is_reflexive(r) && is_transitive(r); }

bool is_partial_order(const Relation& r) { return is_quasi_order(r) && is_antisymmetric(r); }

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(GroundSet carrier, Relation order)
    : carrier_(std::move(carrier)), order_(std::move(order)) {
    if (order_.domain() != carrier_ || order_.codomain() != carrier_) {
        throw std::invalid_argument("Poset: order relation must be an endorelation on the carrier");
    }
    if (!is_partial_order(order_)) {
        throw std::invalid_argument("Poset: order relation is not a partial order");
    }
}

bool Poset::operator==(const Poset& other) const {
    return carrier_ == other.carrier_ && order_ == other.order_;
}

Poset make_chain(int n) {
    if (n < 0) {
        throw std::invalid_argument("make_chain: negative size");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        labels.push_back("c" + std::to_string(i));
    }
    GroundSet g(std::move(labels));
    Relation order(g, g);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            order.set(i, j);
        }
    }
    return Poset(g, order);
}

Poset make_antichain(int m) {
    if (m < 0) {
        throw std::invalid_argument("make_antichain: negative size");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        labels.push_back("a" + std::to_string(i));
    }
    GroundSet g(std::move(labels));
    return Poset(g, Relation::identity(g));
}

Poset make_star(int m) {
    if (m < 0) {
        throw std::invalid_argument("make_star: negative size");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        labels.push_back("s" + std::to_string(i));
    }
    GroundSet g(std::move(labels));
    Relation order = Relation::identity(g);
    for (int j = 1; j <= m; ++j) {
        order.set(0, j);
    }
    return Poset(g, order);
}

// ---------------------------------------------------------------------------
// Cross-table text format

void write_cross_table(std::ostream& out, const GroundSet& objects,
                       const GroundSet& attributes, const Relation& incidence) {
    if (incidence.domain() != objects || incidence.codomain() != attributes) {
        throw std::invalid_argument("write_cross_table: incidence does not match the ground sets");
    }
    out << "B\n" << objects.size() << "\n" << attributes.size() << "\n";
    for (const auto& l : objects.labels()) {
        out << l << "\n";
    }
    for (const auto& l : attributes.labels()) {
        out << l << "\n";
    }
    for (int i = 0; i < objects.size(); ++i) {
        for (int j = 0; j < attributes.size(); ++j) {
            out << (incidence.contains(i, j) ? 'X' : '.');
        }
        out << "\n";
    }
}

CrossTable read_cross_table(std::istream& in) {
    auto next_line = [&in](const char* what) {
        std::string line;
        if (!std::getline(in, line)) {
            throw std::invalid_argument(std::string("read_cross_table: missing ") + what);
        }
        return line;
    };
    if (next_line("header") != "B") {
        throw std::invalid_argument("read_cross_table: expected 'B' header");
    }
    int nobj = 0;
    int nattr = 0;
    try {
        nobj = std::stoi(next_line("object count"));
        nattr = std::stoi(next_line("attribute count"));
    } catch (const std::exception&) {
        throw std::invalid_argument("read_cross_table: bad counts");
    }
    if (nobj < 0 || nattr < 0) {
        throw std::invalid_argument("read_cross_table: negative counts");
    }
    std::vector<std::string> obj_labels;
    obj_labels.reserve(static_cast<std::size_t>(nobj));
    for (int i = 0; i < nobj; ++i) {
        obj_labels.push_back(next_line("object label"));
    }
    std::vector<std::string> attr_labels;
    attr_labels.reserve(static_cast<std::size_t>(nattr));
    for (int i = 0; i < nattr; ++i) {
        attr_labels.push_back(next_line("attribute label"));
    }
    GroundSet objects(std::move(obj_labels));
    GroundSet attributes(std::move(attr_labels));
    Relation incidence(objects, attributes);
    for (int i = 0; i < nobj; ++i) {
        std::string row = next_line("incidence row");
        if (static_cast<int>(row.size()) != nattr) {
            throw std::invalid_argument("read_cross_table: row length mismatch");
        }
        for (int j = 0; j < nattr; ++j) {
            char c = row[static_cast<std::size_t>(j)];
            if (c == 'X') {
                incidence.set(i, j);
            } else if (c != '.') {
                throw std::invalid_argument("read_cross_table: unexpected cell character");
            }
        }
    }
    return CrossTable{std::move(objects), std::move(attributes), std::move(incidence)};
}

}  // namespace starmerge
