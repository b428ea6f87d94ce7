#include "starmerge/export.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace starmerge {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> cover_pairs(const Relation& order) {
    if (!is_partial_order(order)) {
        throw std::invalid_argument("cover_pairs: relation is not a partial order");
    }
    int n = order.rows();
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || !order.contains(a, b)) {
                continue;
            }
            bool direct = true;
            for (int c = 0; c < n && direct; ++c) {
                if (c != a && c != b && order.contains(a, c) && order.contains(c, b)) {
                    direct = false;
                }
            }
            if (direct) {
                covers.emplace_back(a, b);
            }
        }
    }
    return covers;
}

void write_hasse_dot(std::ostream& out, const std::vector<std::string>& node_labels,
                     const std::vector<std::pair<int, int>>& covers,
                     const std::vector<std::vector<int>>* clusters) {
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    if (clusters != nullptr) {
        for (std::size_t k = 0; k < clusters->size(); ++k) {
            out << "  subgraph cluster_" << k << " {\n";
            out << "    style=filled;\n    color=lightgrey;\n";
            for (int v : (*clusters)[k]) {
                out << "    n" << v << ";\n";
            }
            out << "  }\n";
        }
    }
    for (std::size_t v = 0; v < node_labels.size(); ++v) {
        out << "  n" << v << " [label=\"" << dot_escape(node_labels[v]) << "\"];\n";
    }
    for (const auto& [a, b] : covers) {
        out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
}

void write_concept_lattice_dot(std::ostream& out, const ConceptLattice& lat) {
    std::vector<std::string> attr_line(static_cast<std::size_t>(lat.size()));
    std::vector<std::string> obj_line(static_cast<std::size_t>(lat.size()));
    const FormalContext& ctx = lat.context();
    for (int m = 0; m < ctx.attributes().size(); ++m) {
        auto& line = attr_line[static_cast<std::size_t>(lat.attribute_concept(m))];
        if (!line.empty()) {
            line += ' ';
        }
        line += ctx.attributes().label(m);
    }
    for (int g = 0; g < ctx.objects().size(); ++g) {
        auto& line = obj_line[static_cast<std::size_t>(lat.object_concept(g))];
        if (!line.empty()) {
            line += ' ';
        }
        line += ctx.objects().label(g);
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(lat.size()));
    for (int i = 0; i < lat.size(); ++i) {
        // attribute labels above the node mark, object labels below
        labels.push_back(attr_line[static_cast<std::size_t>(i)] + "\\n*\\n" +
                         obj_line[static_cast<std::size_t>(i)]);
    }
    write_hasse_dot(out, labels, cover_pairs(lat.order()));
}

void write_merging_lattice_dot(std::ostream& out, const MergingLattice& lat,
                               const std::vector<std::vector<int>>* clusters) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(lat.size()));
    for (int i = 0; i < lat.size(); ++i) {
        labels.push_back(std::to_string(i));
    }
    write_hasse_dot(out, labels, cover_pairs(lat.order_relation()), clusters);
}

void write_merged_order_dot(std::ostream& out, const Merging& m) {
    Relation order = induced_order(m);
    std::vector<std::string> labels = order.domain().labels();
    write_hasse_dot(out, labels, cover_pairs(order));
}

std::vector<std::pair<std::string, std::string>> relation_label_pairs(const Relation& r) {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < r.rows(); ++i) {
        r.row(i).for_each([&](int j) {
            out.emplace_back(r.domain().label(i), r.codomain().label(j));
        });
    }
    return out;
}

std::string poset_element_list(const IndexSet& subset, const GroundSet& g) {
    std::string out = "{";
    bool first = true;
    subset.for_each([&](int i) {
        if (!first) {
            out += ',';
        }
        out += g.label(i);
        first = false;
    });
    out += '}';
    return out;
}

namespace {

nlohmann::ordered_json labels_array(const IndexSet& subset, const GroundSet& g) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    subset.for_each([&](int i) { arr.push_back(g.label(i)); });
    return arr;
}

nlohmann::ordered_json pairs_array(const Relation& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [a, b] : relation_label_pairs(r)) {
        arr.push_back({a, b});
    }
    return arr;
}

}  // namespace

std::string to_json(const ConceptLattice& lat) {
    nlohmann::ordered_json concepts = nlohmann::ordered_json::array();
    for (int i = 0; i < lat.size(); ++i) {
        concepts.push_back(
            {{"extent", labels_array(lat.at(i).extent, lat.context().objects())},
             {"intent", labels_array(lat.at(i).intent, lat.context().attributes())}});
    }
    return nlohmann::ordered_json{{"schema", 1}, {"concepts", concepts}}.dump(2);
}

std::string to_json(const Merging& m) {
    return nlohmann::ordered_json{
        {"schema", 1}, {"R", pairs_array(m.r())}, {"T", pairs_array(m.t())}}
        .dump(2);
}

std::string to_json(const MonotoneColoring& c) {
    nlohmann::ordered_json colors = nlohmann::ordered_json::array();
    int vertex = 0;
    for (int layer = 0; layer < c.graph.layers(); ++layer) {
        for (int i = 0; i < c.graph.layer_sizes[static_cast<std::size_t>(layer)]; ++i, ++vertex) {
            colors.push_back({{"layer", layer},
                              {"vertex", vertex},
                              {"color", c.colors[static_cast<std::size_t>(vertex)]}});
        }
    }
    return nlohmann::ordered_json{{"schema", 1}, {"colors", colors}}.dump(2);
}

}  // namespace starmerge
