// Command-line front end: counts, enumerations, lattice exports, fiber
// tables, Galois connections, the chain-map bijection table, and the
// cross-method verification grid.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 size guard exceeded.
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "starmerge/colorings.hpp"
#include "starmerge/export.hpp"
#include "starmerge/fca.hpp"
#include "starmerge/formulas.hpp"
#include "starmerge/mergings.hpp"
#include "starmerge/relations.hpp"

using namespace starmerge;
using nlohmann::ordered_json;

namespace {

struct OutputTarget {
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    void open(const std::string& path) {
        if (path.empty()) {
            return;
        }
        file.open(path);
        if (!file) {
            throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ofstream file;
};

std::string pair_list(const Relation& r) {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : relation_label_pairs(r)) {
        if (!first) {
            out += ',';
        }
        out += "(" + a + "," + b + ")";
        first = false;
    }
    out += '}';
    return out;
}

ordered_json pairs_json(const Relation& r) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : relation_label_pairs(r)) {
        arr.push_back({a, b});
    }
    return arr;
}

ordered_json merging_json(const Merging& m) {
    return ordered_json{{"R", pairs_json(m.r())}, {"T", pairs_json(m.t())}};
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw std::invalid_argument("format '" + format + "' is not valid for this command");
}

std::vector<std::vector<int>> fiber_partition(const MergingLattice& sc) {
    std::map<std::string, std::vector<int>> classes;
    for (int i = 0; i < sc.size(); ++i) {
        classes[eta(sc.at(i)).key()].push_back(i);
    }
    std::vector<std::vector<int>> out;
    out.reserve(classes.size());
    for (auto& [key, members] : classes) {
        out.push_back(std::move(members));
    }
    return out;
}

// ---------------------------------------------------------------------------

int run_count(int m, int n, const std::string& method, const std::string& format,
              OutputTarget& target) {
    require_format(format, {"text", "json"});
    BigInt value;
    if (method == "formula") {
        value = star_chain_count(m, n);
    } else if (method == "bruteforce") {
        value = enumerate_proper_mergings(make_star(m), make_chain(n)).size();
    } else if (method == "fibers") {
        MergingLattice ac = enumerate_proper_mergings(make_antichain(m), make_chain(n));
        value = 0;
        for (int i = 0; i < ac.size(); ++i) {
            MergingClass c = classify(ac.at(i));
            value += fiber_size(c.k1, c.l);
        }
    } else if (method == "colorings") {
        value = count_monotone_colorings(complete_tripartite(m + 1, 1, m), n + 1);
    } else if (method == "farley") {
        value = count_farley_maps(build_farley_poset(m), n);
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }
    if (format == "json") {
        ordered_json doc{{"schema", 1}, {"kind", "count"},  {"m", m},
                         {"n", n},      {"method", method}, {"value", value.str()}};
        target.stream() << doc.dump(2) << "\n";
    } else {
        target.stream() << value << "\n";
    }
    return 0;
}

int run_enumerate(int m, int n, const std::string& format, OutputTarget& target) {
    require_format(format, {"text", "json"});
    MergingLattice sc = enumerate_proper_mergings(make_star(m), make_chain(n));
    if (format == "json") {
        ordered_json doc{{"schema", 1}, {"kind", "mergings"}, {"m", m}, {"n", n},
                         {"count", sc.size()}};
        ordered_json list = ordered_json::array();
        for (int i = 0; i < sc.size(); ++i) {
            list.push_back(merging_json(sc.at(i)));
        }
        doc["mergings"] = list;
        target.stream() << doc.dump(2) << "\n";
    } else {
        target.stream() << "# proper mergings of a " << m << "-star and a " << n
                        << "-chain: " << sc.size() << "\n";
        for (int i = 0; i < sc.size(); ++i) {
            target.stream() << i << "  R=" << pair_list(sc.at(i).r())
                            << "  T=" << pair_list(sc.at(i).t()) << "\n";
        }
    }
    return 0;
}

int run_lattice(int m, int n, bool highlight, const std::string& format, OutputTarget& target) {
    require_format(format, {"dot", "json", "text"});
    MergingLattice sc = enumerate_proper_mergings(make_star(m), make_chain(n));
    if (sc.size() > 2000) {
        throw SizeGuardError("lattice export: " + std::to_string(sc.size()) +
                             " elements exceed the diagram size guard of 2000");
    }
    std::vector<std::vector<int>> fibers;
    if (highlight) {
        fibers = fiber_partition(sc);
    }
    if (format == "dot") {
        write_merging_lattice_dot(target.stream(), sc, highlight ? &fibers : nullptr);
        return 0;
    }
    auto covers = cover_pairs(sc.order_relation());
    if (format == "json") {
        ordered_json doc{{"schema", 1}, {"kind", "merging_lattice"}, {"m", m}, {"n", n}};
        ordered_json nodes = ordered_json::array();
        for (int i = 0; i < sc.size(); ++i) {
            ordered_json node = merging_json(sc.at(i));
            node["id"] = i;
            nodes.push_back(node);
        }
        doc["nodes"] = nodes;
        ordered_json edges = ordered_json::array();
        for (auto [a, b] : covers) {
            edges.push_back({a, b});
        }
        doc["edges"] = edges;
        if (highlight) {
            doc["fibers"] = fibers;
        }
        target.stream() << doc.dump(2) << "\n";
    } else {
        target.stream() << "# merging lattice of a " << m << "-star and a " << n
                        << "-chain: " << sc.size() << " elements\n";
        for (int i = 0; i < sc.size(); ++i) {
            target.stream() << i << "  R=" << pair_list(sc.at(i).r())
                            << "  T=" << pair_list(sc.at(i).t()) << "\n";
        }
        target.stream() << "# covering pairs (lower -> upper)\n";
        for (auto [a, b] : covers) {
            target.stream() << a << " -> " << b << "\n";
        }
        if (highlight) {
            target.stream() << "# fibers\n";
            for (std::size_t k = 0; k < fibers.size(); ++k) {
                target.stream() << k << ":";
                for (int v : fibers[k]) {
                    target.stream() << " " << v;
                }
                target.stream() << "\n";
            }
        }
    }
    return 0;
}

int run_fibers(int m, int n, const std::string& format, OutputTarget& target) {
    require_format(format, {"text", "json"});
    MergingLattice sc = enumerate_proper_mergings(make_star(m), make_chain(n));
    MergingLattice ac = enumerate_proper_mergings(make_antichain(m), make_chain(n));
    // one restriction pass over the whole lattice, grouped by image
    std::map<std::string, std::vector<int>> by_image;
    for (int i = 0; i < sc.size(); ++i) {
        by_image[eta(sc.at(i)).key()].push_back(i);
    }
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    BigInt total = 0;
    bool all_match = true;
    for (int i = 0; i < ac.size(); ++i) {
        MergingClass c = classify(ac.at(i));
        std::vector<int> members;
        if (auto it = by_image.find(ac.at(i).key()); it != by_image.end()) {
            members = it->second;
        }
        BigInt predicted = fiber_size(c.k1, c.l);
        bool match = predicted == BigInt(members.size());
        all_match = all_match && match;
        total += members.size();
        if (format == "json") {
            ordered_json row = merging_json(ac.at(i));
            row["k1"] = c.k1;
            row["k2"] = c.k2;
            row["l"] = c.l;
            row["fiber_formula"] = predicted.str();
            row["fiber_size"] = members.size();
            row["members"] = members;
            rows.push_back(row);
        } else {
            text << i << "  (k1,k2,l)=(" << c.k1 << "," << c.k2 << "," << c.l << ")"
                 << "  fiber=" << members.size() << "  formula=" << predicted
                 << "  R=" << pair_list(ac.at(i).r()) << "  T=" << pair_list(ac.at(i).t())
                 << "\n";
        }
    }
    if (format == "json") {
        ordered_json doc{{"schema", 1},
                         {"kind", "fibers"},
                         {"m", m},
                         {"n", n},
                         {"classes", rows},
                         {"total", total.str()},
                         {"all_match", all_match}};
        target.stream() << doc.dump(2) << "\n";
    } else {
        target.stream() << "# eta fibers over the " << m << "-antichain/" << n
                        << "-chain mergings (" << ac.size() << " classes, " << sc.size()
                        << " elements)\n";
        target.stream() << text.str();
        target.stream() << "# total " << total << (all_match ? ", all sizes match" : ", MISMATCH")
                        << "\n";
    }
    return all_match ? 0 : 1;
}

std::string concept_extent_label(const ConceptLattice& lat, int idx) {
    return poset_element_list(lat.at(idx).extent, lat.context().objects());
}

int run_galois(int m, int n, const std::string& format, OutputTarget& target) {
    require_format(format, {"text", "json"});
    Poset star = make_star(m);
    Poset chain = make_chain(n);
    FormalContext chain_scale = contraordinal_scale(chain);
    FormalContext star_scale = contraordinal_scale(star);
    MergingLattice sc = enumerate_proper_mergings(star, chain);

    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    int count = 0;
    for (int i = 0; i < sc.size(); ++i) {
        if (!sc.at(i).r().none()) {
            continue;
        }
        Relation hat = dual_bond_from_proper_T(sc.at(i).t(), star, chain);
        GaloisConnection gc = galois_from_dual_bond(hat, chain_scale, star_scale);
        if (format == "json") {
            ordered_json row;
            row["T"] = pairs_json(sc.at(i).t());
            row["dual_bond"] = pairs_json(hat);
            ordered_json phi = ordered_json::array();
            for (int a = 0; a < gc.left.size(); ++a) {
                phi.push_back({concept_extent_label(gc.left, a),
                               concept_extent_label(gc.right, gc.phi[static_cast<std::size_t>(a)])});
            }
            ordered_json psi = ordered_json::array();
            for (int b = 0; b < gc.right.size(); ++b) {
                psi.push_back({concept_extent_label(gc.right, b),
                               concept_extent_label(gc.left, gc.psi[static_cast<std::size_t>(b)])});
            }
            row["phi"] = phi;
            row["psi"] = psi;
            rows.push_back(row);
        } else {
            text << "connection " << count << ":\n";
            text << "  T        = " << pair_list(sc.at(i).t()) << "\n";
            text << "  dual bond= " << pair_list(hat) << "\n";
            text << "  phi      =";
            for (int a = 0; a < gc.left.size(); ++a) {
                text << " " << concept_extent_label(gc.left, a) << "->"
                     << concept_extent_label(gc.right, gc.phi[static_cast<std::size_t>(a)]);
            }
            text << "\n  psi      =";
            for (int b = 0; b < gc.right.size(); ++b) {
                text << " " << concept_extent_label(gc.right, b) << "->"
                     << concept_extent_label(gc.left, gc.psi[static_cast<std::size_t>(b)]);
            }
            text << "\n";
        }
        ++count;
    }
    BigInt formula = galois_connection_count(m, n);
    if (format == "json") {
        ordered_json doc{{"schema", 1},        {"kind", "galois"},
                         {"m", m},             {"n", n},
                         {"count", count},     {"formula", formula.str()},
                         {"connections", rows}};
        target.stream() << doc.dump(2) << "\n";
    } else {
        target.stream() << "# galois connections between the " << (n + 1)
                        << "-chain and the " << m << "-balloon: " << count
                        << " (formula " << formula << ")\n";
        target.stream() << text.str();
    }
    return BigInt(count) == formula ? 0 : 1;
}

int run_bijection(int m, int n, const std::string& format, OutputTarget& target) {
    require_format(format, {"text", "json"});
    FarleyPoset fp = build_farley_poset(m);
    auto maps = enumerate_farley_maps(fp, n);
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        Merging mg = farley_map(fp, maps[k]);
        if (format == "json") {
            ordered_json images = ordered_json::array();
            for (int d : maps[k].images) {
                images.push_back(fp.poset.carrier().label(d));
            }
            ordered_json row = merging_json(mg);
            row["zeta"] = images;
            rows.push_back(row);
        } else {
            text << k << "  zeta=(";
            for (std::size_t i = 0; i < maps[k].images.size(); ++i) {
                if (i > 0) {
                    text << ",";
                }
                text << fp.poset.carrier().label(maps[k].images[i]);
            }
            text << ")  R=" << pair_list(mg.r()) << "  T=" << pair_list(mg.t()) << "\n";
        }
    }
    if (format == "json") {
        ordered_json doc{{"schema", 1}, {"kind", "farley_table"}, {"m", m}, {"n", n},
                         {"rows", rows}};
        target.stream() << doc.dump(2) << "\n";
    } else {
        target.stream() << "# chain maps into the coalesced cube poset for m=" << m
                        << ", n=" << n << ": " << maps.size() << " rows\n";
        target.stream() << text.str();
    }
    return 0;
}

struct VerifyCheck {
    int m;
    int n;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

int run_verify(int max_m, int max_n, const std::string& format, OutputTarget& target) {
    require_format(format, {"text", "json"});
    std::vector<VerifyCheck> checks;
    auto add = [&checks](int m, int n, const std::string& name, const BigInt& expected,
                         const BigInt& actual) {
        checks.push_back(
            VerifyCheck{m, n, name, expected.str(), actual.str(), expected == actual});
    };
    for (int m = 0; m <= max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            BigInt formula = star_chain_count(m, n);
            add(m, n, "formula=colorings", formula,
                count_monotone_colorings(complete_tripartite(m + 1, 1, m), n + 1));
            add(m, n, "formula=farley", formula, count_farley_maps(build_farley_poset(m), n));
            add(m, n, "nested-sum", antidiagonal_sum(m, n + 1), fiber_decomposition_total(m, n));
            if ((m + 1) * n <= 20) {
                add(m, n, "formula=bruteforce", formula,
                    BigInt(enumerate_proper_mergings(make_star(m), make_chain(n)).size()));
            }
            if (m * n <= 20) {
                MergingLattice ac =
                    enumerate_proper_mergings(make_antichain(m), make_chain(n));
                BigInt via_fibers = 0;
                for (int i = 0; i < ac.size(); ++i) {
                    MergingClass c = classify(ac.at(i));
                    via_fibers += fiber_size(c.k1, c.l);
                }
                if (m >= 1) {
                    add(m, n, "formula=fibersum", formula, via_fibers);
                }
                BigInt decomposition = 0;
                for (int k1 = 1; k1 <= n + 1; ++k1) {
                    for (int k2 = 0; k2 < k1; ++k2) {
                        for (int l = 0; l <= k2; ++l) {
                            decomposition += v1_colorings(m, n, k1) * v2_colorings(m, k2, l);
                        }
                    }
                }
                add(m, n, "decomposition=antichain", BigInt(ac.size()), decomposition);
            }
            if ((m + 1) * n <= 20) {
                add(m, n, "galois", galois_connection_count(m, n),
                    BigInt(count_galois_connections(m, n)));
            }
        }
    }
    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
    }
    if (format == "json") {
        ordered_json list = ordered_json::array();
        for (const auto& c : checks) {
            list.push_back(ordered_json{{"m", c.m},
                                        {"n", c.n},
                                        {"name", c.name},
                                        {"expected", c.expected},
                                        {"actual", c.actual},
                                        {"pass", c.pass}});
        }
        ordered_json doc{{"schema", 1}, {"kind", "verify"},       {"max_m", max_m},
                         {"max_n", max_n}, {"checks", list},      {"all_pass", all_pass}};
        target.stream() << doc.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            target.stream() << (c.pass ? "ok   " : "FAIL ") << "m=" << c.m << " n=" << c.n
                            << "  " << c.name << "  expected=" << c.expected
                            << " actual=" << c.actual << "\n";
        }
        target.stream() << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "counts, lattices and bijections for proper mergings of stars/antichains with chains"};
    app.require_subcommand(1);

    int m = 0;
    int n = 0;
    std::string method = "formula";
    std::string out_path;
    bool highlight = false;
    int max_m = 3;
    int max_n = 3;
    std::map<std::string, std::string> formats;

    auto add_common = [&](CLI::App* sub, const char* default_format, bool needs_mn) {
        if (needs_mn) {
            sub->add_option("-m", m, "star arm count")->required()->check(CLI::NonNegativeNumber);
            sub->add_option("-n", n, "chain length")->required()->check(CLI::NonNegativeNumber);
        }
        std::string& fmt = formats[sub->get_name()];
        fmt = default_format;
        sub->add_option("--format", fmt, "output format")->capture_default_str();
        sub->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* cmd_count = app.add_subcommand("count", "count proper mergings of an m-star and an n-chain");
    add_common(cmd_count, "text", true);
    cmd_count->add_option("--method", method, "formula|bruteforce|fibers|colorings|farley")
        ->capture_default_str()
        ->check(CLI::IsMember({"formula", "bruteforce", "fibers", "colorings", "farley"}));

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list the proper mergings");
    add_common(cmd_enum, "json", true);

    CLI::App* cmd_lattice = app.add_subcommand("lattice", "emit the merging lattice");
    add_common(cmd_lattice, "dot", true);
    cmd_lattice->add_flag("--highlight-fibers", highlight,
                          "group the lattice nodes by their quotient fiber");

    CLI::App* cmd_fibers = app.add_subcommand("fibers", "classification and fiber sizes");
    add_common(cmd_fibers, "text", true);

    CLI::App* cmd_galois =
        app.add_subcommand("galois", "dual bonds and their Galois connections");
    add_common(cmd_galois, "text", true);

    CLI::App* cmd_bijection =
        app.add_subcommand("bijection", "chain-map table onto the proper mergings");
    add_common(cmd_bijection, "text", true);

    CLI::App* cmd_verify = app.add_subcommand("verify", "cross-method agreement grid");
    cmd_verify->add_option("--max-m", max_m, "largest star arm count")->capture_default_str();
    cmd_verify->add_option("--max-n", max_n, "largest chain length")->capture_default_str();
    add_common(cmd_verify, "text", false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        OutputTarget target;
        target.open(out_path);
        if (cmd_count->parsed()) {
            return run_count(m, n, method, formats["count"], target);
        }
        if (cmd_enum->parsed()) {
            return run_enumerate(m, n, formats["enumerate"], target);
        }
        if (cmd_lattice->parsed()) {
            return run_lattice(m, n, highlight, formats["lattice"], target);
        }
        if (cmd_fibers->parsed()) {
            return run_fibers(m, n, formats["fibers"], target);
        }
        if (cmd_galois->parsed()) {
            return run_galois(m, n, formats["galois"], target);
        }
        if (cmd_bijection->parsed()) {
            return run_bijection(m, n, formats["bijection"], target);
        }
        if (cmd_verify->parsed()) {
            return run_verify(max_m, max_n, formats["verify"], target);
        }
        return 2;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
