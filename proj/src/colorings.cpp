#include "starmerge/colorings.hpp"

#include <algorithm>
#include <stdexcept>

namespace starmerge {

namespace {

BigInt bpow(BigInt base, int exp) {
    BigInt out = 1;
    while (exp > 0) {
        if (exp & 1) {
            out *= base;
        }
        base *= base;
        exp >>= 1;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Layered digraphs and monotone colorings

LayeredDigraph::LayeredDigraph(std::vector<int> sizes) : layer_sizes(std::move(sizes)) {
    if (layer_sizes.empty()) {
        throw std::invalid_argument("LayeredDigraph: at least one layer required");
    }
    for (int s : layer_sizes) {
        if (s < 0) {
            throw std::invalid_argument("LayeredDigraph: negative layer size");
        }
    }
}

int LayeredDigraph::vertex_count() const {
    int total = 0;
    for (int s : layer_sizes) {
        total += s;
    }
    return total;
}

int LayeredDigraph::layer_offset(int layer) const {
    if (layer < 0 || layer >= layers()) {
        throw std::out_of_range("LayeredDigraph: layer out of range");
    }
    int off = 0;
    for (int i = 0; i < layer; ++i) {
        off += layer_sizes[static_cast<std::size_t>(i)];
    }
    return off;
}

LayeredDigraph complete_bipartite(int m) { return LayeredDigraph({m, m}); }

LayeredDigraph complete_tripartite(int a, int b, int c) { return LayeredDigraph({a, b, c}); }

MonotoneColoring::MonotoneColoring(LayeredDigraph g, std::vector<int> cols)
    : graph(std::move(g)), colors(std::move(cols)) {
    if (static_cast<int>(colors.size()) != graph.vertex_count()) {
        throw std::invalid_argument("MonotoneColoring: one color per vertex required");
    }
    for (int c : colors) {
        if (c < 1) {
            throw std::invalid_argument("MonotoneColoring: colors start at 1");
        }
    }
    int off = 0;
    for (int layer = 0; layer + 1 < graph.layers(); ++layer) {
        int s1 = graph.layer_sizes[static_cast<std::size_t>(layer)];
        int s2 = graph.layer_sizes[static_cast<std::size_t>(layer) + 1];
        for (int i = 0; i < s1; ++i) {
            for (int j = 0; j < s2; ++j) {
                if (colors[static_cast<std::size_t>(off + i)] >
                    colors[static_cast<std::size_t>(off + s1 + j)]) {
                    throw std::invalid_argument(
                        "MonotoneColoring: colors must weakly increase along edges");
                }
            }
        }
        off += s1;
    }
}

BigInt count_monotone_colorings(const LayeredDigraph& g, int palette) {
    if (palette < 0) {
        throw std::invalid_argument("count_monotone_colorings: negative palette");
    }
    if (palette == 0) {
        return g.vertex_count() == 0 ? 1 : 0;
    }
    // Edges force max(layer) <= min(next layer); an empty layer cuts the
    // graph, so maximal runs of nonempty layers count independently.
    BigInt total = 1;
    std::size_t i = 0;
    while (i < g.layer_sizes.size()) {
        if (g.layer_sizes[i] == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::vector<BigInt> dp;  // dp[b-1]: colorings of the run so far whose last layer has max b
        dp.assign(static_cast<std::size_t>(palette), 0);
        for (int b = 1; b <= palette; ++b) {
            dp[static_cast<std::size_t>(b - 1)] =
                bpow(b, g.layer_sizes[i]) - bpow(b - 1, g.layer_sizes[i]);
        }
        for (j = i + 1; j < g.layer_sizes.size() && g.layer_sizes[j] != 0; ++j) {
            int s = g.layer_sizes[j];
            std::vector<BigInt> next(static_cast<std::size_t>(palette), 0);
            for (int b2 = 1; b2 <= palette; ++b2) {
                for (int b1 = 1; b1 <= b2; ++b1) {
                    next[static_cast<std::size_t>(b2 - 1)] +=
                        dp[static_cast<std::size_t>(b1 - 1)] *
                        (bpow(b2 - b1 + 1, s) - bpow(b2 - b1, s));
                }
            }
            dp = std::move(next);
        }
        BigInt run_total = 0;
        for (const BigInt& v : dp) {
            run_total += v;
        }
        total *= run_total;
        i = j;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Merging <-> coloring bijection on K_{m,m}

MonotoneColoring coloring_from_merging(const Merging& m) {
    if (!is_antichain_poset(m.p()) || !is_chain_poset(m.q())) {
        throw std::invalid_argument(
            "coloring_from_merging: expects a merging of an antichain and a chain");
    }
    if (!is_proper(m)) {
        throw std::invalid_argument("coloring_from_merging: merging must be proper");
    }
    int arms = m.p().size();
    int n = m.q().size();
    std::vector<int> colors(static_cast<std::size_t>(2 * arms), 0);
    for (int i = 0; i < arms; ++i) {
        colors[static_cast<std::size_t>(i)] = m.r().row(i).count() + 1;
        colors[static_cast<std::size_t>(arms + i)] = n + 1 - m.t().column(i).count();
    }
    return MonotoneColoring(complete_bipartite(arms), std::move(colors));
}

Merging merging_from_coloring(const MonotoneColoring& c, int n) {
    if (c.graph.layers() != 2 || c.graph.layer_sizes[0] != c.graph.layer_sizes[1]) {
        throw std::invalid_argument("merging_from_coloring: expects a coloring of K_{m,m}");
    }
    int arms = c.graph.layer_sizes[0];
    for (int col : c.colors) {
        if (col > n + 1) {
            throw std::invalid_argument("merging_from_coloring: color exceeds n + 1");
        }
    }
    Poset antichain = make_antichain(arms);
    Poset chain = make_chain(n);
    Relation r(antichain.carrier(), chain.carrier());
    Relation t(chain.carrier(), antichain.carrier());
    for (int i = 0; i < arms; ++i) {
        int suffix = c.colors[static_cast<std::size_t>(i)] - 1;
        for (int j = n - suffix; j < n; ++j) {
            r.set(i, j);
        }
        int prefix = n + 1 - c.colors[static_cast<std::size_t>(arms + i)];
        for (int j = 0; j < prefix; ++j) {
            t.set(j, i);
        }
    }
    return Merging(std::move(antichain), std::move(chain), std::move(r), std::move(t));
}

// ---------------------------------------------------------------------------
// Chain maps into the coalesced cube poset

namespace {

std::string subset_label(char prefix, const IndexSet& s, int index_base) {
    std::string out(1, prefix);
    out += '{';
    bool first = true;
    s.for_each([&](int i) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(i + index_base);
        first = false;
    });
    out += '}';
    return out;
}

std::vector<IndexSet> subsets_by_size(int universe) {
    std::vector<IndexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
        IndexSet s(universe);
        for (int i = 0; i < universe; ++i) {
            if ((mask >> i) & 1) {
                s.set(i);
            }
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.count() != b.count()) {
            return a.count() < b.count();
        }
        return lex_less(a, b);
    });
    return out;
}

}  // namespace

FarleyPoset build_farley_poset(int m) {
    if (m < 0) {
        throw std::invalid_argument("build_farley_poset: negative m");
    }
    if (m > 20) {
        throw SizeGuardError("build_farley_poset: m exceeds the size guard of 20");
    }
    FarleyPoset fp;
    fp.m = m;
    std::vector<std::string> labels;
    labels.push_back("x");
    fp.kind.push_back(FarleyKind::bottom);
    fp.subset.push_back(IndexSet(0));

    const IndexSet full_lower = IndexSet::full(m + 1);
    for (const IndexSet& s : subsets_by_size(m + 1)) {
        if (s == full_lower) {
            continue;  // the top of Y is the coalesced element, listed with Z
        }
        labels.push_back(subset_label('y', s, 0));
        fp.kind.push_back(FarleyKind::lower_cube);
        fp.subset.push_back(s);
    }
    for (const IndexSet& s : subsets_by_size(m)) {
        labels.push_back(subset_label('z', s, 1));
        fp.kind.push_back(FarleyKind::upper_cube);
        fp.subset.push_back(s);
    }

    GroundSet carrier{std::move(labels)};
    int total = carrier.size();
    Relation order(carrier, carrier);
    auto leq = [&](int a, int b) {
        if (a == b || fp.kind[static_cast<std::size_t>(a)] == FarleyKind::bottom) {
            return true;
        }
        FarleyKind ka = fp.kind[static_cast<std::size_t>(a)];
        FarleyKind kb = fp.kind[static_cast<std::size_t>(b)];
        if (ka == FarleyKind::lower_cube && kb == FarleyKind::upper_cube) {
            return true;
        }
        if (ka != kb) {
            return false;
        }
        return fp.subset[static_cast<std::size_t>(a)].is_subset_of(
            fp.subset[static_cast<std::size_t>(b)]);
    };
    for (int a = 0; a < total; ++a) {
        for (int b = 0; b < total; ++b) {
            if (leq(a, b)) {
                order.set(a, b);
            }
        }
    }
    fp.poset = Poset(carrier, std::move(order));
    return fp;
}

Merging farley_map(const FarleyPoset& fp, const FarleyChainMap& z) {
    if (static_cast<int>(z.images.size()) != z.n) {
        throw std::invalid_argument("farley_map: image count does not match the chain length");
    }
    for (std::size_t i = 0; i < z.images.size(); ++i) {
        int d = z.images[i];
        if (d < 0 || d >= fp.poset.size()) {
            throw std::out_of_range("farley_map: image index out of range");
        }
        if (i > 0 && !fp.poset.leq(z.images[i - 1], d)) {
            throw std::invalid_argument("farley_map: images must be weakly increasing");
        }
    }
    int m = fp.m;
    Poset star = make_star(m);
    Poset chain = make_chain(z.n);
    Relation r(star.carrier(), chain.carrier());
    Relation t(chain.carrier(), star.carrier());
    for (int i = 0; i < z.n; ++i) {
        int d = z.images[static_cast<std::size_t>(i)];
        const IndexSet& s = fp.subset[static_cast<std::size_t>(d)];
        switch (fp.kind[static_cast<std::size_t>(d)]) {
            case FarleyKind::bottom:
                for (int j = 0; j <= m; ++j) {
                    t.set(i, j);
                }
                break;
            case FarleyKind::lower_cube:
                if (s.test(0)) {
                    r.set(0, i);
                }
                for (int j = 1; j <= m; ++j) {
                    if (!s.test(j)) {
                        t.set(i, j);
                    }
                }
                break;
            case FarleyKind::upper_cube:
                r.set(0, i);
                s.for_each([&](int j) { r.set(j + 1, i); });
                break;
        }
    }
    return Merging(std::move(star), std::move(chain), std::move(r), std::move(t));
}

std::vector<FarleyChainMap> enumerate_farley_maps(const FarleyPoset& fp, int n) {
    if (n < 0) {
        throw std::invalid_argument("enumerate_farley_maps: negative chain length");
    }
    std::vector<FarleyChainMap> out;
    std::vector<int> images;
    auto recurse = [&](auto&& self, int depth, int prev) -> void {
        if (depth == n) {
            out.push_back(FarleyChainMap{n, images});
            return;
        }
        for (int d = 0; d < fp.poset.size(); ++d) {
            if (prev < 0 || fp.poset.leq(prev, d)) {
                images.push_back(d);
                self(self, depth + 1, d);
                images.pop_back();
            }
        }
    };
    recurse(recurse, 0, -1);
    return out;
}

BigInt count_farley_maps(const FarleyPoset& fp, int n) {
    if (n < 0) {
        throw std::invalid_argument("count_farley_maps: negative chain length");
    }
    if (n == 0) {
        return 1;
    }
    std::vector<BigInt> dp(static_cast<std::size_t>(fp.poset.size()), 1);
    for (int step = 1; step < n; ++step) {
        std::vector<BigInt> next(dp.size(), 0);
        for (int d = 0; d < fp.poset.size(); ++d) {
            for (int e = 0; e < fp.poset.size(); ++e) {
                if (fp.poset.leq(e, d)) {
                    next[static_cast<std::size_t>(d)] += dp[static_cast<std::size_t>(e)];
                }
            }
        }
        dp = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& v : dp) {
        total += v;
    }
    return total;
}

}  // namespace starmerge
