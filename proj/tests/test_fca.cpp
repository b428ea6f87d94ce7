#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "starmerge/export.hpp"
#include "starmerge/fca.hpp"
#include "starmerge/mergings.hpp"
#include "test_helpers.hpp"

using namespace starmerge;
using namespace starmerge::testing;

TEST_SUITE_BEGIN("fca");

TEST_CASE("contraordinal scales match the 4-star and 4-chain cross-tables") {
    Poset star = make_star(4);
    FormalContext star_scale = contraordinal_scale(star);
    Relation star_expected = Relation::from_rows(star.carrier(), star.carrier(),
                                                 {".XXXX",
                                                  "..XXX",
                                                  ".X.XX",
                                                  ".XX.X",
                                                  ".XXX."});
    CHECK(star_scale.incidence() == star_expected);

    Poset chain = make_chain(4);
    FormalContext chain_scale = contraordinal_scale(chain);
    Relation chain_expected = Relation::from_rows(chain.carrier(), chain.carrier(),
                                                  {".XXX",
                                                   "..XX",
                                                   "...X",
                                                   "...."});
    CHECK(chain_scale.incidence() == chain_expected);

    // antichain: everything except the diagonal
    Poset anti = make_antichain(3);
    CHECK(contraordinal_scale(anti).incidence() ==
          Relation::identity(anti.carrier()).complemented());
}

TEST_CASE("derivation operators on the 4-star scale") {
    FormalContext scale = contraordinal_scale(make_star(4));

    CHECK(derive(scale, Side::objects, IndexSet(5)) == IndexSet::full(5));
    // row s1 of the scale
    CHECK(derive(scale, Side::objects, std::vector<int>{1}) == IndexSet::of(5, {2, 3, 4}));
    CHECK_THROWS_AS(derive(scale, Side::objects, std::vector<int>{7}), std::out_of_range);
}

TEST_CASE("double derivation adjoins s0 to every nonempty arm subset") {
    for (int m = 1; m <= 5; ++m) {
        FormalContext scale = contraordinal_scale(make_star(m));
        int size = m + 1;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            IndexSet arms = subset_from_mask(mask << 1, size);  // arm indices 1..m
            IndexSet closed = scale.object_closure(arms);
            IndexSet expected = arms;
            expected.set(0);
            CHECK(closed == expected);
        }
    }
}

TEST_CASE("closure laws hold exhaustively for small contexts") {
    std::vector<FormalContext> contexts;
    contexts.push_back(contraordinal_scale(make_star(4)));
    contexts.push_back(contraordinal_scale(make_chain(4)));
    Rng rng(707);
    contexts.emplace_back(numbered_ground_set('g', 6), numbered_ground_set('m', 4),
                          random_relation(rng, numbered_ground_set('g', 6),
                                          numbered_ground_set('m', 4)));
    for (const auto& ctx : contexts) {
        int n = ctx.objects().size();
        std::vector<IndexSet> subsets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            subsets.push_back(subset_from_mask(mask, n));
        }
        for (const auto& a : subsets) {
            IndexSet closed = ctx.object_closure(a);
            CHECK(a.is_subset_of(closed));
            CHECK(ctx.derive_objects(a) == ctx.derive_objects(closed));  // A' == A'''
            for (const auto& b : subsets) {
                if (a.is_subset_of(b)) {
                    CHECK(ctx.derive_objects(b).is_subset_of(ctx.derive_objects(a)));
                }
            }
        }
    }
}

TEST_CASE("concept counts of the standard scales") {
    int pow2 = 1;
    for (int m = 0; m <= 6; ++m) {
        CHECK(enumerate_concepts(contraordinal_scale(make_star(m))).size() == pow2 + 1);
        pow2 *= 2;
    }
    for (int n = 0; n <= 6; ++n) {
        ConceptLattice lat = enumerate_concepts(contraordinal_scale(make_chain(n)));
        REQUIRE(lat.size() == n + 1);
        // concepts are ({c1..c_{i-1}}, {c_i..c_n}) and sorted by extent size
        for (int i = 0; i < lat.size(); ++i) {
            IndexSet extent(n);
            IndexSet intent(n);
            for (int j = 0; j < i; ++j) {
                extent.set(j);
            }
            for (int j = i; j < n; ++j) {
                intent.set(j);
            }
            CHECK(lat.at(i).extent == extent);
            CHECK(lat.at(i).intent == intent);
        }
    }

    GroundSet none;
    FormalContext trivial(none, none, Relation(none, none));
    CHECK(enumerate_concepts(trivial).size() == 1);
}

TEST_CASE("concept extents and intents close the derivations; lattice ops stay inside") {
    for (const FormalContext& ctx :
         {contraordinal_scale(make_star(4)), contraordinal_scale(make_chain(5))}) {
        ConceptLattice lat = enumerate_concepts(ctx);
        std::vector<IndexSet> extents = extents_by_enumeration(ctx);
        CHECK(extents.size() == static_cast<std::size_t>(lat.size()));
        for (int i = 0; i < lat.size(); ++i) {
            CHECK(ctx.derive_objects(lat.at(i).extent) == lat.at(i).intent);
            CHECK(ctx.derive_attributes(lat.at(i).intent) == lat.at(i).extent);
            CHECK(contains_set(extents, lat.at(i).extent));
            for (int j = 0; j < lat.size(); ++j) {
                int mt = lat.meet(i, j);
                int jn = lat.join(i, j);
                CHECK(lat.at(mt).extent == (lat.at(i).extent & lat.at(j).extent));
                CHECK(lat.leq(mt, i));
                CHECK(lat.leq(i, jn));
                CHECK(lat.leq(j, jn));
            }
        }
        // gamma and mu agree with their definitions
        for (int g = 0; g < ctx.objects().size(); ++g) {
            IndexSet single(ctx.objects().size());
            single.set(g);
            CHECK(lat.at(lat.object_concept(g)).extent == ctx.object_closure(single));
            CHECK(lat.at(lat.object_concept(g)).intent == ctx.derive_objects(single));
        }
        for (int m = 0; m < ctx.attributes().size(); ++m) {
            IndexSet single(ctx.attributes().size());
            single.set(m);
            CHECK(lat.at(lat.attribute_concept(m)).extent == ctx.derive_attributes(single));
        }
    }
}

TEST_CASE("bond checks against brute-force intent/extent lists") {
    FormalContext k1 = contraordinal_scale(make_antichain(3));
    FormalContext k2 = contraordinal_scale(make_chain(2));
    std::vector<IndexSet> extents1 = extents_by_enumeration(k1);
    std::vector<IndexSet> intents2 = intents_by_enumeration(k2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 6); ++mask) {
        Relation r = relation_from_mask(mask, k1.objects(), k2.attributes());
        bool oracle = true;
        for (int g = 0; g < r.rows() && oracle; ++g) {
            oracle = contains_set(intents2, r.row(g));
        }
        for (int m = 0; m < r.cols() && oracle; ++m) {
            oracle = contains_set(extents1, r.column(m));
        }
        REQUIRE(is_bond(r, k1, k2) == oracle);
    }
}

TEST_CASE("empty relation is a bond only when the empty sets are closed") {
    FormalContext star_scale = contraordinal_scale(make_star(3));
    FormalContext chain_scale = contraordinal_scale(make_chain(2));
    CHECK(is_bond(Relation(star_scale.objects(), chain_scale.attributes()), star_scale,
                  chain_scale));

    // in a full context the empty attribute set is not an intent
    GroundSet g = numbered_ground_set('g', 2);
    GroundSet m = numbered_ground_set('m', 2);
    FormalContext full_ctx(g, m, Relation::full(g, m));
    CHECK_FALSE(is_bond(Relation(star_scale.objects(), m), star_scale, full_ctx));
}

TEST_CASE("the 4-star/4-chain T table is a bond; the full relation too") {
    Poset star = make_star(4);
    Poset chain = make_chain(4);
    FormalContext star_scale = contraordinal_scale(star);
    FormalContext chain_scale = contraordinal_scale(chain);

    Relation t = Relation::from_label_pairs(chain.carrier(), star.carrier(),
                                            {{"c1", "s0"}, {"c1", "s1"}, {"c1", "s2"},
                                             {"c1", "s3"}, {"c1", "s4"}});
    CHECK(is_bond(t, chain_scale, star_scale));

    Relation full = Relation::full(star.carrier(), chain.carrier());
    CHECK(is_bond(full, star_scale, chain_scale));
    // cross-check via brute-force listings
    CHECK(contains_set(intents_by_enumeration(chain_scale), full.row(0)));
    CHECK(contains_set(extents_by_enumeration(star_scale), full.column(0)));
}

TEST_CASE("bond counts from a chain scale to an antichain scale are (len+1)^m") {
    for (int len = 0; len <= 3; ++len) {
        for (int m = 0; m <= 3; ++m) {
            FormalContext from = contraordinal_scale(make_chain(len));
            FormalContext to = contraordinal_scale(make_antichain(m));
            int count = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (len * m)); ++mask) {
                if (is_bond(relation_from_mask(mask, from.objects(), to.attributes()), from, to)) {
                    ++count;
                }
            }
            int expected = 1;
            for (int i = 0; i < m; ++i) {
                expected *= len + 1;
            }
            CHECK(count == expected);
            CHECK(enumerate_bonds(from, to).size() == static_cast<std::size_t>(expected));
        }
    }
}

TEST_CASE("dual bond basics") {
    FormalContext c2 = contraordinal_scale(make_chain(2));
    GroundSet other({"d1", "d2", "d3"});
    FormalContext c3 = contraordinal_scale(Poset(
        other, Relation::from_rows(other, other, {"XXX", ".XX", "..X"})));
    CHECK(is_dual_bond(Relation(c2.objects(), c3.objects()), c2, c3));

    // a row that is not an extent of the star scale breaks the check
    FormalContext star_scale = contraordinal_scale(make_star(3));
    Relation bad(c2.objects(), star_scale.objects());
    bad.set(0, 1);  // row {s1} lacks s0, so it is not an extent
    CHECK_FALSE(is_dual_bond(bad, c2, star_scale));
    Relation good(c2.objects(), star_scale.objects());
    good.set(0, 0);
    good.set(0, 1);
    CHECK(is_dual_bond(good, c2, star_scale));
}

TEST_CASE("galois connections synthesized from every dual bond satisfy the laws") {
    std::vector<std::pair<FormalContext, FormalContext>> pairs;
    pairs.emplace_back(contraordinal_scale(make_chain(2)), contraordinal_scale(make_star(2)));
    pairs.emplace_back(contraordinal_scale(make_chain(3)), contraordinal_scale(make_chain(2)));
    pairs.emplace_back(contraordinal_scale(make_antichain(2)),
                       contraordinal_scale(make_antichain(2)));
    for (const auto& [k1, k2] : pairs) {
        std::vector<Relation> bonds = enumerate_dual_bonds(k1, k2);
        CHECK(!bonds.empty());
        for (const Relation& r : bonds) {
            GaloisConnection gc = galois_from_dual_bond(r, k1, k2);
            CHECK(satisfies_galois_laws(gc));
            CHECK(induced_dual_bond(gc) == r);
            // the two descriptions of the induced bond agree
            Relation alt(k1.objects(), k2.objects());
            for (int g = 0; g < k1.objects().size(); ++g) {
                for (int h = 0; h < k2.objects().size(); ++h) {
                    if (gc.right.leq(gc.right.object_concept(h),
                                     gc.phi[static_cast<std::size_t>(
                                         gc.left.object_concept(g))])) {
                        alt.set(g, h);
                    }
                }
            }
            CHECK(alt == r);
        }
    }
}

TEST_CASE("extreme dual bonds") {
    FormalContext chain_scale = contraordinal_scale(make_chain(2));
    FormalContext star_scale = contraordinal_scale(make_star(2));

    Relation empty(chain_scale.objects(), star_scale.objects());
    GaloisConnection gc_empty = galois_from_dual_bond(empty, chain_scale, star_scale);
    // bottom maps to the top of the other side, everything else to the bottom
    CHECK(gc_empty.phi[static_cast<std::size_t>(gc_empty.left.bottom())] ==
          gc_empty.right.top());
    for (int i = 0; i < gc_empty.left.size(); ++i) {
        if (i != gc_empty.left.bottom()) {
            CHECK(gc_empty.phi[static_cast<std::size_t>(i)] == gc_empty.right.bottom());
        }
    }

    Relation full = Relation::full(chain_scale.objects(), star_scale.objects());
    REQUIRE(is_dual_bond(full, chain_scale, star_scale));
    GaloisConnection gc_full = galois_from_dual_bond(full, chain_scale, star_scale);
    for (int i = 0; i < gc_full.left.size(); ++i) {
        CHECK(gc_full.phi[static_cast<std::size_t>(i)] == gc_full.right.top());
    }

    CHECK_THROWS_AS(galois_from_dual_bond(
                        [&] {
                            Relation bad(chain_scale.objects(), star_scale.objects());
                            bad.set(0, 1);
                            return bad;
                        }(),
                        chain_scale, star_scale),
                    std::invalid_argument);
}

TEST_CASE("dual bonds from proper (empty, T) mergings") {
    Poset star = make_star(3);
    Poset chain = make_chain(1);
    FormalContext star_scale = contraordinal_scale(star);
    FormalContext chain_scale = contraordinal_scale(chain);

    // t = C x S: the all-empty dual bond
    Relation t_full = Relation::full(chain.carrier(), star.carrier());
    CHECK(dual_bond_from_proper_T(t_full, star, chain).none());

    // t = empty: every row of the dual bond is all of S
    Relation t_empty(chain.carrier(), star.carrier());
    CHECK(dual_bond_from_proper_T(t_empty, star, chain) ==
          Relation::full(chain.carrier(), star.carrier()));

    // row {s1,s2,s3} complements to {s0}
    Relation t_arms = Relation::from_label_pairs(chain.carrier(), star.carrier(),
                                                 {{"c1", "s1"}, {"c1", "s2"}, {"c1", "s3"}});
    Relation hat = dual_bond_from_proper_T(t_arms, star, chain);
    CHECK(hat.row(0) == IndexSet::of(4, {0}));
    CHECK(is_dual_bond(hat, chain_scale, star_scale));

    // non-merging input is rejected: row {s0} is not an intent of the star scale
    Relation t_bad(chain.carrier(), star.carrier());
    t_bad.set(0, 0);
    CHECK_THROWS_AS(dual_bond_from_proper_T(t_bad, star, chain), std::invalid_argument);
}

TEST_CASE("the hat map is a bijection onto the dual bonds (reversal is forced)") {
    for (auto [m, n] : {std::pair{3, 1}, {2, 2}, {1, 3}}) {
        Poset star = make_star(m);
        Poset chain = make_chain(n);
        FormalContext star_scale = contraordinal_scale(star);
        FormalContext chain_scale = contraordinal_scale(chain);
        MergingLattice sc = enumerate_proper_mergings(star, chain);
        std::vector<Relation> images;
        for (int i = 0; i < sc.size(); ++i) {
            if (!sc.at(i).r().none()) {
                continue;
            }
            Relation hat = dual_bond_from_proper_T(sc.at(i).t(), star, chain);
            CHECK(is_dual_bond(hat, chain_scale, star_scale));
            for (const Relation& seen : images) {
                CHECK(seen != hat);
            }
            images.push_back(std::move(hat));
        }
        CHECK(images.size() == enumerate_dual_bonds(chain_scale, star_scale).size());
    }
}

TEST_CASE("galois connection counts match the closed form") {
    CHECK(count_galois_connections(3, 1) == 9);
    CHECK(count_galois_connections(0, 0) == 1);
    CHECK(count_galois_connections(2, 2) == 14);
    CHECK_THROWS_AS(count_galois_connections(5, 5), SizeGuardError);
}

TEST_CASE("balloons") {
    ConceptLattice b4 = build_balloon(4);
    REQUIRE(b4.size() == 17);
    // bottom is doubled: exactly one cover above the bottom element
    auto covers = cover_pairs(b4.order());
    int bottom_covers = 0;
    for (auto [a, b] : covers) {
        if (a == b4.bottom()) {
            ++bottom_covers;
        }
    }
    CHECK(bottom_covers == 1);
    // above the doubled bottom sits the Boolean lattice on the arms
    int with_s0 = 0;
    for (int i = 0; i < b4.size(); ++i) {
        if (!b4.at(i).extent.empty() && b4.at(i).extent.test(0)) {
            ++with_s0;
        }
    }
    CHECK(with_s0 == 16);

    // the drawn 4-balloon: covers of the 4-cube plus the doubled bottom
    CHECK(cover_pairs(b4.order()).size() == 33);

    CHECK(build_balloon(0).size() == 2);
    ConceptLattice b1 = build_balloon(1);
    REQUIRE(b1.size() == 3);
    CHECK(b1.leq(0, 1));
    CHECK(b1.leq(1, 2));
}

TEST_CASE("concept lattice exports") {
    ConceptLattice lat = enumerate_concepts(contraordinal_scale(make_chain(3)));
    // a chain of k concepts has k-1 covering pairs
    CHECK(cover_pairs(lat.order()).size() == 3);

    std::ostringstream dot;
    write_concept_lattice_dot(dot, lat);
    CHECK(dot.str().find("digraph") != std::string::npos);
    CHECK(dot.str().find("n3") != std::string::npos);

    auto doc = nlohmann::json::parse(to_json(lat));
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["concepts"].size() == 4);
    CHECK(doc["concepts"][0]["extent"].empty());
    CHECK(doc["concepts"][0]["intent"].size() == 3);
    CHECK(doc["concepts"][3]["extent"] == nlohmann::json({"c1", "c2", "c3"}));
}

TEST_CASE("context io wrappers round-trip") {
    FormalContext scale = contraordinal_scale(make_star(2));
    std::ostringstream out;
    write_context(out, scale);
    std::istringstream in(out.str());
    FormalContext back = read_context(in);
    CHECK(back == scale);
}

TEST_SUITE_END();
