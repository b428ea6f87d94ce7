#pragma once

#include <cstdint>
#include <vector>

#include "starmerge/fca.hpp"
#include "starmerge/relations.hpp"

namespace starmerge::testing {

// Deterministic generator for property-style tests (xorshift64star).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    int below(int bound) { return bound == 0 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

inline GroundSet numbered_ground_set(char prefix, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::string(1, prefix) + std::to_string(i));
    }
    return GroundSet(std::move(labels));
}

inline Relation random_relation(Rng& rng, const GroundSet& d, const GroundSet& c) {
    Relation r(d, c);
    for (int i = 0; i < d.size(); ++i) {
        for (int j = 0; j < c.size(); ++j) {
            if (rng.coin()) {
                r.set(i, j);
            }
        }
    }
    return r;
}

// Every relation over tiny ground sets, by cell bitmask.
inline Relation relation_from_mask(std::uint64_t mask, const GroundSet& d, const GroundSet& c) {
    Relation r(d, c);
    int bit = 0;
    for (int i = 0; i < d.size(); ++i) {
        for (int j = 0; j < c.size(); ++j, ++bit) {
            if ((mask >> bit) & 1) {
                r.set(i, j);
            }
        }
    }
    return r;
}

inline IndexSet subset_from_mask(std::uint64_t mask, int universe) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) {
        if ((mask >> i) & 1) {
            s.set(i);
        }
    }
    return s;
}

// Brute-force extent listing: derive every attribute subset. Independent
// of both enumerate_concepts and the closure shortcut.
inline std::vector<IndexSet> extents_by_enumeration(const FormalContext& ctx) {
    std::vector<IndexSet> out;
    int k = ctx.attributes().size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        IndexSet ext = ctx.derive_attributes(subset_from_mask(mask, k));
        bool seen = false;
        for (const auto& e : out) {
            if (e == ext) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.push_back(std::move(ext));
        }
    }
    return out;
}

inline std::vector<IndexSet> intents_by_enumeration(const FormalContext& ctx) {
    std::vector<IndexSet> out;
    int k = ctx.objects().size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        IndexSet in = ctx.derive_objects(subset_from_mask(mask, k));
        bool seen = false;
        for (const auto& e : out) {
            if (e == in) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.push_back(std::move(in));
        }
    }
    return out;
}

inline bool contains_set(const std::vector<IndexSet>& sets, const IndexSet& s) {
    for (const auto& e : sets) {
        if (e == s) {
            return true;
        }
    }
    return false;
}

}  // namespace starmerge::testing
