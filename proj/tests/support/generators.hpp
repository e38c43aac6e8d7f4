#pragma once

// Seeded random instance generators and independent oracles shared by the
// unit and acceptance suites. Oracles here are deliberately written as
// fresh nested loops over the definitions, independent of the library's
// checking code paths.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiostat/context.hpp"
#include "semiostat/equiv.hpp"
#include "semiostat/fincat.hpp"
#include "semiostat/poset.hpp"
#include "semiostat/temporal.hpp"

namespace testsupport {

using Rng = std::mt19937;
using semiostat::ContextPoset;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string element_name(const char* prefix, int i) {
    return std::string(prefix) + std::to_string(i);
}

// Random poset as a DAG on indexed elements (edges only i -> j with i < j,
// so closure is always antisymmetric). `min_edges` lets callers insist on a
// non-trivial order.
inline ContextPoset random_poset(Rng& rng, int max_elems = 6, int min_edges = 0) {
    for (;;) {
        const int n = rand_int(rng, 1, max_elems);
        std::vector<std::string> elems;
        for (int i = 0; i < n; ++i) elems.push_back(element_name("c", i));
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rand_int(rng, 0, 2) == 0) pairs.emplace_back(elems[i], elems[j]);
        if (static_cast<int>(pairs.size()) < min_edges) continue;
        return ContextPoset::from_pairs(elems, pairs);
    }
}

// Antitone family built per meaning: the contexts admitting a meaning form
// a random downset of the refinement order.
inline semiostat::context::ConstraintPresheaf random_presheaf(Rng& rng, ContextPoset poset,
                                                              int universe_size) {
    semiostat::context::ConstraintPresheaf p;
    p.poset = std::move(poset);
    for (int i = 0; i < universe_size; ++i) p.universe.push_back(element_name("m", i));
    for (const auto& c : p.poset.elements()) p.admissible[c];  // default empty
    for (const auto& m : p.universe) {
        std::set<std::string> admits;
        for (const auto& c : p.poset.elements())
            if (rand_int(rng, 0, 1) == 0)
                for (const auto& lower : p.poset.below(c)) admits.insert(lower);
        for (const auto& c : admits) p.admissible[c].insert(m);
    }
    return p;
}

// Independent antitonicity oracle.
inline bool antitone_oracle(const semiostat::context::ConstraintPresheaf& p) {
    for (const auto& a : p.poset.elements())
        for (const auto& b : p.poset.elements()) {
            if (a == b || !p.poset.leq(a, b)) continue;
            for (const auto& m : p.admissible.at(b))
                if (!p.admissible.at(a).count(m)) return false;
        }
    return true;
}

// Tree with non-decreasing level widths and surjective, mostly-injective
// restrictions (width grows by at most one per level). Keeping the
// restrictions non-degenerate this way is what makes single-point
// endomorphism mutations overwhelmingly detectable.
inline semiostat::temporal::TreeObject random_tree(Rng& rng, int max_depth = 4,
                                                   int max_width = 6) {
    semiostat::temporal::TreeObject tree;
    const int depth = rand_int(rng, 2, std::max(2, max_depth));
    int width = rand_int(rng, 2, 3);
    for (int n = 0; n <= depth; ++n) {
        std::vector<std::string> level;
        for (int i = 0; i < width; ++i)
            level.push_back(element_name("x", n * 100 + i));
        tree.levels.push_back(level);
        if (width < max_width && rand_int(rng, 0, 7) == 0) ++width;
    }
    for (std::size_t n = 1; n < tree.levels.size(); ++n) {
        const auto& up = tree.levels[n];
        const auto& down = tree.levels[n - 1];
        std::map<std::string, std::string> r;
        // First |down| elements hit every target once, the rest land anywhere.
        for (std::size_t i = 0; i < up.size(); ++i)
            r[up[i]] = i < down.size()
                           ? down[i]
                           : down[static_cast<std::size_t>(rand_int(rng, 0, int(down.size()) - 1))];
        tree.restrictions.push_back(std::move(r));
    }
    return tree;
}

// Endomorphism coherent by construction: L_n(x) is drawn from the fiber
// over L_{n-1}(r(x)), which is nonempty because restrictions are surjective.
inline semiostat::temporal::TreeEndomorphism random_coherent_endo(
    Rng& rng, const semiostat::temporal::TreeObject& tree) {
    semiostat::temporal::TreeEndomorphism endo;
    endo.base = &tree;
    endo.components.resize(tree.levels.size());
    for (const auto& x : tree.levels[0])
        endo.components[0][x] =
            tree.levels[0][static_cast<std::size_t>(rand_int(rng, 0, int(tree.levels[0].size()) - 1))];
    for (std::size_t n = 1; n < tree.levels.size(); ++n) {
        for (const auto& x : tree.levels[n]) {
            const std::string want = endo.components[n - 1].at(tree.restrictions[n - 1].at(x));
            std::vector<std::string> fiber;
            for (const auto& y : tree.levels[n])
                if (tree.restrictions[n - 1].at(y) == want) fiber.push_back(y);
            endo.components[n][x] =
                fiber[static_cast<std::size_t>(rand_int(rng, 0, int(fiber.size()) - 1))];
        }
    }
    return endo;
}

// Independent commuting-square oracle.
inline bool endo_square_oracle(const semiostat::temporal::TreeEndomorphism& endo) {
    const auto& tree = *endo.base;
    for (std::size_t n = 0; n + 1 < tree.levels.size(); ++n)
        for (const auto& x : tree.levels[n + 1]) {
            const auto& r = tree.restrictions[n];
            if (r.at(endo.components[n + 1].at(x)) != endo.components[n].at(r.at(x)))
                return false;
        }
    return true;
}

// Random quotient system: states s0..s{n-1}, random maps, random partition
// from a handful of random pairs. Compatibility is left to chance.
inline semiostat::equiv::QuotientSystem random_quotient_system(Rng& rng, int max_states = 12) {
    semiostat::equiv::QuotientSystem sys;
    const int n = rand_int(rng, 2, max_states);
    for (int i = 0; i < n; ++i) sys.states.push_back(element_name("s", i));
    for (const auto& s : sys.states) {
        sys.f[s] = sys.states[static_cast<std::size_t>(rand_int(rng, 0, n - 1))];
        sys.F[s] = sys.states[static_cast<std::size_t>(rand_int(rng, 0, n - 1))];
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    const int k = rand_int(rng, 0, n / 2 + 1);
    for (int i = 0; i < k; ++i)
        pairs.emplace_back(sys.states[static_cast<std::size_t>(rand_int(rng, 0, n - 1))],
                           sys.states[static_cast<std::size_t>(rand_int(rng, 0, n - 1))]);
    sys.partition = semiostat::equiv::make_partition(sys.states, pairs);
    return sys;
}

// Brute-force all-pairs compatibility oracle (Theorem-1 hypothesis checked
// literally on every related pair).
inline std::optional<std::pair<std::string, std::string>> compatibility_oracle(
    const semiostat::equiv::QuotientSystem& sys) {
    for (const auto& x : sys.states)
        for (const auto& y : sys.states) {
            if (x >= y || !sys.partition.same_class(x, y)) continue;
            if (!sys.partition.same_class(sys.F.at(sys.f.at(x)), sys.F.at(sys.f.at(y))))
                return std::make_pair(x, y);
        }
    return std::nullopt;
}

// All downsets of a small poset by subset enumeration.
inline std::vector<std::set<std::string>> all_downsets(const ContextPoset& poset) {
    const auto& elems = poset.elements();
    std::vector<std::set<std::string>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
        std::set<std::string> members;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask & (std::size_t{1} << i)) members.insert(elems[i]);
        bool closed = true;
        for (const auto& m : members) {
            for (const auto& lower : poset.below(m))
                if (!members.count(lower)) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) out.push_back(std::move(members));
    }
    return out;
}

// Independent category law oracle over explicit tables.
inline bool category_laws_oracle(const semiostat::fincat::FiniteCategory& c) {
    std::map<std::string, const semiostat::fincat::Morphism*> mor;
    for (const auto& m : c.morphisms) mor[m.id] = &m;
    auto comp = [&](const std::string& g, const std::string& f) -> const std::string* {
        auto it = c.composition.find({g, f});
        return it == c.composition.end() ? nullptr : &it->second;
    };
    for (const auto& g : c.morphisms)
        for (const auto& f : c.morphisms) {
            const bool composable = f.target == g.source;
            const std::string* gf = comp(g.id, f.id);
            if (composable != (gf != nullptr)) return false;
            if (!gf) continue;
            auto it = mor.find(*gf);
            if (it == mor.end()) return false;
            if (it->second->source != f.source || it->second->target != g.target) return false;
        }
    for (const auto& [x, idm] : c.identities) {
        auto it = mor.find(idm);
        if (it == mor.end() || it->second->source != x || it->second->target != x) return false;
    }
    for (const auto& f : c.morphisms) {
        const std::string* left = comp(c.identities.at(f.target), f.id);
        const std::string* right = comp(f.id, c.identities.at(f.source));
        if (!left || *left != f.id || !right || *right != f.id) return false;
    }
    for (const auto& h : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (g.target != h.source) continue;
            for (const auto& f : c.morphisms) {
                if (f.target != g.source) continue;
                const std::string* gf = comp(g.id, f.id);
                const std::string* hg = comp(h.id, g.id);
                if (!gf || !hg) return false;
                const std::string* l = comp(h.id, *gf);
                const std::string* r = comp(*hg, f.id);
                if (!l || !r || *l != *r) return false;
            }
        }
    return true;
}

}  // namespace testsupport
