#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "semiostat/law_report.hpp"

namespace semiostat::temporal {

using Element = std::string;

/// A finite truncation of a tree object: level sets X(0..N) and single-step
/// restriction maps r_{n,n-1}: X(n) -> X(n-1). Composite restrictions are
/// derived from the steps, so r_{n,n} = id and r_{m,k} ∘ r_{n,m} = r_{n,k}
/// hold by construction; what remains checkable is totality.
struct TreeObject {
    std::vector<std::vector<Element>> levels;            // levels[n] = X(n), size N+1
    std::vector<std::map<Element, Element>> restrictions;  // restrictions[n-1]: X(n) -> X(n-1), size N

    std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }

    /// Derived composite restriction from level `from` down to level `to`.
    /// Throws StructuralError on missing entries or bad levels.
    Element restrict(std::size_t from, std::size_t to, const Element& x) const;
};

/// A per-level update map L_n: X(n) -> X(n) required to commute with the
/// restrictions: r_{n+1,n} ∘ L_{n+1} = L_n ∘ r_{n+1,n}.
struct TreeEndomorphism {
    const TreeObject* base = nullptr;
    std::vector<std::map<Element, Element>> components;  // components[n]: X(n) -> X(n), size N+1
};

/// Verifies per-level totality of the restriction maps (missing or dangling
/// entries are structural violations) and notes that the composite laws are
/// definitionally satisfied. Throws StructuralError on duplicate elements
/// within a level or mismatched table sizes.
LawReport check_tree(const TreeObject& t);

/// Exhaustive commuting-square check: one violation per (n, x ∈ X(n+1))
/// with r(L_{n+1}(x)) != L_n(r(x)). Component totality is checked first.
/// Throws ContractError if the base tree fails check_tree.
LawReport check_endomorphism(const TreeEndomorphism& l);

/// Per-level fixed sets of L plus all coherent fixed families
/// (x_0, ..., x_N) with L_n(x_n) = x_n and r(x_{n+1}) = x_n. An empty
/// result is valid (e.g. a swap has no fixed points).
struct FixedElements {
    std::vector<std::vector<Element>> per_level;   // fixed elements of each level, sorted
    std::vector<std::vector<Element>> chains;      // each chain indexed by level 0..N
};

FixedElements fixed_elements(const TreeEndomorphism& l);

/// Unfolds a deterministic trajectory s_0, s_1 = step(s_0), ... into a tree
/// of the given depth: X(n) collects the stage-n views label(n, s_t) of the
/// states reached by stage n (t <= n), and each element restricts to the
/// stage-(n-1) view of its earliest predecessor. Coherence then holds by
/// construction (check_tree passes).
template <typename State>
TreeObject unfold(const State& seed, const std::function<State(const State&)>& step,
                  std::size_t depth,
                  const std::function<Element(std::size_t, const State&)>& label) {
    std::vector<State> trajectory{seed};
    for (std::size_t t = 0; t < depth; ++t) trajectory.push_back(step(trajectory.back()));

    TreeObject tree;
    tree.levels.resize(depth + 1);
    if (depth > 0) tree.restrictions.resize(depth);

    // earliest[n][element] = first t <= n whose stage-n view is element
    std::vector<std::map<Element, std::size_t>> earliest(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t t = 0; t <= n; ++t) {
            Element e = label(n, trajectory[t]);
            if (earliest[n].emplace(e, t).second) tree.levels[n].push_back(e);
        }
    }
    for (std::size_t n = 1; n <= depth; ++n) {
        for (const auto& e : tree.levels[n]) {
            const std::size_t t = earliest[n].at(e);
            const std::size_t pred = t < n ? t : n - 1;
            tree.restrictions[n - 1][e] = label(n - 1, trajectory[pred]);
        }
    }
    return tree;
}

/// Builds a tree from a shrinking chain of stage sets (stages[n+1] must be a
/// subset of stages[n]); restrictions are the forced inclusions. Used for
/// context-staged interpretation sets. Throws StructuralError when the
/// subset property fails.
TreeObject tree_from_stages(const std::vector<std::vector<Element>>& stages);

}  // namespace semiostat::temporal
