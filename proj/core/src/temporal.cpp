#include "semiostat/temporal.hpp"

#include <algorithm>
#include <set>

#include "semiostat/errors.hpp"

namespace semiostat::temporal {

namespace {

std::vector<std::set<Element>> level_sets(const TreeObject& t) {
    std::vector<std::set<Element>> out;
    for (std::size_t n = 0; n < t.levels.size(); ++n) {
        std::set<Element> s(t.levels[n].begin(), t.levels[n].end());
        if (s.size() != t.levels[n].size())
            throw StructuralError("duplicate elements in level " + std::to_string(n));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

Element TreeObject::restrict(std::size_t from, std::size_t to, const Element& x) const {
    if (from >= levels.size() || to > from)
        throw StructuralError("bad restriction levels");
    Element current = x;
    for (std::size_t n = from; n > to; --n) {
        auto it = restrictions[n - 1].find(current);
        if (it == restrictions[n - 1].end())
            throw StructuralError("restriction at level " + std::to_string(n) +
                                  " is not defined on '" + current + "'");
        current = it->second;
    }
    return current;
}

LawReport check_tree(const TreeObject& t) {
    if (t.levels.empty())
        throw StructuralError("tree has no levels");
    if (t.restrictions.size() + 1 != t.levels.size())
        throw StructuralError("tree needs exactly one restriction map per adjacent level pair");
    const auto sets = level_sets(t);

    LawReport report;
    for (std::size_t n = 1; n < t.levels.size(); ++n) {
        const auto& map = t.restrictions[n - 1];
        for (const auto& x : t.levels[n]) {
            auto it = map.find(x);
            if (it == map.end()) {
                report.violations.push_back(
                    {ViolationKind::Structural,
                     {std::to_string(n), x},
                     "restriction r_{" + std::to_string(n) + "," + std::to_string(n - 1) +
                         "} is not defined on '" + x + "'"});
            } else if (!sets[n - 1].count(it->second)) {
                report.violations.push_back(
                    {ViolationKind::Structural,
                     {std::to_string(n), x, it->second},
                     "restriction of '" + x + "' targets unknown element '" + it->second + "'"});
            }
        }
        for (const auto& [x, _] : map)
            if (!sets[n].count(x))
                report.violations.push_back({ViolationKind::Structural,
                                             {std::to_string(n), x},
                                             "restriction defined on unknown element '" + x + "'"});
    }
    report.notes.push_back(
        "only step maps are stored; r_{n,n} = id and r_{m,k} ∘ r_{n,m} = r_{n,k} hold by construction");
    return report;
}

LawReport check_endomorphism(const TreeEndomorphism& l) {
    if (!l.base) throw StructuralError("endomorphism has no base tree");
    const TreeObject& t = *l.base;
    if (!check_tree(t).passed())
        throw ContractError("check_endomorphism requires the base tree to pass check_tree");
    if (l.components.size() != t.levels.size())
        throw StructuralError("endomorphism needs one component per level");
    const auto sets = level_sets(t);

    LawReport report;
    bool total = true;
    for (std::size_t n = 0; n < t.levels.size(); ++n) {
        for (const auto& x : t.levels[n]) {
            auto it = l.components[n].find(x);
            if (it == l.components[n].end()) {
                report.violations.push_back({ViolationKind::Structural,
                                             {std::to_string(n), x},
                                             "L_" + std::to_string(n) + " is not defined on '" + x + "'"});
                total = false;
            } else if (!sets[n].count(it->second)) {
                report.violations.push_back(
                    {ViolationKind::Structural,
                     {std::to_string(n), x, it->second},
                     "L_" + std::to_string(n) + " maps '" + x + "' outside its level"});
                total = false;
            }
        }
    }
    if (!total) return report;

    for (std::size_t n = 0; n + 1 < t.levels.size(); ++n) {
        const auto& r = t.restrictions[n];
        for (const auto& x : t.levels[n + 1]) {
            const Element down_then_l = l.components[n].at(r.at(x));
            const Element l_then_down = r.at(l.components[n + 1].at(x));
            if (down_then_l != l_then_down)
                report.violations.push_back(
                    {ViolationKind::Square,
                     {std::to_string(n), x},
                     "square at (n=" + std::to_string(n) + ", x=" + x + "): r∘L = " +
                         l_then_down + " but L∘r = " + down_then_l});
        }
    }
    return report;
}

FixedElements fixed_elements(const TreeEndomorphism& l) {
    if (!l.base) throw StructuralError("endomorphism has no base tree");
    if (!check_endomorphism(l).passed())
        throw ContractError("fixed_elements requires a coherent endomorphism");
    const TreeObject& t = *l.base;

    FixedElements out;
    out.per_level.resize(t.levels.size());
    for (std::size_t n = 0; n < t.levels.size(); ++n) {
        for (const auto& x : t.levels[n])
            if (l.components[n].at(x) == x) out.per_level[n].push_back(x);
        std::sort(out.per_level[n].begin(), out.per_level[n].end());
    }

    // A full-depth chain is determined by its top element, since the
    // restrictions are functions.
    const std::size_t top = t.levels.size() - 1;
    for (const auto& x : out.per_level[top]) {
        std::vector<Element> chain(t.levels.size());
        chain[top] = x;
        bool coherent = true;
        for (std::size_t n = top; n > 0; --n) {
            chain[n - 1] = t.restrictions[n - 1].at(chain[n]);
            if (l.components[n - 1].at(chain[n - 1]) != chain[n - 1]) {
                coherent = false;
                break;
            }
        }
        if (coherent) out.chains.push_back(chain);
    }
    std::sort(out.chains.begin(), out.chains.end());
    return out;
}

TreeObject tree_from_stages(const std::vector<std::vector<Element>>& stages) {
    if (stages.empty()) throw StructuralError("stage chain is empty");
    TreeObject tree;
    tree.levels = stages;
    const auto sets = level_sets(tree);
    for (std::size_t n = 1; n < stages.size(); ++n) {
        std::map<Element, Element> r;
        for (const auto& x : stages[n]) {
            if (!sets[n - 1].count(x))
                throw StructuralError("stage " + std::to_string(n) + " element '" + x +
                                      "' is missing from stage " + std::to_string(n - 1));
            r[x] = x;
        }
        tree.restrictions.push_back(std::move(r));
    }
    return tree;
}

}  // namespace semiostat::temporal
