#include "semiostat/adjunction.hpp"

#include <algorithm>
#include <set>

#include "semiostat/errors.hpp"

namespace semiostat::adjunction {

namespace {

// Totality + membership of a poset map; returns false after reporting.
bool check_map(const ContextPoset& dom, const ContextPoset& cod,
               const std::map<std::string, std::string>& map, const char* name,
               LawReport& report) {
    bool ok = true;
    for (const auto& x : dom.elements()) {
        auto it = map.find(x);
        if (it == map.end()) {
            report.violations.push_back({ViolationKind::Structural,
                                         {x},
                                         std::string(name) + " is not defined on '" + x + "'"});
            ok = false;
        } else if (!cod.contains(it->second)) {
            report.violations.push_back(
                {ViolationKind::Structural,
                 {x, it->second},
                 std::string(name) + " maps '" + x + "' to unknown element '" + it->second + "'"});
            ok = false;
        }
    }
    return ok;
}

void check_monotone(const ContextPoset& dom, const ContextPoset& cod,
                    const std::map<std::string, std::string>& map, const char* name,
                    LawReport& report) {
    for (const auto& [a, b] : dom.relation_pairs()) {
        if (a == b) continue;
        if (!cod.leq(map.at(a), map.at(b)))
            report.violations.push_back(
                {ViolationKind::Monotonicity,
                 {a, b},
                 std::string(name) + " is not monotone on " + a + " <= " + b});
    }
}

}  // namespace

LawReport check_galois(const GaloisConnection& gc) {
    LawReport report;
    const bool lower_ok = check_map(gc.source, gc.target, gc.lower, "F", report);
    const bool upper_ok = check_map(gc.target, gc.source, gc.upper, "G", report);
    if (!lower_ok || !upper_ok) return report;

    check_monotone(gc.source, gc.target, gc.lower, "F", report);
    check_monotone(gc.target, gc.source, gc.upper, "G", report);

    for (const auto& x : gc.source.elements()) {
        for (const auto& y : gc.target.elements()) {
            const bool left = gc.target.leq(gc.lower.at(x), y);
            const bool right = gc.source.leq(x, gc.upper.at(y));
            if (left != right)
                report.violations.push_back(
                    {ViolationKind::Adjunction,
                     {x, y},
                     "F(" + x + ") <= " + y + " is " + (left ? "true" : "false") + " but " + x +
                         " <= G(" + y + ") is " + (right ? "true" : "false")});
        }
    }
    return report;
}

LawReport check_triangles(const GaloisConnection& gc) {
    LawReport report;
    const bool lower_ok = check_map(gc.source, gc.target, gc.lower, "F", report);
    const bool upper_ok = check_map(gc.target, gc.source, gc.upper, "G", report);
    if (!lower_ok || !upper_ok) return report;

    for (const auto& x : gc.source.elements())
        if (!gc.source.leq(x, gc.upper.at(gc.lower.at(x))))
            report.violations.push_back({ViolationKind::Triangle,
                                         {x},
                                         "unit fails: " + x + " <= G(F(" + x + ")) does not hold"});
    for (const auto& y : gc.target.elements())
        if (!gc.target.leq(gc.lower.at(gc.upper.at(y)), y))
            report.violations.push_back({ViolationKind::Triangle,
                                         {y},
                                         "counit fails: F(G(" + y + ")) <= " + y + " does not hold"});
    return report;
}

Factorization factor_through_meaning(const QuotientFactorization& q) {
    std::set<std::string> codomain(q.codomain.begin(), q.codomain.end());
    if (codomain.empty())
        throw StructuralError("factorization codomain is empty");
    for (const auto& s : q.syntax_states) {
        auto it = q.interpretation.find(s);
        if (it == q.interpretation.end())
            throw StructuralError("H is not defined on state '" + s + "'");
        if (!codomain.count(it->second))
            throw StructuralError("H maps '" + s + "' outside the declared codomain");
        q.partition.representative(s);  // throws on universe mismatch
    }

    // Hypothesis: H preserves semantic equivalence.
    for (const auto& rep : q.partition.class_representatives()) {
        const auto members = q.partition.members(rep);
        for (const auto& m : members)
            if (q.interpretation.at(m) != q.interpretation.at(members.front()))
                throw HypothesisError("H is not constant on the class of '" + rep +
                                      "': H(" + members.front() + ") = " +
                                      q.interpretation.at(members.front()) + " but H(" + m +
                                      ") = " + q.interpretation.at(m) +
                                      " (witness pair: " + members.front() + ", " + m + ")");
    }

    // H̃([x]) := H(x) is forced; certify uniqueness by ruling out every
    // alternative codomain value on each class.
    Factorization out;
    for (const auto& rep : q.partition.class_representatives()) {
        const auto members = q.partition.members(rep);
        const std::string chosen = q.interpretation.at(members.front());
        out.class_map[rep] = chosen;
        for (const auto& candidate : codomain) {
            if (candidate == chosen) continue;
            const bool satisfies_all =
                std::all_of(members.begin(), members.end(), [&](const equiv::State& m) {
                    return q.interpretation.at(m) == candidate;
                });
            if (satisfies_all)
                out.unique = false;  // impossible once H is class-constant and chosen differs
            else
                ++out.alternatives_ruled_out;
        }
    }
    return out;
}

}  // namespace semiostat::adjunction
