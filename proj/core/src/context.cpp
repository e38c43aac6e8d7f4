#include "semiostat/context.hpp"

#include <algorithm>

#include "semiostat/errors.hpp"

namespace semiostat::context {

namespace {

std::set<Meaning> universe_set(const ConstraintPresheaf& p) {
    std::set<Meaning> u(p.universe.begin(), p.universe.end());
    if (u.size() != p.universe.size())
        throw StructuralError("duplicate meanings in presheaf universe");
    return u;
}

const std::set<Meaning>& stage(const ConstraintPresheaf& p, const Context& c) {
    auto it = p.admissible.find(c);
    if (it == p.admissible.end())
        throw StructuralError("no admissible set declared for context '" + c + "'");
    return it->second;
}

}  // namespace

LawReport check_presheaf(const ConstraintPresheaf& p) {
    const auto universe = universe_set(p);
    LawReport report;

    for (const auto& c : p.poset.elements()) {
        auto it = p.admissible.find(c);
        if (it == p.admissible.end()) {
            report.violations.push_back({ViolationKind::Structural,
                                         {c},
                                         "context '" + c + "' has no admissible set"});
            continue;
        }
        for (const auto& m : it->second)
            if (!universe.count(m))
                report.violations.push_back(
                    {ViolationKind::Structural,
                     {c, m},
                     "admissible(" + c + ") references unknown meaning '" + m + "'"});
    }
    for (const auto& [c, _] : p.admissible)
        if (!p.poset.contains(c))
            report.violations.push_back({ViolationKind::Structural,
                                         {c},
                                         "admissible set declared for unknown context '" + c + "'"});
    if (!report.passed()) return report;

    // Antitonicity over all refinement pairs; this is the entire law
    // content, since inclusion restrictions satisfy the identity and
    // composition laws by construction.
    for (const auto& [a, b] : p.poset.relation_pairs()) {
        if (a == b) continue;
        const auto& coarse = stage(p, a);
        const auto& fine = stage(p, b);
        for (const auto& m : fine)
            if (!coarse.count(m))
                report.violations.push_back(
                    {ViolationKind::Antitone,
                     {a, b, m},
                     "'" + m + "' is admissible at refinement '" + b +
                         "' but not at coarser '" + a + "'"});
    }
    report.notes.push_back(
        "restriction maps are inclusions; identity and composition laws hold by construction");
    return report;
}

RefineResult refine(const ConstraintPresheaf& p, const Context& c, const Meaning& x) {
    const auto universe = universe_set(p);
    if (!universe.count(x))
        throw StructuralError("unknown meaning '" + x + "'");
    if (!p.poset.contains(c))
        throw StructuralError("unknown context '" + c + "'");

    if (stage(p, c).count(x)) return {true, std::nullopt};

    // Exclusion is upward-closed under refinement, so the "first" exclusion
    // point is a minimal excluded context at or below c. Candidates are
    // scanned in sorted order for determinism.
    std::vector<Context> excluded;
    for (const auto& below : p.poset.below(c))
        if (!stage(p, below).count(x)) excluded.push_back(below);
    std::sort(excluded.begin(), excluded.end());

    for (const auto& cand : excluded) {
        bool minimal = true;
        for (const auto& other : excluded)
            if (other != cand && p.poset.leq(other, cand)) {
                minimal = false;
                break;
            }
        if (minimal) return {false, cand};
    }
    return {false, c};  // unreachable for well-formed data
}

std::set<Meaning> global_sections(const ConstraintPresheaf& p) {
    std::set<Meaning> out = universe_set(p);
    for (const auto& c : p.poset.elements()) {
        const auto& adm = stage(p, c);
        std::set<Meaning> kept;
        for (const auto& m : out)
            if (adm.count(m)) kept.insert(m);
        out = std::move(kept);
    }
    return out;
}

StageTruth stage_truth(const ConstraintPresheaf& p, const std::set<Meaning>& proposition,
                       const Context& c) {
    if (!p.poset.contains(c))
        throw StructuralError("unknown context '" + c + "'");
    const auto& adm = stage(p, c);
    if (adm.empty()) return StageTruth::Undetermined;
    bool all_in = true;
    bool none_in = true;
    for (const auto& m : adm) {
        if (proposition.count(m))
            none_in = false;
        else
            all_in = false;
    }
    if (all_in) return StageTruth::Validated;
    if (none_in) return StageTruth::Refuted;
    return StageTruth::Undetermined;
}

Downset::Downset(ContextPoset poset, std::set<std::string> members)
    : poset_(std::move(poset)), members_(std::move(members)) {
    for (const auto& m : members_)
        if (!poset_.contains(m))
            throw StructuralError("downset member '" + m + "' is not in the poset");
    if (!is_downclosed())
        throw StructuralError("member set is not closed downward");
}

Downset Downset::unchecked(ContextPoset poset, std::set<std::string> members) {
    Downset d;
    d.poset_ = std::move(poset);
    d.members_ = std::move(members);
    return d;
}

bool Downset::is_downclosed() const {
    for (const auto& m : members_)
        for (const auto& lower : poset_.below(m))
            if (!members_.count(lower)) return false;
    return true;
}

bool Downset::subset_of(const Downset& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

Downset truth_downset(const ConstraintPresheaf& p, const std::set<Meaning>& proposition) {
    std::set<std::string> validated;
    for (const auto& c : p.poset.elements())
        if (stage_truth(p, proposition, c) == StageTruth::Validated) validated.insert(c);
    return Downset::unchecked(p.poset.opposite(), std::move(validated));
}

HeytingAlgebra::HeytingAlgebra(ContextPoset poset) : poset_(std::move(poset)) {}

void HeytingAlgebra::require_member(const Downset& d) const {
    if (!(d.poset() == poset_))
        throw StructuralError("downset belongs to a different poset");
    if (!d.is_downclosed())
        throw StructuralError("argument is not a downset");
}

Downset HeytingAlgebra::top() const {
    std::set<std::string> all(poset_.elements().begin(), poset_.elements().end());
    return Downset::unchecked(poset_, std::move(all));
}

Downset HeytingAlgebra::bottom() const { return Downset::unchecked(poset_, {}); }

Downset HeytingAlgebra::meet(const Downset& a, const Downset& b) const {
    require_member(a);
    require_member(b);
    std::set<std::string> out;
    for (const auto& m : a.members())
        if (b.contains(m)) out.insert(m);
    return Downset::unchecked(poset_, std::move(out));
}

Downset HeytingAlgebra::join(const Downset& a, const Downset& b) const {
    require_member(a);
    require_member(b);
    std::set<std::string> out = a.members();
    out.insert(b.members().begin(), b.members().end());
    return Downset::unchecked(poset_, std::move(out));
}

Downset HeytingAlgebra::implies(const Downset& a, const Downset& b) const {
    require_member(a);
    require_member(b);
    // c ∈ (a → b) iff every c' <= c lying in a lies in b; this is the
    // largest downset whose meet with a is below b.
    std::set<std::string> out;
    for (const auto& c : poset_.elements()) {
        bool ok = true;
        for (const auto& lower : poset_.below(c))
            if (a.contains(lower) && !b.contains(lower)) {
                ok = false;
                break;
            }
        if (ok) out.insert(c);
    }
    return Downset::unchecked(poset_, std::move(out));
}

}  // namespace semiostat::context
