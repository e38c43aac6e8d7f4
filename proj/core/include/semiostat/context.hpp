#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiostat/law_report.hpp"
#include "semiostat/poset.hpp"

namespace semiostat::context {

using Meaning = std::string;
using Context = std::string;

/// Admissible-interpretation sets over a context poset. Restriction maps are
/// the inclusions forced by refinement, so the presheaf data reduces to an
/// antitone family: c <= c' implies admissible(c') ⊆ admissible(c).
struct ConstraintPresheaf {
    ContextPoset poset;
    std::vector<Meaning> universe;
    std::map<Context, std::set<Meaning>> admissible;
};

/// Reports every refinement pair violating antitonicity, plus a note that
/// composition/identity laws hold by construction for inclusion
/// restrictions. Unknown meanings or contexts are structural violations.
LawReport check_presheaf(const ConstraintPresheaf& p);

/// Either the meaning survives at `c`, or the coarsest context at or below
/// `c` where it is first excluded (exclusion is upward-closed along
/// refinement for antitone presheaves; ties break lexicographically).
struct RefineResult {
    bool survives = false;
    std::optional<Context> pruned_at;
};

RefineResult refine(const ConstraintPresheaf& p, const Context& c, const Meaning& x);

/// Meanings admissible at every context: for inclusion-restriction
/// presheaves a global section is exactly a universally admissible meaning.
/// Empty means no coherent global meaning.
std::set<Meaning> global_sections(const ConstraintPresheaf& p);

enum class StageTruth { Validated, Refuted, Undetermined };

inline const char* stage_truth_name(StageTruth t) {
    switch (t) {
        case StageTruth::Validated: return "validated";
        case StageTruth::Refuted: return "refuted";
        case StageTruth::Undetermined: return "undetermined";
    }
    return "unknown";
}

/// Three-valued truth of `proposition` at stage `c`: validated when the
/// nonempty stage is contained in the proposition, refuted when the
/// nonempty stage misses it entirely, undetermined otherwise (an empty
/// stage is always undetermined).
StageTruth stage_truth(const ConstraintPresheaf& p, const std::set<Meaning>& proposition,
                       const Context& c);

/// A subset of a poset closed downward under <=.
class Downset {
public:
    Downset(ContextPoset poset, std::set<std::string> members);

    /// Skips the closure check; used where the caller vouches for the data.
    static Downset unchecked(ContextPoset poset, std::set<std::string> members);

    const ContextPoset& poset() const { return poset_; }
    const std::set<std::string>& members() const { return members_; }
    bool contains(const std::string& e) const { return members_.count(e) > 0; }
    bool is_downclosed() const;

    bool operator==(const Downset& other) const { return members_ == other.members_; }
    bool subset_of(const Downset& other) const;

private:
    Downset() = default;
    ContextPoset poset_;
    std::set<std::string> members_;
};

/// Contexts where the proposition is validated, as a downset of the
/// opposite (coarsening) order. With nonempty stages the validated set is
/// upward-closed in refinement order; empty stages above a validated one
/// can break closure, so the result is constructed unchecked and carries
/// `is_downclosed` for callers that feed it to the Heyting operations.
Downset truth_downset(const ConstraintPresheaf& p, const std::set<Meaning>& proposition);

/// The Heyting algebra of downsets of a finite poset: meet/join are
/// intersection/union and implication is the relative pseudo-complement,
/// computed by brute force: c ∈ (a → b) iff every c' <= c in a is in b.
/// All operations throw StructuralError when an argument is not a downset
/// of this algebra's poset.
class HeytingAlgebra {
public:
    explicit HeytingAlgebra(ContextPoset poset);

    const ContextPoset& poset() const { return poset_; }

    Downset top() const;
    Downset bottom() const;
    Downset meet(const Downset& a, const Downset& b) const;
    Downset join(const Downset& a, const Downset& b) const;
    Downset implies(const Downset& a, const Downset& b) const;

private:
    void require_member(const Downset& d) const;
    ContextPoset poset_;
};

}  // namespace semiostat::context
