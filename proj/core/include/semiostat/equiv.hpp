#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semiostat::equiv {

using State = std::string;

/// An equivalence relation over a finite universe, stored as disjoint
/// classes. The canonical representative of a class is its least identifier
/// in lexicographic order, so all outputs are deterministic.
class Partition {
public:
    /// Finest partition containing all given pairs (reflexive-symmetric-
    /// transitive closure, built with union-find).
    /// Throws StructuralError on duplicate universe entries or pairs that
    /// reference unknown states.
    static Partition make(const std::vector<State>& universe,
                          const std::vector<std::pair<State, State>>& pairs);

    const std::vector<State>& universe() const { return universe_; }

    /// Canonical representative of x's class. Throws StructuralError on
    /// unknown state.
    const State& representative(const State& x) const;

    bool same_class(const State& x, const State& y) const;

    /// Members of the class of `rep`, sorted.
    std::vector<State> members(const State& rep) const;

    /// All class representatives, sorted.
    std::vector<State> class_representatives() const;

    std::size_t class_count() const;

    /// One (x, representative(x)) pair per state; re-ingesting these pairs
    /// reproduces the partition.
    std::vector<std::pair<State, State>> class_pairs() const;

private:
    std::vector<State> universe_;
    std::map<State, State> class_of_;
};

inline Partition make_partition(const std::vector<State>& universe,
                                const std::vector<std::pair<State, State>>& pairs) {
    return Partition::make(universe, pairs);
}

/// Finite state set with internal map f, interpretation map F, and a
/// semantic partition: the symbolic engine for the update rule
/// x ↦ [F(f(x))]. An optional absorbing sink state realizes ∅-valued
/// contextual filters while keeping f total; the sink's class is excluded
/// from reported interpretations.
struct QuotientSystem {
    std::vector<State> states;
    std::map<State, State> f;  // internal transformation, total on states
    std::map<State, State> F;  // interpretation map, total on states
    Partition partition;
    std::optional<State> sink;
};

/// Outcome of the well-definedness check: either every pair x ~ y satisfies
/// F(f(x)) ~ F(f(y)), or a violating pair is returned.
struct Certificate {
    bool compatible = false;
    std::optional<std::pair<State, State>> counterexample;
};

/// Validates totality of f and F and membership of all images, then checks
/// representative-independence of x ↦ [F(f(x))] class by class.
/// Throws StructuralError on structural defects.
Certificate certify_compatibility(const QuotientSystem& sys);

/// One step of the induced class map: the representative of [F(f(x))] for
/// any member x of `current_class` (representative-independent under the
/// certificate). Throws ContractError unless `cert` is compatible;
/// StructuralError if `current_class` is not a class representative.
State quotient_step(const QuotientSystem& sys, const Certificate& cert,
                    const State& current_class);

struct BasinEntry {
    enum class Kind { FixedPoint, Cycle, Eliminated } kind;
    State target;    // fixed class reached, or least representative on the cycle
    std::size_t period = 0;  // cycle length when kind == Cycle
};

/// Exhaustive dynamics of the induced class map: fixed classes, cycles, and
/// the basin of every class. Every trajectory on the finite quotient reaches
/// a fixed class or a cycle within |classes| steps. When a sink is declared,
/// its class is excluded from the fixed-class list and classes absorbed by
/// it are reported as eliminated.
struct ClassDynamics {
    std::vector<State> fixed_classes;               // sorted representatives
    std::vector<std::vector<State>> cycles;         // length >= 2, canonical rotation
    std::map<State, BasinEntry> basin;              // every class representative
};

ClassDynamics find_class_fixed_points(const QuotientSystem& sys, const Certificate& cert);

}  // namespace semiostat::equiv
