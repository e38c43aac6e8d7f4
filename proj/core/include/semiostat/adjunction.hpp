#pragma once

#include <map>
#include <string>
#include <vector>

#include "semiostat/equiv.hpp"
#include "semiostat/law_report.hpp"
#include "semiostat/poset.hpp"

namespace semiostat::adjunction {

/// A candidate adjoint pair between posets: monotone F: S -> M and
/// G: M -> S with F(x) <= y iff x <= G(y). Hom-sets of posets are empty or
/// singletons, so the hom-set bijection is exactly this equivalence.
struct GaloisConnection {
    ContextPoset source;  // syntax order S
    ContextPoset target;  // semantics order M
    std::map<std::string, std::string> lower;  // F: S -> M
    std::map<std::string, std::string> upper;  // G: M -> S
};

/// Exhaustive over S x M. Monotonicity failures of either map are reported
/// as Monotonicity violations, adjunction failures as Adjunction violations
/// carrying the witnessing (x, y). Non-total or dangling maps are
/// structural violations that suppress the law checks.
LawReport check_galois(const GaloisConnection& gc);

/// Unit/counit laws in poset form: x <= G(F(x)) for all x and F(G(y)) <= y
/// for all y. A logical consequence of check_galois passing, kept as an
/// independent redundancy oracle.
LawReport check_triangles(const GaloisConnection& gc);

/// Data of the universal factorization H = H̃ ∘ F, where F is the canonical
/// projection onto semantic classes and H is an interpretation constant on
/// classes.
struct QuotientFactorization {
    std::vector<equiv::State> syntax_states;
    equiv::Partition partition;
    std::map<equiv::State, std::string> interpretation;  // H: states -> D
    std::vector<std::string> codomain;                   // D, finite
};

/// The induced map on classes plus its uniqueness evidence: for each class,
/// every alternative codomain value except H̃([x]) fails the factorization
/// equation on some member.
struct Factorization {
    std::map<equiv::State, std::string> class_map;  // H̃: class representative -> D
    std::size_t alternatives_ruled_out = 0;         // total rejected candidate values
    bool unique = true;                             // exactly one candidate per class survived
};

/// Checks that H is constant on classes (HypothesisError with the witness
/// pair otherwise), builds H̃([x]) := H(x), and certifies uniqueness by
/// exhaustively testing every other codomain value per class.
/// Throws StructuralError on non-total H or values outside the codomain.
Factorization factor_through_meaning(const QuotientFactorization& q);

}  // namespace semiostat::adjunction
