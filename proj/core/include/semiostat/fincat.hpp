#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semiostat/law_report.hpp"
#include "semiostat/poset.hpp"

namespace semiostat::fincat {

using ObjectId = std::string;
using MorphismId = std::string;

struct Morphism {
    MorphismId id;
    ObjectId source;
    ObjectId target;
};

/// A finite category given by explicit tables. Objects and morphisms are
/// opaque identifiers; the composition table maps each composable pair
/// (g, f) with target(f) = source(g) to the id of g∘f.
struct FiniteCategory {
    std::vector<ObjectId> objects;
    std::vector<Morphism> morphisms;
    std::map<std::pair<MorphismId, MorphismId>, MorphismId> composition;  // (g, f) -> g∘f
    std::map<ObjectId, MorphismId> identities;
};

enum class Variance { Covariant, Contravariant };

/// A functor between finite categories, stored as total object/morphism
/// tables plus a variance flag (no opposite category is materialized).
struct FunctorData {
    const FiniteCategory* source = nullptr;
    const FiniteCategory* target = nullptr;
    std::map<ObjectId, ObjectId> object_map;
    std::map<MorphismId, MorphismId> morphism_map;
    Variance variance = Variance::Covariant;
};

/// Verifies the category laws exhaustively: composition defined exactly on
/// composable pairs with correct typing, identity laws for every morphism,
/// and associativity for every composable triple. All violated instances are
/// reported. Dangling source/target/identity references are reported as
/// structural violations, distinct from law violations.
/// Throws StructuralError if identifier sets are empty or contain duplicates.
LawReport check_category(const FiniteCategory& c);

/// Verifies totality of both maps, preservation of identities, and the
/// (co/contra)variant composition law for every composable pair.
/// Throws ContractError if source or target fails check_category.
LawReport check_functor(const FunctorData& f);

/// Builds the poset-category: one object per element, exactly one morphism
/// per ordered pair after reflexive-transitive closure, composition forced
/// by uniqueness. Morphism ids are "src->tgt"; identities are "id_X".
/// Throws StructuralError on a cycle among distinct elements.
FiniteCategory poset_as_category(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs);

/// Same, from an already-closed order.
FiniteCategory poset_as_category(const ContextPoset& poset);

/// The functor sending every object and morphism to itself.
FunctorData identity_functor(const FiniteCategory& c);

}  // namespace semiostat::fincat
