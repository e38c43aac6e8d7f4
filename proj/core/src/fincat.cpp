#include "semiostat/fincat.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "semiostat/errors.hpp"

namespace semiostat::fincat {

namespace {

void require_unique_nonempty(const FiniteCategory& c) {
    if (c.objects.empty())
        throw StructuralError("category has no objects");
    if (c.morphisms.empty())
        throw StructuralError("category has no morphisms");
    std::set<ObjectId> objs(c.objects.begin(), c.objects.end());
    if (objs.size() != c.objects.size())
        throw StructuralError("duplicate object identifiers");
    std::set<MorphismId> mors;
    for (const auto& m : c.morphisms)
        if (!mors.insert(m.id).second)
            throw StructuralError("duplicate morphism identifier '" + m.id + "'");
}

struct CategoryIndex {
    std::map<MorphismId, const Morphism*> morphism;
    std::set<ObjectId> objects;

    explicit CategoryIndex(const FiniteCategory& c) {
        objects.insert(c.objects.begin(), c.objects.end());
        for (const auto& m : c.morphisms) morphism[m.id] = &m;
    }

    const Morphism* find(const MorphismId& id) const {
        auto it = morphism.find(id);
        return it == morphism.end() ? nullptr : it->second;
    }
};

// Composite lookup; nullopt when the table has no (well-formed) entry.
std::optional<MorphismId> compose(const FiniteCategory& c, const MorphismId& g,
                                  const MorphismId& f) {
    auto it = c.composition.find({g, f});
    if (it == c.composition.end()) return std::nullopt;
    return it->second;
}

}  // namespace

LawReport check_category(const FiniteCategory& c) {
    require_unique_nonempty(c);
    CategoryIndex ix(c);
    LawReport report;

    auto structural = [&](std::vector<std::string> subjects, std::string detail) {
        report.violations.push_back(
            {ViolationKind::Structural, std::move(subjects), std::move(detail)});
    };

    for (const auto& m : c.morphisms) {
        if (!ix.objects.count(m.source))
            structural({m.id, m.source}, "morphism '" + m.id + "' has dangling source '" + m.source + "'");
        if (!ix.objects.count(m.target))
            structural({m.id, m.target}, "morphism '" + m.id + "' has dangling target '" + m.target + "'");
    }

    // Identities: present for each object, endpoints X -> X.
    for (const auto& x : c.objects) {
        auto it = c.identities.find(x);
        if (it == c.identities.end()) {
            structural({x}, "object '" + x + "' has no identity morphism");
            continue;
        }
        const Morphism* id = ix.find(it->second);
        if (!id) {
            structural({x, it->second}, "identity of '" + x + "' references unknown morphism '" + it->second + "'");
        } else if (id->source != x || id->target != x) {
            structural({x, id->id}, "identity of '" + x + "' is not an endomorphism of '" + x + "'");
        }
    }
    for (const auto& [x, mid] : c.identities) {
        if (!ix.objects.count(x))
            structural({x, mid}, "identity table references unknown object '" + x + "'");
    }

    // Composition table: defined exactly on composable pairs, correctly typed.
    for (const auto& g : c.morphisms) {
        for (const auto& f : c.morphisms) {
            const bool composable = f.target == g.source;
            auto entry = compose(c, g.id, f.id);
            if (composable && !entry) {
                structural({g.id, f.id},
                           "no composite for composable pair (" + g.id + ", " + f.id + ")");
                continue;
            }
            if (!composable && entry) {
                structural({g.id, f.id},
                           "composite defined for non-composable pair (" + g.id + ", " + f.id + ")");
                continue;
            }
            if (!entry) continue;
            const Morphism* gf = ix.find(*entry);
            if (!gf) {
                structural({g.id, f.id, *entry},
                           "composite of (" + g.id + ", " + f.id + ") references unknown morphism '" + *entry + "'");
            } else if (gf->source != f.source || gf->target != g.target) {
                structural({g.id, f.id, *entry},
                           "composite '" + *entry + "' of (" + g.id + ", " + f.id + ") has wrong endpoints");
            }
        }
    }
    for (const auto& [pair, to] : c.composition) {
        if (!ix.find(pair.first) || !ix.find(pair.second) || !ix.find(to))
            structural({pair.first, pair.second, to},
                       "composition entry references unknown morphism");
    }

    // Identity laws: id_target ∘ f = f = f ∘ id_source.
    for (const auto& f : c.morphisms) {
        auto idt = c.identities.find(f.target);
        if (idt != c.identities.end()) {
            auto left = compose(c, idt->second, f.id);
            if (left && *left != f.id)
                report.violations.push_back({ViolationKind::Identity,
                                             {f.id},
                                             "id_" + f.target + " ∘ " + f.id + " = " + *left +
                                                 " but expected " + f.id});
        }
        auto ids = c.identities.find(f.source);
        if (ids != c.identities.end()) {
            auto right = compose(c, f.id, ids->second);
            if (right && *right != f.id)
                report.violations.push_back({ViolationKind::Identity,
                                             {f.id},
                                             f.id + " ∘ id_" + f.source + " = " + *right +
                                                 " but expected " + f.id});
        }
    }

    // Associativity over every composable triple, symbolic equality.
    for (const auto& h : c.morphisms) {
        for (const auto& g : c.morphisms) {
            if (g.target != h.source) continue;
            for (const auto& f : c.morphisms) {
                if (f.target != g.source) continue;
                auto gf = compose(c, g.id, f.id);
                auto hg = compose(c, h.id, g.id);
                if (!gf || !hg) continue;  // missing entries already reported
                auto left = compose(c, h.id, *gf);
                auto right = compose(c, *hg, f.id);
                if (!left || !right) continue;
                if (*left != *right)
                    report.violations.push_back(
                        {ViolationKind::Associativity,
                         {h.id, g.id, f.id},
                         "h∘(g∘f) = " + *left + " but (h∘g)∘f = " + *right + " for (h,g,f)=(" +
                             h.id + "," + g.id + "," + f.id + ")"});
            }
        }
    }

    return report;
}

LawReport check_functor(const FunctorData& fd) {
    if (!fd.source || !fd.target)
        throw StructuralError("functor is missing its source or target category");
    if (!check_category(*fd.source).passed() || !check_category(*fd.target).passed())
        throw ContractError("check_functor requires source and target to pass check_category");

    const FiniteCategory& src = *fd.source;
    const FiniteCategory& dst = *fd.target;
    CategoryIndex dix(dst);
    LawReport report;

    auto structural = [&](std::vector<std::string> subjects, std::string detail) {
        report.violations.push_back(
            {ViolationKind::Structural, std::move(subjects), std::move(detail)});
    };

    bool total = true;
    for (const auto& x : src.objects) {
        auto it = fd.object_map.find(x);
        if (it == fd.object_map.end()) {
            structural({x}, "object map not defined on '" + x + "'");
            total = false;
        } else if (!dix.objects.count(it->second)) {
            structural({x, it->second}, "object map sends '" + x + "' to unknown object '" + it->second + "'");
            total = false;
        }
    }
    for (const auto& m : src.morphisms) {
        auto it = fd.morphism_map.find(m.id);
        if (it == fd.morphism_map.end()) {
            structural({m.id}, "morphism map not defined on '" + m.id + "'");
            total = false;
        } else if (!dix.find(it->second)) {
            structural({m.id, it->second}, "morphism map sends '" + m.id + "' to unknown morphism '" + it->second + "'");
            total = false;
        }
    }
    if (!total) return report;

    auto fobj = [&](const ObjectId& x) { return fd.object_map.at(x); };
    auto fmor = [&](const MorphismId& m) { return fd.morphism_map.at(m); };
    const bool contra = fd.variance == Variance::Contravariant;

    // Typing: covariant F(f): F(src)->F(tgt); contravariant F(f): F(tgt)->F(src).
    for (const auto& m : src.morphisms) {
        const Morphism* img = dix.find(fmor(m.id));
        const ObjectId want_src = contra ? fobj(m.target) : fobj(m.source);
        const ObjectId want_tgt = contra ? fobj(m.source) : fobj(m.target);
        if (img->source != want_src || img->target != want_tgt)
            structural({m.id, img->id},
                       "image of '" + m.id + "' has endpoints " + img->source + "->" + img->target +
                           " but expected " + want_src + "->" + want_tgt);
    }

    // F(id_X) = id_{F(X)}.
    for (const auto& x : src.objects) {
        const MorphismId fid = fmor(src.identities.at(x));
        const MorphismId want = dst.identities.at(fobj(x));
        if (fid != want)
            report.violations.push_back({ViolationKind::Identity,
                                         {x},
                                         "F(id_" + x + ") = " + fid + " but id_F(" + x + ") = " + want});
    }

    // Composition law per composable pair (g, f).
    for (const auto& g : src.morphisms) {
        for (const auto& f : src.morphisms) {
            if (f.target != g.source) continue;
            auto gf = src.composition.find({g.id, f.id});
            if (gf == src.composition.end()) continue;
            const MorphismId lhs = fmor(gf->second);
            const auto key = contra ? std::make_pair(fmor(f.id), fmor(g.id))
                                    : std::make_pair(fmor(g.id), fmor(f.id));
            auto rhs = dst.composition.find(key);
            if (rhs == dst.composition.end()) {
                structural({g.id, f.id}, "image pair of (" + g.id + ", " + f.id + ") is not composable in the target");
                continue;
            }
            if (lhs != rhs->second)
                report.violations.push_back(
                    {ViolationKind::Functoriality,
                     {g.id, f.id},
                     "F(g∘f) = " + lhs + " but composite of images = " + rhs->second +
                         " for (g,f)=(" + g.id + "," + f.id + ")"});
        }
    }

    return report;
}

FiniteCategory poset_as_category(const ContextPoset& poset) {
    FiniteCategory c;
    c.objects = poset.elements();
    auto arrow = [](const std::string& a, const std::string& b) { return a + "->" + b; };
    auto name = [&](const std::string& a, const std::string& b) {
        return a == b ? "id_" + a : arrow(a, b);
    };
    for (const auto& [a, b] : poset.relation_pairs())
        c.morphisms.push_back({name(a, b), a, b});
    for (const auto& x : poset.elements()) c.identities[x] = "id_" + x;
    // Composition forced by uniqueness of arrows between ordered pairs.
    for (const auto& g : c.morphisms)
        for (const auto& f : c.morphisms)
            if (f.target == g.source)
                c.composition[{g.id, f.id}] = name(f.source, g.target);
    return c;
}

FiniteCategory poset_as_category(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    return poset_as_category(ContextPoset::from_pairs(elements, leq_pairs));
}

FunctorData identity_functor(const FiniteCategory& c) {
    FunctorData f;
    f.source = &c;
    f.target = &c;
    for (const auto& x : c.objects) f.object_map[x] = x;
    for (const auto& m : c.morphisms) f.morphism_map[m.id] = m.id;
    f.variance = Variance::Covariant;
    return f;
}

}  // namespace semiostat::fincat
