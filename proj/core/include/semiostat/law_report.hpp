#pragma once

#include <string>
#include <vector>

namespace semiostat {

/// Kinds of law violations a checker can report. `Structural` marks
/// malformedness (wrong typing, missing table entries) and is kept distinct
/// from genuine law failures on well-formed data.
enum class ViolationKind {
    Structural,
    Identity,
    Associativity,
    Functoriality,
    Antitone,
    Square,
    Monotonicity,
    Adjunction,
    Triangle,
};

inline const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Structural: return "structural";
        case ViolationKind::Identity: return "identity";
        case ViolationKind::Associativity: return "associativity";
        case ViolationKind::Functoriality: return "functoriality";
        case ViolationKind::Antitone: return "antitone";
        case ViolationKind::Square: return "square";
        case ViolationKind::Monotonicity: return "monotonicity";
        case ViolationKind::Adjunction: return "adjunction";
        case ViolationKind::Triangle: return "triangle";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::vector<std::string> subjects;  // the ids of the offending instance
    std::string detail;
};

/// Result of a law check. Every violated instance is listed, not just the
/// first; `notes` records laws that hold by construction.
struct LawReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }

    bool has_kind(ViolationKind kind) const {
        for (const auto& v : violations)
            if (v.kind == kind) return true;
        return false;
    }

    std::size_t count_kind(ViolationKind kind) const {
        std::size_t n = 0;
        for (const auto& v : violations)
            if (v.kind == kind) ++n;
        return n;
    }
};

}  // namespace semiostat
