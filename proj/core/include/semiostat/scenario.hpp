#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiostat/errors.hpp"

namespace semiostat::dsl {

struct SourceLoc {
    int line = 1;
    int col = 1;
};

/// Lexical or syntactic scenario error, with position and the tokens that
/// would have been accepted.
class ParseError : public Error {
public:
    ParseError(SourceLoc loc, const std::string& message, std::vector<std::string> expected);

    SourceLoc loc() const { return loc_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourceLoc loc_;
    std::vector<std::string> expected_;
};

/// A reference to a name that was never declared.
class ResolutionError : public Error {
public:
    ResolutionError(SourceLoc loc, const std::string& identifier, const std::string& message);

    SourceLoc loc() const { return loc_; }
    const std::string& identifier() const { return identifier_; }

private:
    SourceLoc loc_;
    std::string identifier_;
};

struct Ident {
    std::string text;
    SourceLoc loc;

    bool operator==(const Ident& other) const { return text == other.text; }
};

struct FilterDecl {
    Ident name;
    // entry value nullopt = drop (the ∅-valued filter, realized via the sink state)
    std::vector<std::pair<Ident, std::optional<Ident>>> entries;
};

struct Directive {
    enum class Kind { Disambiguate, IterateScalar, CheckLaws, TruthQuery, FixedPoints };

    Kind kind = Kind::CheckLaws;
    SourceLoc loc;
    std::vector<std::pair<std::string, std::string>> args;  // declaration order

    std::optional<std::string> arg(const std::string& key) const {
        for (const auto& [k, v] : args)
            if (k == key) return v;
        return std::nullopt;
    }
};

const char* directive_kind_name(Directive::Kind kind);

struct Scenario {
    Ident name;
    std::vector<Ident> universe;
    std::vector<std::vector<Ident>> context_chains;  // each chain c0 <= c1 <= ...
    std::vector<std::pair<Ident, std::vector<Ident>>> admissible;
    std::vector<FilterDecl> filters;
    std::vector<std::pair<Ident, Ident>> equivalences;
    std::vector<std::pair<Ident, std::vector<Ident>>> propositions;
    std::vector<Directive> runs;

    std::vector<std::string> context_names() const;  // declaration order, deduplicated
    const FilterDecl* find_filter(const std::string& name) const;
    const std::vector<Ident>* find_proposition(const std::string& name) const;
};

/// Parses scenario text into a full AST with a source location on every
/// node. Throws ParseError on lexical/syntactic problems and
/// ResolutionError when a reference does not resolve; both carry positions.
Scenario parse_scenario(const std::string& text);

/// Canonical text form; parsing it back yields a structurally identical AST
/// (locations aside).
std::string print_scenario(const Scenario& s);

/// Structural equality ignoring source locations.
bool same_structure(const Scenario& a, const Scenario& b);

}  // namespace semiostat::dsl
