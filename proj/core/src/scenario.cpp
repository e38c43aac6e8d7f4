#include "semiostat/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace semiostat::dsl {

namespace {

std::string at(SourceLoc loc) {
    return std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": ";
}

std::string quote_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += items.size() == 2 ? " or " : ", ";
        out += items[i];
    }
    return out;
}

enum class Tok { Ident, Number, LBrace, RBrace, Eq, Comma, Tilde, Arrow, Leq, Newline, End };

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Eq: return "'='";
        case Tok::Comma: return "','";
        case Tok::Tilde: return "'~'";
        case Tok::Arrow: return "'->'";
        case Tok::Leq: return "'<='";
        case Tok::Newline: return "end of line";
        case Tok::End: return "end of input";
    }
    return "token";
}

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}
bool number_start(char c, char next) {
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+' || c == '.') && std::isdigit(static_cast<unsigned char>(next));
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto loc = [&]() { return SourceLoc{line, col}; };
    auto push = [&](Tok kind, std::string t, SourceLoc l) { out.push_back({kind, std::move(t), l}); };

    while (i < n) {
        const char c = text[i];
        const char next = i + 1 < n ? text[i + 1] : '\0';
        if (c == '\n') {
            push(Tok::Newline, "\n", loc());
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < n && text[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }
        const SourceLoc start = loc();
        if (c == '{') { push(Tok::LBrace, "{", start); ++i; ++col; continue; }
        if (c == '}') { push(Tok::RBrace, "}", start); ++i; ++col; continue; }
        if (c == '=') { push(Tok::Eq, "=", start); ++i; ++col; continue; }
        if (c == ',') { push(Tok::Comma, ",", start); ++i; ++col; continue; }
        if (c == '~') { push(Tok::Tilde, "~", start); ++i; ++col; continue; }
        if (c == '-' && next == '>') { push(Tok::Arrow, "->", start); i += 2; col += 2; continue; }
        if (c == '<' && next == '=') { push(Tok::Leq, "<=", start); i += 2; col += 2; continue; }
        if (number_start(c, next)) {
            std::string t;
            char prev = '\0';
            while (i < n) {
                const char d = text[i];
                const bool digit_like = std::isdigit(static_cast<unsigned char>(d)) || d == '.' ||
                                        d == 'e' || d == 'E';
                const bool exp_sign = (d == '+' || d == '-') && (prev == 'e' || prev == 'E');
                if (!digit_like && !exp_sign && !(t.empty() && (d == '-' || d == '+'))) break;
                t += d;
                prev = d;
                ++i;
                ++col;
            }
            push(Tok::Number, std::move(t), start);
            continue;
        }
        if (ident_start(c)) {
            std::string t;
            while (i < n && ident_char(text[i])) {
                if (text[i] == '-' && i + 1 < n && text[i + 1] == '>') break;
                t += text[i];
                ++i;
                ++col;
            }
            push(Tok::Ident, std::move(t), start);
            continue;
        }
        throw ParseError(start, at(start) + "unexpected character '" + std::string(1, c) + "'", {});
    }
    push(Tok::End, "", loc());
    return out;
}

struct ArgSpec {
    const char* key;
    bool required;
    enum class Type { Name, Number, Int, Range } type;
};

const std::vector<ArgSpec>& directive_args(Directive::Kind kind) {
    using T = ArgSpec::Type;
    static const std::vector<ArgSpec> disambiguate{{"filter", true, T::Name},
                                                   {"fmap", false, T::Name},
                                                   {"start", false, T::Name},
                                                   {"steps", false, T::Int}};
    static const std::vector<ArgSpec> iterate{{"alpha", true, T::Number},
                                              {"beta", true, T::Number},
                                              {"x0", true, T::Number},
                                              {"eps", false, T::Number},
                                              {"tol", false, T::Number},
                                              {"max-iter", false, T::Int}};
    static const std::vector<ArgSpec> fixed{{"alpha", true, T::Number},
                                            {"beta", true, T::Number},
                                            {"range", true, T::Range}};
    static const std::vector<ArgSpec> truth{{"prop", true, T::Name}};
    static const std::vector<ArgSpec> none{};
    switch (kind) {
        case Directive::Kind::Disambiguate: return disambiguate;
        case Directive::Kind::IterateScalar: return iterate;
        case Directive::Kind::FixedPoints: return fixed;
        case Directive::Kind::TruthQuery: return truth;
        case Directive::Kind::CheckLaws: return none;
    }
    return none;
}

bool valid_number(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool valid_int(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    return end == s.c_str() + s.size() && v > 0;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    Scenario parse() {
        skip_newlines();
        expect_keyword("scenario");
        scenario_.name = parse_ident("scenario name");
        end_of_line();
        skip_newlines();
        while (peek().kind != Tok::End) {
            parse_block();
            skip_newlines();
        }
        resolve();
        return std::move(scenario_);
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    void skip_newlines() {
        while (peek().kind == Tok::Newline) advance();
    }

    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        std::string what = expected.empty() ? std::string("unexpected ") + tok_name(t.kind)
                                            : "expected " + quote_list(expected);
        if (!expected.empty() && t.kind != Tok::End)
            what += ", found " + describe(t);
        throw ParseError(t.loc, at(t.loc) + what, std::move(expected));
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Ident || t.kind == Tok::Number) return "'" + t.text + "'";
        return tok_name(t.kind);
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(peek(), {what});
        return advance();
    }

    void expect_keyword(const std::string& kw) {
        const Token& t = peek();
        if (t.kind != Tok::Ident || t.text != kw) fail(t, {"'" + kw + "'"});
        advance();
    }

    Ident parse_ident(const char* what) {
        const Token& t = expect(Tok::Ident, what);
        return {t.text, t.loc};
    }

    void end_of_line() {
        if (peek().kind != Tok::Newline && peek().kind != Tok::End)
            fail(peek(), {"end of line"});
    }

    // { id, id, ... } with commas or newlines as separators; may be empty.
    std::vector<Ident> parse_ident_set() {
        expect(Tok::LBrace, "'{'");
        std::vector<Ident> out;
        skip_newlines();
        while (peek().kind != Tok::RBrace) {
            out.push_back(parse_ident("identifier"));
            skip_newlines();
            if (peek().kind == Tok::Comma) {
                advance();
                skip_newlines();
            }
        }
        advance();  // '}'
        return out;
    }

    void parse_block() {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            fail(t, {"'universe'", "'contexts'", "'admissible'", "'filter'", "'equiv'", "'prop'",
                     "'run'"});
        if (t.text == "universe") {
            advance();
            auto items = parse_ident_set();
            scenario_.universe.insert(scenario_.universe.end(), items.begin(), items.end());
        } else if (t.text == "contexts") {
            advance();
            parse_contexts();
        } else if (t.text == "admissible") {
            advance();
            Ident ctx = parse_ident("context name");
            expect(Tok::Eq, "'='");
            scenario_.admissible.emplace_back(std::move(ctx), parse_ident_set());
        } else if (t.text == "filter") {
            advance();
            parse_filter();
        } else if (t.text == "equiv") {
            advance();
            parse_equiv();
        } else if (t.text == "prop") {
            advance();
            Ident name = parse_ident("proposition name");
            expect(Tok::Eq, "'='");
            scenario_.propositions.emplace_back(std::move(name), parse_ident_set());
        } else if (t.text == "run") {
            advance();
            parse_run();
        } else {
            fail(t, {"'universe'", "'contexts'", "'admissible'", "'filter'", "'equiv'", "'prop'",
                     "'run'"});
        }
    }

    void parse_contexts() {
        expect(Tok::LBrace, "'{'");
        skip_newlines();
        while (peek().kind != Tok::RBrace) {
            std::vector<Ident> chain{parse_ident("context name")};
            while (peek().kind == Tok::Leq) {
                advance();
                chain.push_back(parse_ident("context name"));
            }
            scenario_.context_chains.push_back(std::move(chain));
            skip_newlines();
            if (peek().kind == Tok::Comma) {
                advance();
                skip_newlines();
            }
        }
        advance();  // '}'
    }

    void parse_filter() {
        FilterDecl decl;
        decl.name = parse_ident("filter name");
        expect(Tok::LBrace, "'{'");
        skip_newlines();
        while (peek().kind != Tok::RBrace) {
            Ident from = parse_ident("meaning");
            expect(Tok::Arrow, "'->'");
            Ident to = parse_ident("meaning or 'drop'");
            if (to.text == "drop")
                decl.entries.emplace_back(std::move(from), std::nullopt);
            else
                decl.entries.emplace_back(std::move(from), std::move(to));
            skip_newlines();
            if (peek().kind == Tok::Comma) {
                advance();
                skip_newlines();
            }
        }
        advance();  // '}'
        scenario_.filters.push_back(std::move(decl));
    }

    void parse_equiv() {
        expect(Tok::LBrace, "'{'");
        skip_newlines();
        while (peek().kind != Tok::RBrace) {
            Ident a = parse_ident("identifier");
            expect(Tok::Tilde, "'~'");
            Ident b = parse_ident("identifier");
            scenario_.equivalences.emplace_back(std::move(a), std::move(b));
            skip_newlines();
            if (peek().kind == Tok::Comma) {
                advance();
                skip_newlines();
            }
        }
        advance();  // '}'
    }

    void parse_run() {
        Directive d;
        const Token& t = expect(Tok::Ident, "directive name");
        d.loc = t.loc;
        if (t.text == "disambiguate") d.kind = Directive::Kind::Disambiguate;
        else if (t.text == "iterate-scalar") d.kind = Directive::Kind::IterateScalar;
        else if (t.text == "check-laws") d.kind = Directive::Kind::CheckLaws;
        else if (t.text == "truth-query") d.kind = Directive::Kind::TruthQuery;
        else if (t.text == "fixed-points") d.kind = Directive::Kind::FixedPoints;
        else
            fail(t, {"'disambiguate'", "'iterate-scalar'", "'check-laws'", "'truth-query'",
                     "'fixed-points'"});

        while (peek().kind != Tok::Newline && peek().kind != Tok::End) {
            const Token& key = peek();
            if (key.kind != Tok::Ident) fail(key, {"argument name"});
            advance();
            expect(Tok::Eq, "'='");
            std::string value = parse_arg_value();
            d.args.emplace_back(key.text, std::move(value));
        }
        validate_directive(d);
        scenario_.runs.push_back(std::move(d));
    }

    std::string parse_arg_value() {
        const Token& v = peek();
        if (v.kind != Tok::Ident && v.kind != Tok::Number) fail(v, {"argument value"});
        advance();
        std::string value = v.text;
        // Comma-joined pairs such as range=-3,3 arrive as separate tokens.
        while (peek().kind == Tok::Comma &&
               (peek(1).kind == Tok::Number || peek(1).kind == Tok::Ident)) {
            advance();
            value += "," + advance().text;
        }
        return value;
    }

    void validate_directive(const Directive& d) {
        const auto& specs = directive_args(d.kind);
        for (const auto& [key, value] : d.args) {
            const ArgSpec* spec = nullptr;
            for (const auto& s : specs)
                if (key == s.key) spec = &s;
            if (!spec)
                throw ParseError(d.loc,
                                 at(d.loc) + "unknown argument '" + key + "' for directive '" +
                                     directive_kind_name(d.kind) + "'",
                                 {});
            bool ok = true;
            switch (spec->type) {
                case ArgSpec::Type::Name: ok = !value.empty(); break;
                case ArgSpec::Type::Number: ok = valid_number(value); break;
                case ArgSpec::Type::Int: ok = valid_int(value); break;
                case ArgSpec::Type::Range: {
                    const auto comma = value.find(',');
                    ok = comma != std::string::npos && valid_number(value.substr(0, comma)) &&
                         valid_number(value.substr(comma + 1));
                    break;
                }
            }
            if (!ok)
                throw ParseError(d.loc, at(d.loc) + "bad value '" + value + "' for argument '" +
                                            key + "'",
                                 {});
        }
        for (const auto& s : specs) {
            if (!s.required) continue;
            if (!d.arg(s.key))
                throw ParseError(d.loc, at(d.loc) + "directive '" +
                                            directive_kind_name(d.kind) +
                                            "' requires argument '" + std::string(s.key) + "'",
                                 {});
        }
    }

    void resolve() {
        std::set<std::string> universe;
        for (const auto& m : scenario_.universe)
            if (!universe.insert(m.text).second)
                throw ResolutionError(m.loc, m.text,
                                      at(m.loc) + "duplicate meaning '" + m.text + "' in universe");

        std::set<std::string> contexts;
        for (const auto& chain : scenario_.context_chains)
            for (const auto& c : chain) contexts.insert(c.text);

        std::set<std::string> admissible_seen;
        for (const auto& [ctx, meanings] : scenario_.admissible) {
            if (!contexts.count(ctx.text))
                throw ResolutionError(ctx.loc, ctx.text,
                                      at(ctx.loc) + "unknown context '" + ctx.text + "'");
            if (!admissible_seen.insert(ctx.text).second)
                throw ResolutionError(ctx.loc, ctx.text,
                                      at(ctx.loc) + "duplicate admissible set for context '" +
                                          ctx.text + "'");
            for (const auto& m : meanings) require_meaning(universe, m);
        }

        std::set<std::string> filter_names;
        for (const auto& f : scenario_.filters) {
            if (!filter_names.insert(f.name.text).second)
                throw ResolutionError(f.name.loc, f.name.text,
                                      at(f.name.loc) + "duplicate filter '" + f.name.text + "'");
            std::set<std::string> keys;
            for (const auto& [from, to] : f.entries) {
                require_meaning(universe, from);
                if (!keys.insert(from.text).second)
                    throw ResolutionError(from.loc, from.text,
                                          at(from.loc) + "duplicate entry for '" + from.text +
                                              "' in filter '" + f.name.text + "'");
                if (to) require_meaning(universe, *to);
            }
        }

        for (const auto& [a, b] : scenario_.equivalences) {
            require_meaning(universe, a);
            require_meaning(universe, b);
        }

        std::set<std::string> prop_names;
        for (const auto& [name, members] : scenario_.propositions) {
            if (!prop_names.insert(name.text).second)
                throw ResolutionError(name.loc, name.text,
                                      at(name.loc) + "duplicate proposition '" + name.text + "'");
            for (const auto& m : members) require_meaning(universe, m);
        }

        for (const auto& d : scenario_.runs) {
            if (auto f = d.arg("filter"); f && !filter_names.count(*f))
                throw ResolutionError(d.loc, *f, at(d.loc) + "unknown filter '" + *f + "'");
            if (auto f = d.arg("fmap"); f && !filter_names.count(*f))
                throw ResolutionError(d.loc, *f, at(d.loc) + "unknown filter '" + *f + "'");
            if (auto p = d.arg("prop"); p && !prop_names.count(*p))
                throw ResolutionError(d.loc, *p, at(d.loc) + "unknown proposition '" + *p + "'");
            if (auto start = d.arg("start")) {
                std::stringstream parts(*start);
                std::string m;
                while (std::getline(parts, m, ','))
                    if (!universe.count(m))
                        throw ResolutionError(d.loc, m,
                                              at(d.loc) + "unknown meaning '" + m +
                                                  "' in start set");
            }
        }
    }

    void require_meaning(const std::set<std::string>& universe, const Ident& m) {
        if (!universe.count(m.text))
            throw ResolutionError(m.loc, m.text,
                                  at(m.loc) + "unknown meaning '" + m.text +
                                      "' (not declared in universe)");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Scenario scenario_;
};

}  // namespace

ParseError::ParseError(SourceLoc loc, const std::string& message,
                       std::vector<std::string> expected)
    : Error(ErrorCode::Parse, message), loc_(loc), expected_(std::move(expected)) {}

ResolutionError::ResolutionError(SourceLoc loc, const std::string& identifier,
                                 const std::string& message)
    : Error(ErrorCode::Resolve, message), loc_(loc), identifier_(identifier) {}

const char* directive_kind_name(Directive::Kind kind) {
    switch (kind) {
        case Directive::Kind::Disambiguate: return "disambiguate";
        case Directive::Kind::IterateScalar: return "iterate-scalar";
        case Directive::Kind::CheckLaws: return "check-laws";
        case Directive::Kind::TruthQuery: return "truth-query";
        case Directive::Kind::FixedPoints: return "fixed-points";
    }
    return "unknown";
}

std::vector<std::string> Scenario::context_names() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& chain : context_chains)
        for (const auto& c : chain)
            if (seen.insert(c.text).second) out.push_back(c.text);
    return out;
}

const FilterDecl* Scenario::find_filter(const std::string& name) const {
    for (const auto& f : filters)
        if (f.name.text == name) return &f;
    return nullptr;
}

const std::vector<Ident>* Scenario::find_proposition(const std::string& name) const {
    for (const auto& [n, members] : propositions)
        if (n.text == name) return &members;
    return nullptr;
}

Scenario parse_scenario(const std::string& text) { return Parser(text).parse(); }

namespace {

std::string ident_set(const std::vector<Ident>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ", " : " ") + items[i].text;
    out += items.empty() ? "}" : " }";
    return out;
}

}  // namespace

std::string print_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "scenario " << s.name.text << "\n";
    if (!s.universe.empty()) out << "universe " << ident_set(s.universe) << "\n";
    if (!s.context_chains.empty()) {
        out << "contexts {";
        for (std::size_t i = 0; i < s.context_chains.size(); ++i) {
            out << (i ? ", " : " ");
            const auto& chain = s.context_chains[i];
            for (std::size_t j = 0; j < chain.size(); ++j)
                out << (j ? " <= " : "") << chain[j].text;
        }
        out << " }\n";
    }
    for (const auto& [ctx, meanings] : s.admissible)
        out << "admissible " << ctx.text << " = " << ident_set(meanings) << "\n";
    for (const auto& f : s.filters) {
        out << "filter " << f.name.text << " {";
        for (std::size_t i = 0; i < f.entries.size(); ++i) {
            out << (i ? ", " : " ") << f.entries[i].first.text << " -> "
                << (f.entries[i].second ? f.entries[i].second->text : "drop");
        }
        out << (f.entries.empty() ? "}" : " }") << "\n";
    }
    if (!s.equivalences.empty()) {
        out << "equiv {";
        for (std::size_t i = 0; i < s.equivalences.size(); ++i)
            out << (i ? ", " : " ") << s.equivalences[i].first.text << " ~ "
                << s.equivalences[i].second.text;
        out << " }\n";
    }
    for (const auto& [name, members] : s.propositions)
        out << "prop " << name.text << " = " << ident_set(members) << "\n";
    for (const auto& d : s.runs) {
        out << "run " << directive_kind_name(d.kind);
        for (const auto& [k, v] : d.args) out << ' ' << k << '=' << v;
        out << "\n";
    }
    return out.str();
}

namespace {

bool same_idents(const std::vector<Ident>& a, const std::vector<Ident>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const Ident& x, const Ident& y) { return x.text == y.text; });
}

}  // namespace

bool same_structure(const Scenario& a, const Scenario& b) {
    if (a.name.text != b.name.text) return false;
    if (!same_idents(a.universe, b.universe)) return false;
    if (a.context_chains.size() != b.context_chains.size()) return false;
    for (std::size_t i = 0; i < a.context_chains.size(); ++i)
        if (!same_idents(a.context_chains[i], b.context_chains[i])) return false;
    if (a.admissible.size() != b.admissible.size()) return false;
    for (std::size_t i = 0; i < a.admissible.size(); ++i) {
        if (a.admissible[i].first.text != b.admissible[i].first.text) return false;
        if (!same_idents(a.admissible[i].second, b.admissible[i].second)) return false;
    }
    if (a.filters.size() != b.filters.size()) return false;
    for (std::size_t i = 0; i < a.filters.size(); ++i) {
        if (a.filters[i].name.text != b.filters[i].name.text) return false;
        const auto& ea = a.filters[i].entries;
        const auto& eb = b.filters[i].entries;
        if (ea.size() != eb.size()) return false;
        for (std::size_t j = 0; j < ea.size(); ++j) {
            if (ea[j].first.text != eb[j].first.text) return false;
            if (ea[j].second.has_value() != eb[j].second.has_value()) return false;
            if (ea[j].second && ea[j].second->text != eb[j].second->text) return false;
        }
    }
    if (a.equivalences.size() != b.equivalences.size()) return false;
    for (std::size_t i = 0; i < a.equivalences.size(); ++i) {
        if (a.equivalences[i].first.text != b.equivalences[i].first.text) return false;
        if (a.equivalences[i].second.text != b.equivalences[i].second.text) return false;
    }
    if (a.propositions.size() != b.propositions.size()) return false;
    for (std::size_t i = 0; i < a.propositions.size(); ++i) {
        if (a.propositions[i].first.text != b.propositions[i].first.text) return false;
        if (!same_idents(a.propositions[i].second, b.propositions[i].second)) return false;
    }
    if (a.runs.size() != b.runs.size()) return false;
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
        if (a.runs[i].kind != b.runs[i].kind) return false;
        if (a.runs[i].args != b.runs[i].args) return false;
    }
    return true;
}

}  // namespace semiostat::dsl
