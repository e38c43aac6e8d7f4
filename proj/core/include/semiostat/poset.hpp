#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace semiostat {

/// Finite partial order over named elements; `leq(c, c')` reads "c' refines
/// c". Built from generating pairs by reflexive-transitive closure; a cycle
/// through distinct elements is rejected as an antisymmetry violation.
class ContextPoset {
public:
    ContextPoset() = default;

    /// Elements are kept in declaration order (first occurrence wins).
    /// Throws StructuralError on duplicate elements, unknown pair members,
    /// or antisymmetry violations after closure.
    static ContextPoset from_pairs(
        const std::vector<std::string>& elements,
        const std::vector<std::pair<std::string, std::string>>& leq_pairs);

    /// Convenience: a single chain e0 <= e1 <= ... <= ek.
    static ContextPoset chain(const std::vector<std::string>& elements);

    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(const std::string& e) const { return index_.count(e) > 0; }

    /// Throws StructuralError if either element is unknown.
    bool leq(const std::string& a, const std::string& b) const;

    /// {x : x <= e}, in declaration order (includes e).
    std::vector<std::string> below(const std::string& e) const;

    /// {x : e <= x}, in declaration order (includes e).
    std::vector<std::string> above(const std::string& e) const;

    /// Minimal elements of the whole poset, in declaration order.
    std::vector<std::string> minimal_elements() const;

    /// All ordered pairs (a, b) with a <= b, including reflexive ones.
    std::vector<std::pair<std::string, std::string>> relation_pairs() const;

    /// Same elements, reversed order.
    ContextPoset opposite() const;

    bool operator==(const ContextPoset& other) const;

private:
    std::size_t index_of(const std::string& e) const;

    std::vector<std::string> elements_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> leq_;
};

}  // namespace semiostat
