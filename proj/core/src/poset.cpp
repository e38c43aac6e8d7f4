#include "semiostat/poset.hpp"

#include <algorithm>

#include "semiostat/errors.hpp"

namespace semiostat {

ContextPoset ContextPoset::from_pairs(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    ContextPoset p;
    for (const auto& e : elements) {
        if (p.index_.count(e))
            throw StructuralError("duplicate poset element '" + e + "'");
        p.index_[e] = p.elements_.size();
        p.elements_.push_back(e);
    }
    const std::size_t n = p.elements_.size();
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;

    for (const auto& [a, b] : leq_pairs) {
        auto ia = p.index_.find(a);
        auto ib = p.index_.find(b);
        if (ia == p.index_.end())
            throw StructuralError("order pair references unknown element '" + a + "'");
        if (ib == p.index_.end())
            throw StructuralError("order pair references unknown element '" + b + "'");
        p.leq_[ia->second][ib->second] = true;
    }

    // Transitive closure (Warshall); fine at desk scale.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k][j]) p.leq_[i][j] = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i][j] && p.leq_[j][i])
                throw StructuralError("antisymmetry violated: cycle through '" +
                                      p.elements_[i] + "' and '" + p.elements_[j] + "'");
    return p;
}

ContextPoset ContextPoset::chain(const std::vector<std::string>& elements) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i + 1 < elements.size(); ++i)
        pairs.emplace_back(elements[i], elements[i + 1]);
    return from_pairs(elements, pairs);
}

std::size_t ContextPoset::index_of(const std::string& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        throw StructuralError("unknown poset element '" + e + "'");
    return it->second;
}

bool ContextPoset::leq(const std::string& a, const std::string& b) const {
    return leq_[index_of(a)][index_of(b)];
}

std::vector<std::string> ContextPoset::below(const std::string& e) const {
    const std::size_t j = index_of(e);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (leq_[i][j]) out.push_back(elements_[i]);
    return out;
}

std::vector<std::string> ContextPoset::above(const std::string& e) const {
    const std::size_t i = index_of(e);
    std::vector<std::string> out;
    for (std::size_t j = 0; j < elements_.size(); ++j)
        if (leq_[i][j]) out.push_back(elements_[j]);
    return out;
}

std::vector<std::string> ContextPoset::minimal_elements() const {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        bool minimal = true;
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (i != j && leq_[i][j]) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(elements_[j]);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> ContextPoset::relation_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = 0; j < elements_.size(); ++j)
            if (leq_[i][j]) out.emplace_back(elements_[i], elements_[j]);
    return out;
}

ContextPoset ContextPoset::opposite() const {
    ContextPoset p;
    p.elements_ = elements_;
    p.index_ = index_;
    const std::size_t n = elements_.size();
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.leq_[i][j] = leq_[j][i];
    return p;
}

bool ContextPoset::operator==(const ContextPoset& other) const {
    return elements_ == other.elements_ && leq_ == other.leq_;
}

}  // namespace semiostat
