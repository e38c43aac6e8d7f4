#include "semiostat/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "semiostat/errors.hpp"

namespace semiostat::equiv {

namespace {

// Plain union-find with path compression and union by size.
struct UnionFind {
    std::vector<std::size_t> parent;
    std::vector<std::size_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            std::size_t next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

void require_total(const std::map<State, State>& m, const std::set<State>& states,
                   const char* name) {
    for (const auto& s : states) {
        auto it = m.find(s);
        if (it == m.end())
            throw StructuralError(std::string(name) + " is not defined on state '" + s + "'");
        if (!states.count(it->second))
            throw StructuralError(std::string(name) + " maps '" + s + "' to unknown state '" +
                                  it->second + "'");
    }
}

}  // namespace

Partition Partition::make(const std::vector<State>& universe,
                          const std::vector<std::pair<State, State>>& pairs) {
    Partition p;
    std::map<State, std::size_t> index;
    for (const auto& s : universe) {
        if (index.count(s))
            throw StructuralError("duplicate state '" + s + "' in universe");
        index[s] = p.universe_.size();
        p.universe_.push_back(s);
    }

    UnionFind uf(p.universe_.size());
    for (const auto& [a, b] : pairs) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw StructuralError("pair references unknown state '" + a + "'");
        if (ib == index.end())
            throw StructuralError("pair references unknown state '" + b + "'");
        uf.merge(ia->second, ib->second);
    }

    // Canonical representative: least identifier in the class.
    std::map<std::size_t, State> least;
    for (std::size_t i = 0; i < p.universe_.size(); ++i) {
        std::size_t root = uf.find(i);
        auto it = least.find(root);
        if (it == least.end() || p.universe_[i] < it->second) least[root] = p.universe_[i];
    }
    for (std::size_t i = 0; i < p.universe_.size(); ++i)
        p.class_of_[p.universe_[i]] = least.at(uf.find(i));
    return p;
}

const State& Partition::representative(const State& x) const {
    auto it = class_of_.find(x);
    if (it == class_of_.end())
        throw StructuralError("state '" + x + "' is not in the partition's universe");
    return it->second;
}

bool Partition::same_class(const State& x, const State& y) const {
    return representative(x) == representative(y);
}

std::vector<State> Partition::members(const State& rep) const {
    std::vector<State> out;
    for (const auto& [s, r] : class_of_)
        if (r == rep) out.push_back(s);
    if (out.empty())
        throw StructuralError("'" + rep + "' is not a class representative");
    return out;  // map iteration is already sorted
}

std::vector<State> Partition::class_representatives() const {
    std::set<State> reps;
    for (const auto& [s, r] : class_of_) reps.insert(r);
    return {reps.begin(), reps.end()};
}

std::size_t Partition::class_count() const { return class_representatives().size(); }

std::vector<std::pair<State, State>> Partition::class_pairs() const {
    std::vector<std::pair<State, State>> out;
    for (const auto& [s, r] : class_of_) out.emplace_back(s, r);
    return out;
}

Certificate certify_compatibility(const QuotientSystem& sys) {
    std::set<State> states(sys.states.begin(), sys.states.end());
    if (states.size() != sys.states.size())
        throw StructuralError("duplicate states in quotient system");
    if (states.empty()) throw StructuralError("quotient system has no states");
    require_total(sys.f, states, "f");
    require_total(sys.F, states, "F");
    for (const auto& s : sys.states)
        sys.partition.representative(s);  // throws on mismatch with the universe
    if (sys.sink && !states.count(*sys.sink))
        throw StructuralError("declared sink '" + *sys.sink + "' is not a state");

    auto step_class = [&](const State& x) {
        return sys.partition.representative(sys.F.at(sys.f.at(x)));
    };

    // Compatible iff every member of a class lands in the representative's
    // image class; the first offending pair (member, earlier member) is the
    // counterexample.
    for (const auto& rep : sys.partition.class_representatives()) {
        const auto members = sys.partition.members(rep);
        const State expected = step_class(members.front());
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (step_class(members[i]) != expected)
                return {false, std::make_pair(members.front(), members[i])};
        }
    }
    return {true, std::nullopt};
}

State quotient_step(const QuotientSystem& sys, const Certificate& cert,
                    const State& current_class) {
    if (!cert.compatible)
        throw ContractError("quotient_step called on an uncertified system");
    const auto reps = sys.partition.class_representatives();
    if (std::find(reps.begin(), reps.end(), current_class) == reps.end())
        throw StructuralError("'" + current_class + "' is not a class representative");
    return sys.partition.representative(sys.F.at(sys.f.at(current_class)));
}

ClassDynamics find_class_fixed_points(const QuotientSystem& sys, const Certificate& cert) {
    if (!cert.compatible)
        throw ContractError("find_class_fixed_points called on an uncertified system");

    ClassDynamics out;
    const auto reps = sys.partition.class_representatives();
    std::map<State, State> step;
    for (const auto& r : reps) step[r] = quotient_step(sys, cert, r);

    const std::optional<State> sink_class =
        sys.sink ? std::make_optional(sys.partition.representative(*sys.sink)) : std::nullopt;

    for (const auto& r : reps) {
        if (step.at(r) == r && !(sink_class && r == *sink_class))
            out.fixed_classes.push_back(r);
    }

    // Trajectories on a finite quotient enter a fixed class or a cycle
    // within |classes| steps; walk each class and classify where it lands.
    std::set<std::vector<State>> seen_cycles;
    for (const auto& r : reps) {
        std::vector<State> path{r};
        std::map<State, std::size_t> position{{r, 0}};
        for (;;) {
            const State next = step.at(path.back());
            auto hit = position.find(next);
            if (hit == position.end()) {
                position[next] = path.size();
                path.push_back(next);
                continue;
            }
            const std::size_t start = hit->second;
            const std::size_t period = path.size() - start;
            if (period == 1) {
                const State& target = path[start];
                if (sink_class && target == *sink_class)
                    out.basin[r] = {BasinEntry::Kind::Eliminated, target, 0};
                else
                    out.basin[r] = {BasinEntry::Kind::FixedPoint, target, 0};
            } else {
                std::vector<State> cycle(path.begin() + static_cast<long>(start), path.end());
                auto least = std::min_element(cycle.begin(), cycle.end());
                std::rotate(cycle.begin(), least, cycle.end());
                out.basin[r] = {BasinEntry::Kind::Cycle, cycle.front(), period};
                if (seen_cycles.insert(cycle).second) out.cycles.push_back(cycle);
            }
            break;
        }
    }
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
}

}  // namespace semiostat::equiv
