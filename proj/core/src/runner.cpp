#include "semiostat/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "semiostat/context.hpp"
#include "semiostat/equiv.hpp"
#include "semiostat/errors.hpp"
#include "semiostat/fincat.hpp"
#include "semiostat/plot.hpp"
#include "semiostat/scalar_dynamics.hpp"

namespace semiostat::dsl {

namespace {

constexpr int kDefaultStepBound = 32;

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string set_text(const std::set<std::string>& items) {
    if (items.empty()) return "{}";
    return "{ " + join({items.begin(), items.end()}) + " }";
}

/// Name for the absorbing sink; "none" unless the universe already uses it.
std::string pick_sink(const std::set<std::string>& universe) {
    std::string sink = "none";
    while (universe.count(sink)) sink = "_" + sink;
    return sink;
}

ContextPoset scenario_poset(const Scenario& s) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& chain : s.context_chains)
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            pairs.emplace_back(chain[i].text, chain[i + 1].text);
    return ContextPoset::from_pairs(s.context_names(), pairs);
}

context::ConstraintPresheaf scenario_presheaf(const Scenario& s) {
    context::ConstraintPresheaf p;
    p.poset = scenario_poset(s);
    for (const auto& m : s.universe) p.universe.push_back(m.text);
    for (const auto& [ctx, meanings] : s.admissible) {
        auto& dst = p.admissible[ctx.text];
        for (const auto& m : meanings) dst.insert(m.text);
    }
    return p;
}

/// The certified symbolic engine for a disambiguate run: universe plus sink,
/// filter as f (identity where unmapped, drop to the sink), named meaning
/// map as F (identity when absent), partition from the declared
/// equivalences.
struct SymbolicSystem {
    equiv::QuotientSystem sys;
    equiv::Certificate cert;
    std::string sink_class;
    bool f_defaulted = false;  // true when F is the identity fallback
};

std::map<std::string, std::string> filter_as_map(const Scenario& s, const FilterDecl* decl,
                                                 const std::string& sink) {
    std::map<std::string, std::string> out;
    for (const auto& m : s.universe) out[m.text] = m.text;
    if (decl)
        for (const auto& [from, to] : decl->entries)
            out[from.text] = to ? to->text : sink;
    out[sink] = sink;
    return out;
}

SymbolicSystem build_symbolic_system(const Scenario& s, const FilterDecl* filter,
                                     const FilterDecl* fmap) {
    std::set<std::string> universe;
    for (const auto& m : s.universe) universe.insert(m.text);
    const std::string sink = pick_sink(universe);

    SymbolicSystem out;
    out.f_defaulted = fmap == nullptr;
    for (const auto& m : s.universe) out.sys.states.push_back(m.text);
    out.sys.states.push_back(sink);
    out.sys.f = filter_as_map(s, filter, sink);
    out.sys.F = filter_as_map(s, fmap, sink);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [a, b] : s.equivalences) pairs.emplace_back(a.text, b.text);
    out.sys.partition = equiv::make_partition(out.sys.states, pairs);
    out.sys.sink = sink;
    out.cert = equiv::certify_compatibility(out.sys);
    out.sink_class = out.sys.partition.representative(sink);
    return out;
}

scalar::ScalarParams params_from_args(const Directive& d) {
    scalar::ScalarParams p;
    p.alpha = std::strtod(d.arg("alpha")->c_str(), nullptr);
    p.beta = std::strtod(d.arg("beta")->c_str(), nullptr);
    if (auto v = d.arg("eps")) p.epsilon = std::strtod(v->c_str(), nullptr);
    if (auto v = d.arg("tol")) p.tol = std::strtod(v->c_str(), nullptr);
    if (auto v = d.arg("max-iter")) p.max_iter = static_cast<int>(std::strtol(v->c_str(), nullptr, 10));
    scalar::validate(p);
    return p;
}

const char* stability_name(scalar::Stability s) {
    switch (s) {
        case scalar::Stability::Attracting: return "attracting";
        case scalar::Stability::Repelling: return "repelling";
        case scalar::Stability::Neutral: return "neutral";
    }
    return "unknown";
}

class Runner {
public:
    Runner(const Scenario& s, std::string out_dir)
        : scenario_(s), out_dir_(std::move(out_dir)) {}

    RunReport run() {
        report_.scenario_name = scenario_.name.text;
        emit_header();
        int n = 0;
        for (const auto& d : scenario_.runs) {
            ++n;
            out_ << "\n== RUN " << n << ": " << directive_text(d) << " ==\n";
            try {
                dispatch(d, n);
            } catch (const Error& e) {
                out_ << "== RESULT ==\n";
                out_ << "aborted: error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
                report_.success = false;
            }
        }
        report_.text = out_.str();
        return std::move(report_);
    }

private:
    static std::string directive_text(const Directive& d) {
        std::string out = directive_kind_name(d.kind);
        for (const auto& [k, v] : d.args) out += " " + k + "=" + v;
        return out;
    }

    void emit_header() {
        out_ << "== SCENARIO ==\n";
        out_ << "name: " << scenario_.name.text << "\n";
        std::vector<std::string> universe;
        for (const auto& m : scenario_.universe) universe.push_back(m.text);
        out_ << "universe: " << join(universe) << "\n";
        if (!scenario_.context_chains.empty()) {
            std::vector<std::string> chains;
            for (const auto& chain : scenario_.context_chains) {
                std::string c;
                for (std::size_t i = 0; i < chain.size(); ++i)
                    c += (i ? " <= " : "") + chain[i].text;
                chains.push_back(c);
            }
            out_ << "contexts: " << join(chains) << "\n";
        }
        for (const auto& [ctx, meanings] : scenario_.admissible) {
            std::vector<std::string> ms;
            for (const auto& m : meanings) ms.push_back(m.text);
            out_ << "admissible " << ctx.text << " = { " << join(ms) << " }\n";
        }
        for (const auto& f : scenario_.filters) {
            std::vector<std::string> entries;
            for (const auto& [from, to] : f.entries)
                entries.push_back(from.text + " -> " + (to ? to->text : "drop"));
            out_ << "filter " << f.name.text << ": " << join(entries) << "\n";
        }
        for (const auto& [a, b] : scenario_.equivalences)
            out_ << "equiv: " << a.text << " ~ " << b.text << "\n";
        for (const auto& [name, members] : scenario_.propositions) {
            std::vector<std::string> ms;
            for (const auto& m : members) ms.push_back(m.text);
            out_ << "prop " << name.text << " = { " << join(ms) << " }\n";
        }
    }

    void dispatch(const Directive& d, int index) {
        switch (d.kind) {
            case Directive::Kind::CheckLaws: run_check_laws(); break;
            case Directive::Kind::Disambiguate: run_disambiguate(d); break;
            case Directive::Kind::TruthQuery: run_truth_query(d); break;
            case Directive::Kind::IterateScalar: run_iterate_scalar(d, index); break;
            case Directive::Kind::FixedPoints: run_fixed_points(d); break;
        }
    }

    void emit_law_report(const char* title, const LawReport& report) {
        if (report.passed()) {
            out_ << title << ": pass\n";
        } else {
            out_ << title << ": fail (" << report.violations.size() << " violations)\n";
            for (const auto& v : report.violations)
                out_ << "  violation[" << violation_kind_name(v.kind) << "]: " << v.detail << "\n";
            report_.success = false;
        }
        for (const auto& note : report.notes) out_ << "note: " << note << "\n";
    }

    void run_check_laws() {
        out_ << "ops: poset_as_category -> check_category; check_presheaf; certify_compatibility\n";
        out_ << "== LAWS ==\n";
        bool all_pass = true;
        if (scenario_.context_chains.empty()) {
            out_ << "contexts: none declared, nothing to check\n";
        } else {
            const auto category = fincat::poset_as_category(scenario_poset(scenario_));
            const auto cat_report = fincat::check_category(category);
            emit_law_report("category laws", cat_report);
            all_pass = all_pass && cat_report.passed();
            if (!scenario_.admissible.empty()) {
                const auto presheaf_report = context::check_presheaf(scenario_presheaf(scenario_));
                emit_law_report("presheaf antitonicity", presheaf_report);
                all_pass = all_pass && presheaf_report.passed();
            }
        }
        for (const auto& f : scenario_.filters) {
            const auto system = build_symbolic_system(scenario_, &f, nullptr);
            if (system.cert.compatible) {
                out_ << "filter " << f.name.text << ": compatible\n";
            } else {
                out_ << "filter " << f.name.text << ": incompatible, counterexample ("
                     << system.cert.counterexample->first << ", "
                     << system.cert.counterexample->second << ")\n";
                all_pass = false;
                report_.success = false;
            }
        }
        out_ << "== RESULT ==\n" << (all_pass ? "pass" : "fail") << "\n";
    }

    void run_disambiguate(const Directive& d) {
        out_ << "ops: make_partition -> certify_compatibility -> quotient_step\n";
        const FilterDecl* filter = scenario_.find_filter(*d.arg("filter"));
        const FilterDecl* fmap = nullptr;
        if (auto name = d.arg("fmap")) fmap = scenario_.find_filter(*name);
        const auto system = build_symbolic_system(scenario_, filter, fmap);
        out_ << "F: " << (system.f_defaulted ? "identity (defaulted)" : "map '" + fmap->name.text + "'")
             << "\n";
        if (!system.cert.compatible) {
            out_ << "certificate: incompatible\n";
            out_ << "== RESULT ==\n";
            out_ << "aborted: filter conflicts with declared equivalences, counterexample ("
                 << system.cert.counterexample->first << ", "
                 << system.cert.counterexample->second << ")\n";
            report_.success = false;
            return;
        }
        out_ << "certificate: compatible\n";

        int bound = kDefaultStepBound;
        if (auto v = d.arg("steps")) bound = static_cast<int>(std::strtol(v->c_str(), nullptr, 10));

        std::set<std::string> current;
        if (auto start = d.arg("start")) {
            std::stringstream parts(*start);
            std::string m;
            while (std::getline(parts, m, ','))
                current.insert(system.sys.partition.representative(m));
        } else {
            for (const auto& m : scenario_.universe)
                current.insert(system.sys.partition.representative(m.text));
        }
        current.erase(system.sink_class);

        std::vector<std::set<std::string>> seen{current};
        out_ << "== TRAJECTORY ==\n";
        out_ << "t=0: " << set_text(current) << "\n";

        for (int t = 1; t <= bound; ++t) {
            std::set<std::string> next;
            for (const auto& c : current)
                next.insert(equiv::quotient_step(system.sys, system.cert, c));
            next.erase(system.sink_class);
            if (next == current) {
                out_ << "== RESULT ==\n";
                std::vector<std::string> classes;
                for (const auto& c : current) classes.push_back("[" + c + "]");
                out_ << "stabilized at t=" << t - 1 << ": " << set_text(current)
                     << (classes.empty() ? std::string(" (no surviving interpretation)")
                                         : " = class " + join(classes)) << "\n";
                return;
            }
            out_ << "t=" << t << ": " << set_text(next) << "\n";
            auto revisit = std::find(seen.begin(), seen.end(), next);
            if (revisit != seen.end()) {
                out_ << "== RESULT ==\n";
                out_ << "cycle of period " << (seen.end() - revisit) << " from t="
                     << (revisit - seen.begin()) << "\n";
                return;
            }
            seen.push_back(next);
            current = std::move(next);
        }
        out_ << "== RESULT ==\n";
        out_ << "no stabilization within " << bound << " steps\n";
        report_.success = false;
    }

    void run_truth_query(const Directive& d) {
        out_ << "ops: stage_truth -> truth_downset\n";
        const auto presheaf = scenario_presheaf(scenario_);
        const auto* members = scenario_.find_proposition(*d.arg("prop"));
        std::set<std::string> prop;
        for (const auto& m : *members) prop.insert(m.text);

        out_ << "== STAGE TRUTH ==\n";
        for (const auto& c : presheaf.poset.elements())
            out_ << c << ": "
                 << context::stage_truth_name(context::stage_truth(presheaf, prop, c)) << "\n";
        const auto downset = context::truth_downset(presheaf, prop);
        out_ << "== RESULT ==\n";
        out_ << "validated at: "
             << (downset.members().empty()
                     ? "(nowhere)"
                     : join({downset.members().begin(), downset.members().end()}))
             << "\n";
    }

    void run_iterate_scalar(const Directive& d, int index) {
        out_ << "ops: contraction_report; iterate -> project\n";
        const auto params = params_from_args(d);
        const double x0 = std::strtod(d.arg("x0")->c_str(), nullptr);

        const auto contraction = scalar::contraction_report(params);
        out_ << "contraction bound beta*(1+alpha) = " << scalar::format_short(contraction.bound)
             << (contraction.is_certified ? " < 1: certified contraction"
                                          : " >= 1: not certified") << "\n";

        const auto record = scalar::iterate(params, x0);
        const std::string artifact = scenario_.name.text + "-run" + std::to_string(index) +
                                     "-trajectory.csv";
        scalar::write_trajectory_csv(record, (std::filesystem::path(out_dir_) / artifact).string());
        report_.artifacts.push_back(artifact);

        out_ << "== TRAJECTORY ==\n";
        const auto& samples = record.samples;
        const std::size_t shown = samples.size() <= 12 ? samples.size() : 8;
        for (std::size_t i = 0; i < shown; ++i)
            out_ << "t=" << samples[i].first << ": " << scalar::format_short(samples[i].second)
                 << "\n";
        if (shown < samples.size()) {
            out_ << "... (" << samples.size() - shown - 2 << " samples elided)\n";
            for (std::size_t i = samples.size() - 2; i < samples.size(); ++i)
                out_ << "t=" << samples[i].first << ": "
                     << scalar::format_short(samples[i].second) << "\n";
        }
        out_ << "artifact: " << artifact << "\n";
        out_ << "== RESULT ==\n";
        switch (record.status) {
            case scalar::TrajectoryRecord::Status::Converged:
                out_ << "converged at t=" << record.converged_at << ": x* = "
                     << scalar::format_short(record.fixed_point) << "\n";
                break;
            case scalar::TrajectoryRecord::Status::CycleDetected:
                out_ << "cycle detected, period " << record.cycle_period << "\n";
                break;
            case scalar::TrajectoryRecord::Status::MaxIterReached:
                out_ << "no convergence within " << params.max_iter << " iterations\n";
                break;
        }
    }

    void run_fixed_points(const Directive& d) {
        out_ << "ops: find_fixed_points\n";
        const auto params = params_from_args(d);
        const std::string range = *d.arg("range");
        const auto comma = range.find(',');
        const double lo = std::strtod(range.substr(0, comma).c_str(), nullptr);
        const double hi = std::strtod(range.substr(comma + 1).c_str(), nullptr);

        const auto points = scalar::find_fixed_points(params, lo, hi);
        out_ << "== RESULT ==\n";
        if (points.empty()) {
            out_ << "no fixed points in [" << scalar::format_short(lo) << ", "
                 << scalar::format_short(hi) << "]\n";
            return;
        }
        for (const auto& fp : points)
            out_ << "x* = " << scalar::format_short(fp.x) << " (" << stability_name(fp.stability)
                 << ", phi' = " << scalar::format_short(fp.derivative) << ")\n";
    }

    const Scenario& scenario_;
    std::string out_dir_;
    std::ostringstream out_;
    RunReport report_;
};

}  // namespace

RunReport run_scenario(const Scenario& s, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
    return Runner(s, out_dir).run();
}

RunReport check_scenario(const Scenario& s) {
    Scenario laws_only = s;
    laws_only.runs.clear();
    Directive d;
    d.kind = Directive::Kind::CheckLaws;
    laws_only.runs.push_back(d);
    return Runner(laws_only, ".").run();
}

}  // namespace semiostat::dsl
