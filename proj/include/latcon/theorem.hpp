#pragma once

// Exhaustive sweeps over all n-element lattices: the congruence-count
// spectrum and the check that many congruences force planarity.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/enumeration.hpp"
#include "latcon/planarity.hpp"

namespace latcon {

// "0-1 0-2 ..." from the cover pairs in index order.
inline std::string cover_list(const Poset& p) {
    std::string s;
    for (auto [a, b] : p.covers()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a) + '-' + std::to_string(b);
    }
    return s;
}

// Runs f(i) for i in [0, count) on `jobs` threads. Each index is handled
// exactly once, so results stored by index do not depend on `jobs`.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) f(i);
        });
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

struct SpectrumReport {
    int n = 0;
    std::vector<std::uint64_t> values;            // distinct |Con|, descending
    std::map<std::uint64_t, std::size_t> counts;  // |Con| -> classes
    std::size_t total_classes = 0;
};

inline SpectrumReport spectrum(int n, int jobs = 1, int max_n = kDefaultMaxEnumeration) {
    const std::vector<Lattice> level = enumerate_lattices(n, max_n);
    std::vector<std::uint64_t> con(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) { con[i] = con_count(level[i]); });
    SpectrumReport r;
    r.n = n;
    r.total_classes = level.size();
    for (std::uint64_t c : con) ++r.counts[c];
    for (auto it = r.counts.rbegin(); it != r.counts.rend(); ++it) r.values.push_back(it->first);
    return r;
}

// The five largest spectrum values predicted for n-element lattices, as
// multiples of 2^(n-5): 16, 8, 5, 4, 7/2. Stored doubled so that every
// entry is an integer: predicted value = doubled / 2.
inline std::vector<std::uint64_t> predicted_top_five_doubled(int n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k : {32U, 16U, 10U, 8U, 7U}) {
        // k * 2^(n-5), with n < 5 shifting right (exact only when divisible).
        out.push_back(n >= 5 ? k << (n - 5) : k >> (5 - n));
    }
    return out;
}

inline std::string format_doubled(std::uint64_t d) {
    return d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
}

inline std::string format_spectrum(const SpectrumReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << '\n' << "classes=" << r.total_classes << '\n';
    out << "values=" << r.values.size() << '\n';
    out << "con      classes\n";
    for (std::uint64_t v : r.values) {
        std::string c = std::to_string(v);
        out << c << std::string(c.size() < 9 ? 9 - c.size() : 1, ' ') << r.counts.at(v) << '\n';
    }
    const std::vector<std::uint64_t> predicted = predicted_top_five_doubled(r.n);
    out << "predicted_top5=";
    bool match = r.values.size() >= predicted.size();
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        out << (i ? "," : "") << format_doubled(predicted[i]);
        if (match && predicted[i] != 2 * r.values[i]) match = false;
    }
    out << '\n' << "observed_top5=";
    for (std::size_t i = 0; i < std::min<std::size_t>(5, r.values.size()); ++i) out << (i ? "," : "") << r.values[i];
    out << '\n' << "top5_matches_prediction=" << (match ? "true" : "false") << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Theorem sweep
// ---------------------------------------------------------------------------

struct ClassRecord {
    std::string covers;  // canonical cover list
    std::uint64_t con = 0;
    bool many = false;
    bool planar = false;        // forbidden-subposet verdict
    bool planar_graph = false;  // covering-graph verdict
    bool dismantlable = false;
    bool forces_few = false;       // a sufficient condition for few congruences holds
    bool contains_e0_f0 = false;   // E_0 or F_0 (or a dual) embeds as a subposet
};

struct TheoremReport {
    int n = 0;
    std::size_t classes_checked = 0;
    std::size_t many_congruence_classes = 0;
    std::size_t planar_classes = 0;
    std::vector<ClassRecord> records;     // in enumeration order
    std::vector<ClassRecord> violations;  // many and non-planar
    // Companion facts, each expected to be zero.
    std::size_t planar_not_dismantlable = 0;
    std::size_t few_criteria_inconsistent = 0;  // forces_few but many
    std::size_t e0_f0_inconsistent = 0;        // contains E_0/F_0 but many
    std::size_t planarity_disagreements = 0;   // the two planarity methods differ
};

inline ClassRecord analyze_class(const Lattice& l) {
    ClassRecord r;
    r.covers = cover_list(l.poset());
    r.con = con_count(l);
    r.many = exceeds_threshold(r.con, l.size());
    r.planar = is_planar_kr(l).planar;
    r.planar_graph = is_planar_graph_oracle(l);
    r.dismantlable = is_dismantlable(l);
    r.forces_few = few_criteria(l).forces_few();
    const Poset dual = l.poset().dual();
    for (const KRCatalogEntry& e : kr_catalog_all()) {
        if (e.size > l.size()) break;
        if (e.name != "E_0" && e.name != "F_0") continue;
        if (find_embedding(e.poset, l.poset()) || find_embedding(e.poset, dual)) r.contains_e0_f0 = true;
    }
    return r;
}

inline TheoremReport verify_theorem(int n, int jobs = 1, int max_n = kDefaultMaxEnumeration) {
    const std::vector<Lattice> level = enumerate_lattices(n, max_n);
    TheoremReport rep;
    rep.n = n;
    rep.records.resize(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) { rep.records[i] = analyze_class(level[i]); });
    rep.classes_checked = level.size();
    for (const ClassRecord& r : rep.records) {
        rep.many_congruence_classes += r.many;
        rep.planar_classes += r.planar;
        if (r.many && !r.planar) rep.violations.push_back(r);
        rep.planar_not_dismantlable += r.planar && !r.dismantlable;
        rep.few_criteria_inconsistent += r.forces_few && r.many;
        rep.e0_f0_inconsistent += r.contains_e0_f0 && r.many;
        rep.planarity_disagreements += r.planar != r.planar_graph;
    }
    return rep;
}

inline std::string format_record(const ClassRecord& r) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream out;
    out << "covers=" << r.covers << ";con=" << r.con << ";planar=" << b(r.planar)
        << ";dismantlable=" << b(r.dismantlable) << ";many=" << b(r.many);
    return out.str();
}

inline std::string format_theorem(const TheoremReport& r, bool with_records) {
    std::ostringstream out;
    out << "n=" << r.n << '\n';
    out << "classes=" << r.classes_checked << '\n';
    out << "many=" << r.many_congruence_classes << '\n';
    out << "planar=" << r.planar_classes << '\n';
    out << "planar_not_dismantlable=" << r.planar_not_dismantlable << '\n';
    out << "few_criteria_inconsistent=" << r.few_criteria_inconsistent << '\n';
    out << "e0_f0_inconsistent=" << r.e0_f0_inconsistent << '\n';
    out << "planarity_disagreements=" << r.planarity_disagreements << '\n';
    out << "violations=" << r.violations.size() << '\n';
    for (const ClassRecord& v : r.violations) out << "violation " << format_record(v) << '\n';
    if (with_records)
        for (const ClassRecord& c : r.records) out << format_record(c) << '\n';
    return out.str();
}

}  // namespace latcon
