#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

#include "edtop/claim.hpp"
#include "edtop/conditions.hpp"
#include "edtop/enumerate.hpp"

namespace edtop {

// ---------------------------------------------------------------------------
// Exhaustive equivalence verification
// ---------------------------------------------------------------------------

// All verdicts computed for one topology: the seven theorem conditions in
// order a..g, the two unconditional identities, and both hint variants.
struct TopologyVerdicts {
  std::array<Verdict, 7> conditions;
  Verdict lemma1;
  Verdict corollary2;
  Verdict hint;       // first variable arbitrary; falsifiable
  Verdict hint_open;  // first variable open; expected to hold

  bool all_conditions_agree() const {
    for (const Verdict& v : conditions)
      if (v.holds != conditions[0].holds) return false;
    return true;
  }
  bool all_conditions_hold() const {
    for (const Verdict& v : conditions)
      if (!v.holds) return false;
    return true;
  }
};

inline TopologyVerdicts evaluate_all_conditions(const Topology& t) {
  TopologyVerdicts out;
  for (std::size_t i = 0; i < kTheoremConditions.size(); ++i)
    out.conditions[i] = check_condition(t, kTheoremConditions[i]);
  out.lemma1 = check_lemma1(t);
  out.corollary2 = check_corollary2(t);
  out.hint = check_hint_fact(t, HintVariant::arbitrary_a);
  out.hint_open = check_hint_fact(t, HintVariant::open_a);
  return out;
}

// A topology on which the seven verdicts are not constant.
struct Disagreement {
  int n = 0;
  std::size_t index = 0;
  std::vector<PointSet> opens;
  std::string key;  // canonical form, identifies the topology up to homeo
  std::array<bool, 7> verdicts{};
};

// A failed universal check (lemma1 / corollary2 / either hint variant).
struct CheckFailure {
  int n = 0;
  std::size_t index = 0;
  std::vector<PointSet> opens;
  std::string key;
  ConditionId which = ConditionId::lemma1;
  Witness witness;
};

struct TheoremPerN {
  int n = 0;
  std::uint64_t labeled_count = 0;
  std::optional<std::uint64_t> class_count;  // present when up_to_homeo
  std::uint64_t checked = 0;                 // labeled, or class representatives
  std::uint64_t ed_count = 0;                // all-seven-true verdict vectors
  std::uint64_t disagreements = 0;
  std::uint64_t lemma1_failures = 0;
  std::uint64_t corollary2_failures = 0;
  std::uint64_t hint_failures = 0;       // expected nonzero from n=2 on
  std::uint64_t hint_open_failures = 0;  // expected zero
};

// Scope note: everything here is about finite models only. Constant verdict
// vectors across an enumeration say nothing about infinite spaces, and the
// report never claims otherwise.
struct EquivalenceReport {
  int n_max = 0;
  bool up_to_homeo = false;
  std::vector<TheoremPerN> per_n;
  std::vector<Disagreement> disagreements;      // capped per run
  std::vector<CheckFailure> lemma_failures;     // lemma1 + corollary2, capped
  std::vector<CheckFailure> hint_counterexamples;  // both variants, capped
  std::uint64_t disagreements_total = 0;
  std::uint64_t lemma_failures_total = 0;
  std::uint64_t hint_counterexamples_total = 0;
  std::size_t failure_cap = 0;
  std::chrono::milliseconds duration{0};

  // Defect-free run: conditions pairwise equivalent, lemma1/corollary2
  // universal, open-variant hint universal. Arbitrary-variant hint
  // counterexamples are expected and do not count as defects.
  bool clean() const {
    if (disagreements_total != 0 || lemma_failures_total != 0) return false;
    for (const TheoremPerN& s : per_n)
      if (s.hint_open_failures != 0) return false;
    return true;
  }
};

struct VerifyOptions {
  int n_max = kEnumDefaultCap;
  bool up_to_homeo = false;
  bool extended = false;
  int jobs = 1;
  std::size_t failure_cap = 100;
};

namespace detail {

// Deterministic fan-out: topologies are collected into fixed-size batches,
// workers fill per-topology slots by stride, and results are merged strictly
// in position order. Output is identical for every worker count.
template <typename Work, typename Merge>
void batched_parallel_sweep(int n, bool extended, bool up_to_homeo, int jobs,
                            Work&& work, Merge&& merge) {
  using Result = std::invoke_result_t<Work&, const Topology&>;
  constexpr std::size_t kBatch = 256;
  std::vector<Topology> batch;
  std::vector<std::size_t> indices;
  batch.reserve(kBatch);
  indices.reserve(kBatch);

  auto flush = [&]() {
    if (batch.empty()) return;
    std::vector<Result> results(batch.size());
    const int workers = std::min<int>(jobs, static_cast<int>(batch.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = work(batch[i]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
          for (std::size_t i = w; i < batch.size(); i += workers)
            results[i] = work(batch[i]);
        });
      }
      for (std::thread& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i)
      merge(indices[i], batch[i], results[i]);
    batch.clear();
    indices.clear();
  };

  const TopologyVisitor collect = [&](std::size_t index, const Topology& t) {
    batch.push_back(t);
    indices.push_back(index);
    if (batch.size() == kBatch) flush();
    return true;
  };
  if (up_to_homeo)
    enumerate_homeo_classes(n, collect, extended);
  else
    enumerate_topologies(n, collect, extended);
  flush();
}

inline std::uint64_t count_labeled(int n, bool extended) {
  std::uint64_t count = 0;
  enumerate_topologies(n, [&](std::size_t, const Topology&) {
    ++count;
    return true;
  }, extended);
  return count;
}

}  // namespace detail

// Runs every verdict on every enumerated topology for n = 0..n_max and
// aggregates disagreements and universal-check failures. Never stops at the
// first defect; collects up to failure_cap of each so patterns stay visible.
inline EquivalenceReport verify_theorem(const VerifyOptions& opts) {
  detail::check_enum_cap(opts.n_max, opts.extended);
  const auto started = std::chrono::steady_clock::now();
  EquivalenceReport report;
  report.n_max = opts.n_max;
  report.up_to_homeo = opts.up_to_homeo;
  report.failure_cap = opts.failure_cap;

  for (int n = 0; n <= opts.n_max; ++n) {
    TheoremPerN stats;
    stats.n = n;
    if (opts.up_to_homeo) stats.class_count = 0;

    auto record_failure = [&](std::vector<CheckFailure>& list, std::uint64_t& total,
                              std::uint64_t& per_n_counter, std::size_t index,
                              const Topology& t, ConditionId which,
                              const Witness& w) {
      ++per_n_counter;
      ++total;
      if (list.size() < report.failure_cap)
        list.push_back(CheckFailure{n, index, t.opens(),
                                    canonical_form(t).to_string(), which, w});
    };

    detail::batched_parallel_sweep(
        n, opts.extended, opts.up_to_homeo, opts.jobs,
        [](const Topology& t) { return evaluate_all_conditions(t); },
        [&](std::size_t index, const Topology& t, const TopologyVerdicts& v) {
          ++stats.checked;
          if (opts.up_to_homeo) ++*stats.class_count;
          if (v.all_conditions_hold()) ++stats.ed_count;
          if (!v.all_conditions_agree()) {
            ++stats.disagreements;
            ++report.disagreements_total;
            if (report.disagreements.size() < report.failure_cap) {
              Disagreement d;
              d.n = n;
              d.index = index;
              d.opens = t.opens();
              d.key = canonical_form(t).to_string();
              for (std::size_t i = 0; i < 7; ++i)
                d.verdicts[i] = v.conditions[i].holds;
              report.disagreements.push_back(std::move(d));
            }
          }
          if (!v.lemma1.holds)
            record_failure(report.lemma_failures, report.lemma_failures_total,
                           stats.lemma1_failures, index, t, ConditionId::lemma1,
                           *v.lemma1.witness);
          if (!v.corollary2.holds)
            record_failure(report.lemma_failures, report.lemma_failures_total,
                           stats.corollary2_failures, index, t,
                           ConditionId::corollary2, *v.corollary2.witness);
          if (!v.hint.holds)
            record_failure(report.hint_counterexamples,
                           report.hint_counterexamples_total, stats.hint_failures,
                           index, t, ConditionId::hint, *v.hint.witness);
          if (!v.hint_open.holds)
            record_failure(report.hint_counterexamples,
                           report.hint_counterexamples_total,
                           stats.hint_open_failures, index, t,
                           ConditionId::hint_open, *v.hint_open.witness);
        });

    stats.labeled_count =
        opts.up_to_homeo ? detail::count_labeled(n, opts.extended) : stats.checked;
    report.per_n.push_back(std::move(stats));
  }

  report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

// ---------------------------------------------------------------------------
// ED census
// ---------------------------------------------------------------------------

// Per-n counts of labeled topologies satisfying the chosen theorem condition.
// Any of a..g gives the same counts when the equivalence holds; the census
// entry points are (a) and (g).
inline std::vector<std::uint64_t> ed_census(int n_max, ConditionId via = ConditionId::a,
                                            bool extended = false) {
  detail::check_enum_cap(n_max, extended);
  bool theorem_condition = false;
  for (ConditionId id : kTheoremConditions) theorem_condition |= (id == via);
  if (!theorem_condition)
    throw std::invalid_argument("census requires one of conditions a..g");
  std::vector<std::uint64_t> counts;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t ed = 0;
    enumerate_topologies(n, [&](std::size_t, const Topology& t) {
      if (check_condition(t, via).holds) ++ed;
      return true;
    }, extended);
    counts.push_back(ed);
  }
  return counts;
}

// ---------------------------------------------------------------------------
// First-counterexample search
// ---------------------------------------------------------------------------

struct Counterexample {
  int n = 0;
  std::size_t index = 0;
  Topology topology;
  Witness witness;
};

// First counterexample in enumeration order across n = 0..n_max, identical
// to the first failure model_check would report.
inline std::optional<Counterexample> find_counterexample(const Claim& c, int n_max,
                                                         bool extended = false) {
  detail::check_enum_cap(n_max, extended);
  std::optional<Counterexample> found;
  for (int n = 0; n <= n_max && !found; ++n) {
    enumerate_topologies(n, [&](std::size_t index, const Topology& t) {
      Verdict v = eval_claim(t, c);
      if (v.holds) return true;
      found = Counterexample{n, index, t, *v.witness};
      return false;
    }, extended);
  }
  return found;
}

}  // namespace edtop
