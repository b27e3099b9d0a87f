// Command-line driver: check / verify / enumerate / claim / census.
//
// Exit codes: 0 all checks passed, 1 counterexample or disagreement found,
// 2 usage error, 3 invalid input file or claim syntax.
//
// Stdout is byte-stable for fixed inputs and flags: reports carry
// duration_ms = 0 unless --timings is given, and wall-clock diagnostics go
// to stderr only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <edtop/edtop.hpp>

namespace {

using edtop::json;

std::string format_opens(const std::vector<edtop::PointSet>& opens) {
  std::string s = "[";
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (i) s += ",";
    s += opens[i].to_string();
  }
  s += "]";
  return s;
}

const char* statement_text(edtop::ConditionId id) {
  for (const edtop::BuiltinClaim& b : edtop::builtin_claims())
    if (b.id == id) return b.text;
  return "";
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void note_timing(bool timings, std::chrono::steady_clock::time_point started) {
  if (!timings) return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "wall time: " << ms.count() << " ms\n";
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point started) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started)
          .count());
}

// ---------------------------------------------------------------------------
// check <file>
// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string condition = "all";
  bool lemmas = false;
  std::string format = "text";
};

int run_check(const CheckArgs& args) {
  const edtop::Topology t = edtop::load_topology(args.file);

  std::vector<edtop::ConditionId> requested;
  if (args.condition == "all")
    requested.assign(edtop::kTheoremConditions.begin(),
                     edtop::kTheoremConditions.end());
  else
    requested.push_back(*edtop::condition_from_string(args.condition));

  // The inclusion with an arbitrary first argument is falsifiable; its
  // counterexamples are reported but never fail the run.
  struct Row {
    edtop::ConditionId id;
    edtop::Verdict verdict;
    bool counted;
  };
  std::vector<Row> rows;
  for (edtop::ConditionId id : requested)
    rows.push_back({id, edtop::check_condition(t, id), true});
  if (args.lemmas) {
    rows.push_back({edtop::ConditionId::lemma1, edtop::check_lemma1(t), true});
    rows.push_back(
        {edtop::ConditionId::corollary2, edtop::check_corollary2(t), true});
    rows.push_back({edtop::ConditionId::e_disjoint,
                    edtop::check_condition_e_disjoint(t), true});
    rows.push_back({edtop::ConditionId::hint_open,
                    edtop::check_hint_fact(t, edtop::HintVariant::open_a), true});
    rows.push_back({edtop::ConditionId::hint,
                    edtop::check_hint_fact(t, edtop::HintVariant::arbitrary_a),
                    false});
  }

  bool failed = false;
  for (const Row& r : rows) failed |= r.counted && !r.verdict.holds;
  const bool full_sweep = args.condition == "all";
  const bool is_ed = full_sweep &&
                     std::all_of(rows.begin(), rows.begin() + 7,
                                 [](const Row& r) { return r.verdict.holds; });

  if (args.format == "json") {
    json checks = json::array();
    for (const Row& r : rows) {
      json row{{"id", edtop::to_string(r.id)},
               {"statement", statement_text(r.id)},
               {"holds", r.verdict.holds},
               {"counted", r.counted}};
      if (r.verdict.witness) row["witness"] = edtop::witness_to_json(*r.verdict.witness);
      checks.push_back(std::move(row));
    }
    json params{{"file", args.file},
                {"condition", args.condition},
                {"lemmas", args.lemmas}};
    json per_n = json::array();
    per_n.push_back(json{{"n", t.point_count()},
                         {"topology", edtop::topology_to_json(t)},
                         {"checks", std::move(checks)}});
    if (full_sweep) per_n.back()["extremally_disconnected"] = is_ed;
    json failures = json::array();
    for (const Row& r : rows)
      if (r.counted && !r.verdict.holds)
        failures.push_back(json{{"id", edtop::to_string(r.id)},
                                {"witness", edtop::witness_to_json(*r.verdict.witness)}});
    emit(edtop::report_document("check", std::move(params), std::move(per_n),
                                std::move(failures), 0));
  } else {
    std::cout << "points: " << t.point_count() << "\n";
    std::cout << "opens:  " << format_opens(t.opens()) << "\n";
    for (const Row& r : rows) {
      std::cout << "(" << edtop::to_string(r.id) << ") "
                << statement_text(r.id) << "\n    ";
      if (r.verdict.holds)
        std::cout << "holds\n";
      else {
        std::cout << "fails: " << r.verdict.witness->to_string();
        if (!r.counted) std::cout << "  [falsifiable as stated; not counted]";
        std::cout << "\n";
      }
    }
    if (full_sweep)
      std::cout << "extremally disconnected: " << (is_ed ? "yes" : "no") << "\n";
  }
  return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// verify --max-n N
// ---------------------------------------------------------------------------

struct VerifyArgs {
  int max_n = edtop::kEnumDefaultCap;
  bool up_to_homeo = false;
  bool extended = false;
  int jobs = 1;
  std::size_t max_failures = 100;
  std::string format = "text";
  bool timings = false;
};

int run_verify(const VerifyArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  edtop::VerifyOptions opts;
  opts.n_max = args.max_n;
  opts.up_to_homeo = args.up_to_homeo;
  opts.extended = args.extended;
  opts.jobs = args.jobs;
  opts.failure_cap = args.max_failures;
  const edtop::EquivalenceReport report = edtop::verify_theorem(opts);
  const bool clean = report.clean();

  if (args.format == "json") {
    emit(edtop::to_document(report, args.extended, args.timings));
  } else {
    std::cout << "equivalence sweep over all topologies with n <= "
              << report.n_max
              << (report.up_to_homeo ? ", one representative per homeomorphism class"
                                     : "")
              << "\n";
    std::cout << "scope: finite models only; agreement here implies nothing "
                 "beyond the enumerated spaces\n";
    std::cout << "   n    labeled";
    if (report.up_to_homeo) std::cout << "    classes";
    std::cout << "         ed   disagree\n";
    std::uint64_t hint_total = 0;
    for (const edtop::TheoremPerN& s : report.per_n) {
      std::cout << std::setw(4) << s.n << std::setw(11) << s.labeled_count;
      if (report.up_to_homeo) std::cout << std::setw(11) << *s.class_count;
      std::cout << std::setw(11) << s.ed_count << std::setw(11)
                << s.disagreements << "\n";
      hint_total += s.hint_failures;
    }
    std::cout << "conditions (a)-(g): "
              << (report.disagreements_total == 0
                      ? "agree on every checked topology"
                      : std::to_string(report.disagreements_total) +
                            " disagreement(s) found")
              << "\n";
    std::cout << "lemma1 / corollary2: "
              << (report.lemma_failures_total == 0
                      ? "no failures"
                      : std::to_string(report.lemma_failures_total) +
                            " failure(s)")
              << "\n";
    std::uint64_t open_total = 0;
    for (const edtop::TheoremPerN& s : report.per_n)
      open_total += s.hint_open_failures;
    std::cout << "inclusion A & int(cl(B)) <= cl(A & B), A open: "
              << (open_total == 0 ? "no failures"
                                  : std::to_string(open_total) + " failure(s)")
              << "\n";
    std::cout << "inclusion A & int(cl(B)) <= cl(A & B), A arbitrary: "
              << hint_total << " counterexample(s)";
    if (!report.hint_counterexamples.empty()) {
      const edtop::CheckFailure& f = report.hint_counterexamples.front();
      std::cout << ", first at n=" << f.n << " #" << f.index << " opens="
                << format_opens(f.opens) << " with " << f.witness.to_string();
    }
    std::cout << "\n";
    for (const edtop::Disagreement& d : report.disagreements) {
      std::cout << "disagreement: n=" << d.n << " #" << d.index << " opens="
                << format_opens(d.opens) << " verdicts";
      for (std::size_t i = 0; i < edtop::kTheoremConditions.size(); ++i)
        std::cout << " " << edtop::to_string(edtop::kTheoremConditions[i])
                  << "=" << (d.verdicts[i] ? "T" : "F");
      std::cout << "\n";
    }
    for (const edtop::CheckFailure& f : report.lemma_failures)
      std::cout << to_string(f.which) << " failure: n=" << f.n << " #"
                << f.index << " opens=" << format_opens(f.opens) << " with "
                << f.witness.to_string() << "\n";
    std::cout << "result: " << (clean ? "all checks passed" : "DEFECTS FOUND")
              << "\n";
  }
  note_timing(args.timings, started);
  return clean ? 0 : 1;
}

// ---------------------------------------------------------------------------
// enumerate --n N
// ---------------------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  bool up_to_homeo = false;
  bool extended = false;
  std::string format = "text";
};

int run_enumerate(const EnumerateArgs& args) {
  std::uint64_t total = 0;
  const auto visit = [&](std::size_t index, const edtop::Topology& t) {
    ++total;
    if (args.format == "json")
      std::cout << edtop::topology_to_json(t).dump() << "\n";
    else
      std::cout << "#" << index << "  " << format_opens(t.opens()) << "\n";
    return true;
  };
  if (args.up_to_homeo)
    edtop::enumerate_homeo_classes(args.n, visit, args.extended);
  else
    edtop::enumerate_topologies(args.n, visit, args.extended);
  if (args.format != "json") std::cout << "total: " << total << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// claim "<text>" --max-n N
// ---------------------------------------------------------------------------

struct ClaimArgs {
  std::string text;
  int max_n = edtop::kEnumDefaultCap;
  std::string filter = "all";
  bool extended = false;
  std::size_t max_failures = 100;
  std::string format = "text";
  bool timings = false;
};

int run_claim(const ClaimArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const edtop::Claim claim = edtop::parse_claim(args.text);
  edtop::TopologyFilter filter = edtop::TopologyFilter::all;
  if (args.filter == "ed") filter = edtop::TopologyFilter::ed_only;
  if (args.filter == "non-ed") filter = edtop::TopologyFilter::non_ed_only;

  const edtop::Report report = edtop::model_check(
      claim, args.max_n, filter, args.extended, args.max_failures);

  if (args.format == "json") {
    emit(edtop::to_document(report, edtop::to_string(claim), filter, args.max_n,
                            args.extended, args.timings));
  } else {
    std::cout << "claim:  " << edtop::to_string(claim) << "\n";
    std::cout << "sweep:  n <= " << args.max_n << ", filter " << args.filter
              << "\n";
    std::cout << "   n   enumerated    checked         ed   failures\n";
    std::uint64_t checked = 0;
    for (const edtop::SweepStats& s : report.per_n) {
      std::cout << std::setw(4) << s.n << std::setw(13) << s.enumerated
                << std::setw(11) << s.checked << std::setw(11) << s.ed_count
                << std::setw(11) << s.failures << "\n";
      checked += s.checked;
    }
    if (report.failures_total == 0) {
      std::cout << "claim holds on all " << checked << " checked topologies\n";
    } else {
      const edtop::ClaimFailure& f = report.failures.front();
      std::cout << "first counterexample: n=" << f.n << " #" << f.index
                << " opens=" << format_opens(f.opens) << "\n    "
                << f.witness.to_string() << "\n";
      std::cout << "claim fails on " << report.failures_total << " of "
                << checked << " checked topologies\n";
    }
  }
  note_timing(args.timings, started);
  return report.failures_total == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// census --max-n N
// ---------------------------------------------------------------------------

struct CensusArgs {
  int max_n = edtop::kEnumDefaultCap;
  bool extended = false;
  std::string format = "text";
  bool timings = false;
};

int run_census(const CensusArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  // Two independent routes through the same models; they must agree.
  const std::vector<std::uint64_t> via_a =
      edtop::ed_census(args.max_n, edtop::ConditionId::a, args.extended);
  const std::vector<std::uint64_t> via_g =
      edtop::ed_census(args.max_n, edtop::ConditionId::g, args.extended);
  std::vector<std::uint64_t> labeled;
  for (int n = 0; n <= args.max_n; ++n)
    labeled.push_back(edtop::detail::count_labeled(n, args.extended));

  bool agree = true;
  for (int n = 0; n <= args.max_n; ++n) agree &= via_a[n] == via_g[n];

  if (args.format == "json") {
    emit(edtop::census_document(args.max_n, args.extended, labeled, via_a,
                                via_g, args.timings ? elapsed_ms(started) : 0));
  } else {
    std::cout << "   n    labeled   ed via (a)   ed via (g)\n";
    for (int n = 0; n <= args.max_n; ++n)
      std::cout << std::setw(4) << n << std::setw(11) << labeled[n]
                << std::setw(13) << via_a[n] << std::setw(13) << via_g[n]
                << "\n";
    std::cout << (agree ? "routes agree for every n"
                        : "ROUTES DISAGREE: conditions (a) and (g) classify "
                          "some topology differently")
              << "\n";
  }
  note_timing(args.timings, started);
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topology workbench for extremal disconnectedness"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "evaluate the characterizations on one topology file");
  check->add_option("file", check_args.file, "topology file (JSON)")->required();
  check->add_option("--condition", check_args.condition,
                    "single condition a..g, or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "f", "g", "all"}));
  check->add_flag("--lemmas", check_args.lemmas,
                  "also evaluate the unconditional identities and both "
                  "inclusion variants");
  check->add_option("--format", check_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "exhaustively cross-check all characterizations over every topology");
  verify->add_option("--max-n", verify_args.max_n, "largest point count")
      ->required();
  verify->add_flag("--up-to-homeo", verify_args.up_to_homeo,
                   "check one representative per homeomorphism class");
  verify->add_flag("--extended", verify_args.extended,
                   "allow point counts above the default cap");
  verify->add_option("--jobs", verify_args.jobs, "worker threads")
      ->check(CLI::Range(1, 64));
  verify->add_option("--max-failures", verify_args.max_failures,
                     "cap on retained failure records");
  verify->add_option("--format", verify_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timings", verify_args.timings,
                   "report real wall-clock time (off by default so output is "
                   "byte-stable)");

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list every topology on n labeled points");
  enumerate->add_option("--n", enum_args.n, "point count")->required();
  enumerate->add_flag("--up-to-homeo", enum_args.up_to_homeo,
                      "one representative per homeomorphism class");
  enumerate->add_flag("--extended", enum_args.extended,
                      "allow point counts above the default cap");
  enumerate->add_option("--format", enum_args.format,
                        "text, or json (one topology document per line)")
      ->check(CLI::IsMember({"text", "json"}));

  ClaimArgs claim_args;
  CLI::App* claim = app.add_subcommand(
      "claim", "model-check a quantified closure/interior identity");
  claim->add_option("text", claim_args.text, "claim text")->required();
  claim->add_option("--max-n", claim_args.max_n, "largest point count")
      ->required();
  claim->add_option("--filter", claim_args.filter,
                    "restrict the sweep: all, ed, or non-ed")
      ->check(CLI::IsMember({"all", "ed", "non-ed"}));
  claim->add_flag("--extended", claim_args.extended,
                  "allow point counts above the default cap");
  claim->add_option("--max-failures", claim_args.max_failures,
                    "cap on retained counterexamples");
  claim->add_option("--format", claim_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  claim->add_flag("--timings", claim_args.timings,
                  "report real wall-clock time (off by default so output is "
                  "byte-stable)");

  CensusArgs census_args;
  CLI::App* census = app.add_subcommand(
      "census", "count extremally disconnected topologies by two routes");
  census->add_option("--max-n", census_args.max_n, "largest point count")
      ->required();
  census->add_flag("--extended", census_args.extended,
                   "allow point counts above the default cap");
  census->add_option("--format", census_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  census->add_flag("--timings", census_args.timings,
                   "report real wall-clock time (off by default so output is "
                   "byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help and --version exit 0, real errors 2
  }

  try {
    if (*check) return run_check(check_args);
    if (*verify) return run_verify(verify_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*claim) return run_claim(claim_args);
    if (*census) return run_census(census_args);
  } catch (const edtop::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "; pass --extended to go beyond the "
              << "default cap (hard limit " << edtop::kEnumHardCap << ")\n";
    return 2;
  } catch (const edtop::claim_error& e) {
    std::cerr << "claim error: " << e.what() << "\n";
    return 3;
  } catch (const edtop::topology_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const edtop::schema_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const edtop::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const edtop::universe_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
