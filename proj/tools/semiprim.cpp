// Command-line front end: catalog verification, ad-hoc group analysis,
// holomorph search, machine-readable reporting.
//
// Subcommands:
//   catalog list                       list the classified entries
//   verify <entry>                     verify one catalog entry
//   verify-all [--include-extended]    verify everything + mandatory searches
//   analyze <file.perm>                profile a permutation group file
//   search --table <file.tbl>          holomorph rank-3 search over a table
//
// Global flags: --json <path> (machine-readable run report), --threads N
// (reserved; results are thread-count independent), --seed S (reserved; all
// algorithms are deterministic). Exit code 0 iff no task failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semiprim/catalog.hpp"
#include "semiprim/cayley.hpp"
#include "semiprim/certificates.hpp"
#include "semiprim/group_io.hpp"
#include "semiprim/holsearch.hpp"
#include "semiprim/special_groups.hpp"

namespace {

using namespace semiprim;

constexpr const char *kToolVersion = "1.0.0";
constexpr const char *kReportSchema = "semiprim-run-report/1";

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", s);
  return buf;
}

struct Task {
  std::string name;
  std::string outcome; // pass | fail | skipped
  std::string reason;  // non-empty for fail/skipped
  double wall_clock_seconds = 0.0;
  ordered_json detail; // certificates and counters backing the outcome
};

/// Collects task outcomes, prints one line per task, assembles the report.
class TaskRunner {
public:
  /// fn returns pass/fail plus a detail document and may fill `summary`
  /// with a short console annotation; exceptions become failures.
  void run(const std::string &name,
           const std::function<bool(ordered_json &, std::string &)> &fn) {
    Task task;
    task.name = name;
    std::string summary;
    auto start = std::chrono::steady_clock::now();
    try {
      bool ok = fn(task.detail, summary);
      task.outcome = ok ? "pass" : "fail";
      if (!ok)
        task.reason = summary.empty() ? "checks failed" : summary;
    } catch (const std::exception &ex) {
      task.outcome = "fail";
      task.reason = ex.what();
    }
    task.wall_clock_seconds = round2(elapsed(start));
    print_line(task, summary);
    tasks_.push_back(std::move(task));
  }

  void skip(const std::string &name, const std::string &reason) {
    Task task;
    task.name = name;
    task.outcome = "skipped";
    task.reason = reason;
    std::printf("[SKIP] %s: %s\n", name.c_str(), reason.c_str());
    tasks_.push_back(std::move(task));
  }

  bool all_passed() const {
    for (const Task &t : tasks_)
      if (t.outcome == "fail")
        return false;
    return true;
  }

  ordered_json report(const std::string &command_line) const {
    ordered_json tasks = ordered_json::array();
    for (const Task &t : tasks_) {
      ordered_json doc{{"name", t.name},
                       {"outcome", t.outcome},
                       {"reason", t.reason.empty() ? ordered_json(nullptr)
                                                   : ordered_json(t.reason)},
                       {"wall_clock_seconds", t.wall_clock_seconds}};
      doc["detail"] = t.detail.is_null() ? ordered_json::object() : t.detail;
      tasks.push_back(doc);
    }
    return ordered_json{{"schema", kReportSchema},
                        {"tool_version", kToolVersion},
                        {"command_line", command_line},
                        {"passed", all_passed()},
                        {"tasks", tasks}};
  }

private:
  static double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }

  void print_line(const Task &task, const std::string &summary) const {
    if (task.outcome == "pass") {
      std::printf("[PASS] %s%s%s (%s s)\n", task.name.c_str(),
                  summary.empty() ? "" : ": ", summary.c_str(),
                  seconds_text(task.wall_clock_seconds).c_str());
    } else {
      std::printf("[FAIL] %s: %s (%s s)\n", task.name.c_str(),
                  task.reason.c_str(),
                  seconds_text(task.wall_clock_seconds).c_str());
    }
  }

  std::vector<Task> tasks_;
};

void write_json_file(const std::string &path, const ordered_json &doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write file: " + path);
  out << canonical_json(doc);
}

std::string failing_checks_text(const std::vector<CheckResult> &checks) {
  std::string text;
  for (const CheckResult &c : checks)
    if (!c.pass) {
      if (!text.empty())
        text += "; ";
      text += c.name + " (expected " + c.expected + ", got " + c.actual + ")";
    }
  return text;
}

// ---------------------------------------------------------------------------
// verify / verify-all tasks

void run_entry_task(TaskRunner &runner, const CatalogEntry &entry,
                    const std::string &data_dir) {
  runner.run("entry " + entry.name, [&](ordered_json &detail,
                                        std::string &summary) {
    EntryReport report = verify_entry(entry, data_dir);
    detail = json_of(report);
    if (!report.passed) {
      summary = failing_checks_text(report.checks);
      return false;
    }
    std::ostringstream ss;
    ss << "degree " << entry.degree << ", order " << entry.order << ", "
       << report.checks.size() << " checks";
    summary = ss.str();
    return true;
  });
}

bool hit_matches(const SearchHit &hit, std::uint64_t group_order,
                 std::uint64_t extension_order,
                 const std::vector<std::uint64_t> &subdegrees) {
  return hit.group_order == group_order &&
         hit.extension_order == extension_order && hit.rank == 3 &&
         hit.subdegrees == subdegrees && hit.certificate.verdict;
}

void run_search_q8(TaskRunner &runner) {
  runner.run("search Q8 holomorph", [&](ordered_json &detail,
                                        std::string &summary) {
    CayleyTable t = q8_table();
    SearchResult res = search_semiprimitive_rank3(t, SearchConfig{});
    detail = json_of(res);
    if (!res.exhaustive || res.hits.size() != 1 ||
        !hit_matches(res.hits[0], 6, 48, {1, 1, 6})) {
      summary = "expected exactly one hit with |G|=6, |X|=48, subdegrees "
                "(1,1,6), exhaustive";
      return false;
    }
    PermGroup x = detail::build_extension(
        t, PermGroup(static_cast<Point>(t.order()),
                     res.hits[0].group_generators));
    std::uint64_t reps = count_rank3_reps(x, t.order());
    detail["representation_count"] = reps;
    if (reps != 2) {
      summary = "expected 2 representation classes, got " +
                std::to_string(reps);
      return false;
    }
    summary = "1 hit, |X|=48, 2 representation classes";
    return true;
  });
}

void run_search_27(TaskRunner &runner) {
  runner.run("search order-27 holomorphs", [&](ordered_json &detail,
                                               std::string &summary) {
    SearchResult res = search_semiprimitive_rank3(su3_sylow(3), SearchConfig{});
    detail = json_of(res);
    if (!res.exhaustive || !res.hits.empty()) {
      summary = "expected an exhaustive search with zero hits";
      return false;
    }
    std::ostringstream ss;
    ss << "0 hits among " << res.classes_examined << " classes";
    summary = ss.str();
    return true;
  });
}

void run_search_64(TaskRunner &runner) {
  runner.run("search order-64 holomorph", [&](ordered_json &detail,
                                              std::string &summary) {
    SearchResult res = search_semiprimitive_rank3(su3_sylow(4), SearchConfig{});
    detail = json_of(res);
    if (!res.exhaustive || res.hits.size() != 1 ||
        !hit_matches(res.hits[0], 60, 3840, {1, 3, 60})) {
      summary = "expected exactly one hit with |G|=60, |X|=3840, subdegrees "
                "(1,3,60), exhaustive";
      return false;
    }
    summary = "1 hit, |X|=3840, subdegrees (1,3,60)";
    return true;
  });
}

void run_search_243(TaskRunner &runner, double budget_seconds) {
  runner.run("search order-243 extraspecial (extended)",
             [&](ordered_json &detail, std::string &summary) {
               SearchConfig cfg;
               cfg.budget_seconds = budget_seconds;
               cfg.extended = true;
               SearchResult res =
                   search_semiprimitive_rank3(extraspecial_plus(3, 2), cfg);
               detail = json_of(res);
               if (!res.exhaustive || !res.hits.empty()) {
                 summary = "expected an exhaustive search with zero hits";
                 return false;
               }
               std::ostringstream ss;
               ss << "0 hits among " << res.classes_examined << " classes";
               summary = ss.str();
               return true;
             });
}

void run_negative_control(TaskRunner &runner) {
  runner.run("negative control C3 x S6", [&](ordered_json &detail,
                                             std::string &summary) {
    ProductControl control = product_control_3xS6();
    std::vector<CatalogEntry> entries = shipped_entries();
    const CatalogEntry *cover = nullptr;
    for (const CatalogEntry &e : entries)
      if (e.name == "3.S6")
        cover = &e;
    if (!cover)
      throw std::logic_error("catalog is missing the 3.S6 entry");

    EntryReport rejection = verify_entry_against(*cover, control.group);
    SplitnessReport split =
        complement_exists(control.group, control.normal_c3);
    detail = ordered_json{{"rejection", json_of(rejection)},
                          {"split", json_of(split)}};

    auto failed = [&](const std::string &name) {
      for (const CheckResult &c : rejection.checks)
        if (c.name == name)
          return !c.pass;
      return false;
    };
    if (rejection.passed) {
      summary = "the control group was not rejected";
      return false;
    }
    if (!failed("rank") || !failed("semiprimitive") ||
        !failed("splits over the order-3 normal subgroup")) {
      summary = "expected named mismatches on rank, semiprimitivity and "
                "splitting";
      return false;
    }
    if (!split.splits) {
      summary = "expected the C3 factor to be complemented";
      return false;
    }
    summary = "rejected with named mismatches; C3 factor complemented";
    return true;
  });
}

int cmd_verify_all(const std::string &data_dir, bool include_extended,
                   double budget_seconds, const std::string &json_path,
                   const std::string &command_line) {
  TaskRunner runner;
  for (const CatalogEntry &entry : shipped_entries())
    run_entry_task(runner, entry, data_dir);
  run_search_q8(runner);
  run_search_27(runner);
  run_search_64(runner);
  run_negative_control(runner);
  if (include_extended)
    run_search_243(runner, budget_seconds);
  else
    runner.skip("search order-243 extraspecial (extended)",
                "pass --include-extended to run");

  bool ok = runner.all_passed();
  std::printf("%s\n", ok ? "verify-all: all tasks passed"
                         : "verify-all: some tasks FAILED");
  if (!json_path.empty())
    write_json_file(json_path, runner.report(command_line));
  return ok ? 0 : 1;
}

int cmd_verify_one(const std::string &name, const std::string &data_dir,
                   const std::string &json_path,
                   const std::string &command_line) {
  std::optional<CatalogEntry> entry;
  for (const CatalogEntry &e : shipped_entries())
    if (e.name == name)
      entry = e;
  if (!entry) {
    std::fprintf(stderr, "unknown entry '%s'; try `catalog list`\n",
                 name.c_str());
    return 1;
  }

  TaskRunner runner;
  run_entry_task(runner, *entry, data_dir);
  if (!json_path.empty())
    write_json_file(json_path, runner.report(command_line));
  return runner.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string &path, const std::string &json_path,
                const std::string &command_line) {
  TaskRunner runner;
  runner.run("analyze " + path, [&](ordered_json &detail,
                                    std::string &summary) {
    PermFile file = read_perm_file(path);
    PermGroup g(file.degree, file.generators);
    SubdegreeProfile prof = g.transitivity_profile();

    ordered_json profile{{"file", path},
                         {"degree", g.degree()},
                         {"generators", file.generators.size()},
                         {"order", g.order().get_str()},
                         {"transitive", prof.is_transitive}};
    std::printf("degree      %u\n", g.degree());
    std::printf("order       %s\n", g.order().get_str().c_str());
    std::printf("transitive  %s\n", prof.is_transitive ? "yes" : "no");

    if (prof.is_transitive) {
      profile["rank"] = prof.rank;
      profile["subdegrees"] = prof.subdegrees;
      std::string subdeg = detail::join_u64(prof.subdegrees);
      std::printf("rank        %llu\n",
                  static_cast<unsigned long long>(prof.rank));
      std::printf("subdegrees  %s\n", subdeg.c_str());

      SemiprimitivityCertificate cert = semiprimitivity_certificate(g);
      profile["semiprimitive"] = cert.verdict;
      profile["certificate"] = json_of(cert);
      if (cert.verdict) {
        std::printf("semiprimitive  yes (%zu normal subgroups, all "
                    "transitive or semiregular)\n",
                    cert.lattice.nodes.size());
      } else if (cert.is_regular) {
        std::printf("semiprimitive  no — regular; not semiprimitive by "
                    "definition\n");
      } else if (cert.witness_index) {
        const LatticeNode &w = cert.lattice.nodes[*cert.witness_index];
        std::printf("semiprimitive  no — witness: normal subgroup of order "
                    "%s is neither transitive nor semiregular\n",
                    w.order.get_str().c_str());
      }
    } else {
      profile["rank"] = nullptr;
      profile["subdegrees"] = ordered_json::array();
      for (const auto &orb : g.orbits())
        profile["subdegrees"].push_back(orb.size());
      profile["semiprimitive"] = false;
      std::printf("semiprimitive  no — intransitive\n");
    }

    detail = profile;
    summary = "profile complete";
    return true;
  });

  if (!json_path.empty())
    write_json_file(json_path, runner.report(command_line));
  return runner.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const std::string &table_path, bool extended,
               double budget_seconds, const std::string &out_path,
               const std::string &json_path,
               const std::string &command_line) {
  TaskRunner runner;
  runner.run("search " + table_path, [&](ordered_json &detail,
                                         std::string &summary) {
    CayleyTable t = read_table_file(table_path);
    SearchConfig cfg;
    cfg.budget_seconds = budget_seconds;
    cfg.extended = extended;
    SearchResult res = search_semiprimitive_rank3(t, cfg);
    detail = json_of(res);

    std::printf("table order       %u\n", res.table_order);
    std::printf("table hash        %s\n", res.table_hash.c_str());
    std::printf("classes examined  %llu\n",
                static_cast<unsigned long long>(res.classes_examined));
    std::printf("exhaustive        %s\n", res.exhaustive ? "yes" : "no");
    std::printf("hits              %zu\n", res.hits.size());
    for (const SearchHit &hit : res.hits) {
      std::printf("  |G| = %s, |X| = %s, rank %llu, subdegrees %s, "
                  "semiprimitive %s\n",
                  hit.group_order.get_str().c_str(),
                  hit.extension_order.get_str().c_str(),
                  static_cast<unsigned long long>(hit.rank),
                  detail::join_u64(hit.subdegrees).c_str(),
                  hit.certificate.verdict ? "yes" : "no");
    }
    if (!out_path.empty())
      write_json_file(out_path, detail);

    std::ostringstream ss;
    ss << res.hits.size() << " hit(s) among " << res.classes_examined
       << " classes" << (res.exhaustive ? ", exhaustive" : ", budget hit");
    summary = ss.str();
    return true;
  });

  if (!json_path.empty())
    write_json_file(json_path, runner.report(command_line));
  return runner.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// catalog list

int cmd_catalog_list(const std::string &json_path,
                     const std::string &command_line) {
  ordered_json entries = ordered_json::array();
  std::printf("%-18s %-12s %6s %8s %5s %-12s %5s %5s %6s\n", "entry",
              "builder", "degree", "order", "rank", "subdegrees", "|N|",
              "reps", "split");
  for (const CatalogEntry &e : shipped_entries()) {
    std::string subdeg = detail::join_u64(e.subdegrees);
    std::printf("%-18s %-12s %6u %8llu %5llu %-12s %5llu %5llu %6s\n",
                e.name.c_str(), e.builder.c_str(), e.degree,
                static_cast<unsigned long long>(e.order),
                static_cast<unsigned long long>(e.rank), subdeg.c_str(),
                static_cast<unsigned long long>(e.n_order),
                static_cast<unsigned long long>(e.reps),
                e.splits ? "yes" : "no");
    entries.push_back(ordered_json{{"name", e.name},
                                   {"builder", e.builder},
                                   {"degree", e.degree},
                                   {"order", e.order},
                                   {"rank", e.rank},
                                   {"subdegrees", e.subdegrees},
                                   {"stabilizer_order", e.stabilizer_order},
                                   {"normal_subgroup_order", e.n_order},
                                   {"representations", e.reps},
                                   {"split_over_order", e.split_over_order},
                                   {"splits", e.splits}});
  }
  if (!json_path.empty())
    write_json_file(json_path,
                    ordered_json{{"schema", kReportSchema},
                                 {"tool_version", kToolVersion},
                                 {"command_line", command_line},
                                 {"passed", true},
                                 {"entries", entries}});
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"semiprimitive rank-3 group catalog and holomorph search"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::string data_dir = default_data_dir();
  app.add_option("--json", json_path, "write a machine-readable run report");
  app.add_option("--threads", threads,
                 "worker threads (reserved; results are thread-count "
                 "independent)");
  app.add_option("--seed", seed,
                 "random seed (reserved; all algorithms are deterministic)");
  app.add_option("--data-dir", data_dir,
                 "generator data directory (default: $SEMIPRIM_DATA_DIR or "
                 "./data)");

  CLI::App *verify_all = app.add_subcommand(
      "verify-all", "verify every catalog entry, run the mandatory "
                    "searches and the negative controls");
  bool include_extended = false;
  double budget = 43200.0;
  verify_all->add_flag("--include-extended", include_extended,
                       "also run the order-243 extraspecial search");
  verify_all->add_option("--budget", budget,
                         "budget in seconds for the extended search");

  CLI::App *verify = app.add_subcommand("verify", "verify one catalog entry");
  std::string entry_name;
  verify->add_option("entry", entry_name, "catalog entry name")->required();

  CLI::App *analyze =
      app.add_subcommand("analyze", "profile a permutation group file");
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "a .perm generator file")
      ->required();

  CLI::App *search = app.add_subcommand(
      "search", "holomorph rank-3 search over a multiplication table");
  std::string table_path, out_path;
  bool search_extended = false;
  double search_budget = 1800.0;
  search->add_option("--table", table_path, "table file (.tbl)")->required();
  search->add_flag("--extended", search_extended,
                   "enable the large extraspecial engine");
  search->add_option("--budget", search_budget, "budget in seconds");
  search->add_option("--out", out_path, "write the search result as JSON");

  CLI::App *catalog =
      app.add_subcommand("catalog", "catalog inspection commands");
  CLI::App *catalog_list =
      catalog->add_subcommand("list", "list the classified entries");
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  std::string command_line;
  for (int i = 1; i < argc; ++i) {
    if (i > 1)
      command_line += " ";
    command_line += argv[i];
  }

  try {
    if (verify_all->parsed())
      return cmd_verify_all(data_dir, include_extended, budget, json_path,
                            command_line);
    if (verify->parsed())
      return cmd_verify_one(entry_name, data_dir, json_path, command_line);
    if (analyze->parsed())
      return cmd_analyze(analyze_path, json_path, command_line);
    if (search->parsed())
      return cmd_search(table_path, search_extended, search_budget, out_path,
                        json_path, command_line);
    if (catalog->parsed() && catalog_list->parsed())
      return cmd_catalog_list(json_path, command_line);
  } catch (const std::exception &ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
