#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oortscan/construct.hpp"
#include "oortscan/oort.hpp"
#include "oortscan/ramification.hpp"

namespace oortscan {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Section {
  std::string name;
  Fields fields;
};

/// A command result. The machine rendering is
///
///   schema_version=1
///   command=<name>
///   input.<key>=<value>          (one per input, in given order)
///   inputs_digest=fnv1a64:<hex>
///   [<section>]
///   <key>=<value>
///   ...
///   [timing]
///   elapsed_ms=<float>
///
/// Newlines and backslashes in values are escaped.  [timing] is always last.
struct Report {
  std::string command;
  Fields inputs;
  std::vector<Section> sections;
  double elapsed_ms = 0.0;
  int exit_code = 0;
};

std::uint64_t fnv1a64(std::string_view data);
std::string inputs_digest(Report const &r);

std::string render_machine(Report const &r);
std::string render_text(Report const &r);

/// Drops the [timing] section and everything after it.
std::string strip_timing(std::string const &machine_output);

std::vector<Section> verdict_sections(Verdict const &v);
std::vector<Section> scenario_sections(ScenarioReport const &s);

// -- corpus ---------------------------------------------------------------

enum class RowStatus { Match, Mismatch, Skipped };
char const *row_status_name(RowStatus s);

struct CorpusRow {
  std::string group;
  std::uint64_t p = 0u;
  std::uint64_t order = 0u;
  Expectation expected;
  std::optional<Verdict> verdict;
  RowStatus status = RowStatus::Skipped;
  /// Why a row was skipped.
  std::string error;
};

/// True when every known expectation agrees with the verdict.
bool matches(Expectation const &e, Verdict const &v);

/// Classifies every (entry, prime) pair, restricted to `primes` when not
/// empty, on up to `jobs` threads.  Rows come back in corpus order.
std::vector<CorpusRow> run_corpus(Profile profile, std::vector<std::uint64_t> const &primes = {},
                                  unsigned jobs = 1u, Limits const &limits = {});

std::vector<Section> corpus_sections(Profile profile, std::vector<CorpusRow> const &rows);

} // namespace oortscan
