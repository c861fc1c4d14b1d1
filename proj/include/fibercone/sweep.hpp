#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fibercone/serialize.hpp"

namespace fibercone {

enum class SweepFamily { Symmetric, CIFamily, General4Gen, Hypersurface, Explicit };

const char* to_string(SweepFamily f);
SweepFamily parse_sweep_family(std::string_view name);

struct SweepSpec {
  SweepFamily family = SweepFamily::Symmetric;
  // Inclusive intervals per parameter name; see enumerate() for the names
  // each family reads.
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> ranges;
  std::vector<std::string> ideals;  // Explicit family only
  bool include_balanced = false;    // symmetric a + b = c
  int degree_bound = 30;            // cap for uncertified oracle runs
  int slack = kDefaultSlack;
  std::uint32_t prime = kDefaultPrime;
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;

  static SweepSpec from_json(const Json& j);
  Json to_json() const;
};

struct SweepTask {
  std::string key;
  std::vector<std::int64_t> params;
  std::string ideal_text;  // Explicit family only
};

/// Parameter tuples satisfying the family constraints, in canonical order.
std::vector<SweepTask> enumerate(const SweepSpec& spec);

enum class RecordStatus { Ok, Inconclusive, Error };
const char* to_string(RecordStatus s);

struct SweepRecord {
  std::string key;
  std::string family;
  std::vector<std::int64_t> params;
  std::string ideal;
  std::size_t mu_i = 0;
  std::optional<std::size_t> mu_j;
  std::optional<std::string> case_tag;
  std::optional<int> depth;
  std::optional<int> dimension;
  std::optional<bool> cm;
  std::string certification = "Pending";
  std::optional<int> stability_window;
  std::int64_t runtime_ms = 0;
  RecordStatus status = RecordStatus::Ok;
  std::string detail;

  Json to_json() const;
  static SweepRecord from_json(const Json& j);
  bool operator==(const SweepRecord&) const = default;
};

/// Runs one tuple end to end. Errors become Error records.
SweepRecord run_task(const SweepSpec& spec, const SweepTask& task);
/// Same pipeline for an arbitrary ideal with no classifier.
SweepRecord record_for_ideal(const MonomialIdeal& ideal, const std::string& key, const SweepSpec& spec);

struct StoreContents {
  std::vector<SweepRecord> records;
  std::set<std::string> keys;
  std::vector<std::string> warnings;
};

/// Reads the store. A torn final line is truncated from the file with a
/// warning; any other unreadable line throws StoreIntegrity.
StoreContents resume(const std::filesystem::path& store);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t skipped = 0;
  std::size_t added = 0;
  std::map<std::string, std::size_t> by_status;
  std::map<std::string, std::size_t> by_case;
  std::map<std::string, std::size_t> by_depth;
  std::vector<std::string> warnings;

  Json to_json() const;
  std::string table() const;
};

/// Appends a record for every tuple not yet in the store. `jobs` workers
/// compute records; a single writer appends them as they complete.
SweepSummary run_sweep(const SweepSpec& spec, const std::filesystem::path& store, int jobs = 1);

void append_record(const std::filesystem::path& store, const SweepRecord& record);

struct ConjectureReport {
  std::vector<SweepRecord> depth_zero;        // annotated with mu(I)
  std::vector<SweepRecord> cm_violations;     // CM and mu(J) <= 3 disagree
  std::vector<SweepRecord> inconclusive;
  std::vector<SweepRecord> errors;
  std::size_t records = 0;

  /// Depth-zero records with mu(I) <= 4.
  std::vector<SweepRecord> counterexamples() const;
  Json to_json() const;
};

/// Throws Io when the store does not exist.
ConjectureReport report_conjecture(const std::filesystem::path& store);

}  // namespace fibercone
