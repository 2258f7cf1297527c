#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncov/io.hpp"

namespace ncov {

// One expected value of a dataset entry. Lists compare as multisets.
struct Expectation {
  std::string quantity;
  std::vector<std::int64_t> value;
  bool is_list = false;
  std::string citation;
  std::string source;  // table, classification or derived
  bool heavy = false;
};

struct DatasetEntry {
  std::string name;
  std::string group_path;    // relative to the manifest directory
  std::string maximal_path;  // empty when the entry has no subgroup file
  std::string context;       // what the overgroup A is
  bool heavy = false;
  GroupFile group;
  std::optional<SubgroupFile> maximal;
  std::vector<Expectation> expected;
};

struct DatasetManifest {
  std::string root;
  std::vector<DatasetEntry> entries;
  const DatasetEntry* find(const std::string& name) const;
};

// `path` is a manifest file or a directory holding manifest.json. Every
// order line is checked against Schreier-Sims.
DatasetManifest load_dataset(const std::string& path);
// The bundled dataset (NCOV_DATA_DIR at build time).
std::string default_data_dir();

struct ReportLine {
  std::string entry, quantity, expected, computed, citation, status;  // PASS, FAIL, ERROR, SKIP
};

struct ReproOptions {
  std::vector<std::string> filter;  // entry names; empty means all
  bool heavy = false;
  std::function<void(const ReportLine&)> sink;  // called as lines are produced
};

struct Report {
  std::vector<ReportLine> lines;
  bool all_pass() const;
  std::string to_json() const;
};

Report reproduce_tables(const DatasetManifest& manifest, const ReproOptions& opt);
std::string format_report_line(const ReportLine& line);

// The quantities reproduce_tables understands.
const std::vector<std::string>& known_quantities();

}  // namespace ncov
