#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ginv/catalog.hpp"
#include "ginv/group.hpp"
#include "ginv/invariants.hpp"
#include "ginv/predicates.hpp"

namespace ginv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "groupinv";
inline constexpr const char* kToolVersion = "0.1.0";

struct Check {
  std::string id;
  std::string paper_ref;  // the claimed fact, stated plainly
  std::string status;     // pass | fail | warn | skip
  std::string got;
  std::string expected;
};

struct GroupEntry {
  std::string name;
  std::uint64_t order = 0;
  bool enumerated = false;
  InvariantReport inv;
  bool oliver = false;
  bool cp = false;
  bool ep = false;
  std::string gap = "unknown";
  int classification_case = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<GroupEntry> groups;
  std::vector<Check> checks;
  std::uint64_t n_pass = 0, n_fail = 0, n_warn = 0, n_skip = 0;

  void add(Check c);
  bool ok() const { return n_fail == 0; }
};

struct VerifyOptions {
  bool include_heavy = false;
  bool exact_gap = false;
  std::uint64_t max_order = kDefaultElementCap;
  std::uint64_t exact_gap_cap = 10080;
  std::vector<std::string> catalog_files;
};

// Catalog groups built once and shared across suites.
struct RunContext {
  VerifyOptions opt;
  std::vector<std::pair<GroupSpec, GroupPtr>> groups;

  static RunContext make(const VerifyOptions& opt);
  const FiniteGroup* find(const std::string& name) const;
};

VerificationReport verify_suite(const std::string& suite, RunContext& ctx);

Json report_to_json(const VerificationReport& rep, bool with_timestamp = true);
std::string report_to_tsv(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

Json group_entry_json(const GroupEntry& e);

}  // namespace ginv
