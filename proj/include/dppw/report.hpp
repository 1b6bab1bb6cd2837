#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dppw/rational.hpp"

namespace dppw {

inline constexpr const char* kToolVersion = "0.1.0";

// Outcome of one identity family checked over all basis tuples.  `witnesses`
// holds human-readable descriptions of failing tuples with their exact
// residuals, sorted (tuples are enumerated lexicographically).
struct IdentityResult {
  std::string id;
  bool pass = true;
  std::vector<std::string> witnesses;
};

using IdentityReport = std::vector<IdentityResult>;

inline bool all_pass(const IdentityReport& rep) {
  return std::all_of(rep.begin(), rep.end(),
                     [](const IdentityResult& r) { return r.pass; });
}

inline IdentityReport& append(IdentityReport& into, const IdentityReport& more) {
  into.insert(into.end(), more.begin(), more.end());
  return into;
}

// Cap witness lists so reports stay readable; the first (lexicographically
// smallest) failing tuple is always retained.
inline constexpr std::size_t kMaxWitnesses = 12;

class WitnessCollector {
 public:
  explicit WitnessCollector(std::string id) { result_.id = std::move(id); }

  void fail(const std::string& witness) {
    result_.pass = false;
    if (result_.witnesses.size() < kMaxWitnesses)
      result_.witnesses.push_back(witness);
  }

  IdentityResult take() { return std::move(result_); }

 private:
  IdentityResult result_;
};

}  // namespace dppw
