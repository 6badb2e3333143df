#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace doe {

/// Base error for all toolkit failures. `code()` is a stable machine-readable
/// identifier (e.g. "TooManyRuns", "SchemaViolation") used by tests and for
/// CLI exit-code mapping; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Spec-file validation failure. Collects every violated invariant; each
/// entry is "<field path>: <problem>".
class SchemaViolation : public Error {
 public:
  SchemaViolation(const std::string& file, std::vector<std::string> violations)
      : Error("SchemaViolation", join(file, violations)),
        violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::string& file, const std::vector<std::string>& v) {
    std::string msg = file.empty() ? std::string("schema violation")
                                   : file + ": schema violation";
    for (const auto& item : v) {
      msg += "\n  - " + item;
    }
    return msg;
  }
  std::vector<std::string> violations_;
};

/// Rank-deficient regression. Carries the near-duplicate column pairs found
/// by the confounding-style correlation scan so the message can point at the
/// design flaw instead of just "singular matrix".
class RankDeficient : public Error {
 public:
  struct ColumnPair {
    std::string a;
    std::string b;
    double abs_correlation;
  };

  RankDeficient(const std::string& message, std::vector<ColumnPair> pairs)
      : Error("RankDeficient", format(message, pairs)), pairs_(std::move(pairs)) {}

  const std::vector<ColumnPair>& pairs() const noexcept { return pairs_; }

 private:
  static std::string format(const std::string& message,
                            const std::vector<ColumnPair>& pairs) {
    std::string msg = message;
    for (const auto& p : pairs) {
      msg += "\n  confounded columns: " + p.a + " ~ " + p.b;
    }
    return msg;
  }
  std::vector<ColumnPair> pairs_;
};

}  // namespace doe
