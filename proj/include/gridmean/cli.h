// Copyright 2026 The gridmean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line surface. Everything the `gridmean` binary does lives here so
// it can be driven in-process by tests; the binary only forwards argv.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridmean/convergence.h"
#include "gridmean/exact.h"

namespace gridmean::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { csv, json };

/// Bad user input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive integer range written `start..end[:step]`; a bare `k` means k..k.
struct Range {
  unsigned long start = 0;
  unsigned long end = 0;
  unsigned long step = 1;

  /// Throws UsageError on malformed text, start > end, or step 0.
  static Range parse(std::string_view text);
  std::vector<unsigned long> values() const;
};

/// A single computed value with the parameters that produced it.
struct OutputRecord {
  std::string kind;
  std::vector<std::pair<std::string, long>> parameters;  // emitted in this order
  std::optional<Rational> exact;                         // set for rational values
  std::optional<RootBound> enclosure;                    // set for root values
  std::optional<std::pair<Rational, Rational>> gap;      // certified [lo, hi]
  std::string decimal;
};

/// One JSON object, no trailing newline. Fractions are decimal strings.
std::string to_json(const OutputRecord& record);
/// Header line and value line for a single record.
std::string csv_header(const OutputRecord& record);
std::string to_csv(const OutputRecord& record);

/// Columns `index,num,den,decimal,gap_num,gap_den`; enclosure tables append
/// `hi_num,hi_den,gap_hi_num,gap_hi_den`. For enclosures num/den is the lower
/// end and gap the certified lower distance.
std::string table_header(bool enclosures);
std::string to_csv(const ConvergenceRow& row, unsigned long digits);
/// The same fields as the CSV columns, one JSON object.
std::string to_json(const ConvergenceRow& row, unsigned long digits);

/// Runs the CLI on argv-style arguments (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gridmean::cli
