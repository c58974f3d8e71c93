// Copyright 2026 The hradius Authors
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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hradius/bounds.hpp"
#include "hradius/enumerate.hpp"
#include "hradius/indices.hpp"
#include "hradius/transforms.hpp"

namespace hradius {

/// One row of a unicyclic-reduction trace. Step 0 is the input graph.
struct ReductionTraceEntry {
  std::size_t step = 0;
  std::optional<Edge> removed;
  Rational delta;  // H before the deletion minus H after; 0 at step 0
  Rational harmonic;
  std::size_t radius = 0;
  std::size_t cyclomatic = 0;
  std::string graph6;

  friend bool operator==(const ReductionTraceEntry&, const ReductionTraceEntry&) = default;
};

using ReductionTrace = std::vector<ReductionTraceEntry>;

ReductionTrace reduction_trace(const Graph& g);

using ReportResults = std::variant<IndexReport, std::vector<BoundCheckResult>, SweepReport,
                                   Lemma2Result, ReductionTrace>;

struct ReportEnvelope {
  std::string command;
  std::map<std::string, std::string> inputs;
  ReportResults results;
  std::string tool_version = HRADIUS_VERSION;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

/// Stable JSON rendering; rationals are "p/q" strings, floats are numbers.
std::string to_json(const ReportEnvelope& envelope, int indent = 2);

/// Inverse of to_json. Throws FormatError on schema mismatch.
ReportEnvelope envelope_from_json(std::string_view text);

/// Flat CSV for the envelope's results, with a header row.
std::string to_csv(const ReportEnvelope& envelope);

}  // namespace hradius
