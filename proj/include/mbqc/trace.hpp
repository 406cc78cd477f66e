// Copyright 2026 The mbqc-control Authors
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

// Trace TSV, one record per (round, row):
//
//   #nqubits=2
//   #seed=0
//   #rounds=10
//   #rng=mt19937_64
//   0	0	0	0302	0.000000	0	00	00
//
// Columns: round row m P theta s b sb. P is 4 lowercase hex digits, theta has
// 6 fractional digits, b and sb print x then z. b and sb are the register
// values after X_s and before X_r.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/patterns.hpp"

namespace mbqc {

inline constexpr const char* kRngName = "mt19937_64";

struct TraceRecord {
  unsigned round = 0;
  unsigned row = 0;
  bit_t m = 0;
  std::uint16_t word = 0;
  double theta = 0.0;
  bit_t s = 0;
  ByproductPair b;
  ByproductPair sb;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct TraceHeader {
  unsigned nqubits = 0;
  std::uint64_t seed = 0;
  unsigned rounds = 0;
  std::string rng = kRngName;
  friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

struct Trace {
  TraceHeader header;
  std::vector<TraceRecord> records;
  friend bool operator==(const Trace&, const Trace&) = default;
};

std::string format_record(const TraceRecord& r);
std::string write_trace(const Trace& trace);
/// Throws ParseError carrying the 1-based line number.
Trace read_trace(std::string_view text);

/// Forced-outcome matrix: one line per row, one 0/1 token per round.
/// Blank lines and '#' comments are skipped. Throws ParseError.
std::vector<std::vector<bit_t>> parse_outcomes(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace mbqc
