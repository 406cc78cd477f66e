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

#include "mbqc/trace.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mbqc/error.hpp"

namespace mbqc {

namespace {

std::string pair_text(ByproductPair p) {
  return {static_cast<char>('0' + p.x), static_cast<char>('0' + p.z)};
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    f(text.substr(pos, end - pos), ++line_no);
    pos = end + 1;
  }
}

template <class T>
T parse_int(std::string_view s, std::size_t line, const char* what, int base = 10) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return v;
}

bit_t parse_bit(std::string_view s, std::size_t line, const char* what) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
}

ByproductPair parse_pair(std::string_view s, std::size_t line, const char* what) {
  if (s.size() != 2) throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  return {parse_bit(s.substr(0, 1), line, what), parse_bit(s.substr(1, 1), line, what)};
}

}  // namespace

std::string format_record(const TraceRecord& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%u\t%u\t%u\t%04x\t%.6f\t%u\t%s\t%s", r.round, r.row,
                static_cast<unsigned>(r.m), static_cast<unsigned>(r.word), r.theta,
                static_cast<unsigned>(r.s), pair_text(r.b).c_str(), pair_text(r.sb).c_str());
  return buf;
}

std::string write_trace(const Trace& trace) {
  std::string out;
  out += "#nqubits=" + std::to_string(trace.header.nqubits) + "\n";
  out += "#seed=" + std::to_string(trace.header.seed) + "\n";
  out += "#rounds=" + std::to_string(trace.header.rounds) + "\n";
  out += "#rng=" + trace.header.rng + "\n";
  for (const TraceRecord& r : trace.records) {
    out += format_record(r);
    out += '\n';
  }
  return out;
}

Trace read_trace(std::string_view text) {
  Trace t;
  t.header.rng.clear();
  bool seen_n = false, seen_seed = false, seen_rounds = false;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) return;
    if (line.front() == '#') {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) return;  // plain comment
      const std::string_view key = line.substr(1, eq - 1);
      const std::string_view val = line.substr(eq + 1);
      if (key == "nqubits") {
        t.header.nqubits = parse_int<unsigned>(val, no, "nqubits");
        seen_n = true;
      } else if (key == "seed") {
        t.header.seed = parse_int<std::uint64_t>(val, no, "seed");
        seen_seed = true;
      } else if (key == "rounds") {
        t.header.rounds = parse_int<unsigned>(val, no, "rounds");
        seen_rounds = true;
      } else if (key == "rng") {
        t.header.rng = std::string(val);
      }
      return;
    }
    const auto f = split_ws(line);
    if (f.size() != 8) {
      throw ParseError("expected 8 fields, got " + std::to_string(f.size()), no);
    }
    TraceRecord r;
    r.round = parse_int<unsigned>(f[0], no, "round");
    r.row = parse_int<unsigned>(f[1], no, "row");
    r.m = parse_bit(f[2], no, "m");
    if (f[3].size() != 4) throw ParseError("program word must have 4 hex digits", no);
    r.word = parse_int<std::uint16_t>(f[3], no, "program word", 16);
    const std::string th(f[4]);
    char* end = nullptr;
    r.theta = std::strtod(th.c_str(), &end);
    if (th.empty() || end != th.c_str() + th.size()) throw ParseError("bad theta '" + th + "'", no);
    r.s = parse_bit(f[5], no, "s");
    r.b = parse_pair(f[6], no, "b");
    r.sb = parse_pair(f[7], no, "sb");
    t.records.push_back(r);
  });
  if (!seen_n || !seen_seed || !seen_rounds) {
    throw ParseError("missing #nqubits/#seed/#rounds header", 1);
  }
  return t;
}

std::vector<std::vector<bit_t>> parse_outcomes(std::string_view text) {
  std::vector<std::vector<bit_t>> rows;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const auto f = split_ws(line);
    if (f.empty()) return;
    std::vector<bit_t> row;
    row.reserve(f.size());
    for (std::string_view tok : f) row.push_back(parse_bit(tok, no, "outcome"));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " outcomes, expected " +
                           std::to_string(rows.front().size()),
                       no);
    }
    rows.push_back(std::move(row));
  });
  return rows;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace mbqc
