// Copyright 2026 The degdiv Authors.
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

#include "degdiv/graph_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "degdiv/error.h"

namespace degdiv {

namespace {

bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(int line_no, const std::string& what) {
  throw Error(ErrorCode::kInvalidGraph,
              "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) parse_error(line_no, "missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0) parse_error(line_no, "bad header");
  }
  GraphBuilder b(static_cast<int>(n));
  long long seen = 0;
  while (next_data_line(in, line, line_no)) {
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v)) parse_error(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) parse_error(line_no, "vertex out of range");
    if (u == v) parse_error(line_no, "self-loop");
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m) {
    parse_error(line_no, "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(seen));
  }
  return std::move(b).build();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  write_edge_list(out, g);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace degdiv
