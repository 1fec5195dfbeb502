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

#ifndef DEGDIV_GRAPH_IO_H_
#define DEGDIV_GRAPH_IO_H_

#include <iosfwd>
#include <string>

#include "degdiv/graph.h"

namespace degdiv {

// Edge-list text: a header line "n m", then m lines "u v". Lines starting
// with '#' and blank lines are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace degdiv

#endif  // DEGDIV_GRAPH_IO_H_
