// Copyright 2026 The Chromatic Authors
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

// Writes the benchmark graphs under tests/data. The FullIns graphs follow
// the published construction; the mug files are stand-ins with the same
// size profile and chromatic number (see README).

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "chromatic/dimacs.hpp"
#include "chromatic/generators.hpp"

int main(int argc, char** argv) {
  using namespace chromatic;
  if (argc != 2) {
    std::cerr << "usage: make_fixtures OUTDIR\n";
    return 2;
  }
  const std::filesystem::path outdir = argv[1];
  std::filesystem::create_directories(outdir);

  struct Fixture {
    std::string name;
    std::function<Graph()> make;
    std::string note;
  };
  const std::vector<Fixture> fixtures = {
      {"3-FullIns_3", [] { return full_insertions(3, 3); }, "full insertion k=3 l=3"},
      {"4-FullIns_3", [] { return full_insertions(4, 3); }, "full insertion k=4 l=3"},
      {"5-FullIns_3", [] { return full_insertions(5, 3); }, "full insertion k=5 l=3"},
      {"1-FullIns_4", [] { return full_insertions(1, 4); }, "full insertion k=1 l=4"},
      {"2-FullIns_4", [] { return full_insertions(2, 4); }, "full insertion k=2 l=4"},
      {"mug100_1", [] { return hajos_k4_chain(33, 1); },
       "surrogate: chain of 33 K4 Hajos joins, seed 1"},
      {"mug100_25", [] { return hajos_k4_chain(33, 25); },
       "surrogate: chain of 33 K4 Hajos joins, seed 25"},
  };
  for (const auto& f : fixtures) {
    const std::vector<std::string> comments = {f.name, f.note};
    write_dimacs_file(outdir / (f.name + ".col"), f.make(), comments);
  }
  std::cout << "wrote " << fixtures.size() << " graphs to " << outdir << "\n";
  return 0;
}
