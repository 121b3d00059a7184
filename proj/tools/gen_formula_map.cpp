// Copyright 2026 The deco Authors
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

// Writes the formula map to stdout, or to the file named by the first argument.

#include <fstream>
#include <iostream>

#include "deco/formula_map.hpp"

int main(int argc, char** argv) {
  const std::string doc = deco::generate_formula_map();
  if (argc < 2) {
    std::cout << doc;
    return 0;
  }
  std::ofstream f(argv[1], std::ios::binary | std::ios::trunc);
  f << doc;
  return f ? 0 : 4;
}
