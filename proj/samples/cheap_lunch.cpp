// Copyright 2026 The extlp Authors
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

// Diet problem: rice and lentils, at least 30 g protein and 700 kcal.
// Then lentils go out of stock, modelled by an infinite price.

#include <iostream>

#include "extlp/elp.hpp"

namespace {

void report(const char* title, const extlp::ValidELP& p) {
  extlp::Solution s = extlp::solve(p);
  extlp::OptimumValue dual = extlp::optimum(extlp::dualize(p));
  std::cout << title << "\n";
  std::cout << "  optimum      " << extlp::to_string(s.optimum) << "  (~"
            << s.optimum.value().finite().get_d() << ")\n";
  if (s.x) {
    std::cout << "  rice, lentils";
    for (const auto& v : *s.x) std::cout << "  " << v.value() << " (~" << v.value().get_d() << ")";
    std::cout << "\n";
  }
  std::cout << "  dual optimum " << extlp::to_string(dual) << "\n";
}

}  // namespace

int main() {
  using extlp::ExtValue;
  using extlp::parse_ext_value;

  extlp::ExtMatrix a{{-27L, -90L}, {-1300L, -1150L}};
  extlp::ExtVector b{-30L, -700L};

  extlp::ValidELP lunch(extlp::ExtendedLP(a, b, {parse_ext_value("0.92"), parse_ext_value("1.75")}));
  report("cheap lunch", lunch);

  extlp::ValidELP no_lentils(extlp::ExtendedLP(a, b, {parse_ext_value("0.92"), ExtValue::top()}));
  report("lentils out of stock", no_lentils);
}
