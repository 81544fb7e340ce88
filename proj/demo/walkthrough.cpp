// Copyright 2026 The conjlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small tour of the library: a prediction, a reduction and the square.

#include <iostream>

#include "conjlogic/conjlogic.hpp"

using namespace conjlogic;

int main() {
  const Proposition gens[] = {parse_prop("<XZ>"), parse_prop("<ZX>")};
  const auto state = KnowledgeState::from_generators(2, gens);
  std::cout << "<XZ,ZX> predicts <YY>: " << state.predicts(parse_prop("<YY>")) << '\n';

  std::cout << "closure:";
  for (const auto &p : state.closure()) {
    std::cout << ' ' << p;
  }
  std::cout << '\n';

  const auto r = reduce_single(parse_prop("<XYZIZY>"), TheoryVariant::Quantum);
  std::cout << "reduce <XYZIZY>: " << format_transcript(r.transcript) << " -> " << r.reduced.front() << '\n';

  for (auto v : {TheoryVariant::Quantum, TheoryVariant::SpekkensToy}) {
    const auto pm = pm_square(v);
    std::cout << to_string(v) << " square satisfiable: " << (pm.satisfiable ? "yes" : "no") << '\n';
  }

  OutcomeRng rng(7);
  auto [record, after] = state.measure(parse_prop("<XI>"), rng);
  std::cout << "measure <XI>: outcome " << record.outcome << ", state now";
  for (const auto &g : after.generators()) {
    std::cout << ' ' << g;
  }
  std::cout << '\n';
}
