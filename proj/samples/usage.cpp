// Copyright 2026 The Authors.
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

// Builds a small (3,2)-regular instance, solves it a few ways and prints the
// results.

#include <iostream>

#include "spm/spm.hpp"

int main() {
  const spm::BipartiteInstance inst = spm::incidence_instance(spm::gen_tight_example(1), 3);
  std::cout << spm::serialize_instance(inst).substr(0, 15);

  for (spm::Algorithm algo : {spm::Algorithm::Auto, spm::Algorithm::Greedy, spm::Algorithm::Brute}) {
    const spm::Solution sol = spm::solve_with(inst, spm::ProblemKind::TwoPPM, algo);
    std::cout << spm::algorithm_name(algo) << ": " << sol.strategy << " profit=" << sol.profit
              << " guarantee=" << sol.guarantee << "\n";
  }

  const spm::VcGadget gadget = spm::vc_gadget(spm::complete_graph(4));
  const spm::Solution best = spm::solve_brute_2ppm(gadget.instance);
  const spm::CoverExtraction x = spm::extract_vertex_cover(gadget, best);
  std::cout << "K4 gadget optimum " << best.profit << ", cover of size " << x.cover.size() << "\n";
  return 0;
}
