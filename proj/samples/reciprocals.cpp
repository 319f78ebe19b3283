// Prints the integral F- solutions obtained as reciprocals of the r-p-q = 2 census.
#include <iostream>

#include "hgpf/hgpf.hpp"

int main() {
  using namespace hgpf;
  EnumerateParams prm;
  prm.rcheck = 2;
  prm.with_C = false;
  EnumerateResult res = run_enumerate(prm);
  std::cout << res.a_count << " (A)-solutions\n";
  for (const auto& s : res.solutions) {
    if (s.kind != SolutionKind::FIntegral) continue;
    std::cout << s.lambda.to_text() << "\n  d = " << s.d.to_text() << "\n  v =";
    for (const Rat& v : s.v) std::cout << " " << to_string(v);
    std::cout << "\n";
  }
}
