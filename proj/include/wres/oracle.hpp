#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wres {

// One randomized oracle family: the engine against an independent computation.
struct OracleFamily {
  std::string name;
  int count = 0;
  int passed = 0;
  double max_error = 0;
  std::vector<std::string> failures;  // first few, for the report

  bool pass() const { return passed == count; }
};

// Random Clifford words (p, q <= 3) against the dense-matrix representation, exact.
OracleFamily trace_oracle(std::uint64_t seed, int count);
// Random proper rational functions of xi: residue integral against quadrature, 1e-8 relative.
OracleFamily quadrature_oracle(std::uint64_t seed, int count);
// Random warp expressions: AD derivatives against central differences, 1e-6.
OracleFamily ad_oracle(std::uint64_t seed, int count);

std::vector<OracleFamily> run_oracles(std::uint64_t seed, int count);

}  // namespace wres
