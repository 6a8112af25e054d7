#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wres/heat.hpp"

namespace wres {

// Positioned error in a flat key = value document (1-based line and column).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct HeatConfig {
  long leaf_dim = 0;  // dim F; the key p sets it to 2p
  int q = 0;
  CurvatureData data;
  BoundaryReading reading = BoundaryReading::Derived;
  AlgebraSignature signature() const { return AlgebraSignature::make(static_cast<int>(leaf_dim), q); }
};

// Keys: p or leaf_dim, q, reading (printed|derived) and the CurvatureData
// field names, with r_M accepted for r. Values are exact ("3", "-1/4", "0.25")
// or floating point ("1e-3", converted exactly). Missing r2 defaults to r^2.
HeatConfig parse_heat_config(const std::string& text);

// Subcommands verify-boundary, heat, rw and oracle. args excludes the program name.
// Returns the process exit status: 0 exactly when every check passes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wres
