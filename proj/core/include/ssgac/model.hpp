#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssgac/constraint.hpp"

namespace ssgac {

struct VariableSpec {
  std::string name;
  std::vector<int> domain;
};

struct Model {
  std::string kind;
  std::string id;
  std::map<std::string, int> params;
  std::vector<VariableSpec> variables;
  std::vector<ConstraintDef> constraints;
  // Constraints handled by the propagator under test; the rest always use builtins.
  std::vector<std::uint8_t> target;
  std::vector<VarId> branchOrder;

  VarId addVariable(std::string name, std::vector<int> domain);
  VarId addVariable(std::string name, int lo, int hi);
  void addConstraint(ConstraintDef c, bool isTarget);
  std::vector<std::vector<int>> domains() const;
  int countKind(ConstraintKind k) const;
};

// Quasigroup existence problem 3: (a*b)*(b*a) = a via element over the flattened table.
Model buildQG3(int n);
// Balanced incomplete block design (4n+3, 4n+3, 2n+1, 2n+1, n) with double lex.
Model buildBIBD(int n);
// Squares 1..n inside a width x height rectangle.
Model buildRectPack(int n, int width, int height);

struct TableModelParams {
  int variables = 6;
  int domainSize = 3;
  int constraints = 4;
  int arity = 3;
  // Supports per constraint.
  int supports = 8;
  // Percent chance that a support omits a given variable.
  int omitPercent = 30;
  std::uint64_t seed = 1;
};
// Random short-support tables over random scopes.
Model buildTableModel(const TableModelParams& p);

// Builds a model from kind and k=v parameters; throws std::invalid_argument on bad input.
Model buildModel(const std::string& kind, const std::map<std::string, int>& params, std::uint64_t seed = 1);

} // namespace ssgac
