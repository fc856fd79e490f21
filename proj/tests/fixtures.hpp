#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssgac/sources.hpp"

namespace ssgac::fixtures {

// Answers with the first listed candidate that is valid and supports the query.
class CandidateSource final : public SupportSource {
public:
  explicit CandidateSource(std::vector<LiteralSet> candidates, std::vector<VarId> scope)
      : candidates_(std::move(candidates)), scope_(std::move(scope)) {}
  std::string_view name() const override { return "candidates"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;

private:
  std::vector<LiteralSet> candidates_;
  std::vector<VarId> scope_;
};

// Each returns an empty string when the worked example is reproduced.
std::string checkElementTables();
std::string checkPartitionTrace();
std::string checkScratchSets();

} // namespace ssgac::fixtures
