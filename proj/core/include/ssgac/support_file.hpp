#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssgac/literal.hpp"
#include "ssgac/model.hpp"

namespace ssgac {

struct SupportFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One constraint block: "scope v0 v1 ...", then one support per line as var=val pairs; '#' starts a comment.
struct SupportFile {
  std::vector<std::string> scope;
  // Literal vars index scope.
  std::vector<LiteralSet> supports;
};

SupportFile parseSupportFile(std::istream& in);
SupportFile readSupportFile(const std::string& path);
void writeSupportFile(std::ostream& out, const SupportFile& f);

// One table constraint; each variable ranges over 0..domainSize-1, or up to the largest listed value when domainSize <= 0.
Model buildSupportFileModel(const SupportFile& f, int domainSize = 0);

} // namespace ssgac
