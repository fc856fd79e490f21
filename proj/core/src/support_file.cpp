#include "ssgac/support_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ssgac {

SupportFile parseSupportFile(std::istream& in) {
  SupportFile f;
  bool haveScope = false;
  std::string line;
  int lineNo = 0;
  auto fail = [&](const std::string& msg) {
    throw SupportFileError("line " + std::to_string(lineNo) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!haveScope) {
      if (tok != "scope") fail("expected scope header");
      while (ls >> tok) {
        if (std::find(f.scope.begin(), f.scope.end(), tok) != f.scope.end()) fail("duplicate scope variable " + tok);
        f.scope.push_back(tok);
      }
      if (f.scope.empty()) fail("empty scope");
      haveScope = true;
      continue;
    }
    if (tok == "scope") fail("only one constraint block per file");
    LiteralSet s;
    do {
      auto eq = tok.find('=');
      if (eq == std::string::npos) fail("expected var=val, got " + tok);
      std::string name = tok.substr(0, eq);
      auto it = std::find(f.scope.begin(), f.scope.end(), name);
      if (it == f.scope.end()) fail("variable " + name + " not in scope");
      int val = 0;
      const char* b = tok.data() + eq + 1;
      const char* e = tok.data() + tok.size();
      auto [p, ec] = std::from_chars(b, e, val);
      if (ec != std::errc() || p != e || b == e) fail("bad value in " + tok);
      if (val < 0) fail("negative value in " + tok);
      int var = static_cast<int>(it - f.scope.begin());
      for (const Literal& l : s)
        if (l.var == var) fail("variable " + name + " repeated in one support");
      s.push_back({var, val});
    } while (ls >> tok);
    std::sort(s.begin(), s.end());
    f.supports.push_back(std::move(s));
  }
  if (!haveScope) throw SupportFileError("missing scope header");
  return f;
}

SupportFile readSupportFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SupportFileError("cannot open " + path);
  return parseSupportFile(in);
}

void writeSupportFile(std::ostream& out, const SupportFile& f) {
  out << "scope";
  for (const auto& n : f.scope) out << ' ' << n;
  out << '\n';
  for (const auto& s : f.supports) {
    bool first = true;
    for (const Literal& l : s) {
      out << (first ? "" : " ") << f.scope[l.var] << '=' << l.val;
      first = false;
    }
    out << '\n';
  }
}

Model buildSupportFileModel(const SupportFile& f, int domainSize) {
  int hi = domainSize - 1;
  if (domainSize <= 0) {
    hi = 0;
    for (const auto& s : f.supports)
      for (const Literal& l : s) hi = std::max(hi, l.val);
  }
  Model m;
  m.kind = "table";
  m.id = "table-file";
  std::vector<VarId> scope;
  for (const auto& n : f.scope) scope.push_back(m.addVariable(n, 0, hi));
  std::vector<LiteralSet> sups;
  for (const auto& s : f.supports)
    if (std::all_of(s.begin(), s.end(), [&](const Literal& l) { return l.val <= hi; })) sups.push_back(s);
  m.addConstraint(makeTable(scope, std::move(sups)), true);
  m.branchOrder = scope;
  return m;
}

} // namespace ssgac
