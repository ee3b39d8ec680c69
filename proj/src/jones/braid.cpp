#include "logjones/jones/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "logjones/error.hpp"

namespace logjones::jones {

int BraidWord::writhe() const {
  int w = 0;
  for (int g : word) w += g > 0 ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> pos(strands);
  std::iota(pos.begin(), pos.end(), 0);
  // pos[i] tracks the current position of string i.
  for (int g : word) {
    const int k = std::abs(g) - 1;
    for (int& p : pos) {
      if (p == k)
        p = k + 1;
      else if (p == k + 1)
        p = k;
    }
  }
  return pos;
}

int BraidWord::component_count() const {
  const auto perm = permutation();
  std::vector<bool> seen(strands, false);
  int cycles = 0;
  for (int i = 0; i < strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << strands << ":";
  for (int g : word) os << " " << g;
  return os.str();
}

void validate(const BraidWord& b) {
  if (b.strands < 1) throw DomainError("braid needs at least one strand");
  for (int g : b.word)
    if (g == 0 || std::abs(g) >= b.strands)
      throw DomainError("braid generator " + std::to_string(g) + " out of range for " +
                        std::to_string(b.strands) + " strands");
}

BraidWord parse_braid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("braid text must look like \"n: i1 i2 ...\"");
  BraidWord b;
  std::istringstream head(text.substr(0, colon));
  if (!(head >> b.strands)) throw DomainError("braid text: bad strand count");
  std::string rest_head;
  if (head >> rest_head) throw DomainError("braid text: junk before ':'");
  std::istringstream body(text.substr(colon + 1));
  std::string tok;
  while (body >> tok) {
    char* end = nullptr;
    const long g = std::strtol(tok.c_str(), &end, 10);
    if (*end != '\0') throw DomainError("braid text: bad generator '" + tok + "'");
    b.word.push_back(static_cast<int>(g));
  }
  validate(b);
  return b;
}

bool is_catalog_knot(const std::string& name) {
  return name == "unknot" || name == "3_1" || name == "4_1";
}

BraidWord catalog_braid(const std::string& name) {
  if (name == "unknot") return {1, {}, "unknot"};
  if (name == "3_1") return {2, {1, 1, 1}, "3_1"};
  if (name == "4_1") return {3, {1, -2, 1, -2}, "4_1"};
  throw DomainError("unknown knot '" + name + "' (known: unknot, 3_1, 4_1)");
}

}  // namespace logjones::jones
