#pragma once

#include <string>
#include <vector>

namespace logjones::jones {

/// Braid on `strands` strings. Generator k > 0 is sigma_k crossing strings k
/// and k+1 positively; -k is its inverse. The first letter acts first.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;
  std::string name;

  /// Sum of the signs; the blackboard framing of the closure.
  int writhe() const;
  /// Underlying permutation: perm[i] is where string i ends up.
  std::vector<int> permutation() const;
  /// Number of components of the closure.
  int component_count() const;
  bool closes_to_knot() const { return component_count() == 1; }

  /// "n: i1 i2 ..." form.
  std::string to_string() const;
};

/// Validates strand count and generator range; throws DomainError.
void validate(const BraidWord& b);

/// Parse "n: i1 i2 ..." (the list may be empty). Throws DomainError.
BraidWord parse_braid(const std::string& text);

/// Built-in presentations: "unknot", "3_1", "4_1". Throws DomainError otherwise.
BraidWord catalog_braid(const std::string& name);
bool is_catalog_knot(const std::string& name);

}  // namespace logjones::jones
