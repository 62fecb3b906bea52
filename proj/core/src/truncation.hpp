#pragma once

// Internal helpers shared by the truncated-complex computations in cech.cpp
// and tangent.cpp.  Not installed.

#include <cstdint>
#include <map>
#include <vector>

#include "picard/cech.hpp"
#include "picard/exponent.hpp"

namespace picard::detail {

/// All exponent vectors a with: a0 in [0, d); a_j >= -B for j in S, a_j >= 0
/// for other j >= 1; total degree = total.  Sorted ascending.
std::vector<Exponent> truncated_monomials(int n, int d, const std::vector<int>& S, int B,
                                          int total);

/// Dense row numbering for (ordinal, exponent) keys discovered on the fly.
class RowIndex {
 public:
  int64_t id(int ordinal, const Exponent& e) {
    auto [it, inserted] = ids_.emplace(std::make_pair(ordinal, e), next_);
    if (inserted) ++next_;
    return it->second;
  }
  int64_t size() const { return next_; }

 private:
  std::map<std::pair<int, Exponent>, int64_t> ids_;
  int64_t next_ = 0;
};

}  // namespace picard::detail
