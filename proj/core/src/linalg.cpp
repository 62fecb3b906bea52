#include "picard/linalg.hpp"

namespace picard {

void axpy(SparseCol& y, const Rational& a, const SparseCol& x) {
  if (a == 0) return;
  for (const auto& [row, v] : x) {
    auto [it, inserted] = y.emplace(row, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseCol SpanBuilder::reduce(SparseCol col) const {
  while (!col.empty()) {
    auto lead = col.begin();  // smallest row index
    auto piv = pivots_.find(lead->first);
    if (piv == pivots_.end()) break;
    Rational f = lead->second;
    axpy(col, -f, piv->second);
  }
  return col;
}

bool SpanBuilder::add(SparseCol col) {
  col = reduce(std::move(col));
  if (col.empty()) return false;
  auto lead = col.begin();
  Rational inv = 1 / lead->second;
  SparseCol norm;
  for (const auto& [row, v] : col) norm.emplace_hint(norm.end(), row, inv * v);
  pivots_.emplace(lead->first, std::move(norm));
  ++rank_;
  return true;
}

bool SpanBuilder::contains(SparseCol col) const { return reduce(std::move(col)).empty(); }

int64_t rank_of(const std::vector<SparseCol>& cols) {
  SpanBuilder sb;
  for (const auto& c : cols) sb.add(c);
  return sb.rank();
}

std::vector<SparseCol> kernel_basis(const std::vector<SparseCol>& cols) {
  // Left-to-right elimination; alongside each pivot column we keep the
  // combination of input columns that produced it.
  std::map<int64_t, SparseCol> pivots;
  std::map<int64_t, SparseCol> combos;  // pivot row -> combination
  std::vector<SparseCol> kernel;
  for (size_t i = 0; i < cols.size(); ++i) {
    SparseCol col = cols[i];
    SparseCol combo;
    combo.emplace(static_cast<int64_t>(i), Rational(1));
    while (!col.empty()) {
      auto lead = col.begin();
      auto piv = pivots.find(lead->first);
      if (piv == pivots.end()) break;
      Rational f = lead->second;
      axpy(col, -f, piv->second);
      axpy(combo, -f, combos.at(piv->first));
    }
    if (col.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      auto lead = col.begin();
      Rational inv = 1 / lead->second;
      int64_t row = lead->first;
      SparseCol ncol, ncombo;
      for (const auto& [r, v] : col) ncol.emplace_hint(ncol.end(), r, inv * v);
      for (const auto& [r, v] : combo) ncombo.emplace_hint(ncombo.end(), r, inv * v);
      pivots.emplace(row, std::move(ncol));
      combos.emplace(row, std::move(ncombo));
    }
  }
  return kernel;
}

}  // namespace picard
