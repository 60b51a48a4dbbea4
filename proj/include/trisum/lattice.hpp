#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trisum/multipoly.hpp"

namespace trisum {

using IVec = std::vector<Integer>;

/// Integer basis of {v in Z^n : A v = 0} where A has the given rows.
std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, std::size_t n);

/// Row Hermite normal form of the lattice spanned by `rows`: echelon with
/// positive pivots and entries above each pivot reduced into [0, pivot).
std::vector<IVec> hermite_form(std::vector<IVec> rows, std::size_t n);

/// Some w in Z^n with A w = b, or nullopt.
std::optional<IVec> solve_integer(const std::vector<IVec>& rows, const IVec& b, std::size_t n);

IVec to_ivec(const ShiftVector& s);
/// Throws std::overflow_error when an entry does not fit in a long.
ShiftVector to_shift(const IVec& v);

/// Sublattice of Z^3 stored as its row Hermite normal form.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(const std::vector<IVec>& generators);

  const std::vector<ShiftVector>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  bool contains(const ShiftVector& v) const;
  /// Elements supported on the variables in `axes` (bit v set for variable v).
  Lattice restricted(unsigned axes) const;

  /// Representative of v + L minimal in (|m|, |n|, |k|) lexicographic order;
  /// ties prefer positive entries.
  ShiftVector reduce(const ShiftVector& v) const;

  /// Element with smallest positive component `coord`, the others reduced
  /// as in reduce(). Nullopt when every element has that component zero.
  std::optional<ShiftVector> min_positive(int coord) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<ShiftVector> basis_;
};

}  // namespace trisum
