#pragma once

#include <optional>
#include <vector>

#include "trisum/lattice.hpp"

namespace trisum {

/// All integer shifts v with p(X + v) = p(X).
Lattice stabilizer_lattice(const MultiPoly& p);
/// Shifts fixing every polynomial in ps.
Lattice joint_stabilizer(const std::vector<MultiPoly>& ps);

/// Some v supported on `axes` (bit i for variable i) with p(X + v) = q(X):
/// the representative of the solution coset minimal in (|m|, |n|, |k|).
std::optional<ShiftVector> find_shift(const MultiPoly& p, const MultiPoly& q, unsigned axes = 7);

/// Stabilizer element (m, n, k) with the smallest m > 0, i.e. the minimal m
/// with sigma_x^m p = sigma_y^(-n) sigma_z^(-k) p.
std::optional<ShiftVector> minimal_x_period(const Lattice& stab);

/// Stabilizer element (0, t, -l) with the smallest t > 0, so that
/// sigma_y^t p = sigma_z^l p.
std::optional<ShiftVector> minimal_yz_period(const Lattice& stab);

}  // namespace trisum
