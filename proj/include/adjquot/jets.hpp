#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "adjquot/baselocus.hpp"
#include "adjquot/sections.hpp"

namespace adjquot {

/// The point x_{a,b}: xi_a = 1, xi_b = -1, all other coordinates 0. Lies on
/// the Fermat hypersurface for odd p.
struct CoordinatePoint {
  int a = 0;
  int b = 0;
};

/// Exact 1-jet evaluation matrix at x_{a,b} in the chart xi_a = 1 with
/// affine coordinates Z_c = xi_c / xi_a. One row per basis monomial; the
/// columns are [value, d/dZ_c for c not in {a,b}]. The hypersurface
/// constraint kills the Z_b direction: the gradient of 1 + sum Z_c^p at the
/// point is supported on the Z_b slot alone, so that column is deleted
/// exactly.
struct JetMatrix {
  CoordinatePoint point;
  IntegerMatrix matrix;
  std::vector<int> column_variables;  // variable index per derivative column
};

namespace detail {

inline int variable_position(const LinearizedSystem& sys, int index) {
  for (size_t t = 0; t < sys.variables.size(); ++t)
    if (sys.variables[t].index == index) return int(t);
  return -1;
}

}  // namespace detail

inline JetMatrix jet_matrix(const SectionBasis& basis, CoordinatePoint pt) {
  const LinearizedSystem& sys = basis.system;
  const int pa = detail::variable_position(sys, pt.a);
  const int pb = detail::variable_position(sys, pt.b);
  if (pa < 0 || pb < 0 || pt.a == pt.b)
    throw error(errc::invalid_point, "point coordinates must be two distinct variables");

  JetMatrix jm;
  jm.point = pt;
  for (size_t t = 0; t < sys.variables.size(); ++t)
    if (int(t) != pa && int(t) != pb) jm.column_variables.push_back(sys.variables[t].index);

  const int cols = 1 + int(jm.column_variables.size());
  jm.matrix = IntegerMatrix(int(basis.monomials.size()), cols);
  for (size_t r = 0; r < basis.monomials.size(); ++r) {
    const Monomial& m = basis.monomials[r];
    int outside = -1;  // unique variable position outside {a,b} with e > 0
    bool dead = false;
    for (size_t t = 0; t < m.exponents.size(); ++t) {
      if (int(t) == pa || int(t) == pb || m.exponents[t] == 0) continue;
      if (outside >= 0) {
        dead = true;  // vanishes to order >= 2
        break;
      }
      outside = int(t);
    }
    if (dead) continue;
    int64_t sgn = (m.exponents[size_t(pb)] % 2 == 0) ? 1 : -1;
    if (outside < 0) {
      jm.matrix.at(int(r), 0) = sgn;
    } else if (m.exponents[size_t(outside)] == 1) {
      int col = 0;
      for (size_t j = 0; j < jm.column_variables.size(); ++j)
        if (jm.column_variables[j] == sys.variables[size_t(outside)].index) col = int(j) + 1;
      jm.matrix.at(int(r), col) = sgn;
    }
  }
  return jm;
}

/// True iff the system has a section not vanishing at x_{a,b}, i.e. the
/// value column is not identically zero.
inline bool spanned_at(const SectionBasis& basis, CoordinatePoint pt) {
  JetMatrix jm = jet_matrix(basis, pt);
  for (int r = 0; r < jm.matrix.rows; ++r)
    if (jm.matrix.at(r, 0) != 0) return true;
  return false;
}

struct SeparationReport {
  CoordinatePoint point;
  int rank = 0;
  int full_rank = 0;  // 1 + n
  int deficiency = 0;
  bool value_column_zero = false;
  std::vector<int> zero_columns;  // derivative columns identically zero
  std::optional<int> predicted_direction;
  bool predicted_degenerate = false;  // the predicted residue lands on a or b
};

/// Rank, zero columns and the closed-form predicted unseparated direction:
/// the variable c with k_c = character + k_a + k_b mod p, when one exists
/// outside {a,b}.
inline SeparationReport separation_report(const SectionBasis& basis, CoordinatePoint pt) {
  const LinearizedSystem& sys = basis.system;
  JetMatrix jm = jet_matrix(basis, pt);

  SeparationReport rep;
  rep.point = pt;
  rep.full_rank = jm.matrix.cols;
  // rank via the distinct nonzero rows; basis rows repeat heavily at scale
  {
    std::set<std::vector<int64_t>> rows;
    std::vector<int64_t> row(size_t(jm.matrix.cols));
    for (int r = 0; r < jm.matrix.rows; ++r) {
      bool nonzero = false;
      for (int c = 0; c < jm.matrix.cols && !nonzero; ++c) nonzero = jm.matrix.at(r, c) != 0;
      if (!nonzero) continue;
      for (int c = 0; c < jm.matrix.cols; ++c) row[size_t(c)] = jm.matrix.at(r, c);
      rows.insert(row);
    }
    IntegerMatrix reduced(int(rows.size()), jm.matrix.cols);
    int r = 0;
    for (const auto& dr : rows) {
      for (int c = 0; c < jm.matrix.cols; ++c) reduced.at(r, c) = dr[size_t(c)];
      ++r;
    }
    rep.rank = rank_fraction_free(reduced);
  }
  rep.deficiency = rep.full_rank - rep.rank;

  std::vector<char> col_nonzero(size_t(jm.matrix.cols), 0);
  for (int r = 0; r < jm.matrix.rows; ++r)
    for (int c = 0; c < jm.matrix.cols; ++c)
      if (jm.matrix.at(r, c) != 0) col_nonzero[size_t(c)] = 1;
  rep.value_column_zero = !col_nonzero[0];
  for (size_t j = 0; j < jm.column_variables.size(); ++j)
    if (!col_nonzero[j + 1]) rep.zero_columns.push_back(jm.column_variables[j]);

  const int pa = detail::variable_position(sys, pt.a);
  const int pb = detail::variable_position(sys, pt.b);
  int64_t target = floormod(sys.character + sys.variables[size_t(pa)].weight +
                                sys.variables[size_t(pb)].weight,
                            sys.p);
  for (const Variable& var : sys.variables) {
    if (floormod(var.weight, sys.p) != target) continue;
    if (var.index == pt.a || var.index == pt.b)
      rep.predicted_degenerate = true;
    else
      rep.predicted_direction = var.index;
    break;  // weights are pairwise distinct mod p
  }
  return rep;
}

/// Theorem 2(2): separation reports for |K + (n+1)D'| at each base pair of
/// the adjoint system, flagging whether the k_0 direction is the
/// unseparated one as claimed.
struct Theorem2Separation {
  std::array<int, 2> pair;
  SeparationReport report;
  bool k0_column_zero = false;
};

inline std::vector<Theorem2Separation> theorem2_separation_check(const QuotientConfig& cfg,
                                                                 int sign_convention) {
  Theorem2BaseReport base = theorem2_base_check(cfg, sign_convention);

  DivisorClass cls;
  cls.coefficients[0] = cfg.n + 1;
  cls.canonical = 1;
  SectionBasis basis = enumerate_basis(to_system(cfg, cls, sign_convention));

  std::vector<Theorem2Separation> out;
  for (const auto& pr : base.base.pair_base_points) {
    Theorem2Separation item;
    item.pair = pr;
    item.report = separation_report(basis, CoordinatePoint{pr[0], pr[1]});
    for (int c : item.report.zero_columns)
      if (c == 0) item.k0_column_zero = true;  // variable 0 carries weight k_0
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace adjquot
