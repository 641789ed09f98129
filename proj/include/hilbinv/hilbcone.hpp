#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilbinv/bigint.hpp"
#include "hilbinv/mukai.hpp"
#include "hilbinv/pell.hpp"

/// NS(S^[n]) = Z H_n + Z delta with the Beauville-Bogomolov form
/// q(a H_n + b delta) = 2t a^2 - 2(n-1) b^2, the involution acting as
/// -R_{H_n - 2 delta}, and the walls of the movable cone.
///
/// A wall is the ray X H_n - 2tY delta of a positive solution of
///   X^2 - 4t(n-1) Y^2 = alpha^2 - 4 rho (n-1),   X = +-alpha (mod 2(n-1)),
/// for one of the admissible pairs (rho, alpha). Its slope is Y/X: the
/// movable cone is 0 <= Y/X <= 2/(2t-1) and the middle wall H_n - 2 delta
/// has slope 1/t.
namespace hilbinv::hilbcone {

struct DivisorClass {
  BigInt a;  // coefficient of H_n
  BigInt b;  // coefficient of delta

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

BigInt bb_form(std::int64_t n, const DivisorClass& c1, const DivisorClass& c2);

/// -R_D(c) with D = H_n - 2 delta; q(D) = 2 so R_D(c) = c - q(c, D) D.
DivisorClass involution_action(std::int64_t n, const DivisorClass& c);

/// (H_n, (2t-1) H_n - 4t delta).
std::pair<DivisorClass, DivisorClass> movable_rays(std::int64_t n);

struct CattaneoCase {
  std::int64_t rho = 0;
  std::int64_t alpha = 0;

  friend bool operator==(const CattaneoCase&, const CattaneoCase&) = default;
};

/// Text: rho = -1 with alpha in [1, n-1]; rho = 0 with alpha in [3, n-1];
/// rho in [1, floor((n-1)/4)] with alpha in [4 rho + 1, n-1].
/// Appendix: the ranges the published search program actually loops over,
/// i.e. alpha starts at 2 for rho = -1 and rho stops at floor((n-1)/4) - 1.
enum class CaseRange { Text, Appendix };

std::vector<CattaneoCase> cattaneo_cases(std::int64_t n, CaseRange range = CaseRange::Text);

/// Full: text case ranges, X = +-alpha (mod 2(n-1)) in the reduced sense,
/// every solution in the interior of the movable cone.
/// Appendix: a literal replay of the published search (appendix ranges,
/// unreduced congruence test, X^2 <= tA) plus the middle wall, which that
/// program takes for granted.
enum class WallMode { Appendix, Full };

struct WallRecord {
  std::int64_t rho = 0;
  std::int64_t alpha = 0;
  BigInt x;
  BigInt y;
  DivisorClass ray;             // X H_n - 2tY delta
  mukai::BigMukaiVector a_vec;  // the spherical-or-positive class paired with v
  BigRational slope;            // Y / X
};

/// Builds the record and checks the defining equation, the congruence,
/// integrality of a_vec, a_vec^2 = 2 rho, |(v, a_vec)| = alpha and
/// 0 < slope < 2/(2t-1). Throws std::domain_error if any fails.
///
/// a_vec = ((X - alpha)/(2(n-1)), -Y, (X + alpha)/2) when X = alpha (mod 2(n-1)),
///         ((X + alpha)/(2(n-1)), -Y, (X - alpha)/2) otherwise.
WallRecord make_wall_record(std::int64_t n, std::int64_t rho, std::int64_t alpha, const BigInt& x, const BigInt& y);

/// alpha^2 - 4 rho (n-1).
BigInt wall_rhs(std::int64_t n, const CattaneoCase& c);

/// The generalized Pell problem of a case with the given X bound.
pell::GeneralizedPellProblem wall_problem(std::int64_t n, const CattaneoCase& c, const BigInt& x_bound);

/// isqrt((2t-1)^2 A): every interior solution has X at most this.
BigInt interior_x_bound(std::int64_t n, const CattaneoCase& c);

/// Solutions of one case strictly inside the movable cone, sorted by X.
/// Substituting X = +-alpha + 2(n-1)k turns the equation into
/// t Y^2 = (n-1)k^2 +- alpha k + rho, so k is confined to the classes
/// mod t with (k -+ 2 alpha)^2 = 4(alpha^2 + rho); only those are visited.
std::vector<pell::PellSolution> interior_solutions(std::int64_t n, const CattaneoCase& c);

/// Deduplicated by primitive ray, sorted by slope.
std::vector<WallRecord> enumerate_walls(std::int64_t n, WallMode mode);

struct ChamberCount {
  std::int64_t n = 0;
  std::int64_t chambers = 0;            // C_n
  std::int64_t walls_below_middle = 0;  // rays with slope < 1/t
  std::int64_t total_rays = 0;
  /// total_rays == 2 C_n - 1; only meaningful when the whole cone was searched.
  std::optional<bool> symmetric;
  std::vector<WallRecord> below_middle;
};

ChamberCount chamber_count(std::int64_t n, WallMode mode);

/// chamber_count for every n in [n_min, n_max], ordered by n. `jobs` worker
/// threads; the result does not depend on it.
std::vector<ChamberCount> scan_chambers(std::int64_t n_min, std::int64_t n_max, WallMode mode, unsigned jobs = 1);

}  // namespace hilbinv::hilbcone
