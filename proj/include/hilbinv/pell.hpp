#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "hilbinv/bigint.hpp"

/// Exact solvers for x^2 - D y^2 = N in its ordinary (N = 1), negative
/// (N = -1), mixed (p x^2 - q y^2 = -1) and congruence-restricted bounded
/// forms. All public values are arbitrary precision; the bounded searches
/// drop to 128-bit arithmetic internally when the bounds allow it.
namespace hilbinv::pell {

struct PellSolution {
  BigInt x;
  BigInt y;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
  friend std::strong_ordering operator<=>(const PellSolution& a, const PellSolution& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

struct IsqrtResult {
  BigInt root;
  bool exact = false;
};

/// floor(sqrt(m)) together with whether m is a perfect square. Throws
/// std::invalid_argument for negative m.
IsqrtResult isqrt(const BigInt& m);

bool is_perfect_square(const BigInt& m);

/// Minimal x, y > 0 with x^2 - D y^2 = 1, read off the continued fraction of
/// sqrt(D). Rejects D <= 0 and perfect squares.
PellSolution fundamental_solution(const BigInt& d);

/// Length of the period of the continued fraction of sqrt(D).
std::size_t continued_fraction_period(const BigInt& d);

/// Smallest prime p = 3 (mod 4) dividing D, searching divisors up to
/// `trial_limit` (and the remaining cofactor when trial division finished it).
std::optional<BigInt> prime_obstruction_3mod4(const BigInt& d, std::uint64_t trial_limit = 1'000'000);

/// Minimal solution of x^2 - D y^2 = -1 or nothing. D with a prime factor
/// p = 3 (mod 4) is rejected without expanding sqrt(D); otherwise the parity
/// of the period decides.
std::optional<PellSolution> negative_pell_minimal(const BigInt& d);

/// Minimal positive (x, y) with p x^2 - q y^2 = -1 and x <= x_bound, by
/// scanning x. Rejects p <= 0, q <= 0 or x_bound <= 0.
std::optional<PellSolution> minimal_solution_mixed(const BigInt& p, const BigInt& q,
                                                   const BigInt& x_bound = BigInt(1'000'000));

/// X^2 - D Y^2 = N with 0 < X <= x_bound, Y >= 1 and X = +-residue (mod modulus).
struct GeneralizedPellProblem {
  BigInt d;
  BigInt rhs;
  BigInt modulus;
  BigInt residue;
  BigInt x_bound;

  /// Throws std::invalid_argument when D <= 0, D is a square, modulus <= 0,
  /// residue is outside [0, modulus) or x_bound <= 0.
  void validate() const;
};

/// Walks X through the two admissible residue classes and tests (X^2 - N)/D
/// for squareness. Sorted by X, no duplicates.
std::vector<PellSolution> solutions_bounded(const GeneralizedPellProblem& problem);

/// Double loop over X and Y. With `appendix_semantics` the congruence test
/// compares unreduced integers (X == residue, X == -residue or
/// X == modulus - residue) and Y runs over [1, x_bound - 1]; otherwise the
/// full congruence is used and Y runs up to the largest value compatible with
/// X <= x_bound.
std::vector<PellSolution> solutions_bounded_oracle(const GeneralizedPellProblem& problem,
                                                   bool appendix_semantics);

}  // namespace hilbinv::pell
