#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hilbinv/bigint.hpp"
#include "hilbinv/mukai.hpp"
#include "hilbinv/pell.hpp"

/// Lattice data of Sigma = M_sigma(w), w = (3, -H, n), the base of the
/// flopping contraction: NS(Sigma) = <2> + <-2t(n-3)/g^2> with g = gcd(3, n),
/// the finiteness of Bir(Sigma), and the dimension counts that go with the
/// degree-2 class L.
namespace hilbinv::sigma {

struct NsSigma {
  std::int64_t n = 0;
  std::int64_t g = 0;             // gcd(3, n)
  std::int64_t l_square = 2;
  BigInt kappa_square;            // -2t(n-3)/g^2
  BigInt pell_d;                  // t(n-3)/g^2, so kappa^2 = -2 pell_d
  BigInt discriminant;            // det of diag(2, kappa^2)
  mukai::MukaiVector kappa_vec;   // (t, -(2n-3), t(n-2)) / g
};

/// Rejects n < 4 (Sigma has Picard rank one below that) and throws
/// std::logic_error if kappa_vec fails integrality, orthogonality to u and w,
/// or its square.
NsSigma ns_sigma(std::int64_t n);

/// Whether the boundary rays of the positive cone are rational, i.e.
/// t(n-3)/g^2 is a perfect square.
bool positive_cone_rational(std::int64_t n);

enum class BirStatus { Finite, Infinite, Unknown };

std::string to_string(BirStatus status);

struct BirVerdict {
  BirStatus status = BirStatus::Unknown;
  std::optional<pell::PellSolution> witness;  // X^2 - pell_d Y^2 = -1, the class X L + Y kappa
  std::optional<BigInt> obstruction;          // a prime p = 3 (mod 4) dividing pell_d
  BigInt pell_d;
  std::int64_t w_divisibility = 0;            // gcd(3, 2t, n)
  std::string reason;
};

/// Rational positive cone (n = 7 in practice): finite. Otherwise finite when the negative
/// Pell equation for pell_d has a solution (a spherical class cuts a wall),
/// infinite when 3 | n, and Unknown in the remaining cases, which the
/// lattice data alone does not settle.
BirVerdict bir_finiteness(std::int64_t n);

/// h^0(Sigma, kL) = binomial(k^2 + n - 1, n - 2). Requires n >= 3, k >= 1.
BigInt h0_sigma(std::int64_t n, std::int64_t k);

struct DimensionReport {
  std::int64_t n = 0;
  BigInt h0_full;               // (n+1)(n+2)/2 = h^0(H_n - 2 delta)
  BigInt proj_dim;              // n(n+3)/2 = dim |H_n - 2 delta|
  BigInt pluecker_linear_dim;   // n(n-1)/2
  BigInt pluecker_ambient_dim;  // (n-2)(n+1)/2
};

DimensionReport dimension_report(std::int64_t n);

struct FormulaReport {
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::int64_t zero_locus_length = 0;  // 2n points of Z(s)
  std::int64_t grassmannian_dim = 0;   // dim G(2, 2n+1) = 4n - 2 = t + 1
  BigInt catalan_degree;               // deg G(2, 2n+1) = binomial(4n-2, 2n-1) / (2n)
  BigInt fiber_count;                  // binomial(2n, n), generic fiber of the Pfaffian subsystem map
  bool degree_two_divides = false;     // 2 | binomial(2n, n)
  pell::PellSolution pell_fundamental; // of X^2 - t(n-1) Y^2 = 1
  std::optional<pell::PellSolution> reflection_class;  // of (n-1) X^2 - t Y^2 = -1
  DimensionReport dimensions;
};

FormulaReport formula_report(std::int64_t n);

BigInt binomial(const BigInt& top, std::int64_t k);

}  // namespace hilbinv::sigma
