#include "hilbinv/sigma.hpp"

#include <numeric>
#include <stdexcept>

namespace hilbinv::sigma {
namespace {

void require_rank_two(std::int64_t n) {
  if (n < 4) throw std::invalid_argument("NS(Sigma) has rank two only from n = 4, got n = " + std::to_string(n));
}

BigInt pell_discriminant(std::int64_t n) {
  const std::int64_t g = std::gcd<std::int64_t>(3, n);
  const BigInt product = BigInt(4 * n - 3) * (n - 3);
  return product / (g * g);
}

}  // namespace

NsSigma ns_sigma(std::int64_t n) {
  require_rank_two(n);
  const mukai::MukaiContext ctx(n);
  const std::int64_t t = ctx.t();
  NsSigma ns;
  ns.n = n;
  ns.g = std::gcd<std::int64_t>(3, n);
  ns.pell_d = pell_discriminant(n);
  ns.kappa_square = -2 * ns.pell_d;
  ns.discriminant = ns.l_square * ns.kappa_square;

  const mukai::MukaiVector raw{t, -(2 * n - 3), t * (n - 2)};
  if (raw.r % ns.g != 0 || raw.c % ns.g != 0 || raw.s % ns.g != 0) {
    throw std::logic_error("kappa is not integral at n = " + std::to_string(n));
  }
  ns.kappa_vec = {raw.r / ns.g, raw.c / ns.g, raw.s / ns.g};
  const auto sv = mukai::standard_vectors(ctx);
  if (mukai::mukai_pairing(ctx, ns.kappa_vec, sv.u) != 0 || mukai::mukai_pairing(ctx, ns.kappa_vec, sv.w) != 0) {
    throw std::logic_error("kappa is not orthogonal to u and w at n = " + std::to_string(n));
  }
  if (BigInt(mukai::mukai_square(ctx, ns.kappa_vec)) != ns.kappa_square) {
    throw std::logic_error("kappa^2 mismatch at n = " + std::to_string(n));
  }
  return ns;
}

bool positive_cone_rational(std::int64_t n) {
  require_rank_two(n);
  return pell::is_perfect_square(pell_discriminant(n));
}

std::string to_string(BirStatus status) {
  switch (status) {
    case BirStatus::Finite:
      return "Finite";
    case BirStatus::Infinite:
      return "Infinite";
    case BirStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

BirVerdict bir_finiteness(std::int64_t n) {
  require_rank_two(n);
  const std::int64_t t = 4 * n - 3;
  BirVerdict out;
  out.pell_d = pell_discriminant(n);
  out.w_divisibility = std::gcd(std::gcd<std::int64_t>(3, 2 * t), n);

  if (pell::is_perfect_square(out.pell_d)) {
    out.status = BirStatus::Finite;
    out.reason = "rational boundary rays of the positive cone";
    return out;
  }
  if (auto sol = pell::negative_pell_minimal(out.pell_d)) {
    out.status = BirStatus::Finite;
    out.witness = std::move(sol);
    out.reason = "spherical class X L + Y kappa cuts a wall inside the positive cone";
    return out;
  }
  out.obstruction = pell::prime_obstruction_3mod4(out.pell_d);
  if (n % 3 == 0) {
    out.status = BirStatus::Infinite;
    out.reason = "no spherical class (negative Pell unsolvable) and w has divisibility 3: Mov = Pos";
    return out;
  }
  out.status = BirStatus::Unknown;
  out.reason = "negative Pell unsolvable; isotropic classes not decided by this test";
  return out;
}

BigInt binomial(const BigInt& top, std::int64_t k) {
  if (k < 0 || top < k) return 0;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (top - k + i) / i;
  return out;
}

BigInt h0_sigma(std::int64_t n, std::int64_t k) {
  if (n < 3) throw std::invalid_argument("h0_sigma needs n >= 3");
  if (k < 1) throw std::invalid_argument("h0_sigma needs k >= 1");
  // k^2/2 q(L) + n - 1 with q(L) = 2
  return binomial(BigInt(k) * k + n - 1, n - 2);
}

DimensionReport dimension_report(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const BigInt bn = n;
  DimensionReport d;
  d.n = n;
  d.h0_full = (bn + 1) * (bn + 2) / 2;
  d.proj_dim = bn * (bn + 3) / 2;
  d.pluecker_linear_dim = d.h0_full - (2 * bn + 1);
  d.pluecker_ambient_dim = (bn - 2) * (bn + 1) / 2;
  return d;
}

FormulaReport formula_report(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  FormulaReport f;
  f.n = n;
  f.t = 4 * n - 3;
  f.zero_locus_length = 2 * n;
  f.grassmannian_dim = 2 * (2 * n + 1 - 2);
  f.catalan_degree = binomial(BigInt(4 * n - 2), 2 * n - 1) / (2 * n);
  f.fiber_count = binomial(BigInt(2 * n), n);
  f.degree_two_divides = f.fiber_count % 2 == 0;
  f.pell_fundamental = pell::fundamental_solution(BigInt(f.t) * (n - 1));
  f.reflection_class = pell::minimal_solution_mixed(n - 1, f.t);
  f.dimensions = dimension_report(n);
  return f;
}

}  // namespace hilbinv::sigma
