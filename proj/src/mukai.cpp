#include "hilbinv/mukai.hpp"

#include <stdexcept>
#include <string>

namespace hilbinv::mukai {

namespace {
// Keeps 2t c^2 and the box searches comfortably inside 64 bits.
constexpr std::int64_t kMaxN = 10'000'000;
}  // namespace

MukaiContext::MukaiContext(std::int64_t n) : n_(n), t_(4 * n - 3) {
  if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
  if (n > kMaxN) throw std::invalid_argument("n too large for 64-bit Mukai arithmetic: " + std::to_string(n));
}

StandardVectors standard_vectors(const MukaiContext& ctx) {
  const std::int64_t n = ctx.n();
  StandardVectors sv;
  sv.v = {1, 0, -(n - 1)};
  sv.a = {-2, 1, -(2 * n - 1)};
  sv.w = sv.v - sv.a;
  sv.u = {2, -1, 2 * (n - 1)};
  return sv;
}

MukaiVector v_i(const MukaiContext& ctx, std::int64_t i) {
  if (i < -1) throw std::invalid_argument("v^(i) needs i >= -1, got " + std::to_string(i));
  auto sv = standard_vectors(ctx);
  return sv.v - (i + 1) * sv.a;
}

std::int64_t r_max(const MukaiContext& ctx) {
  std::int64_t i = 0;
  while ((i + 2) * (i + 3) <= ctx.n()) ++i;
  return i;
}

std::int64_t lambda_pairing(const MukaiContext& ctx, LambdaPoint p, LambdaPoint q) {
  return (2 * ctx.n() - 2) * p.x * q.x + p.x * q.y + p.y * q.x - 2 * p.y * q.y;
}

MukaiVector to_mukai(const MukaiContext& ctx, LambdaPoint p) {
  auto sv = standard_vectors(ctx);
  return p.x * sv.v + p.y * sv.a;
}

std::vector<LambdaPoint> spherical_search(const MukaiContext& ctx, std::int64_t i, std::int64_t bound) {
  if (bound <= 0) throw std::invalid_argument("search bound must be positive");
  if (i < -1) throw std::invalid_argument("spherical search needs i >= -1");
  const LambdaPoint target{1, -(i + 1)};
  const std::int64_t target_sq = lambda_pairing(ctx, target, target);
  if (target_sq <= 0) {
    throw std::invalid_argument("spherical search needs (v^(i))^2 > 0; i = " + std::to_string(i) +
                                " gives " + std::to_string(target_sq));
  }
  std::vector<LambdaPoint> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const LambdaPoint s{x, y};
      if (lambda_pairing(ctx, s, s) != -2) continue;
      const std::int64_t d = lambda_pairing(ctx, s, target);
      // 0 < d <= target_sq / 2, with target_sq even
      if (d > 0 && 2 * d <= target_sq) out.push_back(s);
    }
  }
  return out;
}

std::vector<Decomposition> positive_decomposition_search(const MukaiContext& ctx, std::int64_t i,
                                                         std::int64_t bound) {
  if (bound <= 0) throw std::invalid_argument("search bound must be positive");
  if (i < 0 || i > r_max(ctx)) {
    throw std::invalid_argument("positive decomposition search needs 0 <= i <= r_max, got " + std::to_string(i));
  }
  const LambdaPoint target{1, -(i + 1)};
  auto positive = [&](LambdaPoint p) {
    return lambda_pairing(ctx, p, p) >= 0 && lambda_pairing(ctx, p, target) > 0;
  };
  std::vector<Decomposition> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const LambdaPoint first{x, y};
      const LambdaPoint second{target.x - x, target.y - y};
      if (first == LambdaPoint{} || second == LambdaPoint{}) continue;
      if (positive(first) && positive(second)) out.push_back({to_mukai(ctx, first), to_mukai(ctx, second)});
    }
  }
  return out;
}

std::vector<StrataRow> strata_table(const MukaiContext& ctx) {
  const auto sv = standard_vectors(ctx);
  const std::int64_t last = r_max(ctx);
  std::vector<StrataRow> rows;
  rows.reserve(static_cast<std::size_t>(last + 1));
  for (std::int64_t k = 0; k <= last; ++k) {
    StrataRow row;
    row.k = k;
    row.vector = v_i(ctx, k);
    row.moduli_dim = mukai_square(ctx, row.vector) + 2;
    row.fiber_dim = (k + 1) * (k + 2);
    row.codim_in_base = 2 * row.fiber_dim;
    row.stratum_dim = 2 * ctx.n() - row.fiber_dim;
    row.hom_chi = mukai_pairing(ctx, sv.a, row.vector);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hilbinv::mukai
