#include "hilbinv/hilbcone.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "hilbinv/detail/int128.hpp"

namespace hilbinv::hilbcone {
namespace {

using detail::i128;

void require_n(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
}

// Beyond this the reduced search would leave 128-bit range; fall back to the
// arbitrary-precision residue walk.
constexpr std::int64_t kFastPathMaxN = std::int64_t{1} << 20;

// Square roots of every residue mod t, built once per n.
class RootTable {
 public:
  explicit RootTable(std::int64_t t) : t_(t), offsets_(static_cast<std::size_t>(t) + 1, 0) {
    std::vector<std::int64_t> square(static_cast<std::size_t>(t));
    for (std::int64_t s = 0; s < t; ++s) {
      square[static_cast<std::size_t>(s)] = static_cast<std::int64_t>((static_cast<i128>(s) * s) % t);
      ++offsets_[static_cast<std::size_t>(square[static_cast<std::size_t>(s)]) + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    roots_.resize(static_cast<std::size_t>(t));
    auto fill = offsets_;
    for (std::int64_t s = 0; s < t; ++s) {
      roots_[static_cast<std::size_t>(fill[static_cast<std::size_t>(square[static_cast<std::size_t>(s)])]++)] = s;
    }
  }

  template <class F>
  void for_each_root(std::int64_t residue, F&& f) const {
    residue %= t_;
    if (residue < 0) residue += t_;
    for (auto i = offsets_[static_cast<std::size_t>(residue)]; i < offsets_[static_cast<std::size_t>(residue) + 1]; ++i) {
      f(roots_[static_cast<std::size_t>(i)]);
    }
  }

 private:
  std::int64_t t_;
  std::vector<std::int64_t> offsets_;
  std::vector<std::int64_t> roots_;
};

std::vector<pell::PellSolution> reduced_search(std::int64_t n, const CattaneoCase& c, const RootTable& roots) {
  const i128 t = 4 * n - 3;
  const i128 m = 2 * (n - 1);
  const i128 alpha = c.alpha;
  const i128 a_rhs = alpha * alpha - 4 * static_cast<i128>(c.rho) * (n - 1);
  if (a_rhs <= 0) return {};
  const i128 limit = a_rhs * (2 * t - 1) * (2 * t - 1);  // X^2 < limit

  std::set<pell::PellSolution> found;
  for (const i128 sign : {i128{1}, i128{-1}}) {
    const i128 target = (4 * (alpha * alpha + c.rho)) % t;
    roots.for_each_root(static_cast<std::int64_t>(target), [&](std::int64_t s) {
      i128 k = (2 * sign * alpha + s) % t;
      if (k < 0) k += t;
      for (;; k += t) {
        const i128 x = sign * alpha + m * k;
        if (x <= 0) continue;
        if (x * x >= limit) break;
        const i128 q = (n - 1) * k * k + sign * alpha * k + c.rho;
        if (q <= 0 || q % t != 0) continue;
        const i128 y2 = q / t;
        const i128 y = detail::floor_sqrt(y2);
        if (y * y == y2) found.insert({detail::to_big(x), detail::to_big(y)});
      }
    });
  }
  return {found.begin(), found.end()};
}

std::vector<pell::PellSolution> generic_interior_search(std::int64_t n, const CattaneoCase& c) {
  const BigInt a_rhs = wall_rhs(n, c);
  if (a_rhs <= 0) return {};
  const BigInt t = 4 * n - 3;
  const BigInt limit = a_rhs * (2 * t - 1) * (2 * t - 1);
  auto sols = pell::solutions_bounded(wall_problem(n, c, interior_x_bound(n, c)));
  std::erase_if(sols, [&](const pell::PellSolution& s) { return s.x * s.x >= limit; });
  return sols;
}

std::vector<WallRecord> dedupe_by_ray(std::vector<WallRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const WallRecord& a, const WallRecord& b) { return a.slope < b.slope; });
  std::vector<WallRecord> out;
  for (auto& r : records) {
    if (!out.empty() && out.back().slope == r.slope) continue;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

BigInt bb_form(std::int64_t n, const DivisorClass& c1, const DivisorClass& c2) {
  require_n(n);
  const BigInt t = 4 * n - 3;
  return 2 * t * c1.a * c2.a - 2 * BigInt(n - 1) * c1.b * c2.b;
}

DivisorClass involution_action(std::int64_t n, const DivisorClass& c) {
  const DivisorClass axis{1, -2};
  const BigInt k = bb_form(n, c, axis);
  return {k * axis.a - c.a, k * axis.b - c.b};
}

std::pair<DivisorClass, DivisorClass> movable_rays(std::int64_t n) {
  require_n(n);
  const BigInt t = 4 * n - 3;
  return {DivisorClass{1, 0}, DivisorClass{2 * t - 1, -4 * t}};
}

std::vector<CattaneoCase> cattaneo_cases(std::int64_t n, CaseRange range) {
  require_n(n);
  std::vector<CattaneoCase> out;
  const std::int64_t first_alpha = range == CaseRange::Text ? 1 : 2;
  for (std::int64_t alpha = first_alpha; alpha <= n - 1; ++alpha) out.push_back({-1, alpha});
  for (std::int64_t alpha = 3; alpha <= n - 1; ++alpha) out.push_back({0, alpha});
  const std::int64_t last_rho = range == CaseRange::Text ? (n - 1) / 4 : (n - 1) / 4 - 1;
  for (std::int64_t rho = 1; rho <= last_rho; ++rho) {
    for (std::int64_t alpha = 4 * rho + 1; alpha <= n - 1; ++alpha) out.push_back({rho, alpha});
  }
  return out;
}

BigInt wall_rhs(std::int64_t n, const CattaneoCase& c) {
  return BigInt(c.alpha) * c.alpha - 4 * BigInt(c.rho) * (n - 1);
}

pell::GeneralizedPellProblem wall_problem(std::int64_t n, const CattaneoCase& c, const BigInt& x_bound) {
  require_n(n);
  const BigInt t = 4 * n - 3;
  const BigInt m = 2 * BigInt(n - 1);
  return {4 * t * (n - 1), wall_rhs(n, c), m, BigInt(c.alpha) % m, x_bound};
}

BigInt interior_x_bound(std::int64_t n, const CattaneoCase& c) {
  const BigInt a_rhs = wall_rhs(n, c);
  if (a_rhs <= 0) return 0;
  const BigInt t = 4 * n - 3;
  return pell::isqrt(a_rhs * (2 * t - 1) * (2 * t - 1)).root;
}

std::vector<pell::PellSolution> interior_solutions(std::int64_t n, const CattaneoCase& c) {
  require_n(n);
  if (n > kFastPathMaxN) return generic_interior_search(n, c);
  return reduced_search(n, c, RootTable(4 * n - 3));
}

WallRecord make_wall_record(std::int64_t n, std::int64_t rho, std::int64_t alpha, const BigInt& x, const BigInt& y) {
  const mukai::MukaiContext ctx(n);
  const BigInt t = ctx.t();
  const BigInt m = 2 * BigInt(n - 1);
  auto fail = [&](const std::string& what) {
    throw std::domain_error("wall (rho=" + std::to_string(rho) + ", alpha=" + std::to_string(alpha) +
                            ", X=" + x.str() + ", Y=" + y.str() + ") at n=" + std::to_string(n) + ": " + what);
  };
  if (x <= 0 || y <= 0) fail("X and Y must be positive");
  const BigInt rhs = wall_rhs(n, {rho, alpha});
  if (x * x - 4 * t * (n - 1) * y * y != rhs) fail("not a solution of the wall equation");

  const bool plus = (x - alpha) % m == 0;
  if (!plus && (x + alpha) % m != 0) fail("X is not congruent to +-alpha mod 2(n-1)");

  WallRecord rec;
  rec.rho = rho;
  rec.alpha = alpha;
  rec.x = x;
  rec.y = y;
  const BigInt r_num = plus ? BigInt(x - alpha) : BigInt(x + alpha);
  const BigInt s_num = plus ? BigInt(x + alpha) : BigInt(x - alpha);
  if (r_num % m != 0 || s_num % 2 != 0) fail("a_vec is not integral");
  rec.a_vec = {r_num / m, -y, s_num / 2};

  const mukai::BigMukaiVector v{1, 0, -BigInt(n - 1)};
  if (mukai::mukai_square(ctx, rec.a_vec) != 2 * rho) fail("a_vec^2 != 2 rho");
  if (abs(mukai::mukai_pairing(ctx, v, rec.a_vec)) != alpha) fail("|(v, a_vec)| != alpha");

  rec.slope = BigRational(y, x);
  // 0 < Y/X < 2/(2t-1)
  if (y * (2 * t - 1) >= 2 * x) fail("ray is not inside the movable cone");
  rec.ray = {x, -2 * t * y};
  return rec;
}

namespace {

// The unreduced congruence test of the published program only accepts
// X in {alpha, 2(n-1) - alpha} (X = -alpha is never positive), so the
// double loop collapses to a squareness test on those candidates.
std::vector<pell::PellSolution> appendix_literal_solutions(std::int64_t n, const CattaneoCase& c,
                                                           const BigInt& x_bound) {
  const BigInt d = BigInt(4) * (4 * n - 3) * (n - 1);
  const BigInt rhs = wall_rhs(n, c);
  std::set<pell::PellSolution> out;
  for (const BigInt& x : {BigInt(c.alpha), BigInt(2 * (n - 1) - c.alpha)}) {
    if (x < 1 || x > x_bound) continue;
    const BigInt top = x * x - rhs;
    if (top <= 0 || top % d != 0) continue;
    const auto root = pell::isqrt(top / d);
    if (root.exact && root.root >= 1 && root.root <= x_bound - 1) out.insert({x, root.root});
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<WallRecord> enumerate_walls(std::int64_t n, WallMode mode) {
  require_n(n);
  const std::int64_t t = 4 * n - 3;
  std::vector<WallRecord> records;
  if (mode == WallMode::Full) {
    const bool fast = n <= kFastPathMaxN;
    std::optional<RootTable> roots;
    if (fast) roots.emplace(t);
    for (const auto& c : cattaneo_cases(n, CaseRange::Text)) {
      auto sols = fast ? reduced_search(n, c, *roots) : generic_interior_search(n, c);
      for (const auto& s : sols) records.push_back(make_wall_record(n, c.rho, c.alpha, s.x, s.y));
    }
  } else {
    records.push_back(make_wall_record(n, -1, 1, t, 1));
    for (const auto& c : cattaneo_cases(n, CaseRange::Appendix)) {
      const BigInt ta = BigInt(t) * wall_rhs(n, c);
      if (ta <= 0) continue;
      const BigInt x_bound = pell::isqrt(ta).root;
      for (const auto& s : appendix_literal_solutions(n, c, x_bound)) {
        records.push_back(make_wall_record(n, c.rho, c.alpha, s.x, s.y));
      }
    }
  }
  return dedupe_by_ray(std::move(records));
}

ChamberCount chamber_count(std::int64_t n, WallMode mode) {
  ChamberCount out;
  out.n = n;
  const BigRational middle(1, 4 * n - 3);
  auto walls = enumerate_walls(n, mode);
  for (auto& w : walls) {
    if (w.slope < middle) out.below_middle.push_back(w);
  }
  out.walls_below_middle = static_cast<std::int64_t>(out.below_middle.size());
  out.chambers = out.walls_below_middle + 1;
  out.total_rays = static_cast<std::int64_t>(walls.size());
  if (mode == WallMode::Full) out.symmetric = out.total_rays == 2 * out.chambers - 1;
  return out;
}

std::vector<ChamberCount> scan_chambers(std::int64_t n_min, std::int64_t n_max, WallMode mode, unsigned jobs) {
  require_n(n_min);
  if (n_max < n_min) throw std::invalid_argument("empty range: n_max < n_min");
  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<ChamberCount> results(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = chamber_count(n_min + static_cast<std::int64_t>(i), mode);
    return results;
  }
  // Large n are the expensive ones, so hand them out first.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            const std::size_t idx = count - 1 - i;
            results[idx] = chamber_count(n_min + static_cast<std::int64_t>(idx), mode);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace hilbinv::hilbcone
