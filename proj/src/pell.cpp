#include "hilbinv/pell.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hilbinv/detail/int128.hpp"

namespace hilbinv::pell {
namespace {

using detail::floor_sqrt;
using detail::i128;

void require_pell_discriminant(const BigInt& d) {
  if (d <= 0) throw std::invalid_argument("Pell discriminant must be positive, got " + d.str());
  if (is_perfect_square(d)) throw std::invalid_argument("Pell discriminant must not be a square, got " + d.str());
}

// One step of the continued fraction of sqrt(D): (m, q, a) -> next, with
// convergents p/q carried alongside.
struct Expansion {
  BigInt d;
  BigInt a0;
  BigInt m = 0;
  BigInt den = 1;
  BigInt a;
  BigInt p_prev = 1, p = 0;
  BigInt q_prev = 0, q = 1;

  explicit Expansion(const BigInt& disc) : d(disc), a0(floor_sqrt(disc)), a(a0) {
    p = a0;
  }

  void advance() {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }

  BigInt norm() const { return p * p - d * q * q; }
};

template <class Int>
bool congruent_pm(const Int& x, const Int& modulus, const Int& residue) {
  Int r = x % modulus;
  if (r == residue) return true;
  Int neg = (modulus - residue) % modulus;
  return r == neg;
}

template <class Int>
bool appendix_congruent(const Int& x, const Int& modulus, const Int& residue) {
  // Literal replication of: alpha == x or alpha == -x or alpha == 2(n-1) - x.
  return residue == x || residue == -x || residue == modulus - x;
}

template <class Int>
std::vector<PellSolution> residue_walk(const Int& d, const Int& rhs, const Int& modulus, const Int& residue,
                                       const Int& x_bound) {
  std::set<PellSolution> found;
  const Int starts[2] = {residue, (modulus - residue) % modulus};
  for (int s = 0; s < 2; ++s) {
    if (s == 1 && starts[1] == starts[0]) break;
    Int x = starts[s] == 0 ? modulus : starts[s];
    for (; x <= x_bound; x += modulus) {
      Int diff = x * x - rhs;
      if (diff <= 0 || diff % d != 0) continue;
      Int y2 = diff / d;
      Int y = floor_sqrt(y2);
      if (y * y == y2) found.insert({BigInt(x), BigInt(y)});
    }
  }
  return {found.begin(), found.end()};
}

template <class Int>
std::vector<PellSolution> double_loop(const Int& d, const Int& rhs, const Int& modulus, const Int& residue,
                                      const Int& x_bound, bool appendix_semantics) {
  Int y_max;
  if (appendix_semantics) {
    y_max = x_bound - 1;
  } else {
    Int top = x_bound * x_bound - rhs;
    y_max = top <= 0 ? Int(0) : Int(floor_sqrt(Int(top / d)));
  }
  std::vector<PellSolution> out;
  for (Int x = 1; x <= x_bound; ++x) {
    bool admissible = appendix_semantics ? appendix_congruent(x, modulus, residue)
                                         : congruent_pm(x, modulus, residue);
    if (!admissible) continue;
    for (Int y = 1; y <= y_max; ++y) {
      if (x * x - d * y * y == rhs) out.push_back({BigInt(x), BigInt(y)});
    }
  }
  return out;
}

bool fast_path_ok(const GeneralizedPellProblem& pb) {
  const BigInt kXLimit = BigInt(1) << 60;
  return pb.x_bound < kXLimit && detail::fits_fast(pb.d) && detail::fits_fast(pb.rhs) &&
         detail::fits_fast(pb.modulus) && detail::fits_fast(pb.d * pb.x_bound * pb.x_bound);
}

}  // namespace

IsqrtResult isqrt(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("isqrt of negative value " + m.str());
  BigInt rem;
  BigInt root = boost::multiprecision::sqrt(m, rem);
  return {root, rem == 0};
}

bool is_perfect_square(const BigInt& m) { return m >= 0 && isqrt(m).exact; }

PellSolution fundamental_solution(const BigInt& d) {
  require_pell_discriminant(d);
  Expansion cf(d);
  while (cf.norm() != 1) cf.advance();
  return {cf.p, cf.q};
}

std::size_t continued_fraction_period(const BigInt& d) {
  require_pell_discriminant(d);
  Expansion cf(d);
  std::size_t period = 0;
  do {
    cf.advance();
    ++period;
  } while (cf.a != 2 * cf.a0);
  return period;
}

std::optional<BigInt> prime_obstruction_3mod4(const BigInt& d, std::uint64_t trial_limit) {
  if (d <= 0) throw std::invalid_argument("expected a positive integer, got " + d.str());
  BigInt rest = d;
  while (rest % 2 == 0) rest /= 2;
  bool complete = false;
  for (std::uint64_t p = 3; p <= trial_limit; p += 2) {
    if (BigInt(p) * p > rest) {
      complete = true;
      break;
    }
    if (rest % p != 0) continue;
    if (p % 4 == 3) return BigInt(p);
    while (rest % p == 0) rest /= p;
  }
  // A fully trial-divided cofactor is 1 or prime.
  if (complete && rest > 1 && rest % 4 == 3) return rest;
  return std::nullopt;
}

std::optional<PellSolution> negative_pell_minimal(const BigInt& d) {
  require_pell_discriminant(d);
  if (d % 4 == 0) return std::nullopt;
  if (prime_obstruction_3mod4(d)) return std::nullopt;
  Expansion cf(d);
  for (;;) {
    BigInt nm = cf.norm();
    if (nm == -1) return PellSolution{cf.p, cf.q};
    if (nm == 1) return std::nullopt;
    cf.advance();
  }
}

std::optional<PellSolution> minimal_solution_mixed(const BigInt& p, const BigInt& q, const BigInt& x_bound) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("mixed Pell coefficients must be positive");
  if (x_bound <= 0) throw std::invalid_argument("mixed Pell search bound must be positive");
  if (detail::fits_fast(p * x_bound * x_bound + 1) && detail::fits_fast(q)) {
    const i128 pp = detail::to_i128(p), qq = detail::to_i128(q), xb = detail::to_i128(x_bound);
    for (i128 x = 1; x <= xb; ++x) {
      i128 v = pp * x * x + 1;
      if (v % qq != 0) continue;
      i128 y2 = v / qq;
      i128 y = floor_sqrt(y2);
      if (y * y == y2) return PellSolution{detail::to_big(x), detail::to_big(y)};
    }
    return std::nullopt;
  }
  for (BigInt x = 1; x <= x_bound; ++x) {
    BigInt v = p * x * x + 1;
    if (v % q != 0) continue;
    auto r = isqrt(v / q);
    if (r.exact) return PellSolution{x, r.root};
  }
  return std::nullopt;
}

void GeneralizedPellProblem::validate() const {
  require_pell_discriminant(d);
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  if (residue < 0 || residue >= modulus) throw std::invalid_argument("residue must lie in [0, modulus)");
  if (x_bound <= 0) throw std::invalid_argument("x_bound must be positive");
}

std::vector<PellSolution> solutions_bounded(const GeneralizedPellProblem& pb) {
  pb.validate();
  if (fast_path_ok(pb)) {
    return residue_walk<i128>(detail::to_i128(pb.d), detail::to_i128(pb.rhs), detail::to_i128(pb.modulus),
                              detail::to_i128(pb.residue), detail::to_i128(pb.x_bound));
  }
  return residue_walk<BigInt>(pb.d, pb.rhs, pb.modulus, pb.residue, pb.x_bound);
}

std::vector<PellSolution> solutions_bounded_oracle(const GeneralizedPellProblem& pb, bool appendix_semantics) {
  pb.validate();
  if (fast_path_ok(pb)) {
    return double_loop<i128>(detail::to_i128(pb.d), detail::to_i128(pb.rhs), detail::to_i128(pb.modulus),
                             detail::to_i128(pb.residue), detail::to_i128(pb.x_bound), appendix_semantics);
  }
  return double_loop<BigInt>(pb.d, pb.rhs, pb.modulus, pb.residue, pb.x_bound, appendix_semantics);
}

}  // namespace hilbinv::pell
