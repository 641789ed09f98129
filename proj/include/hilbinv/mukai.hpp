#pragma once

#include <cstdint>
#include <vector>

#include "hilbinv/bigint.hpp"

/// The algebraic Mukai lattice H*_alg(S, Z) = Z + Z H + Z of a K3 surface
/// with Picard group Z H, H^2 = 2t, t = 4n - 3. A vector (r, c, s) stands for
/// (r, cH, s) and pairs as ((r,c,s),(r',c',s')) = 2t c c' - r s' - r' s.
namespace hilbinv::mukai {

template <class Int>
struct BasicMukaiVector {
  Int r{};
  Int c{};
  Int s{};

  friend bool operator==(const BasicMukaiVector&, const BasicMukaiVector&) = default;

  friend BasicMukaiVector operator+(const BasicMukaiVector& a, const BasicMukaiVector& b) {
    return {a.r + b.r, a.c + b.c, a.s + b.s};
  }
  friend BasicMukaiVector operator-(const BasicMukaiVector& a, const BasicMukaiVector& b) {
    return {a.r - b.r, a.c - b.c, a.s - b.s};
  }
  friend BasicMukaiVector operator-(const BasicMukaiVector& a) { return {-a.r, -a.c, -a.s}; }
  friend BasicMukaiVector operator*(const Int& k, const BasicMukaiVector& a) { return {k * a.r, k * a.c, k * a.s}; }
};

using MukaiVector = BasicMukaiVector<std::int64_t>;
using BigMukaiVector = BasicMukaiVector<BigInt>;

class MukaiContext {
 public:
  /// Rejects n < 2, and n so large that 64-bit pairings could overflow.
  explicit MukaiContext(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t t() const { return t_; }

 private:
  std::int64_t n_;
  std::int64_t t_;
};

template <class Int>
Int mukai_pairing(const MukaiContext& ctx, const BasicMukaiVector<Int>& a, const BasicMukaiVector<Int>& b) {
  return Int(2 * ctx.t()) * a.c * b.c - a.r * b.s - b.r * a.s;
}

template <class Int>
Int mukai_square(const MukaiContext& ctx, const BasicMukaiVector<Int>& a) {
  return mukai_pairing(ctx, a, a);
}

struct StandardVectors {
  MukaiVector v;  // (1, 0, -(n-1)), the Hilbert scheme itself
  MukaiVector a;  // (-2, 1, -(2n-1)), spherical
  MukaiVector w;  // v - a
  MukaiVector u;  // (2, -1, 2(n-1)), square 2 and orthogonal to w
};

StandardVectors standard_vectors(const MukaiContext& ctx);

/// v^(i) = v - (i+1) a for i >= -1.
MukaiVector v_i(const MukaiContext& ctx, std::int64_t i);

/// Largest i >= 0 with n >= (i+1)(i+2).
std::int64_t r_max(const MukaiContext& ctx);

/// Coordinates (x, y) of x v + y a in the rank-two lattice spanned by v, a.
struct LambdaPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;
  friend auto operator<=>(const LambdaPoint&, const LambdaPoint&) = default;
};

/// Pairing on span(v, a), Gram [[2n-2, 1], [1, -2]].
std::int64_t lambda_pairing(const MukaiContext& ctx, LambdaPoint p, LambdaPoint q);

MukaiVector to_mukai(const MukaiContext& ctx, LambdaPoint p);

/// Spherical classes s = x v + y a, |x|, |y| <= bound, with
/// 0 < (s, v^(i)) <= (v^(i))^2 / 2. Requires i >= -1 and (v^(i))^2 > 0.
std::vector<LambdaPoint> spherical_search(const MukaiContext& ctx, std::int64_t i, std::int64_t bound);

struct Decomposition {
  MukaiVector first;
  MukaiVector second;
};

/// Ordered pairs (w1, v^(i) - w1) of nonzero positive classes with w1 in the
/// box |x|, |y| <= bound. A class w is positive for v^(i) when w^2 >= 0 and
/// (w, v^(i)) > 0. Requires 0 <= i <= r_max.
std::vector<Decomposition> positive_decomposition_search(const MukaiContext& ctx, std::int64_t i,
                                                         std::int64_t bound);

struct StrataRow {
  std::int64_t k = 0;
  MukaiVector vector;               // v^(k)
  std::int64_t moduli_dim = 0;      // (v^(k))^2 + 2
  std::int64_t codim_in_base = 0;   // 2(k+1)(k+2), inside the contraction target
  std::int64_t fiber_dim = 0;       // (k+1)(k+2)
  std::int64_t stratum_dim = 0;     // 2n - (k+1)(k+2), dimension of the Brill-Noether stratum
  std::int64_t hom_chi = 0;         // 2k + 3 = hom - ext^1
};

std::vector<StrataRow> strata_table(const MukaiContext& ctx);

}  // namespace hilbinv::mukai
