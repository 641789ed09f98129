#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hilbinv/bigint.hpp"

/// Even integral lattices given by Gram matrices, Eichler transvections, and
/// the period lattice Xi = U^3 + E8(-1)^2 + Z l, l^2 = -2(n-1), in which the
/// period of (S^[n], H_n - 2 delta) is identified.
namespace hilbinv::lattice {

using Coords = std::vector<BigInt>;

/// Dense square integer matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  BigInt& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  Matrix transpose() const;
  Coords apply(const Coords& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const Matrix& m);

struct Summand {
  enum class Kind { U, E8Minus, Rank1 };
  Kind kind = Kind::U;
  std::int64_t degree = 0;  // Rank1 only

  static Summand u() { return {Kind::U, 0}; }
  static Summand e8_minus() { return {Kind::E8Minus, 0}; }
  static Summand rank1(std::int64_t d) { return {Kind::Rank1, d}; }
};

/// The E8 Cartan matrix in the simple-root basis, Bourbaki numbering:
/// roots 1-3-4-5-6-7-8 form a chain and root 2 hangs off root 4.
Matrix e8_gram();

struct LatticeElement {
  Coords coords;

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

class IntegerLattice {
 public:
  /// Validates symmetry, evenness and nondegeneracy; throws std::invalid_argument.
  explicit IntegerLattice(Matrix gram);

  /// Orthogonal sum of the summands, in order.
  static IntegerLattice build(const std::vector<Summand>& summands);

  std::size_t rank() const { return gram_.dim(); }
  const Matrix& gram() const { return gram_; }
  const BigInt& det() const { return det_; }

  BigInt pairing(const LatticeElement& x, const LatticeElement& y) const;
  BigInt square(const LatticeElement& x) const { return pairing(x, x); }

  LatticeElement basis(std::size_t i) const;
  LatticeElement zero() const;

 private:
  Matrix gram_;
  BigInt det_;
};

LatticeElement operator+(const LatticeElement& a, const LatticeElement& b);
LatticeElement operator-(const LatticeElement& a, const LatticeElement& b);
LatticeElement operator-(const LatticeElement& a);
LatticeElement operator*(const BigInt& k, const LatticeElement& a);

/// A linear endomorphism; column j is the image of basis vector j.
struct LatticeMap {
  Matrix matrix;

  LatticeElement operator()(const LatticeElement& z) const { return {matrix.apply(z.coords)}; }
  friend LatticeMap operator*(const LatticeMap& f, const LatticeMap& g) { return {f.matrix * g.matrix}; }
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
};

bool is_isometry(const IntegerLattice& lattice, const LatticeMap& map);

/// Eichler transvection z -> z - (y,z)x + (x,z)y - (y,y)/2 (x,z) x.
/// Requires (x,x) = 0; throws std::domain_error if the result is not an
/// isometry (which happens when y is not orthogonal to x).
LatticeMap transvection(const IntegerLattice& lattice, const LatticeElement& x, const LatticeElement& y);

/// gcd of (e, b) over the basis. Rejects the zero vector.
BigInt divisibility(const IntegerLattice& lattice, const LatticeElement& e);

/// Whether m(e*) - e* is integral for every dual basis vector e*, i.e. m acts
/// as the identity on L*/L. Rejects non-isometries.
bool acts_trivially_on_discriminant(const IntegerLattice& lattice, const LatticeMap& map);

/// Xi for a given n with basis order u, v, u1, v1, u2, v2, E8(-1), E8(-1), l.
struct PeriodLattice {
  static constexpr std::size_t kU = 0, kV = 1, kU1 = 2, kV1 = 3, kL = 22;

  std::int64_t n;
  IntegerLattice lattice;

  explicit PeriodLattice(std::int64_t n);

  LatticeElement u() const { return lattice.basis(kU); }
  LatticeElement v() const { return lattice.basis(kV); }
  LatticeElement u1() const { return lattice.basis(kU1); }
  LatticeElement v1() const { return lattice.basis(kV1); }
  LatticeElement ell() const { return lattice.basis(kL); }
  std::int64_t t() const { return 4 * n - 3; }

  /// u + t v - 2l, the image of H_n - 2 delta under the marking H_n -> u + t v, delta -> l.
  LatticeElement marked_polarization() const;
  /// 2(n-1)(u + t v) - t l, the image of 2(n-1) H_n - t delta.
  LatticeElement marked_orthogonal() const;
  /// 2(n-1)(u - v) + 4(n-1) v1 - l.
  LatticeElement kappa() const;
};

/// alpha = t(u1, -v) o t(v1, w') o t(u1, -v)^{-1}, w' = (t-1) v - 2l.
LatticeMap build_alpha(const PeriodLattice& xi);

struct AlphaCheck {
  bool isometry = false;
  bool polarization_to_u_plus_v = false;  // alpha(u + t v - 2l) = u + v
  bool orthogonal_to_kappa = false;       // alpha(2(n-1)(u + t v) - t l) = kappa
  bool discriminant_trivial = false;
  bool conjugation_identity = false;      // t(u1,-v) t(v1,w') t(u1,v) = t(u1,-v) t(v1,w') t(u1,-v)^{-1}

  bool all() const {
    return isometry && polarization_to_u_plus_v && orthogonal_to_kappa && discriminant_trivial && conjugation_identity;
  }
};

AlphaCheck verify_alpha(const PeriodLattice& xi);

std::string to_string(const LatticeElement& e);

}  // namespace hilbinv::lattice
