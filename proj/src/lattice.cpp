#include "hilbinv/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace hilbinv::lattice {
namespace {

bool is_zero(const BigInt& x) { return x.is_zero(); }

void require_same_rank(const IntegerLattice& lattice, const LatticeElement& e) {
  if (e.coords.size() != lattice.rank()) throw std::invalid_argument("element rank does not match lattice rank");
}

void require_same_rank(const IntegerLattice& lattice, const LatticeMap& m) {
  if (m.matrix.dim() != lattice.rank()) throw std::invalid_argument("map rank does not match lattice rank");
}

// Gauss-Jordan over Q; the Gram matrix is nondegenerate by construction.
std::vector<std::vector<BigRational>> rational_inverse(const Matrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    std::swap(a[pivot], a[col]);
    const BigRational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

}  // namespace

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Coords Matrix::apply(const Coords& v) const {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Coords out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!is_zero((*this)(i, j)) && !is_zero(v[j])) acc += (*this)(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in matrix product");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

BigInt determinant(const Matrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  Matrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a(swap_row, k))) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Matrix e8_gram() {
  Matrix g(8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  // Bourbaki labels 1..8 -> indices 0..7
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [i, j] : edges) g(i, j) = g(j, i) = -1;
  return g;
}

IntegerLattice::IntegerLattice(Matrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.dim();
  if (n == 0) throw std::invalid_argument("lattice must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Gram matrix is not even");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Gram matrix is not symmetric");
    }
  }
  det_ = determinant(gram_);
  if (det_ == 0) throw std::invalid_argument("Gram matrix is degenerate");
}

IntegerLattice IntegerLattice::build(const std::vector<Summand>& summands) {
  if (summands.empty()) throw std::invalid_argument("no summands given");
  std::size_t rank = 0;
  for (const auto& s : summands) {
    if (s.kind == Summand::Kind::Rank1 && s.degree % 2 != 0) {
      throw std::invalid_argument("rank-one summand must have even degree, got " + std::to_string(s.degree));
    }
    rank += s.kind == Summand::Kind::U ? 2 : s.kind == Summand::Kind::E8Minus ? 8 : 1;
  }
  Matrix g(rank);
  const Matrix e8 = e8_gram();
  std::size_t at = 0;
  for (const auto& s : summands) {
    switch (s.kind) {
      case Summand::Kind::U:
        g(at, at + 1) = g(at + 1, at) = 1;
        at += 2;
        break;
      case Summand::Kind::E8Minus:
        for (std::size_t i = 0; i < 8; ++i) {
          for (std::size_t j = 0; j < 8; ++j) g(at + i, at + j) = -e8(i, j);
        }
        at += 8;
        break;
      case Summand::Kind::Rank1:
        g(at, at) = s.degree;
        at += 1;
        break;
    }
  }
  return IntegerLattice(std::move(g));
}

BigInt IntegerLattice::pairing(const LatticeElement& x, const LatticeElement& y) const {
  require_same_rank(*this, x);
  require_same_rank(*this, y);
  const Coords gy = gram_.apply(y.coords);
  BigInt acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) acc += x.coords[i] * gy[i];
  return acc;
}

LatticeElement IntegerLattice::basis(std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("basis index out of range");
  LatticeElement e = zero();
  e.coords[i] = 1;
  return e;
}

LatticeElement IntegerLattice::zero() const { return {Coords(rank())}; }

LatticeElement operator+(const LatticeElement& a, const LatticeElement& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("rank mismatch");
  LatticeElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

LatticeElement operator-(const LatticeElement& a) {
  LatticeElement out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

LatticeElement operator-(const LatticeElement& a, const LatticeElement& b) { return a + (-b); }

LatticeElement operator*(const BigInt& k, const LatticeElement& a) {
  LatticeElement out = a;
  for (auto& c : out.coords) c *= k;
  return out;
}

bool is_isometry(const IntegerLattice& lattice, const LatticeMap& map) {
  require_same_rank(lattice, map);
  return map.matrix.transpose() * lattice.gram() * map.matrix == lattice.gram();
}

LatticeMap transvection(const IntegerLattice& lattice, const LatticeElement& x, const LatticeElement& y) {
  if (lattice.square(x) != 0) throw std::invalid_argument("transvection needs an isotropic first argument");
  const std::size_t n = lattice.rank();
  const Coords gx = lattice.gram().apply(x.coords);  // (x, e_j)
  const Coords gy = lattice.gram().apply(y.coords);  // (y, e_j)
  const BigInt half_yy = lattice.square(y) / 2;      // even lattice
  Matrix m = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      m(i, j) += -gy[j] * x.coords[i] + gx[j] * y.coords[i] - half_yy * gx[j] * x.coords[i];
    }
  }
  LatticeMap out{std::move(m)};
  if (!is_isometry(lattice, out)) throw std::domain_error("transvection is not an isometry; is y orthogonal to x?");
  return out;
}

BigInt divisibility(const IntegerLattice& lattice, const LatticeElement& e) {
  require_same_rank(lattice, e);
  BigInt g = 0;
  for (const auto& c : lattice.gram().apply(e.coords)) g = gcd(g, abs(c));
  bool nonzero = false;
  for (const auto& c : e.coords) nonzero = nonzero || !is_zero(c);
  if (!nonzero) throw std::invalid_argument("divisibility of the zero vector is undefined");
  return g;
}

bool acts_trivially_on_discriminant(const IntegerLattice& lattice, const LatticeMap& map) {
  if (!is_isometry(lattice, map)) throw std::invalid_argument("discriminant action needs an isometry");
  const auto inv = rational_inverse(lattice.gram());
  const std::size_t n = lattice.rank();
  // Column j of G^{-1} is the dual basis vector e_j^* in coordinates.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      BigRational image = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(map.matrix(i, k)) && inv[k][j] != 0) image += BigRational(map.matrix(i, k)) * inv[k][j];
      }
      if (denominator(BigRational(image - inv[i][j])) != 1) return false;
    }
  }
  return true;
}

PeriodLattice::PeriodLattice(std::int64_t n_in)
    : n(n_in),
      lattice([n_in] {
        if (n_in < 2) throw std::invalid_argument("n must be at least 2");
        return IntegerLattice::build({Summand::u(), Summand::u(), Summand::u(), Summand::e8_minus(),
                                      Summand::e8_minus(), Summand::rank1(-2 * (n_in - 1))});
      }()) {}

LatticeElement PeriodLattice::marked_polarization() const {
  return u() + BigInt(t()) * v() - BigInt(2) * ell();
}

LatticeElement PeriodLattice::marked_orthogonal() const {
  return BigInt(2 * (n - 1)) * (u() + BigInt(t()) * v()) - BigInt(t()) * ell();
}

LatticeElement PeriodLattice::kappa() const {
  return BigInt(2 * (n - 1)) * (u() - v()) + BigInt(4 * (n - 1)) * v1() - ell();
}

namespace {

struct AlphaParts {
  LatticeMap outer;    // t(u1, -v)
  LatticeMap middle;   // t(v1, w')
  LatticeMap inverse;  // t(u1, v) = t(u1, -v)^{-1}
};

AlphaParts alpha_parts(const PeriodLattice& xi) {
  const auto& L = xi.lattice;
  // w' is the difference of u + t v - 2l and u + v
  const LatticeElement w = xi.marked_polarization() - (xi.u() + xi.v());
  return {transvection(L, xi.u1(), -xi.v()), transvection(L, xi.v1(), w), transvection(L, xi.u1(), xi.v())};
}

}  // namespace

LatticeMap build_alpha(const PeriodLattice& xi) {
  const auto parts = alpha_parts(xi);
  LatticeMap alpha = parts.outer * parts.middle * parts.inverse;
  if (alpha(xi.marked_polarization()) != xi.u() + xi.v()) {
    throw std::logic_error("alpha does not send u + t v - 2l to u + v at n = " + std::to_string(xi.n));
  }
  if (alpha(xi.marked_orthogonal()) != xi.kappa()) {
    throw std::logic_error("alpha does not send 2(n-1)(u + t v) - t l to kappa at n = " + std::to_string(xi.n));
  }
  return alpha;
}

AlphaCheck verify_alpha(const PeriodLattice& xi) {
  const auto parts = alpha_parts(xi);
  const LatticeMap alpha = parts.outer * parts.middle * parts.inverse;
  AlphaCheck c;
  c.isometry = is_isometry(xi.lattice, alpha);
  c.polarization_to_u_plus_v = alpha(xi.marked_polarization()) == xi.u() + xi.v();
  c.orthogonal_to_kappa = alpha(xi.marked_orthogonal()) == xi.kappa();
  c.discriminant_trivial = c.isometry && acts_trivially_on_discriminant(xi.lattice, alpha);
  c.conjugation_identity = parts.outer * parts.inverse == LatticeMap{Matrix::identity(xi.lattice.rank())};
  return c;
}

std::string to_string(const LatticeElement& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ", ";
    out += e.coords[i].str();
  }
  return out + ")";
}

}  // namespace hilbinv::lattice
