#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cdg/errors.hpp"

namespace cdg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Modular arithmetic on residues.  Primes are < 2^31, so every product of two
// residues fits in 64 bits.
// ---------------------------------------------------------------------------

inline u32 mod_add(u32 a, u32 b, u32 p) {
  u64 s = u64(a) + b;
  return u32(s >= p ? s - p : s);
}

inline u32 mod_sub(u32 a, u32 b, u32 p) {
  return a >= b ? a - b : u32(u64(a) + p - b);
}

inline u32 mod_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }

inline u32 mod_mul(u32 a, u32 b, u32 p) { return u32(u64(a) * b % p); }

u32 mod_pow(u32 a, u64 e, u32 p);

// Inverse of a nonzero residue; DomainError on zero.
u32 mod_inv(u32 a, u32 p);

bool is_prime(u64 n);

// Trial-division factorization, (prime, exponent) pairs in ascending order.
std::vector<std::pair<u64, u32>> factorize(u64 n);

u64 gcd_u64(u64 a, u64 b);

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

// A residue x mod a prime p.
struct FpScalar {
  u32 value = 0;
  u32 p = 2;
  bool operator==(const FpScalar&) const = default;
};

// Multiplicative order of x mod p; DomainError when x is 0 mod p.
u32 mul_order(u32 x, u32 p);
inline u32 mul_order(FpScalar x) { return mul_order(x.value, x.p); }

// Least residue of multiplicative order exactly r, NoSuchElementError when
// r does not divide p - 1.
FpScalar element_of_order(u32 p, u32 r);

// ---------------------------------------------------------------------------
// Dense matrices over F_p, row-major.  Vectors are rows acting from the left:
// w = v * M.
// ---------------------------------------------------------------------------

class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(u32 p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMatrix identity(u32 p, std::size_t n);

  u32 p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  u32& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  const std::vector<u32>& data() const { return a_; }
  std::vector<u32>& data() { return a_; }

  std::vector<u32> row(std::size_t r) const;

  bool operator==(const FpMatrix&) const = default;

private:
  u32 p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<u32> a_;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b);
FpMatrix transpose(const FpMatrix& m);
FpMatrix scalar_matrix(u32 p, std::size_t n, u32 c);

// v * M for a row vector v.
std::vector<u32> row_times(const std::vector<u32>& v, const FpMatrix& m);

u32 dot(const std::vector<u32>& a, const std::vector<u32>& b, u32 p);

// Reduced row echelon form; pivot columns appended to *pivots if given.
// Pivot search takes the first nonzero entry in each column.
FpMatrix rref(FpMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const FpMatrix& m);

// Echelonized basis of the right null space {x : M x = 0}, one vector per
// free column in ascending column order.
std::vector<std::vector<u32>> kernel_basis(const FpMatrix& m);

// Echelonized basis of the row space.
std::vector<std::vector<u32>> row_space_basis(const FpMatrix& m);

// Gauss-Jordan inverse; SingularMatrixError when not invertible.
FpMatrix invert(const FpMatrix& m);

FpMatrix from_rows(u32 p, const std::vector<std::vector<u32>>& rows,
                   std::size_t cols);

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, coefficients ascending, no trailing zeros.
// The zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

using Poly = std::vector<u32>;

void poly_trim(Poly& f);
int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b, u32 p);
Poly poly_sub(const Poly& a, const Poly& b, u32 p);
Poly poly_mul(const Poly& a, const Poly& b, u32 p);
// quotient/remainder; DomainError when b is zero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, u32 p);
Poly poly_mod(const Poly& a, const Poly& b, u32 p);
Poly poly_monic(Poly f, u32 p);
Poly poly_gcd(Poly a, Poly b, u32 p);  // monic gcd
Poly poly_lcm(const Poly& a, const Poly& b, u32 p);
u32 poly_eval(const Poly& f, u32 x, u32 p);
// x^e mod f
Poly poly_xpow_mod(u64 e, const Poly& f, u32 p);

}  // namespace cdg
