#ifndef FEC_GALOIS_HPP
#define FEC_GALOIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fec/errors.hpp"

namespace fec {

/// GF(2^m) with elements in polynomial basis: bit i of an element is the
/// coefficient of x^i. Addition is XOR; multiplication goes through
/// log/antilog tables indexed by powers of the primitive element alpha = x.
///
/// Immutable after construction; safe to share across threads.
class GaloisField {
public:
  /// Builds the field tables. `primitive_poly` is the monic binary polynomial
  /// of degree m as a bitmask (bit i = coefficient of x^i). The constructor
  /// verifies that alpha generates the full multiplicative group and throws
  /// NonPrimitivePolynomial otherwise.
  GaloisField(int m, std::uint32_t primitive_poly);

  /// Default primitive polynomials for common sizes (x^4+x+1 for m=4,
  /// x^8+x^4+x^3+x^2+1 for m=8, ...).
  static std::uint32_t default_primitive_poly(int m);

  int m() const { return m_; }
  int size() const { return size_; }        // 2^m
  int order() const { return size_ - 1; }   // multiplicative group order
  std::uint32_t primitive_poly() const { return poly_; }

  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  int inv(int a) const {
    if (a == 0) throw ZeroInverse("gf_inv: zero has no inverse");
    return exp_[order() - log_[a]];
  }

  int div(int a, int b) const { return mul(a, inv(b)); }

  static int add(int a, int b) { return a ^ b; }

  /// alpha^e for any integer exponent (reduced mod 2^m - 1).
  int pow_alpha(long long e) const {
    long long r = e % order();
    if (r < 0) r += order();
    return exp_[static_cast<int>(r)];
  }

  /// Discrete log base alpha of a nonzero element.
  int log_alpha(int a) const {
    if (a == 0) throw ZeroInverse("log of zero");
    return log_[a];
  }

  std::span<const int> exp_table() const { return {exp_.data(), static_cast<std::size_t>(order())}; }
  std::span<const int> log_table() const { return {log_.data(), log_.size()}; }

private:
  int m_ = 0;
  int size_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<int> exp_; // doubled: exp_[i] = alpha^(i mod order), i in [0, 2*order)
  std::vector<int> log_; // log_[a] for a in [1, 2^m); log_[0] unused
};

} // namespace fec

#endif // FEC_GALOIS_HPP
