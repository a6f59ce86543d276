#include "fec/galois.hpp"

#include <string>

namespace fec {

std::uint32_t GaloisField::default_primitive_poly(int m) {
  // Conventional primitive polynomials, lowest-weight choices.
  static const std::uint32_t table[17] = {
      0,     0,     0x7,    0xB,    0x13,   0x25,   0x43,   0x89,  0x11D,
      0x211, 0x409, 0x805,  0x1053, 0x201B, 0x4143, 0x8003, 0x1100B};
  if (m < 2 || m > 16) throw DegreeMismatch("no default polynomial for m=" + std::to_string(m));
  return table[m];
}

GaloisField::GaloisField(int m, std::uint32_t primitive_poly) {
  if (m < 2 || m > 16) throw DegreeMismatch("extension degree must be in [2, 16]");
  if (primitive_poly >> m != 1u)
    throw DegreeMismatch("polynomial is not monic of degree m");

  m_ = m;
  size_ = 1 << m;
  poly_ = primitive_poly;

  const int n = order();
  exp_.assign(2 * n, 0);
  log_.assign(size_, -1);

  // Walk alpha^0, alpha^1, ... by multiplying by x modulo the polynomial.
  // Revisiting an element before n steps means alpha's order divides a
  // proper factor of n, i.e. the polynomial is reducible or non-primitive.
  std::uint32_t cur = 1;
  for (int i = 0; i < n; ++i) {
    if (log_[cur] != -1)
      throw NonPrimitivePolynomial("polynomial does not generate GF(2^m)*");
    exp_[i] = static_cast<int>(cur);
    log_[cur] = i;
    cur <<= 1;
    if (cur & (1u << m)) cur ^= primitive_poly;
  }
  if (cur != 1)
    throw NonPrimitivePolynomial("alpha^(2^m-1) != 1");
  for (int i = 0; i < n; ++i) exp_[n + i] = exp_[i];
}

} // namespace fec
