#include "fec/bch.hpp"

#include <algorithm>
#include <string>

namespace fec {

namespace {

// Minimal polynomial of alpha^e: product of (x - alpha^j) over the
// cyclotomic coset {e, 2e, 4e, ...} mod (2^m - 1). Coefficients land in
// GF(2) when the coset is closed under squaring.
std::vector<std::uint8_t> minimal_polynomial(const GaloisField& f, int e) {
  const int n = f.order();
  std::vector<int> coset;
  int cur = e % n;
  do {
    coset.push_back(cur);
    cur = (2 * cur) % n;
  } while (cur != e % n);

  // poly over GF(2^m), coefficient of x^i at index i
  std::vector<int> poly{1};
  for (int exp : coset) {
    const int root = f.pow_alpha(exp);
    std::vector<int> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] ^= poly[i];                 // x * poly
      next[i] ^= f.mul(root, poly[i]);        // root * poly
    }
    poly = std::move(next);
  }

  std::vector<std::uint8_t> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) out[i] = static_cast<std::uint8_t>(poly[i]);
  return out;
}

std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
  std::vector<std::uint8_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
  return r;
}

} // namespace

BchCode::BchCode(GaloisField field, int t, bool extended)
    : field_(std::move(field)), t_(t), extended_(extended) {
  n_ = field_.order();
  if (t < 1 || 2 * t >= n_) throw InvalidRadius("designed radius t out of range");

  // g(x) = lcm of the minimal polynomials of alpha^1 .. alpha^(2t); distinct
  // cyclotomic cosets give coprime factors, so the lcm is their product.
  std::vector<int> seen_rep;
  gen_ = {1};
  for (int e = 1; e <= 2 * t; ++e) {
    int rep = e, cur = e;
    do {
      rep = std::min(rep, cur);
      cur = (2 * cur) % n_;
    } while (cur != e);
    if (std::find(seen_rep.begin(), seen_rep.end(), rep) != seen_rep.end()) continue;
    seen_rep.push_back(rep);
    gen_ = poly_mul_gf2(gen_, minimal_polynomial(field_, e));
  }

  k_ = n_ - (static_cast<int>(gen_.size()) - 1);
  if (k_ <= 0) throw InvalidRadius("radius leaves no information bits");
}

std::vector<std::uint8_t> BchCode::encode(std::span<const std::uint8_t> info) const {
  if (static_cast<int>(info.size()) != k_)
    throw LengthMismatch("bch_encode: info length != k");

  const int deg = n_ - k_;
  // Remainder of sum_j info[j] x^(deg+j) mod g(x), long division from the top.
  std::vector<std::uint8_t> work(n_, 0);
  for (int j = 0; j < k_; ++j) work[deg + j] = info[j] & 1;
  for (int p = n_ - 1; p >= deg; --p) {
    if (!work[p]) continue;
    for (int i = 0; i <= deg; ++i) work[p - deg + i] ^= gen_[i];
  }

  std::vector<std::uint8_t> word(length(), 0);
  for (int j = 0; j < k_; ++j) word[j] = info[j] & 1;
  for (int i = 0; i < deg; ++i) word[k_ + i] = work[deg - 1 - i];
  if (extended_) {
    std::uint8_t parity = 0;
    for (int j = 0; j < n_; ++j) parity ^= word[j];
    word[n_] = parity;
  }
  return word;
}

// Base-code BDD. Returns true with the flip set (word positions) when the
// syndrome equations have a consistent <= t error solution; false otherwise.
bool BchCode::decode_base(std::span<const std::uint8_t> base, std::vector<int>& flips) const {
  flips.clear();
  const GaloisField& f = field_;
  const int n2t = 2 * t_;

  std::vector<int> synd(n2t + 1, 0);
  bool all_zero = true;
  for (int j = 0; j < n_; ++j) {
    if (!base[j]) continue;
    const int p = pos_to_power(j);
    for (int i = 1; i <= n2t; ++i)
      synd[i] ^= f.pow_alpha(static_cast<long long>(i) * p);
  }
  for (int i = 1; i <= n2t; ++i) all_zero = all_zero && synd[i] == 0;
  if (all_zero) return true;

  // Berlekamp-Massey over GF(2^m): find the shortest LFSR generating the
  // syndrome sequence.
  std::vector<int> C{1}, B{1};
  int L = 0, shift = 1, b = 1;
  C.resize(t_ + 2, 0);
  B.resize(t_ + 2, 0);
  for (int i = 0; i < n2t; ++i) {
    int d = synd[i + 1];
    for (int j = 1; j <= L; ++j) d ^= f.mul(C[j], synd[i + 1 - j]);
    if (d == 0) {
      ++shift;
    } else if (2 * L <= i) {
      std::vector<int> T = C;
      const int coef = f.div(d, b);
      for (std::size_t j = 0; j + shift < C.size(); ++j)
        C[j + shift] ^= f.mul(coef, B[j]);
      L = i + 1 - L;
      B = std::move(T);
      b = d;
      shift = 1;
    } else {
      const int coef = f.div(d, b);
      for (std::size_t j = 0; j + shift < C.size(); ++j)
        C[j + shift] ^= f.mul(coef, B[j]);
      ++shift;
    }
  }

  if (L > t_ || L == 0) return false;
  if (C[L] == 0) return false; // degree collapsed: inconsistent locator

  // Chien search: roots alpha^i of the locator give error locators
  // alpha^(n-i), i.e. the polynomial powers of the error positions.
  std::vector<int> reg(L + 1), step(L + 1);
  for (int j = 0; j <= L; ++j) {
    reg[j] = C[j];
    step[j] = f.pow_alpha(j);
  }
  int roots = 0;
  for (int i = 0; i < n_; ++i) {
    int v = 0;
    for (int j = 0; j <= L; ++j) v ^= reg[j];
    if (v == 0) {
      ++roots;
      flips.push_back(power_to_pos((n_ - i) % n_));
    }
    for (int j = 1; j <= L; ++j) reg[j] = f.mul(reg[j], step[j]);
  }
  if (roots != L) {
    flips.clear();
    return false;
  }

  // Bounded-distance guarantee: accept only if the flips actually produce a
  // codeword (beyond-radius inputs can yield a locator whose roots do not
  // solve all 2t syndrome equations).
  for (int i = 1; i <= n2t; ++i) {
    int s = synd[i];
    for (int j : flips) s ^= f.pow_alpha(static_cast<long long>(i) * pos_to_power(j));
    if (s != 0) {
      flips.clear();
      return false;
    }
  }
  return true;
}

BddOutcome BchCode::decode(std::span<const std::uint8_t> word) const {
  if (static_cast<int>(word.size()) != length())
    throw LengthMismatch("bdd_decode: word length != N2");

  BddOutcome out;
  out.word.assign(word.begin(), word.end());

  std::vector<int> flips;
  const bool base_ok = decode_base(std::span<const std::uint8_t>(word.data(), n_), flips);
  if (!base_ok) return out;

  if (extended_) {
    std::uint8_t parity = 0;
    for (int j = 0; j <= n_; ++j) parity ^= word[j] & 1;
    const int e = static_cast<int>(flips.size());
    if ((e & 1) != parity) {
      // Parity says the overall error count is odd relative to the proposed
      // flips: the extended bit itself must be in error. Stay within the
      // radius or reject (d = 6 miscorrection guard).
      if (e + 1 > t_) return out;
      flips.push_back(n_);
    }
  }

  for (int j : flips) out.word[j] ^= 1;
  std::sort(flips.begin(), flips.end());
  out.flipped = std::move(flips);
  out.success = true;
  return out;
}

} // namespace fec
