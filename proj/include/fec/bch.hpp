#ifndef FEC_BCH_HPP
#define FEC_BCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fec/errors.hpp"
#include "fec/galois.hpp"

namespace fec {

/// Result of bounded-distance decoding. On failure the word is returned
/// unchanged and `flipped` is empty; on success the word is a codeword and
/// at most t positions were flipped.
struct BddOutcome {
  std::vector<std::uint8_t> word;
  bool success = false;
  std::vector<int> flipped;
};

/// Narrow-sense binary BCH code of base length n = 2^m - 1 with designed
/// correction radius t, systematically encoded as [info | parity]. The
/// extended variant appends one overall even-parity bit (length n + 1).
///
/// Codeword layout vs. polynomial coefficients: info bit j carries the
/// coefficient of x^(n-k+j); parity bits follow in descending powers
/// x^(n-k-1) ... x^0. The concatenated bit string therefore reads as the
/// message followed by the remainder polynomial written high power first.
class BchCode {
public:
  BchCode(GaloisField field, int t, bool extended);

  int n() const { return n_; }                       // base length 2^m - 1
  int length() const { return extended_ ? n_ + 1 : n_; } // transmitted length
  int k() const { return k_; }
  int t() const { return t_; }
  bool extended() const { return extended_; }
  const GaloisField& field() const { return field_; }

  /// Generator polynomial, coefficient of x^i at index i.
  const std::vector<std::uint8_t>& generator() const { return gen_; }

  std::vector<std::uint8_t> encode(std::span<const std::uint8_t> info) const;

  /// Bounded-distance decoding: syndromes, Berlekamp-Massey, Chien search.
  /// Any inconsistency (locator degree vs. root count, corrected word not a
  /// codeword, extended-parity mismatch with the implied error count) yields
  /// a Failure outcome with the input passed through unchanged.
  BddOutcome decode(std::span<const std::uint8_t> word) const;

private:
  GaloisField field_;
  int n_ = 0;
  int k_ = 0;
  int t_ = 0;
  bool extended_ = false;
  std::vector<std::uint8_t> gen_;

  // codeword position <-> polynomial power
  int pos_to_power(int j) const { return j < k_ ? (n_ - k_) + j : (n_ - 1) - j; }
  int power_to_pos(int p) const { return p >= n_ - k_ ? p - (n_ - k_) : (n_ - 1) - p; }

  bool decode_base(std::span<const std::uint8_t> base, std::vector<int>& flips) const;
};

} // namespace fec

#endif // FEC_BCH_HPP
