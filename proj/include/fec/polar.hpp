#ifndef FEC_POLAR_HPP
#define FEC_POLAR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fec/errors.hpp"

namespace fec {

/// In-place Arikan transform x = u F^{⊗log2 N} over GF(2), natural bit
/// order (contiguous halves). Self-inverse.
std::vector<std::uint8_t> polar_transform(std::vector<std::uint8_t> u);

/// Synthetic-channel ordering from least to most reliable under the
/// Bhattacharyya/BEC recursion z -> {2z - z^2, z^2} started at the design
/// erasure probability. Deterministic; ties broken by ascending index.
std::vector<int> build_reliability_order(int n, double design_erasure = 0.5);

struct SclResult {
  std::vector<std::uint8_t> codeword; // length N1
  std::vector<std::uint8_t> info;     // codeword restricted to the info set
  double path_metric = 0.0;
};

/// Systematic polar code (N1, K1). The info set is the K1 most reliable
/// indices of one fixed reliability order per N1, so info sets are nested
/// across K1 (rate adaptation reuses the same order).
class PolarCode {
public:
  PolarCode(int n1, int k1);
  PolarCode(int n1, int k1, std::vector<int> reliability_order);

  int length() const { return n1_; }
  int dim() const { return k1_; }
  const std::vector<int>& info_set() const { return info_set_; } // ascending
  const std::vector<std::uint8_t>& info_mask() const { return info_mask_; }
  const std::vector<int>& reliability_order() const { return order_; }

  /// Systematic encoding by the double-transform method: embed info, apply
  /// the transform, zero the frozen coordinates in the u-domain, transform
  /// back. Iterated to a fixed point (one round for the Arikan kernel with a
  /// Bhattacharyya-designed info set).
  std::vector<std::uint8_t> encode(std::span<const std::uint8_t> info) const;

private:
  int n1_ = 0;
  int k1_ = 0;
  std::vector<int> order_;
  std::vector<int> info_set_;
  std::vector<std::uint8_t> info_mask_;
};

/// LLR-domain successive cancellation list decoder with exact (boxplus)
/// check-node updates and the exact path-metric rule, so a full list equals
/// maximum likelihood. Holds reusable per-decode workspace; one instance per
/// thread, decode() is deterministic in its inputs.
///
/// LLR convention: positive means bit 0. Input magnitudes are clipped to
/// +-llr_clip before decoding.
class SclDecoder {
public:
  SclDecoder(PolarCode code, int list_size, double llr_clip = 50.0);

  SclResult decode(std::span<const double> llrs);

  const PolarCode& code() const { return code_; }
  int list_size() const { return list_size_; }

private:
  struct Path;

  PolarCode code_;
  int list_size_ = 0;
  int n_ = 0;      // log2(N)
  double clip_ = 50.0;
  std::vector<Path> paths_, scratch_;
  std::vector<double> chan_;

  void calc_llr(Path& p, int stage, int phase);
  void update_partial_sums(Path& p, int stage, int phase);
};

/// Exact path metric of a given codeword under the decoder's metric: the SC
/// recursion is forced to follow the codeword's u-domain bits. Used as an
/// independent scoring route in tests.
double path_metric_of(const PolarCode& code, std::span<const double> llrs,
                      std::span<const std::uint8_t> codeword, double llr_clip = 50.0);

} // namespace fec

#endif // FEC_POLAR_HPP
