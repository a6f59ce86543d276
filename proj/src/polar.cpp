#include "fec/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fec {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(int n) {
  int l = 0;
  while ((1 << l) < n) ++l;
  return l;
}

// Exact boxplus (check-node) update in the LLR domain:
//   f(a,b) = 2 atanh(tanh(a/2) tanh(b/2))
//          = sgn(a) sgn(b) min(|a|,|b|) + log1p(e^-(|a|+|b|)) - log1p(e^-||a|-|b||)
// The correction terms are below 1.4e-11 once ||a|-|b|| > 25 and are skipped.
inline double boxplus(double a, double b) {
  const double aa = std::fabs(a), ab = std::fabs(b);
  double m = std::min(aa, ab);
  if ((a < 0) != (b < 0)) m = -m;
  const double d = std::fabs(aa - ab);
  if (d > 25.0) return m;
  return m + std::log1p(std::exp(-(aa + ab))) - std::log1p(std::exp(-d));
}

// Exact path-metric increment: log(1 + exp(-(1-2u) * llr)).
inline double pm_penalty(double llr, int u) {
  const double s = u ? -llr : llr;
  if (s >= 0) return s > 37.0 ? 0.0 : std::log1p(std::exp(-s));
  return s < -37.0 ? -s : -s + std::log1p(std::exp(s));
}

} // namespace

std::vector<std::uint8_t> polar_transform(std::vector<std::uint8_t> u) {
  const int n = static_cast<int>(u.size());
  if (!is_pow2(n)) throw NonPowerOfTwoLength("polar_transform: length not a power of two");
  for (int half = 1; half < n; half <<= 1)
    for (int block = 0; block < n; block += 2 * half)
      for (int i = 0; i < half; ++i)
        u[block + i] ^= u[block + half + i];
  return u;
}

std::vector<int> build_reliability_order(int n, double design_erasure) {
  if (!is_pow2(n)) throw NonPowerOfTwoLength("build_reliability_order: length not a power of two");

  // Bhattacharyya parameter of each synthetic channel; the bit of the index
  // (consumed MSB first) picks the degraded (2z - z^2) or upgraded (z^2)
  // branch at each polarization level.
  std::vector<double> z{design_erasure};
  while (static_cast<int>(z.size()) < n) {
    std::vector<double> next(z.size() * 2);
    for (std::size_t i = 0; i < z.size(); ++i) {
      next[2 * i] = 2.0 * z[i] - z[i] * z[i];
      next[2 * i + 1] = z[i] * z[i];
    }
    z = std::move(next);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] > z[b]; });
  return order;
}

PolarCode::PolarCode(int n1, int k1) : PolarCode(n1, k1, build_reliability_order(n1)) {}

PolarCode::PolarCode(int n1, int k1, std::vector<int> reliability_order)
    : n1_(n1), k1_(k1), order_(std::move(reliability_order)) {
  if (!is_pow2(n1)) throw NonPowerOfTwoLength("polar code length not a power of two");
  if (k1 < 1 || k1 > n1) throw LengthMismatch("polar dimension out of range");
  if (static_cast<int>(order_.size()) != n1)
    throw LengthMismatch("reliability order length != N1");

  info_set_.assign(order_.end() - k1, order_.end());
  std::sort(info_set_.begin(), info_set_.end());
  info_mask_.assign(n1, 0);
  for (int i : info_set_) info_mask_[i] = 1;
}

std::vector<std::uint8_t> PolarCode::encode(std::span<const std::uint8_t> info) const {
  if (static_cast<int>(info.size()) != k1_)
    throw LengthMismatch("systematic_encode: info length != K1");

  std::vector<std::uint8_t> x(n1_, 0);
  for (int i = 0; i < k1_; ++i) x[info_set_[i]] = info[i] & 1;

  // Double-transform fixed point: transform, zero the frozen u-domain
  // coordinates, transform back. The result is always a valid codeword; it
  // is the systematic one once the info coordinates come back pinned, which
  // takes a single round for a Bhattacharyya info set.
  for (int round = 0; round < n1_; ++round) {
    std::vector<std::uint8_t> u = polar_transform(x);
    for (int i = 0; i < n1_; ++i)
      if (!info_mask_[i]) u[i] = 0;
    std::vector<std::uint8_t> y = polar_transform(std::move(u));
    bool pinned = true;
    for (int i = 0; i < k1_ && pinned; ++i) pinned = y[info_set_[i]] == (info[i] & 1);
    if (pinned) return y;
    x = std::move(y);
    for (int i = 0; i < k1_; ++i) x[info_set_[i]] = info[i] & 1;
  }
  throw std::logic_error("systematic encode did not reach a fixed point");
}

// ---------------------------------------------------------------------------
// SCL decoder
// ---------------------------------------------------------------------------

// Per-path state, flat buffers so a path copy is three vector assignments.
// LLR stages s = 1..n live at offset N - (N >> (s-1)), length N >> s.
// Codeword segments per stage s = 0..n at offset 2N - 2*(N >> s) scaled:
// offsets precomputed in the decoder.
struct SclDecoder::Path {
  double pm = 0.0;
  std::vector<double> llr;          // N-1 doubles, stage-major
  std::vector<std::uint8_t> ce, co; // 2N-1 bytes each, stage-major
};

SclDecoder::SclDecoder(PolarCode code, int list_size, double llr_clip)
    : code_(std::move(code)), list_size_(list_size), clip_(llr_clip) {
  if (list_size < 1) throw InvalidListSize("list size must be >= 1");
  const int N = code_.length();
  n_ = log2_exact(N);
  chan_.assign(N, 0.0);
  paths_.resize(list_size_);
  scratch_.resize(list_size_);
  for (auto* v : {&paths_, &scratch_})
    for (Path& p : *v) {
      p.llr.assign(N, 0.0);
      p.ce.assign(2 * N, 0);
      p.co.assign(2 * N, 0);
    }
}

namespace {
inline int stage_llr_off(int N, int s) { return N - (N >> (s - 1)); }
inline int stage_seg_off(int N, int s) { return 2 * (N - (N >> s)); }
} // namespace

void SclDecoder::calc_llr(Path& p, int stage, int phase) {
  if (stage == 0) return;
  if ((phase & 1) == 0) calc_llr(p, stage - 1, phase >> 1);
  const int N = code_.length();
  const int size = N >> stage;
  const double* src = stage == 1 ? chan_.data() : p.llr.data() + stage_llr_off(N, stage - 1);
  double* dst = p.llr.data() + stage_llr_off(N, stage);
  if ((phase & 1) == 0) {
    for (int i = 0; i < size; ++i) dst[i] = boxplus(src[i], src[i + size]);
  } else {
    const std::uint8_t* left = p.ce.data() + stage_seg_off(N, stage);
    for (int i = 0; i < size; ++i)
      dst[i] = src[i + size] + (left[i] ? -src[i] : src[i]);
  }
}

void SclDecoder::update_partial_sums(Path& p, int stage, int phase) {
  const int N = code_.length();
  const int size = N >> stage;
  const std::uint8_t* ce = p.ce.data() + stage_seg_off(N, stage);
  const std::uint8_t* co = p.co.data() + stage_seg_off(N, stage);
  const int parent_phase = phase >> 1;
  std::uint8_t* dst =
      (parent_phase & 1 ? p.co.data() : p.ce.data()) + stage_seg_off(N, stage - 1);
  for (int i = 0; i < size; ++i) {
    dst[i] = ce[i] ^ co[i];
    dst[i + size] = co[i];
  }
  if ((parent_phase & 1) && stage > 1) update_partial_sums(p, stage - 1, parent_phase);
}

SclResult SclDecoder::decode(std::span<const double> llrs) {
  const int N = code_.length();
  if (static_cast<int>(llrs.size()) != N)
    throw LengthMismatch("scl_decode: LLR length != N1");

  for (int i = 0; i < N; ++i) chan_[i] = std::clamp(llrs[i], -clip_, clip_);

  paths_[0].pm = 0.0;
  int active = 1;

  struct Cand {
    double pm;
    int parent;
    std::uint8_t bit;
  };
  std::vector<Cand> cands;
  cands.reserve(2 * list_size_);

  const auto& info_mask = code_.info_mask();
  for (int phase = 0; phase < N; ++phase) {
    for (int p = 0; p < active; ++p) calc_llr(paths_[p], n_, phase);

    if (!info_mask[phase]) {
      for (int p = 0; p < active; ++p) {
        Path& path = paths_[p];
        const double leaf = path.llr[stage_llr_off(N, n_)];
        path.pm += pm_penalty(leaf, 0);
        (phase & 1 ? path.co : path.ce)[stage_seg_off(N, n_)] = 0;
      }
    } else {
      cands.clear();
      for (int p = 0; p < active; ++p) {
        const double leaf = paths_[p].llr[stage_llr_off(N, n_)];
        cands.push_back({paths_[p].pm + pm_penalty(leaf, 0), p, 0});
        cands.push_back({paths_[p].pm + pm_penalty(leaf, 1), p, 1});
      }
      std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.pm != b.pm) return a.pm < b.pm;
        if (a.parent != b.parent) return a.parent < b.parent;
        return a.bit < b.bit;
      });
      const int keep = std::min<int>(list_size_, static_cast<int>(cands.size()));
      for (int i = 0; i < keep; ++i) {
        scratch_[i].pm = cands[i].pm;
        scratch_[i].llr = paths_[cands[i].parent].llr;
        scratch_[i].ce = paths_[cands[i].parent].ce;
        scratch_[i].co = paths_[cands[i].parent].co;
        (phase & 1 ? scratch_[i].co : scratch_[i].ce)[stage_seg_off(N, n_)] = cands[i].bit;
      }
      std::swap(paths_, scratch_);
      active = keep;
    }

    if (phase & 1)
      for (int p = 0; p < active; ++p) update_partial_sums(paths_[p], n_, phase);
  }

  int best = 0;
  for (int p = 1; p < active; ++p)
    if (paths_[p].pm < paths_[best].pm) best = p;

  SclResult res;
  res.path_metric = paths_[best].pm;
  const std::uint8_t* cw = paths_[best].ce.data(); // stage 0 segment
  res.codeword.assign(cw, cw + N);
  res.info.resize(code_.dim());
  const auto& info_set = code_.info_set();
  for (std::size_t i = 0; i < info_set.size(); ++i) res.info[i] = res.codeword[info_set[i]];
  return res;
}

namespace {

// Forced SC pass over a u-domain segment: accumulates the exact path metric
// and returns nothing; `seg` is consumed leaf by leaf.
void forced_sc(const double* llr, int len, const std::uint8_t* u, double& pm,
               std::uint8_t* seg_out) {
  if (len == 1) {
    pm += pm_penalty(llr[0], u[0]);
    seg_out[0] = u[0];
    return;
  }
  const int half = len / 2;
  std::vector<double> sub(half);
  std::vector<std::uint8_t> left(half), right(half);
  for (int i = 0; i < half; ++i) sub[i] = boxplus(llr[i], llr[i + half]);
  forced_sc(sub.data(), half, u, pm, left.data());
  for (int i = 0; i < half; ++i)
    sub[i] = llr[i + half] + (left[i] ? -llr[i] : llr[i]);
  forced_sc(sub.data(), half, u + half, pm, right.data());
  for (int i = 0; i < half; ++i) {
    seg_out[i] = left[i] ^ right[i];
    seg_out[i + half] = right[i];
  }
}

} // namespace

double path_metric_of(const PolarCode& code, std::span<const double> llrs,
                      std::span<const std::uint8_t> codeword, double llr_clip) {
  const int N = code.length();
  if (static_cast<int>(llrs.size()) != N || static_cast<int>(codeword.size()) != N)
    throw LengthMismatch("path_metric_of: length mismatch");
  std::vector<double> clipped(N);
  for (int i = 0; i < N; ++i) clipped[i] = std::clamp(llrs[i], -llr_clip, llr_clip);
  std::vector<std::uint8_t> u(codeword.begin(), codeword.end());
  u = polar_transform(std::move(u));
  std::vector<std::uint8_t> seg(N);
  double pm = 0.0;
  forced_sc(clipped.data(), N, u.data(), pm, seg.data());
  return pm;
}

} // namespace fec
