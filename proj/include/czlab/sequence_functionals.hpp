#pragma once

// Jump, variation and short-variation functionals of finite complex-valued
// sample sequences.  All counting is exact: the lambda-jump count is the
// maximum chain length over *all* increasing index subsequences, computed by
// dynamic programming (a first-anchor greedy scan undercounts, e.g. values
// (3,0,5) with lambda=4).  Magnitude comparisons are done on squared moduli
// throughout so that every routine, including the brute-force oracles, sees
// bit-identical threshold decisions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace czlab {

using cplx = std::complex<double>;

struct SampleSequence {
  std::vector<double> indices; // strictly increasing scale labels
  std::vector<cplx> values;    // one per index, finite

  std::size_t size() const { return values.size(); }
};

inline void validate(const SampleSequence &seq) {
  if (seq.values.empty())
    throw std::invalid_argument("SampleSequence: empty sequence");
  if (seq.indices.size() != seq.values.size())
    throw std::invalid_argument("SampleSequence: index/value length mismatch");
  for (std::size_t i = 1; i < seq.indices.size(); ++i)
    if (!(seq.indices[i - 1] < seq.indices[i]))
      throw std::invalid_argument("SampleSequence: indices not strictly increasing");
  for (const cplx &v : seq.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("SampleSequence: non-finite value");
}

// Convenience: sequence with indices 0,1,2,...
inline SampleSequence make_sequence(std::vector<cplx> values) {
  SampleSequence s;
  s.indices.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    s.indices[i] = static_cast<double>(i);
  s.values = std::move(values);
  return s;
}

struct JumpReport {
  double lambda = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> anchor_indices; // witness chain, count+1 entries
};

struct VariationReport {
  double q = 0.0; // infinity() for the sup-of-increments case
  double value = 0.0;
  std::vector<std::size_t> subsequence; // witness chain realizing the value
};

namespace detail {

inline double dist2(const cplx &a, const cplx &b) { return std::norm(a - b); }

// Longest chain i0<...<iN whose consecutive squared increments satisfy `jumps`.
// Returns the chain length N and a deterministic witness (smallest terminal
// index, then smallest predecessor at each step).
template <class JumpPred>
std::pair<std::size_t, std::vector<std::size_t>>
longest_jump_chain(const std::vector<cplx> &v, JumpPred jumps) {
  const std::size_t m = v.size();
  std::vector<std::size_t> len(m, 0);
  std::vector<std::ptrdiff_t> parent(m, -1);
  std::size_t best = 0, best_i = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (jumps(dist2(v[i], v[j])) && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        parent[i] = static_cast<std::ptrdiff_t>(j);
      }
    }
    if (len[i] > best) {
      best = len[i];
      best_i = i;
    }
  }
  std::vector<std::size_t> chain;
  if (m > 0) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(best_i);
    while (i >= 0) {
      chain.push_back(static_cast<std::size_t>(i));
      i = parent[static_cast<std::size_t>(i)];
    }
    std::reverse(chain.begin(), chain.end());
  }
  return {best, std::move(chain)};
}

} // namespace detail

// Exact maximum N over increasing index subsequences t_0<...<t_N with
// min_k |F_{t_k} - F_{t_{k-1}}| > lambda (strict, as in the jump definition).
inline JumpReport lambda_jump_count(const SampleSequence &seq, double lambda) {
  validate(seq);
  if (!(lambda > 0.0))
    throw std::invalid_argument("lambda_jump_count: lambda must be positive");
  const double lam2 = lambda * lambda;
  auto [count, chain] =
      detail::longest_jump_chain(seq.values, [lam2](double d2) { return d2 > lam2; });
  return JumpReport{lambda, count, std::move(chain)};
}

// Same maximum but with the non-strict comparison |delta| >= d.  Used to
// evaluate the jump supremum at its breakpoints, where the strict count has
// already dropped.
inline std::size_t jump_count_at_least(const SampleSequence &seq, double d) {
  validate(seq);
  if (!(d > 0.0))
    throw std::invalid_argument("jump_count_at_least: threshold must be positive");
  const double d2 = d * d;
  return detail::longest_jump_chain(seq.values, [d2](double x) { return x >= d2; }).first;
}

// Exponential-enumeration oracle (independent of the DP above).
inline std::size_t lambda_jump_count_bruteforce(const SampleSequence &seq, double lambda) {
  validate(seq);
  if (!(lambda > 0.0))
    throw std::invalid_argument("lambda_jump_count_bruteforce: lambda must be positive");
  const std::size_t m = seq.size();
  if (m > 20)
    throw std::invalid_argument("lambda_jump_count_bruteforce: oracle size exceeded (length > 20)");
  const double lam2 = lambda * lambda;
  std::size_t best = 0;
  const std::uint32_t full = static_cast<std::uint32_t>(1u << m);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::size_t prev = m, count = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask & (1u << i)))
        continue;
      if (prev != m) {
        if (detail::dist2(seq.values[i], seq.values[prev]) > lam2)
          ++count;
        else
          ok = false;
      }
      prev = i;
    }
    if (ok)
      best = std::max(best, count);
  }
  return best;
}

// q-variation: for finite q>1, value^q = max over index subsequences of the
// sum of |increment|^q (O(m^2) dynamic program); for q = infinity the value is
// the largest pairwise increment.
inline VariationReport q_variation(const SampleSequence &seq, double q) {
  validate(seq);
  const bool inf_q = std::isinf(q);
  if (!inf_q && !(q > 1.0))
    throw std::invalid_argument("q_variation: q must satisfy q > 1 or q = infinity");
  const std::size_t m = seq.size();
  const auto &v = seq.values;

  if (inf_q) {
    double best = 0.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        double d2 = detail::dist2(v[i], v[j]);
        if (d2 > best) {
          best = d2;
          bi = i;
          bj = j;
        }
      }
    VariationReport r;
    r.q = q;
    r.value = std::sqrt(best);
    if (best > 0.0)
      r.subsequence = {bi, bj};
    else
      r.subsequence = {0};
    return r;
  }

  std::vector<double> best(m, 0.0); // best chain sum ending at i
  std::vector<std::ptrdiff_t> parent(m, -1);
  double total = 0.0;
  std::size_t total_i = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double step = std::pow(detail::dist2(v[i], v[j]), 0.5 * q);
      if (best[j] + step > best[i]) {
        best[i] = best[j] + step;
        parent[i] = static_cast<std::ptrdiff_t>(j);
      }
    }
    if (best[i] > total) {
      total = best[i];
      total_i = i;
    }
  }
  VariationReport r;
  r.q = q;
  r.value = total > 0.0 ? std::pow(total, 1.0 / q) : 0.0;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(total_i);
  while (i >= 0) {
    r.subsequence.push_back(static_cast<std::size_t>(i));
    i = parent[static_cast<std::size_t>(i)];
  }
  std::reverse(r.subsequence.begin(), r.subsequence.end());
  return r;
}

// Maximin jump profile: g[c-1], c = 1..m-1, is the largest over chains with c
// edges of the smallest edge magnitude; g is nonincreasing in c.  N_lambda
// equals the largest c with g[c-1] > lambda, so the profile determines every
// jump count of the sequence at once.
inline std::vector<double> jump_threshold_profile(const SampleSequence &seq) {
  validate(seq);
  const std::size_t m = seq.size();
  const auto &v = seq.values;
  if (m < 2)
    return {};
  std::vector<double> d2(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      d2[i * m + j] = detail::dist2(v[i], v[j]);

  // W[i] = best min-edge^2 over chains with c edges ending at i (-inf if none)
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> W(m), Wnext(m);
  for (std::size_t i = 0; i < m; ++i) {
    double b = ninf;
    for (std::size_t j = 0; j < i; ++j)
      b = std::max(b, d2[i * m + j]);
    W[i] = b;
  }
  std::vector<double> g;
  g.reserve(m - 1);
  for (std::size_t c = 1; c < m; ++c) {
    double layer_best = ninf;
    for (std::size_t i = 0; i < m; ++i)
      layer_best = std::max(layer_best, W[i]);
    if (layer_best == ninf)
      break;
    g.push_back(std::sqrt(layer_best));
    if (c + 1 == m)
      break;
    for (std::size_t i = 0; i < m; ++i) {
      double b = ninf;
      for (std::size_t j = 0; j < i; ++j)
        if (W[j] != ninf)
          b = std::max(b, std::min(W[j], d2[i * m + j]));
      Wnext[i] = b;
    }
    W.swap(Wnext);
  }
  // pad with zeros so callers can index c = 1..m-1 uniformly
  g.resize(m - 1, 0.0);
  return g;
}

// sup over lambda>0 of lambda*sqrt(N_lambda).  N_lambda is piecewise constant
// with breakpoints at the maximin profile values, and the strict count drops
// at each breakpoint, so the supremum equals max_c g(c)*sqrt(c) (approached
// from below; possibly not attained).  Returns (lambda_star, sup_value) with
// lambda_star the breakpoint realizing the maximum.
inline std::pair<double, double> sup_lambda_jump(const SampleSequence &seq) {
  validate(seq);
  if (seq.size() < 2)
    throw std::invalid_argument("sup_lambda_jump: need at least two samples");
  const std::vector<double> g = jump_threshold_profile(seq);
  double best = 0.0, lam = 0.0;
  for (std::size_t c = 1; c <= g.size(); ++c) {
    const double score = g[c - 1] * std::sqrt(static_cast<double>(c));
    if (score > best || (score == best && g[c - 1] > lam)) {
      best = score;
      lam = g[c - 1];
    }
  }
  return {lam, best};
}

struct DyadicBlock {
  int j = 0; // block label: scales live in [2^j, 2^{j+1}]
  SampleSequence seq;
};

// Short variation: l^2 over dyadic blocks of the intra-block 2-variation.
// Block indices may include both endpoints 2^j and 2^{j+1} (the shared
// boundary scale belongs to both adjacent blocks).
inline double short_variation(const std::vector<DyadicBlock> &blocks) {
  double acc = 0.0;
  for (const DyadicBlock &b : blocks) {
    validate(b.seq);
    const double lo = std::ldexp(1.0, b.j);
    const double hi = std::ldexp(1.0, b.j + 1);
    for (double t : b.seq.indices)
      if (!(t >= lo && t <= hi))
        throw std::invalid_argument("short_variation: block index outside its dyadic range");
    const double v2 = q_variation(b.seq, 2.0).value;
    acc += v2 * v2;
  }
  return std::sqrt(acc);
}

} // namespace czlab
