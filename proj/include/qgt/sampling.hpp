#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qgt/exact.hpp"
#include "qgt/gt.hpp"
#include "qgt/measures.hpp"

namespace qgt {

// SplitMix64 run in counter mode: draw n of stream s is mix(key(seed, s) + n * golden).
// Any (seed, stream, counter) triple maps to the same value on every platform.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  // Uniform on [0,1) as U / 2^128 with U built from two draws.
  Rational uniform128();
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct MixtureSpec {
  std::vector<std::pair<NuSeq, Rational>> components;
  void validate() const;
};

using SampleSpec = std::variant<NuSeq, MixtureSpec>;
std::string describe(const SampleSpec& spec);

// Index of the outcome hit by an exact inverse-CDF draw; throws TailHit if the draw
// lands in the unassigned mass.
template <class T>
std::size_t draw_index(const std::vector<std::pair<T, Rational>>& outcomes, CounterRng& rng) {
  Rational u = rng.uniform128(), cum = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    cum += outcomes[i].second;
    if (u < cum) return i;
  }
  throw Error(ErrorKind::TailHit, "uniform draw fell in the declared tail");
}

// Caches extreme projections and cotransition rows across draws.
class Sampler {
 public:
  explicit Sampler(QParam q, ExtremeOptions opt = {}) : q_(std::move(q)), opt_(std::move(opt)) {}

  const FiniteMeasure& top_measure(const NuSeq& nu, int N);
  Signature sample_top(const NuSeq& nu, int N, CounterRng& rng);
  Path sample_path_down(const Signature& lam, CounterRng& rng);
  Path sample_path(const SampleSpec& spec, int N, CounterRng& rng);
  const QParam& q() const { return q_; }
  const ExtremeOptions& options() const { return opt_; }

 private:
  QParam q_;
  ExtremeOptions opt_;
  std::map<std::pair<std::string, int>, FiniteMeasure> tops_;
  std::map<Signature, std::vector<std::pair<Signature, Rational>>> rows_;
};

Signature sample_top(const NuSeq& nu, int N, const QParam& q, const ExtremeOptions& opt, CounterRng& rng);
Path sample_path_down(const Signature& lam, const QParam& q, CounterRng& rng);

struct SampleRun {
  std::uint64_t seed = 0;
  int N_top = 0;
  std::vector<Path> paths;
  std::string spec;  // provenance
  Rational epsilon;
  int cap = -1;
};

struct TilingRun {
  SampleRun run;
  std::vector<std::vector<std::pair<int, int>>> tilings;
};

// count independent paths; path i uses substream i of the seed.
TilingRun sample_tiling(const SampleSpec& spec, int N, const QParam& q, const ExtremeOptions& opt, int count,
                        std::uint64_t seed);

// Rhombus picture of one path: horizontal lozenges at (N, x) plus the two tilted types.
std::string tiling_svg(const Path& p);

}  // namespace qgt
