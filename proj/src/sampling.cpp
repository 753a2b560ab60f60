#include "qgt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qgt {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream * kGolden + 0x632be59bd9b4e019ULL))) {}

std::uint64_t CounterRng::next() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

Rational CounterRng::uniform128() {
  Integer hi = next(), lo = next();
  Integer u = (hi << 64) | lo;
  Integer two128 = Integer(1) << 128;
  return Rational(u) / Rational(two128);
}

void MixtureSpec::validate() const {
  if (components.empty()) throw Error(ErrorKind::InvalidArgument, "empty mixture");
  Rational s = 0;
  for (const auto& [nu, w] : components) {
    if (w < 0) throw Error(ErrorKind::NegativeMass, "mixture weight " + to_string(w));
    s += w;
  }
  if (s != 1) throw Error(ErrorKind::InvalidArgument, "mixture weights sum to " + to_string(s));
}

std::string describe(const SampleSpec& spec) {
  if (auto nu = std::get_if<NuSeq>(&spec)) return "nu " + nu->str();
  std::string s = "mixture";
  for (const auto& [nu, w] : std::get<MixtureSpec>(spec).components) s += " [" + nu.str() + " @ " + to_string(w) + "]";
  return s;
}

const FiniteMeasure& Sampler::top_measure(const NuSeq& nu, int N) {
  auto key = std::make_pair(nu.str(), N);
  auto it = tops_.find(key);
  if (it == tops_.end()) it = tops_.emplace(key, extreme_projection(nu, N, q_, opt_)).first;
  return it->second;
}

Signature Sampler::sample_top(const NuSeq& nu, int N, CounterRng& rng) {
  const auto& m = top_measure(nu, N);
  std::vector<std::pair<Signature, Rational>> outcomes(m.mass.begin(), m.mass.end());
  return outcomes[draw_index(outcomes, rng)].first;
}

Path Sampler::sample_path_down(const Signature& lam, CounterRng& rng) {
  std::vector<Signature> levels(lam.level());
  Signature cur = lam;
  for (int k = lam.level(); k >= 1; --k) {
    levels[k - 1] = cur;
    if (k == 1) break;
    auto it = rows_.find(cur);
    if (it == rows_.end()) it = rows_.emplace(cur, cotransition_row(cur, q_)).first;
    cur = it->second[draw_index(it->second, rng)].first;
  }
  return Path{std::move(levels)};
}

Path Sampler::sample_path(const SampleSpec& spec, int N, CounterRng& rng) {
  if (auto nu = std::get_if<NuSeq>(&spec)) return sample_path_down(sample_top(*nu, N, rng), rng);
  const auto& mix = std::get<MixtureSpec>(spec);
  const auto& nu = mix.components[draw_index(mix.components, rng)].first;
  return sample_path_down(sample_top(nu, N, rng), rng);
}

Signature sample_top(const NuSeq& nu, int N, const QParam& q, const ExtremeOptions& opt, CounterRng& rng) {
  Sampler s(q, opt);
  return s.sample_top(nu, N, rng);
}

Path sample_path_down(const Signature& lam, const QParam& q, CounterRng& rng) {
  Sampler s(q);
  return s.sample_path_down(lam, rng);
}

TilingRun sample_tiling(const SampleSpec& spec, int N, const QParam& q, const ExtremeOptions& opt, int count,
                        std::uint64_t seed) {
  if (auto mix = std::get_if<MixtureSpec>(&spec)) mix->validate();
  if (N < 1) throw Error(ErrorKind::LevelOutOfRange, "N = " + std::to_string(N));
  Sampler sampler(q, opt);
  TilingRun out;
  out.run.seed = seed;
  out.run.N_top = N;
  out.run.spec = describe(spec);
  out.run.epsilon = opt.epsilon;
  out.run.cap = opt.cap;
  for (int i = 0; i < count; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    out.run.paths.push_back(sampler.sample_path(spec, N, rng));
    out.tilings.push_back(tiling_coords(out.run.paths.back()));
  }
  return out;
}

// ---- SVG ----
//
// Line N is the vertical line X = N w (w = sqrt(3)/2); position y on it is the unit
// segment [y - N/2, y + 1 - N/2]. A horizontal lozenge at (N, y) is the rhombus whose
// short diagonal is that segment. In the strip between lines N and N+1 the remaining
// triangles alternate bottom to top as left(y), right(y), left(y+1), right(y+1), ...
// where right(y) leans on line N and left(y) leans on line N+1; consecutive free
// triangles pair into the two tilted lozenge types.

std::string tiling_svg(const Path& p) {
  const double w = std::sqrt(3.0) / 2.0;
  const int top = p.top();
  std::vector<std::set<int>> particles(top + 2);
  int ymin = 0, ymax = 0;
  bool first = true;
  for (auto [N, y] : tiling_coords(p)) {
    particles[N].insert(y);
    ymin = first ? y : std::min(ymin, y);
    ymax = first ? y : std::max(ymax, y);
    first = false;
  }
  ymin -= 2;
  ymax += 2;

  std::ostringstream body;
  auto pt = [&](double X, double Y) {
    std::ostringstream s;
    s << X << "," << -Y;
    return s.str();
  };
  auto poly = [&](const char* cls, std::initializer_list<std::pair<double, double>> v) {
    body << "  <polygon class=\"" << cls << "\" points=\"";
    bool sp = false;
    for (auto [X, Y] : v) {
      body << (sp ? " " : "") << pt(X, Y);
      sp = true;
    }
    body << "\"/>\n";
  };

  for (int N = 1; N <= top; ++N)
    for (int y : particles[N]) {
      double X = N * w, Y = y - N / 2.0;
      poly("horizontal", {{X, Y}, {X + w, Y + 0.5}, {X, Y + 1}, {X - w, Y + 0.5}});
    }

  for (int N = 0; N < top; ++N) {
    const double X0 = N * w, X1 = (N + 1) * w;
    // walk the strip bottom to top; kind 0 = left triangle at y (edge on line N+1), 1 = right triangle at y
    bool pending = false;
    int pending_kind = 0, pending_y = 0;
    for (int y = ymin; y <= ymax; ++y)
      for (int kind = 0; kind < 2; ++kind) {
        bool taken = kind == 0 ? particles[N + 1].count(y) > 0 : particles[N].count(y) > 0;
        if (taken) {
          pending = false;
          continue;
        }
        if (!pending) {
          pending = true;
          pending_kind = kind;
          pending_y = y;
          continue;
        }
        pending = false;
        if (pending_kind == 0) {
          // left(y) below right(y): shared edge runs from (X0, y - N/2) to (X1, y + 1/2 - N/2)
          double Y = y - N / 2.0;
          poly("tilt-up", {{X1, Y - 0.5}, {X1, Y + 0.5}, {X0, Y + 1}, {X0, Y}});
        } else {
          // right(pending_y) below left(pending_y + 1)
          double Y = pending_y - N / 2.0;
          poly("tilt-down", {{X0, Y}, {X1, Y + 0.5}, {X1, Y + 1.5}, {X0, Y + 1}});
        }
      }
  }

  const double pad = 1.0;
  double minX = -w - pad, maxX = (top + 1) * w + pad;
  double minY = -(ymax + 2) , maxY = -(ymin - top / 2.0 - 1);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minX << " " << minY << " " << (maxX - minX) << " "
      << (maxY - minY) << "\">\n"
      << "  <style>polygon{stroke:#222;stroke-width:0.03}.horizontal{fill:#e8b04a}"
         ".tilt-up{fill:#4a7fe8}.tilt-down{fill:#9ad16b}</style>\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace qgt
