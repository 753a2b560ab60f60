#include "qgt/gt.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qgt {

Signature::Signature(std::vector<int> coords) : c_(std::move(coords)) {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] > c_[i - 1])
      throw Error(ErrorKind::InvalidArgument, "signature must be weakly decreasing: " + str());
}

long Signature::size() const { return std::accumulate(c_.begin(), c_.end(), 0L); }

Signature Signature::padded(int level) const {
  if (level < this->level())
    throw Error(ErrorKind::LevelMismatch, "cannot pad " + str() + " down to level " + std::to_string(level));
  if (level > this->level() && !nonnegative())
    throw Error(ErrorKind::NegativeCoordinate, "zero padding needs a nonnegative signature: " + str());
  auto c = c_;
  c.resize(level, 0);
  return Signature(std::move(c));
}

std::vector<int> Signature::plus_part() const {
  std::vector<int> p;
  for (int v : c_)
    if (v > 0) p.push_back(v);
  return p;
}

std::vector<int> Signature::minus_part() const {
  std::vector<int> p;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    if (*it < 0) p.push_back(-*it);
  return p;
}

std::string Signature::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

bool graded_less(const Signature& a, const Signature& b) {
  long sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

Path make_path(std::vector<Signature> levels) {
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].level() != static_cast<int>(k) + 1)
      throw Error(ErrorKind::LevelMismatch, "path entry " + std::to_string(k + 1) + " has level " +
                                                std::to_string(levels[k].level()));
    if (k > 0 && !interlaces(levels[k - 1], levels[k]))
      throw Error(ErrorKind::InvalidArgument,
                  "path does not interlace at " + levels[k - 1].str() + " -> " + levels[k].str());
  }
  return Path{std::move(levels)};
}

bool Tableau::semistandard() const {
  if (entries.size() != shape.size()) return false;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (static_cast<int>(entries[i].size()) != shape[i]) return false;
    if (i > 0 && shape[i] > shape[i - 1]) return false;
    for (int j = 0; j < shape[i]; ++j) {
      if (entries[i][j] < static_cast<int>(i) + 1) return false;
      if (j > 0 && entries[i][j] < entries[i][j - 1]) return false;
      if (i > 0 && entries[i][j] <= entries[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> as_partition(const std::vector<int>& parts) {
  std::vector<int> p;
  for (int v : parts) {
    if (v < 0) throw Error(ErrorKind::NegativeCoordinate, "partition with a negative part");
    if (v > 0) p.push_back(v);
  }
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) throw Error(ErrorKind::InvalidArgument, "partition must be weakly decreasing");
  return p;
}

std::vector<int> transpose(const std::vector<int>& partition) {
  auto p = as_partition(partition);
  std::vector<int> t(p.empty() ? 0 : p[0], 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++t[j];
  return t;
}

DiagramStats diagram_stats(const std::vector<int>& partition) {
  DiagramStats d;
  auto p = as_partition(partition);
  d.transpose = transpose(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    d.size += p[i];
    d.n += static_cast<long>(i) * p[i];
    d.hooks.emplace_back();
    d.contents.emplace_back();
    for (int j = 0; j < p[i]; ++j) {
      d.hooks[i].push_back(p[i] - static_cast<int>(i) + d.transpose[j] - j - 1);
      d.contents[i].push_back(j - static_cast<int>(i));
    }
  }
  for (std::size_t j = 0; j < d.transpose.size(); ++j) d.n_prime += static_cast<long>(j) * d.transpose[j];
  return d;
}

DiagramStats diagram_stats(const Signature& lam) {
  if (!lam.nonnegative()) throw Error(ErrorKind::NegativeCoordinate, "diagram of " + lam.str());
  return diagram_stats(lam.coords());
}

bool interlaces(const Signature& mu, const Signature& lam) {
  if (mu.level() + 1 != lam.level())
    throw Error(ErrorKind::LevelMismatch,
                "interlacing needs levels N and N+1, got " + std::to_string(mu.level()) + " and " +
                    std::to_string(lam.level()));
  for (int i = 0; i < mu.level(); ++i)
    if (!(lam[i] >= mu[i] && mu[i] >= lam[i + 1])) return false;
  return true;
}

std::vector<Signature> enumerate_below(const Signature& lam) {
  const int N = lam.level();
  if (N < 2) throw Error(ErrorKind::LevelMismatch, "nothing below level " + std::to_string(N));
  std::vector<Signature> out;
  std::vector<int> cur(N - 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == N - 1) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lam[i + 1]; v <= lam[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Path> enumerate_paths_to(const Signature& lam, std::size_t cap) {
  std::vector<Path> out;
  std::vector<Signature> stack(lam.level());
  std::function<void(const Signature&)> rec = [&](const Signature& s) {
    stack[s.level() - 1] = s;
    if (s.level() == 1) {
      if (out.size() >= cap)
        throw Error(ErrorKind::Explosion, "more than " + std::to_string(cap) + " paths to " + lam.str());
      out.push_back(Path{stack});
      return;
    }
    for (const auto& mu : enumerate_below(s)) rec(mu);
  };
  if (lam.level() == 0) return out;
  rec(lam);
  return out;
}

Rational path_weight(const Path& p, const QParam& q) {
  long e = 0;
  for (int k = 1; k < p.top(); ++k) e += p.at(k).size();
  return q_pow(q, e);
}

namespace {

// Level label of each box: the first k whose diagram contains the box.
Tableau label_boxes(const std::vector<std::vector<int>>& diagrams) {
  Tableau t;
  t.shape = diagrams.back();
  t.entries.resize(t.shape.size());
  for (std::size_t i = 0; i < t.shape.size(); ++i) {
    t.entries[i].assign(t.shape[i], 0);
    for (int j = 0; j < t.shape[i]; ++j)
      for (std::size_t k = 0; k < diagrams.size(); ++k)
        if (i < diagrams[k].size() && j < diagrams[k][i]) {
          t.entries[i][j] = static_cast<int>(k) + 1;
          break;
        }
  }
  return t;
}

std::vector<int> boxes_up_to(const Tableau& t, int k) {
  std::vector<int> rows;
  for (const auto& row : t.entries) {
    int len = static_cast<int>(std::count_if(row.begin(), row.end(), [k](int e) { return e <= k; }));
    if (len > 0) rows.push_back(len);
  }
  return rows;
}

}  // namespace

std::pair<Tableau, Tableau> tableaux_of_path(const Path& p) {
  if (p.top() == 0) return {};
  std::vector<std::vector<int>> plus, minus;
  for (const auto& s : p.levels) {
    plus.push_back(s.plus_part());
    minus.push_back(s.minus_part());
  }
  return {label_boxes(plus), label_boxes(minus)};
}

Path path_from_tableaux(const Tableau& plus, const Tableau& minus, int N) {
  std::vector<Signature> levels;
  for (int k = 1; k <= N; ++k) {
    auto pos = boxes_up_to(plus, k), neg = boxes_up_to(minus, k);
    if (static_cast<int>(pos.size() + neg.size()) > k)
      throw Error(ErrorKind::EntryOutOfRange, "tableau rows exceed level " + std::to_string(k));
    std::vector<int> c(pos.begin(), pos.end());
    c.resize(k - neg.size(), 0);
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) c.push_back(-*it);
    levels.emplace_back(std::move(c));
  }
  return make_path(std::move(levels));
}

long volume(const Tableau& t, int N) {
  long v = 0;
  for (const auto& row : t.entries)
    for (int e : row) {
      if (e < 1 || e > N)
        throw Error(ErrorKind::EntryOutOfRange, "entry " + std::to_string(e) + " outside 1.." + std::to_string(N));
      v += N - e;
    }
  return v;
}

Signature shift(const Signature& lam, int l) {
  auto c = lam.coords();
  for (int& v : c) v += l;
  return Signature(std::move(c));
}

std::vector<std::pair<int, int>> tiling_coords(const Path& p) {
  std::vector<std::pair<int, int>> out;
  for (int N = 1; N <= p.top(); ++N)
    for (int i = 1; i <= N; ++i) out.emplace_back(N, p.at(N)[i - 1] + N - i - 1);
  return out;
}

bool contained(const Signature& mu, const Signature& lam) {
  const int n = std::max(mu.level(), lam.level());
  for (int i = 0; i < n; ++i) {
    int a = i < mu.level() ? mu[i] : 0;
    int b = i < lam.level() ? lam[i] : 0;
    if (a > b) return false;
  }
  return true;
}

bool dominates(const Signature& mu, const Signature& lower) {
  if (mu.level() != lower.level())
    throw Error(ErrorKind::LevelMismatch, mu.str() + " vs " + lower.str());
  for (int i = 0; i < mu.level(); ++i)
    if (mu[i] < lower[i]) return false;
  return true;
}

std::vector<Signature> signatures_above(const Signature& lower, int width) {
  const int N = lower.level();
  std::vector<Signature> out;
  std::vector<int> cur(N);
  std::function<void(int, int)> rec = [&](int i, int hi) {
    if (i == N) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::max(lower[i], 0); v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, width);
  std::stable_sort(out.begin(), out.end(), graded_less);
  return out;
}

std::vector<Signature> partitions_in_box(int level, int width) {
  return signatures_above(Signature::zeros(level), width);
}

std::vector<Signature> signatures_in_range(int level, int lo, int hi) {
  std::vector<Signature> out;
  std::vector<int> cur(level);
  std::function<void(int, int)> rec = [&](int i, int top) {
    if (i == level) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= top; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qgt
