#include "qgt/json_io.hpp"

namespace qgt {

Json scalar_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Rational scalar_from_json(const Json& j) {
  Integer den(j.at("den").get<std::string>());
  if (den <= 0) throw Error(ErrorKind::InvalidArgument, "scalar denominator must be positive");
  return Rational(Integer(j.at("num").get<std::string>())) / Rational(den);
}

Json signature_json(const Signature& s) { return {{"level", s.level()}, {"coords", s.coords()}}; }

Signature signature_from_json(const Json& j) {
  Signature s(j.at("coords").get<std::vector<int>>());
  if (s.level() != j.at("level").get<int>()) throw Error(ErrorKind::LevelMismatch, "level field vs coords");
  return s;
}

Json path_json(const Path& p) {
  Json levels = Json::array();
  for (const auto& s : p.levels) levels.push_back(signature_json(s));
  return {{"levels", levels}};
}

Path path_from_json(const Json& j) {
  std::vector<Signature> levels;
  for (const auto& s : j.at("levels")) levels.push_back(signature_from_json(s));
  return make_path(std::move(levels));
}

Json tiling_json(const std::vector<std::pair<int, int>>& coords) {
  Json a = Json::array();
  for (auto [N, x] : coords) a.push_back({N, x});
  return {{"horizontal_lozenges", a}};
}

Json measure_json(const FiniteMeasure& m) {
  Json masses = Json::array();
  for (const auto& [s, v] : m.mass) masses.push_back({signature_json(s), scalar_json(v)});
  return {{"level", m.level}, {"masses", masses}, {"tail", scalar_json(m.tail)}};
}

FiniteMeasure measure_from_json(const Json& j) {
  FiniteMeasure m;
  m.level = j.at("level").get<int>();
  for (const auto& e : j.at("masses")) m.mass[signature_from_json(e.at(0))] = scalar_from_json(e.at(1));
  m.tail = scalar_from_json(j.at("tail"));
  m.validate();
  return m;
}

Json nu_json(const NuSeq& nu) { return {{"prefix", nu.prefix()}, {"tail", nu.tail()}}; }

NuSeq nu_from_json(const Json& j) { return NuSeq(j.at("prefix").get<std::vector<int>>(), j.at("tail").get<int>()); }

Json qtoeplitz_json(const QToeplitz& M) {
  Json rows = Json::array();
  for (int i = 1; i <= M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= M.cols(); ++j) row.push_back(scalar_json(M(i, j)));
    rows.push_back(row);
  }
  return {{"q", scalar_json(M.q().value())}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", rows}};
}

QToeplitz qtoeplitz_from_json(const Json& j) {
  const int R = j.at("rows").get<int>(), C = j.at("cols").get<int>();
  Matrix<Rational> d(R, C);
  const auto& e = j.at("entries");
  if (static_cast<int>(e.size()) != R) throw Error(ErrorKind::IndexOutOfRange, "row count vs entries");
  for (int i = 0; i < R; ++i) {
    if (static_cast<int>(e[i].size()) != C) throw Error(ErrorKind::IndexOutOfRange, "column count vs entries");
    for (int c = 0; c < C; ++c) d(i, c) = scalar_from_json(e[i][c]);
  }
  return QToeplitz(QParam(scalar_from_json(j.at("q"))), std::move(d));
}

Json manifest_json(const SampleRun& run, int count) {
  return {{"seed", run.seed}, {"spec", run.spec}, {"N", run.N_top}, {"epsilon", scalar_json(run.epsilon)}, {"count", count}};
}

}  // namespace qgt
