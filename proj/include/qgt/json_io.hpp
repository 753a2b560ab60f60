#pragma once

#include <json.hpp>

#include "qgt/exact.hpp"
#include "qgt/gt.hpp"
#include "qgt/measures.hpp"
#include "qgt/qtoeplitz.hpp"
#include "qgt/sampling.hpp"

namespace qgt {

using Json = nlohmann::json;

Json scalar_json(const Rational& r);
Rational scalar_from_json(const Json& j);

Json signature_json(const Signature& s);
Signature signature_from_json(const Json& j);

Json path_json(const Path& p);
Path path_from_json(const Json& j);

Json tiling_json(const std::vector<std::pair<int, int>>& coords);

Json measure_json(const FiniteMeasure& m);
FiniteMeasure measure_from_json(const Json& j);

Json nu_json(const NuSeq& nu);
NuSeq nu_from_json(const Json& j);

Json qtoeplitz_json(const QToeplitz& M);
QToeplitz qtoeplitz_from_json(const Json& j);

Json manifest_json(const SampleRun& run, int count);

}  // namespace qgt
