#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "xqm/chsh.hpp"
#include "xqm/detector.hpp"
#include "xqm/measurement.hpp"
#include "xqm/spectral.hpp"

namespace xqm {

using Json = nlohmann::json;

// Ring elements: quaternion as 4 reals, Clifford as 16 [re, im] pairs in
// canonical blade order.  Round-trips are bit-exact at double precision.
Json to_json(const Quaternion& q);
Json to_json(const CliffordElement& e);
Quaternion quaternion_from_json(const Json& j);
CliffordElement clifford_from_json(const Json& j);

template <StarRing R>
R ring_from_json(const Json& j);

/// "quaternion" or "clifford"; throws InputError otherwise.
std::string ring_name(const Json& j);

// Vectors: {ring, rank, coeffs}; operators: {ring, rank, entries} with
// entries row-major.
template <StarRing R>
Json vector_to_json(const ModuleVector<R>& v);
template <StarRing R>
ModuleVector<R> vector_from_json(const Json& j);
template <StarRing R>
Json operator_to_json(const RingOperator<R>& a);
template <StarRing R>
RingOperator<R> operator_from_json(const Json& j);

template <StarRing R>
Json spectral_outcome_to_json(const SpectralOutcome<R>& o);

Json distribution_to_json(const ExtDistribution& d);

template <StarRing R>
Json raw_weights_to_json(const std::vector<RawWeight<R>>& ws);

Json marginal_report_to_json(const MarginalReport& rep);

// Detector model: {colors: [{n, p}, ...]}.
Json color_model_to_json(const ColorModel& m);
ColorModel color_model_from_json(const Json& j);
Json run_result_to_json(const RunResult& r);
Json exact_limit_to_json(const ExactLimit& e);
Json predictivity_report_to_json(const PredictivityReport& rep);

// Signed LHV model: {weights, outcomes: {a, a_prime, b, b_prime}}.
Json signed_lhv_to_json(const SignedLhvModel& m);
SignedLhvModel signed_lhv_from_json(const Json& j);
Json quantum_chsh_to_json(const QuantumChsh& q);

/// Parses a file; throws InputError with the path on failure.
Json load_json_file(const std::string& path);

/// Writes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace xqm
