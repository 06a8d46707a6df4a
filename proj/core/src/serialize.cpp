#include "xqm/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace xqm {
namespace {

double require_number(const Json& j, const std::string& where) {
  if (!j.is_number())
    throw InputError(where + ": expected a number");
  return j.get<double>();
}

const Json& require_field(const Json& j, const char* key,
                          const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + "/" + key + ": missing field");
  return j.at(key);
}

}  // namespace

Json to_json(const Quaternion& q) {
  return Json::array({q.a0, q.a1, q.a2, q.a3});
}

Json to_json(const CliffordElement& e) {
  Json out = Json::array();
  for (int i = 0; i < CliffordElement::kBlades; ++i)
    out.push_back(Json::array({e[i].real(), e[i].imag()}));
  return out;
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InputError("quaternion: expected an array of 4 reals");
  return Quaternion(require_number(j[0], "/0"), require_number(j[1], "/1"),
                    require_number(j[2], "/2"), require_number(j[3], "/3"));
}

CliffordElement clifford_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 16)
    throw InputError("clifford element: expected an array of 16 [re, im] pairs");
  CliffordElement e;
  for (int i = 0; i < 16; ++i) {
    const auto& p = j[i];
    if (!p.is_array() || p.size() != 2)
      throw InputError("clifford element /" + std::to_string(i) +
                       ": expected [re, im]");
    e[i] = {require_number(p[0], "re"), require_number(p[1], "im")};
  }
  return e;
}

template <>
Quaternion ring_from_json<Quaternion>(const Json& j) {
  return quaternion_from_json(j);
}
template <>
CliffordElement ring_from_json<CliffordElement>(const Json& j) {
  return clifford_from_json(j);
}

std::string ring_name(const Json& j) {
  const auto& f = require_field(j, "ring", "");
  const std::string name = f.get<std::string>();
  if (name != "quaternion" && name != "clifford")
    throw InputError("/ring: expected \"quaternion\" or \"clifford\"");
  return name;
}

template <StarRing R>
Json vector_to_json(const ModuleVector<R>& v) {
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs) coeffs.push_back(to_json(c));
  return Json{{"ring", RingTraits<R>::name},
              {"rank", v.rank()},
              {"coeffs", std::move(coeffs)}};
}

template <StarRing R>
ModuleVector<R> vector_from_json(const Json& j) {
  if (ring_name(j) != RingTraits<R>::name)
    throw RingMismatch("vector ring does not match the expected ring");
  const std::size_t rank =
      require_field(j, "rank", "").get<std::size_t>();
  const auto& coeffs = require_field(j, "coeffs", "");
  if (!coeffs.is_array() || coeffs.size() != rank)
    throw InputError("/coeffs: expected " + std::to_string(rank) +
                     " ring elements");
  ModuleVector<R> v(rank);
  for (std::size_t i = 0; i < rank; ++i)
    v.coeffs[i] = ring_from_json<R>(coeffs[i]);
  return v;
}

template <StarRing R>
Json operator_to_json(const RingOperator<R>& a) {
  Json entries = Json::array();
  for (const auto& e : a.entries()) entries.push_back(to_json(e));
  return Json{{"ring", RingTraits<R>::name},
              {"rank", a.rank()},
              {"entries", std::move(entries)}};
}

template <StarRing R>
RingOperator<R> operator_from_json(const Json& j) {
  if (ring_name(j) != RingTraits<R>::name)
    throw RingMismatch("operator ring does not match the expected ring");
  const std::size_t rank =
      require_field(j, "rank", "").get<std::size_t>();
  const auto& entries = require_field(j, "entries", "");
  if (!entries.is_array() || entries.size() != rank * rank)
    throw InputError("/entries: expected " + std::to_string(rank * rank) +
                     " ring elements (row-major)");
  std::vector<R> es;
  es.reserve(rank * rank);
  for (const auto& e : entries) es.push_back(ring_from_json<R>(e));
  return RingOperator<R>(rank, std::move(es));
}

template <StarRing R>
Json spectral_outcome_to_json(const SpectralOutcome<R>& o) {
  Json out{{"ring", RingTraits<R>::name}, {"physical", o.physical()}};
  out["diagnostics"] = o.diagnostic;
  if (o.physical()) {
    const auto& r = o.value();
    out["eigenvalues"] = r.eigenvalues;
    out["signs"] = r.signs;
    Json basis = Json::array();
    for (const auto& v : r.basis) basis.push_back(vector_to_json(v));
    out["basis"] = std::move(basis);
    out["groups"] = r.groups;
    out["group_values"] = r.group_values;
  }
  return out;
}

Json distribution_to_json(const ExtDistribution& d) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i)
    entries.push_back(Json{{"eigenvalue", d.eigenvalues[i]},
                           {"p", d.probabilities[i]},
                           {"raw_scalar", d.raw_scalars[i]}});
  return Json{{"entries", std::move(entries)},
              {"denominator", d.denominator}};
}

template <StarRing R>
Json raw_weights_to_json(const std::vector<RawWeight<R>>& ws) {
  Json out = Json::array();
  for (const auto& w : ws)
    out.push_back(Json{{"eigenvalue", w.eigenvalue},
                       {"value", to_json(w.value)},
                       {"scalar", w.scalar},
                       {"magnitude", w.magnitude}});
  return out;
}

Json marginal_report_to_json(const MarginalReport& rep) {
  return Json{{"solo_first", distribution_to_json(rep.solo_first)},
              {"solo_second", distribution_to_json(rep.solo_second)},
              {"ordered_table", rep.ordered_table},
              {"first_marginal_gap", rep.first_marginal_gap},
              {"second_marginal_gap", rep.second_marginal_gap}};
}

Json color_model_to_json(const ColorModel& m) {
  Json colors = Json::array();
  for (std::size_t i = 0; i < m.colors.size(); ++i)
    colors.push_back(Json{{"n", m.colors[i]}, {"p", m.probs[i]}});
  return Json{{"colors", std::move(colors)}};
}

ColorModel color_model_from_json(const Json& j) {
  const auto& colors = require_field(j, "colors", "");
  if (!colors.is_array() || colors.empty())
    throw InputError("/colors: expected a non-empty array of {n, p}");
  ColorModel m;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const std::string where = "/colors/" + std::to_string(i);
    const auto& c = colors[i];
    if (!c.is_object() || !c.contains("n") || !c.contains("p"))
      throw InputError(where + ": expected {n, p}");
    if (!c.at("n").is_number_integer())
      throw InputError(where + "/n: expected an integer");
    m.colors.push_back(c.at("n").get<int>());
    m.probs.push_back(require_number(c.at("p"), where + "/p"));
  }
  return m;
}

Json run_result_to_json(const RunResult& r) {
  Json counts = Json::array();
  for (std::size_t i = 0; i < r.colors.size(); ++i)
    counts.push_back(Json{{"n", r.colors[i]},
                          {"count", r.counts[i]},
                          {"p", r.p_n[i]}});
  return Json{{"shots", r.shots},   {"seed", r.seed},
              {"counts", counts},   {"p_a", r.p_a},
              {"p0", r.p0},         {"coarse", r.coarse},
              {"mismatch", r.mismatch}};
}

Json exact_limit_to_json(const ExactLimit& e) {
  Json table = Json::array();
  for (std::size_t i = 0; i < e.colors.size(); ++i)
    table.push_back(Json{{"n", e.colors[i]}, {"p", e.p_n[i]}});
  return Json{{"p_n", table},   {"p_a", e.p_a},
              {"p0", e.p0},     {"coarse", e.coarse},
              {"mismatch", e.mismatch}, {"stddev", e.stddev}};
}

Json predictivity_report_to_json(const PredictivityReport& rep) {
  return Json{{"exact", exact_limit_to_json(rep.exact)},
              {"p_a", rep.p_a},
              {"coarse", rep.coarse},
              {"mismatch", rep.mismatch}};
}

Json signed_lhv_to_json(const SignedLhvModel& m) {
  return Json{{"weights", m.weights},
              {"outcomes", Json{{"a", m.outcomes[0][0]},
                                {"a_prime", m.outcomes[0][1]},
                                {"b", m.outcomes[1][0]},
                                {"b_prime", m.outcomes[1][1]}}}};
}

SignedLhvModel signed_lhv_from_json(const Json& j) {
  SignedLhvModel m;
  m.weights = require_field(j, "weights", "").get<std::vector<double>>();
  const auto& o = require_field(j, "outcomes", "");
  m.outcomes[0][0] = require_field(o, "a", "/outcomes").get<std::vector<int>>();
  m.outcomes[0][1] =
      require_field(o, "a_prime", "/outcomes").get<std::vector<int>>();
  m.outcomes[1][0] = require_field(o, "b", "/outcomes").get<std::vector<int>>();
  m.outcomes[1][1] =
      require_field(o, "b_prime", "/outcomes").get<std::vector<int>>();
  return m;
}

Json quantum_chsh_to_json(const QuantumChsh& q) {
  return Json{{"S", q.s},
              {"correlators", Json{{"ab", q.correlators[0][0]},
                                   {"ab_prime", q.correlators[0][1]},
                                   {"a_prime_b", q.correlators[1][0]},
                                   {"a_prime_b_prime", q.correlators[1][1]}}}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("input not found: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write: " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, target);
}

#define XQM_INSTANTIATE(R)                                                  \
  template Json vector_to_json<R>(const ModuleVector<R>&);                  \
  template ModuleVector<R> vector_from_json<R>(const Json&);                \
  template Json operator_to_json<R>(const RingOperator<R>&);                \
  template RingOperator<R> operator_from_json<R>(const Json&);              \
  template Json spectral_outcome_to_json<R>(const SpectralOutcome<R>&);     \
  template Json raw_weights_to_json<R>(const std::vector<RawWeight<R>>&);

XQM_INSTANTIATE(Quaternion)
XQM_INSTANTIATE(CliffordElement)

#undef XQM_INSTANTIATE

}  // namespace xqm
