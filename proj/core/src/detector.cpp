#include "xqm/detector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "xqm/philox.hpp"

namespace xqm {

void ColorModel::validate() const {
  if (colors.empty()) throw InvalidModel("model has no colors");
  if (colors.size() != probs.size())
    throw InvalidModel("colors and probabilities differ in length");
  std::set<int> seen;
  double sum = 0.0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (std::abs(colors[i]) > kMaxColor)
      throw InvalidModel("color magnitude exceeds the supported cap");
    if (!seen.insert(colors[i]).second)
      throw InvalidModel("duplicate color in the support");
    if (!(probs[i] >= 0.0) || probs[i] > 1.0)
      throw InvalidModel("probability outside [0, 1]");
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidModel("probabilities do not sum to 1");
}

double ColorModel::prob_of(int color) const {
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == color) return probs[i];
  return 0.0;
}

namespace {

void derive_statistics(RunResult& r) {
  const double n = double(r.shots);
  std::int64_t weighted = 0;
  r.p_n.resize(r.counts.size());
  r.p0 = 0.0;
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    weighted += std::int64_t(r.colors[i]) * std::int64_t(r.counts[i]);
    r.p_n[i] = double(r.counts[i]) / n;
    if (r.colors[i] == 0) r.p0 = r.p_n[i];
  }
  r.p_a = double(weighted) / n;
  r.coarse = 1.0 - r.p0;
  r.mismatch = std::abs(r.p_a - r.coarse);
}

}  // namespace

RunResult simulate(const ColorModel& model, std::uint64_t shots,
                   std::uint64_t seed, unsigned shards) {
  model.validate();
  if (shots < 1) throw InvalidModel("shot count must be at least 1");
  if (shards < 1) shards = 1;
  shards = std::min<unsigned>(shards, 64);

  std::vector<double> cdf(model.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < model.probs.size(); ++i) {
    acc += model.probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  const Philox gen(seed);
  const auto draw = [&](std::uint64_t shot) {
    const double u = gen.uniform(shot);
    return std::size_t(std::upper_bound(cdf.begin(), cdf.end(), u) -
                       cdf.begin());
  };

  std::vector<std::vector<std::uint64_t>> local(
      shards, std::vector<std::uint64_t>(model.colors.size(), 0));
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (shots + shards - 1) / shards;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = std::uint64_t(s) * chunk;
    const std::uint64_t hi = std::min(shots, lo + chunk);
    workers.emplace_back([&, s, lo, hi] {
      auto& counts = local[s];
      for (std::uint64_t shot = lo; shot < hi; ++shot) ++counts[draw(shot)];
    });
  }
  for (auto& w : workers) w.join();

  RunResult r;
  r.shots = shots;
  r.seed = seed;
  r.colors = model.colors;
  r.counts.assign(model.colors.size(), 0);
  for (const auto& counts : local)
    for (std::size_t i = 0; i < counts.size(); ++i) r.counts[i] += counts[i];
  derive_statistics(r);
  return r;
}

ExactLimit exact_expectations(const ColorModel& model) {
  model.validate();
  ExactLimit e;
  e.colors = model.colors;
  e.p_n = model.probs;
  double second_moment = 0.0;
  for (std::size_t i = 0; i < model.colors.size(); ++i) {
    e.p_a += model.colors[i] * model.probs[i];
    second_moment += double(model.colors[i]) * model.colors[i] * model.probs[i];
    if (model.colors[i] == 0) e.p0 = model.probs[i];
  }
  e.coarse = 1.0 - e.p0;
  e.mismatch = std::abs(e.p_a - e.coarse);
  e.stddev = std::sqrt(std::max(0.0, second_moment - e.p_a * e.p_a));
  return e;
}

CoarseView coarse_view(const RunResult& r) { return {r.p0, 1.0 - r.p0}; }

PredictivityReport predictivity_report(const ColorModel& model) {
  PredictivityReport rep;
  rep.exact = exact_expectations(model);
  rep.p_a = rep.exact.p_a;
  rep.coarse = rep.exact.coarse;
  rep.mismatch = rep.exact.mismatch;
  return rep;
}

std::pair<ColorModel, ColorModel> equal_pa_witness(double target) {
  if (target < -1.0 || target > 2.0)
    throw InvalidModel("witness target outside [-1, 2]");
  // E = -p + 2(1-p) on {-1, 2} and -2q + 4(1-q) on {-2, 4}.
  const double p = (2.0 - target) / 3.0;
  const double q = (4.0 - target) / 6.0;
  ColorModel a{{-1, 2}, {p, 1.0 - p}};
  ColorModel b{{-2, 4}, {q, 1.0 - q}};
  a.validate();
  b.validate();
  return {a, b};
}

}  // namespace xqm
