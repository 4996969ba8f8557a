// Copyright 2026 The ASQ Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asq/distributions.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "asq/core.hpp"

namespace asq {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kBadParameters, what);
}

std::vector<double> parse_params(std::string_view rest, std::string_view spec) {
  std::vector<double> out;
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    const std::string_view tok = rest.substr(0, colon);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      bad("bad distribution parameter '" + std::string(tok) + "' in '" +
          std::string(spec) + "'");
    }
    out.push_back(v);
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return out;
}

void assign(std::vector<double>& params, std::initializer_list<double*> fields,
            std::string_view spec) {
  if (params.size() > fields.size()) {
    bad("too many parameters in '" + std::string(spec) + "'");
  }
  std::size_t i = 0;
  for (double* f : fields) {
    if (i < params.size()) *f = params[i];
    ++i;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double truncnorm_draw(const TruncNorm& t, std::mt19937_64& gen) {
  const double sigma = std::sqrt(t.sigma2);
  auto cdf = [&](double x) {
    return 0.5 * std::erfc(-(x - t.mu) / (sigma * std::sqrt(2.0)));
  };
  const double mass = cdf(t.b) - cdf(t.a);
  if (mass >= 0.05) {
    std::normal_distribution<double> normal(t.mu, sigma);
    while (true) {
      const double x = normal(gen);
      if (x >= t.a && x <= t.b) return x;
    }
  }
  // Thin interval: uniform proposal against the density peak inside [a, b].
  std::uniform_real_distribution<double> uni(t.a, t.b);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double peak = std::clamp(t.mu, t.a, t.b);
  while (true) {
    const double x = uni(gen);
    const double log_ratio =
        ((peak - t.mu) * (peak - t.mu) - (x - t.mu) * (x - t.mu)) /
        (2.0 * t.sigma2);
    if (coin(gen) <= std::exp(log_ratio)) return x;
  }
}

}  // namespace

Distribution parse_distribution(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) {
    params = parse_params(spec.substr(colon + 1), spec);
  }
  Distribution dist;
  if (name == "lognormal") {
    LogNormal d;
    assign(params, {&d.mu, &d.sigma2}, spec);
    dist = d;
  } else if (name == "normal") {
    Normal d;
    assign(params, {&d.mu, &d.sigma2}, spec);
    dist = d;
  } else if (name == "exponential") {
    Exponential d;
    assign(params, {&d.lambda}, spec);
    dist = d;
  } else if (name == "truncnorm") {
    TruncNorm d;
    assign(params, {&d.mu, &d.sigma2, &d.a, &d.b}, spec);
    dist = d;
  } else if (name == "weibull") {
    Weibull d;
    assign(params, {&d.k, &d.lambda}, spec);
    dist = d;
  } else {
    bad("unknown distribution '" + std::string(name) + "'");
  }
  validate(dist);
  return dist;
}

std::string format_distribution(const Distribution& dist) {
  return std::visit(
      Overloaded{
          [](const LogNormal& d) {
            return "lognormal:" + fmt(d.mu) + ":" + fmt(d.sigma2);
          },
          [](const Normal& d) {
            return "normal:" + fmt(d.mu) + ":" + fmt(d.sigma2);
          },
          [](const Exponential& d) { return "exponential:" + fmt(d.lambda); },
          [](const TruncNorm& d) {
            return "truncnorm:" + fmt(d.mu) + ":" + fmt(d.sigma2) + ":" +
                   fmt(d.a) + ":" + fmt(d.b);
          },
          [](const Weibull& d) {
            return "weibull:" + fmt(d.k) + ":" + fmt(d.lambda);
          },
      },
      dist);
}

void validate(const Distribution& dist) {
  auto finite = [](std::initializer_list<double> vs) {
    for (double v : vs) {
      if (!std::isfinite(v)) bad("distribution parameters must be finite");
    }
  };
  std::visit(Overloaded{
                 [&](const LogNormal& d) {
                   finite({d.mu, d.sigma2});
                   if (!(d.sigma2 > 0)) bad("lognormal needs sigma2 > 0");
                 },
                 [&](const Normal& d) {
                   finite({d.mu, d.sigma2});
                   if (!(d.sigma2 > 0)) bad("normal needs sigma2 > 0");
                 },
                 [&](const Exponential& d) {
                   finite({d.lambda});
                   if (!(d.lambda > 0)) bad("exponential needs lambda > 0");
                 },
                 [&](const TruncNorm& d) {
                   finite({d.mu, d.sigma2, d.a, d.b});
                   if (!(d.sigma2 > 0)) bad("truncnorm needs sigma2 > 0");
                   if (!(d.a < d.b)) bad("truncnorm needs a < b");
                 },
                 [&](const Weibull& d) {
                   finite({d.k, d.lambda});
                   if (!(d.k > 0 && d.lambda > 0)) {
                     bad("weibull needs k > 0 and lambda > 0");
                   }
                 },
             },
             dist);
}

std::vector<double> sample(const Distribution& dist, std::size_t d,
                           std::uint64_t seed) {
  validate(dist);
  std::mt19937_64 gen(seed);
  std::vector<double> out(d);
  std::visit(
      Overloaded{
          [&](const LogNormal& p) {
            std::lognormal_distribution<double> g(p.mu, std::sqrt(p.sigma2));
            for (auto& x : out) x = g(gen);
          },
          [&](const Normal& p) {
            std::normal_distribution<double> g(p.mu, std::sqrt(p.sigma2));
            for (auto& x : out) x = g(gen);
          },
          [&](const Exponential& p) {
            std::exponential_distribution<double> g(p.lambda);
            for (auto& x : out) x = g(gen);
          },
          [&](const TruncNorm& p) {
            for (auto& x : out) x = truncnorm_draw(p, gen);
          },
          [&](const Weibull& p) {
            std::weibull_distribution<double> g(p.k, p.lambda);
            for (auto& x : out) x = g(gen);
          },
      },
      dist);
  return out;
}

}  // namespace asq
