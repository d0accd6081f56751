#include "statgeo/money.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "statgeo/errors.hpp"

namespace statgeo::money {

AgentEnsemble init_ensemble(int n, double m_units, InitRule rule,
                            std::uint64_t seed) {
    if (n < 2) throw DomainError("need at least 2 agents");
    if (!(m_units > 0.0)) throw DomainError("total money must be positive");
    std::int64_t total = std::llround(m_units * kCentsPerUnit);
    if (total <= 0) throw DomainError("total money rounds to zero cents");

    AgentEnsemble e;
    e.holdings.assign(n, 0);
    e.total = total;
    e.rng_seed = seed;
    if (rule == InitRule::all_to_one) {
        e.holdings[0] = total;
    } else {
        std::int64_t share = total / n, rest = total % n;
        for (int i = 0; i < n; ++i)
            e.holdings[i] = share + (i < rest ? 1 : 0);
    }
    return e;
}

std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("bound must be positive");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

void exchange_step(AgentEnsemble& e, const ExchangeRule& rule,
                   std::mt19937_64& rng) {
    const auto n = static_cast<std::uint64_t>(e.holdings.size());
    std::uint64_t i = bounded_uint(rng, n);
    std::uint64_t j = bounded_uint(rng, n - 1);
    if (j >= i) ++j;

    if (rule.kind == ExchangeRule::Kind::random_split) {
        std::int64_t pool = e.holdings[i] + e.holdings[j];
        auto share = static_cast<std::int64_t>(
            bounded_uint(rng, static_cast<std::uint64_t>(pool) + 1));
        e.holdings[i] = share;
        e.holdings[j] = pool - share;
    } else {
        if (rule.delta <= 0) throw DomainError("delta must be positive");
        if (e.holdings[i] >= rule.delta) {
            e.holdings[i] -= rule.delta;
            e.holdings[j] += rule.delta;
        }
    }
}

Histogram make_histogram(const std::vector<double>& values, int bins,
                         double lo, double hi) {
    if (bins < 1) throw DomainError("need at least one bin");
    if (!(hi > lo)) throw DomainError("histogram range is empty");
    Histogram h;
    h.bin_edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i)
        h.bin_edges[i] = lo + (hi - lo) * i / bins;
    h.counts.assign(bins, 0);
    const double width = (hi - lo) / bins;
    for (double v : values) {
        int k = static_cast<int>(std::floor((v - lo) / width));
        k = std::clamp(k, 0, bins - 1);  // out-of-range mass joins the end bins
        ++h.counts[k];
    }
    h.total_count = static_cast<std::int64_t>(values.size());
    return h;
}

Histogram histogram_of(const AgentEnsemble& e, int bins, double hi_units) {
    std::vector<double> units(e.holdings.size());
    for (std::size_t i = 0; i < e.holdings.size(); ++i)
        units[i] = static_cast<double>(e.holdings[i]) / kCentsPerUnit;
    if (hi_units <= 0.0) hi_units = 10.0 * temperature(e);
    return make_histogram(units, bins, 0.0, hi_units);
}

ExchangeRun run_exchange(AgentEnsemble e, std::int64_t steps,
                         const ExchangeRule& rule, std::int64_t sample_every,
                         int hist_bins, double hist_max_units) {
    if (steps < 1) throw DomainError("need at least one step");
    if (sample_every < 1) sample_every = steps;
    if (hist_max_units <= 0.0) hist_max_units = 10.0 * temperature(e);

    std::mt19937_64 rng(e.rng_seed);
    ExchangeRun run;
    for (std::int64_t s = 1; s <= steps; ++s) {
        exchange_step(e, rule, rng);
        if (s % sample_every == 0 || s == steps) {
            run.snapshot_steps.push_back(s);
            run.snapshots.push_back(e.holdings);
            run.histograms.push_back(
                histogram_of(e, hist_bins, hist_max_units));
        }
    }
    run.final_state = std::move(e);
    return run;
}

double temperature(const AgentEnsemble& e) {
    if (e.holdings.empty()) throw DomainError("empty ensemble");
    return static_cast<double>(e.total) / kCentsPerUnit / e.size();
}

double bg_pdf(double m, double temp) {
    if (!(temp > 0.0)) throw DomainError("temperature must be positive");
    if (m < 0.0) return 0.0;
    return std::exp(-m / temp) / temp;
}

double bg_cdf(double m, double temp) {
    if (!(temp > 0.0)) throw DomainError("temperature must be positive");
    if (m < 0.0) return 0.0;
    return 1.0 - std::exp(-m / temp);
}

ExponentialFit fit_exponential(const Histogram& h) {
    if (h.total_count < 100)
        throw FitError("need at least 100 observations, have " +
                       std::to_string(h.total_count));
    double mean = 0.0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        double mid = 0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]);
        mean += mid * static_cast<double>(h.counts[i]);
    }
    mean /= static_cast<double>(h.total_count);
    if (!(mean > 0.0))
        throw FitError("histogram mean must be positive for an exponential");

    ExponentialFit fit;
    fit.t_hat = mean;
    double cum = 0.0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        double f_left = cum / static_cast<double>(h.total_count);
        cum += static_cast<double>(h.counts[i]);
        double f_right = cum / static_cast<double>(h.total_count);
        fit.ks = std::max(fit.ks,
                          std::abs(f_left - bg_cdf(h.bin_edges[i], mean)));
        fit.ks = std::max(
            fit.ks, std::abs(f_right - bg_cdf(h.bin_edges[i + 1], mean)));
    }
    return fit;
}

double ks_statistic_exponential(std::vector<double> samples, double temp) {
    if (samples.empty()) throw FitError("no samples");
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = bg_cdf(samples[i], temp);
        ks = std::max(ks, std::abs((i + 1) / n - f));
        ks = std::max(ks, std::abs(i / n - f));
    }
    return ks;
}

CoupleResult couple_and_equilibrate(const AgentEnsemble& e1,
                                    const AgentEnsemble& e2,
                                    std::int64_t steps,
                                    const ExchangeRule& rule,
                                    std::int64_t sample_every,
                                    std::uint64_t seed) {
    if (e1.holdings.empty() || e2.holdings.empty())
        throw DomainError("both ensembles must be nonempty");
    if (steps < 1) throw DomainError("need at least one step");
    if (sample_every < 1) sample_every = steps;

    CoupleResult res;
    res.n1 = e1.size();
    res.merged.holdings = e1.holdings;
    res.merged.holdings.insert(res.merged.holdings.end(), e2.holdings.begin(),
                               e2.holdings.end());
    res.merged.total = e1.total + e2.total;
    res.merged.rng_seed = seed;

    auto record = [&res](std::int64_t step) {
        const auto& h = res.merged.holdings;
        auto sum1 = std::accumulate(h.begin(), h.begin() + res.n1,
                                    std::int64_t{0});
        auto sum2 = std::accumulate(h.begin() + res.n1, h.end(),
                                    std::int64_t{0});
        res.trace_steps.push_back(step);
        res.t1.push_back(static_cast<double>(sum1) / kCentsPerUnit / res.n1);
        res.t2.push_back(static_cast<double>(sum2) / kCentsPerUnit /
                         (h.size() - res.n1));
    };

    std::mt19937_64 rng(seed);
    record(0);
    for (std::int64_t s = 1; s <= steps; ++s) {
        exchange_step(res.merged, rule, rng);
        if (s % sample_every == 0 || s == steps) record(s);
    }
    return res;
}

double gibbs_entropy(const Histogram& h) {
    if (h.total_count <= 0) throw DomainError("histogram is empty");
    double entropy = 0.0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        if (h.counts[i] == 0) continue;
        double p = static_cast<double>(h.counts[i]) /
                   static_cast<double>(h.total_count);
        double width = h.bin_edges[i + 1] - h.bin_edges[i];
        entropy -= p * std::log(p / width);
    }
    return entropy;
}

}  // namespace statgeo::money
