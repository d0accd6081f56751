#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace statgeo::money {

// Holdings are integer cents so conservation is exact; temperatures,
// densities and histograms work in currency units.
inline constexpr std::int64_t kCentsPerUnit = 100;

struct AgentEnsemble {
    std::vector<std::int64_t> holdings;  // cents
    std::int64_t total = 0;              // cents, cached sum
    std::uint64_t rng_seed = 0;

    int size() const { return static_cast<int>(holdings.size()); }
};

enum class InitRule { equal, all_to_one };

AgentEnsemble init_ensemble(int n, double m_units, InitRule rule,
                            std::uint64_t seed);

struct ExchangeRule {
    enum class Kind { random_split, fixed_delta };
    Kind kind = Kind::random_split;
    std::int64_t delta = 0;  // cents, fixed_delta only
};

// Uniform integer in [0, bound), unbiased, with a fixed rejection scheme so
// seeded runs reproduce across platforms.
std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t bound);

// One exchange between a uniformly drawn pair i != j. The drawn pair order
// matters for fixed_delta: the first agent pays and insolvency makes the
// step a no-op. Total money never changes.
void exchange_step(AgentEnsemble& e, const ExchangeRule& rule,
                   std::mt19937_64& rng);

struct Histogram {
    std::vector<double> bin_edges;  // units, size counts+1
    std::vector<std::int64_t> counts;
    std::int64_t total_count = 0;
};

Histogram make_histogram(const std::vector<double>& values, int bins,
                         double lo, double hi);
Histogram histogram_of(const AgentEnsemble& e, int bins, double hi_units);

struct ExchangeRun {
    AgentEnsemble final_state;
    std::vector<std::int64_t> snapshot_steps;
    std::vector<std::vector<std::int64_t>> snapshots;  // holdings in cents
    std::vector<Histogram> histograms;
};

ExchangeRun run_exchange(AgentEnsemble e, std::int64_t steps,
                         const ExchangeRule& rule, std::int64_t sample_every,
                         int hist_bins = 60, double hist_max_units = -1.0);

double temperature(const AgentEnsemble& e);  // M/N in units

double bg_pdf(double m, double temp);
double bg_cdf(double m, double temp);

struct ExponentialFit {
    double t_hat = 0.0;
    double ks = 0.0;
};

// Maximum-likelihood temperature from bin midpoints plus the KS distance of
// the binned empirical law against that exponential.
ExponentialFit fit_exponential(const Histogram& h);

// KS distance of raw samples (units) against an exponential of the given
// temperature.
double ks_statistic_exponential(std::vector<double> samples, double temp);

struct CoupleResult {
    AgentEnsemble merged;  // subsystem 1 first
    int n1 = 0;
    std::vector<std::int64_t> trace_steps;
    std::vector<double> t1, t2;  // per-subsystem mean money, units
};

CoupleResult couple_and_equilibrate(const AgentEnsemble& e1,
                                    const AgentEnsemble& e2,
                                    std::int64_t steps,
                                    const ExchangeRule& rule,
                                    std::int64_t sample_every,
                                    std::uint64_t seed);

// Differential-entropy estimate -sum p_i ln(p_i / width_i) over filled bins.
double gibbs_entropy(const Histogram& h);

}  // namespace statgeo::money
