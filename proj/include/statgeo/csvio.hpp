#pragma once

#include <string>
#include <vector>

#include "statgeo/geodesic.hpp"
#include "statgeo/money.hpp"

namespace statgeo::scenario {

// Shortest representation that round-trips a double.
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Columns: S, theta_1..theta_d, u_1..u_d, and when the trajectory carries a
// deviation, psi_1..psi_d, psirate_1..psirate_d.
void write_trajectory_csv(const std::string& path,
                          const geodesic::Trajectory& trajectory);

// Columns: bin_left, bin_right, count. Edges in money units.
void write_histogram_csv(const std::string& path,
                         const money::Histogram& hist);

// Columns: step, T1, T2.
void write_traces_csv(const std::string& path,
                      const std::vector<std::int64_t>& steps,
                      const std::vector<double>& t1,
                      const std::vector<double>& t2);

}  // namespace statgeo::scenario
