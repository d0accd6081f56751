#include "statgeo/csvio.hpp"

#include <cstdio>
#include <fstream>

#include "statgeo/errors.hpp"

namespace statgeo::scenario {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
    finish(out, path);
}

void write_trajectory_csv(const std::string& path,
                          const geodesic::Trajectory& trajectory) {
    const int d = trajectory.dim;
    std::vector<std::string> header;
    header.push_back("S");
    for (const char* stem : {"theta_", "u_"})
        for (int i = 1; i <= d; ++i)
            header.push_back(stem + std::to_string(i));
    if (trajectory.has_deviation) {
        for (const char* stem : {"psi_", "psirate_"})
            for (int i = 1; i <= d; ++i)
                header.push_back(stem + std::to_string(i));
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(trajectory.s.size());
    for (std::size_t k = 0; k < trajectory.s.size(); ++k) {
        std::vector<double> row;
        row.reserve(1 + trajectory.rows[k].size());
        row.push_back(trajectory.s[k]);
        row.insert(row.end(), trajectory.rows[k].begin(),
                   trajectory.rows[k].end());
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

void write_histogram_csv(const std::string& path,
                         const money::Histogram& hist) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i + 1 < hist.bin_edges.size(); ++i) {
        rows.push_back({hist.bin_edges[i], hist.bin_edges[i + 1],
                        static_cast<double>(hist.counts[i])});
    }
    write_csv(path, {"bin_left", "bin_right", "count"}, rows);
}

void write_traces_csv(const std::string& path,
                      const std::vector<std::int64_t>& steps,
                      const std::vector<double>& t1,
                      const std::vector<double>& t2) {
    std::vector<std::vector<double>> rows;
    rows.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i)
        rows.push_back({static_cast<double>(steps[i]), t1[i], t2[i]});
    write_csv(path, {"step", "T1", "T2"}, rows);
}

}  // namespace statgeo::scenario
