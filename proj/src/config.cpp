#include "statgeo/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace statgeo::scenario {

namespace {

std::string render_issues(const std::vector<ParseIssue>& issues) {
    std::ostringstream out;
    out << "invalid scenario config (" << issues.size()
        << (issues.size() == 1 ? " problem)" : " problems)");
    for (const auto& issue : issues) {
        out << "\n  ";
        if (issue.line > 0) {
            out << "line " << issue.line;
            if (issue.col > 0) out << ", col " << issue.col;
            out << ": ";
        }
        out << issue.message;
    }
    return out.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct RawValue {
    std::string text;
    std::vector<std::string> items;
    bool is_array = false;
    int line = 0;
    int col = 0;
};

struct RawConfig {
    // section -> key -> value; insertion order does not matter, lookups
    // are by name
    std::map<std::string, std::map<std::string, RawValue>> sections;
};

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
            c != '-')
            return false;
    }
    return true;
}

RawConfig parse_raw(const std::string& text, std::vector<ParseIssue>& issues) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                issues.push_back({lineno, 1, "section header missing ']'", true});
                continue;
            }
            std::string name = trim(t.substr(1, t.size() - 2));
            if (!valid_name(name)) {
                issues.push_back({lineno, 1,
                                  "bad section name '" + name + "'", true});
                continue;
            }
            section = name;
            raw.sections[section];
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            issues.push_back({lineno, 1, "expected 'key = value'", true});
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        int col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
        if (!valid_name(key)) {
            issues.push_back({lineno, col, "bad key '" + key + "'", true});
            continue;
        }
        RawValue rv;
        rv.line = lineno;
        rv.col = static_cast<int>(eq) + 2;
        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']') {
                issues.push_back({lineno, rv.col, "array missing ']'", true});
                continue;
            }
            rv.is_array = true;
            std::string inner = value.substr(1, value.size() - 2);
            std::string item;
            std::istringstream items(inner);
            while (std::getline(items, item, ',')) {
                rv.items.push_back(trim(item));
            }
            if (rv.items.size() == 1 && rv.items[0].empty()) rv.items.clear();
        } else {
            if (value.size() >= 2 && value.front() == '"' &&
                value.back() == '"') {
                value = value.substr(1, value.size() - 2);
            }
            rv.text = value;
        }
        auto& sec = raw.sections[section];
        if (sec.count(key)) {
            issues.push_back({lineno, col,
                              "duplicate key '" + key + "'" +
                                  (section.empty() ? "" : " in [" + section + "]"),
                              true});
            continue;
        }
        sec[key] = std::move(rv);
    }
    return raw;
}

// Typed access over the raw table. Every getter records an issue instead of
// throwing so one pass reports everything.
class Reader {
public:
    Reader(const RawConfig& raw, std::vector<ParseIssue>& issues)
        : raw_(raw), issues_(issues) {}

    bool has(const std::string& section, const std::string& key) const {
        auto sec = raw_.sections.find(section);
        return sec != raw_.sections.end() && sec->second.count(key) > 0;
    }

    bool has_section(const std::string& section) const {
        return raw_.sections.count(section) > 0;
    }

    std::string get_string(const std::string& section, const std::string& key,
                           std::string fallback) {
        const RawValue* rv = fetch(section, key);
        if (!rv) return fallback;
        if (rv->is_array) {
            issue(*rv, section, key, "expected a single value, got an array");
            return fallback;
        }
        return rv->text;
    }

    double get_double(const std::string& section, const std::string& key,
                      double fallback) {
        const RawValue* rv = fetch(section, key);
        if (!rv) return fallback;
        if (rv->is_array) {
            issue(*rv, section, key, "expected a number, got an array");
            return fallback;
        }
        double out = fallback;
        if (!to_double(rv->text, out))
            issue(*rv, section, key, "'" + rv->text + "' is not a number");
        return out;
    }

    std::int64_t get_int(const std::string& section, const std::string& key,
                         std::int64_t fallback) {
        const RawValue* rv = fetch(section, key);
        if (!rv) return fallback;
        if (rv->is_array) {
            issue(*rv, section, key, "expected an integer, got an array");
            return fallback;
        }
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(rv->text.c_str(), &end, 10);
        if (errno != 0 || end == rv->text.c_str() || *end != '\0') {
            issue(*rv, section, key, "'" + rv->text + "' is not an integer");
            return fallback;
        }
        return v;
    }

    bool get_bool(const std::string& section, const std::string& key,
                  bool fallback) {
        const RawValue* rv = fetch(section, key);
        if (!rv) return fallback;
        if (rv->text == "true" || rv->text == "1" || rv->text == "yes")
            return true;
        if (rv->text == "false" || rv->text == "0" || rv->text == "no")
            return false;
        issue(*rv, section, key, "'" + rv->text + "' is not a boolean");
        return fallback;
    }

    std::vector<double> get_vector(const std::string& section,
                                   const std::string& key,
                                   std::vector<double> fallback) {
        const RawValue* rv = fetch(section, key);
        if (!rv) return fallback;
        std::vector<std::string> items;
        if (rv->is_array) {
            items = rv->items;
        } else {
            items.push_back(rv->text);  // a bare scalar is a 1-vector
        }
        std::vector<double> out;
        for (const auto& item : items) {
            double v = 0;
            if (!to_double(item, v)) {
                issue(*rv, section, key, "'" + item + "' is not a number");
                return fallback;
            }
            out.push_back(v);
        }
        return out;
    }

    void require(const std::string& section, const std::string& key) {
        if (has(section, key)) return;
        issues_.push_back({0, 0,
                           "missing required key '" + key + "' in [" +
                               section + "]",
                           false});
    }

    void complain(const std::string& section, const std::string& key,
                  const std::string& message) {
        const RawValue* rv = nullptr;
        auto sec = raw_.sections.find(section);
        if (sec != raw_.sections.end()) {
            auto it = sec->second.find(key);
            if (it != sec->second.end()) rv = &it->second;
        }
        if (rv) {
            issue(*rv, section, key, message);
        } else {
            issues_.push_back(
                {0, 0, "[" + section + "] " + key + ": " + message, false});
        }
    }

    // Flags keys nobody consumed; catches typos like "thetaO".
    void finish() {
        for (const auto& [section, keys] : raw_.sections) {
            for (const auto& [key, rv] : keys) {
                if (!consumed_.count(section + "\n" + key)) {
                    issues_.push_back({rv.line, rv.col,
                                       "unknown key '" + key + "' in [" +
                                           section + "]",
                                       false});
                }
            }
        }
    }

private:
    const RawValue* fetch(const std::string& section, const std::string& key) {
        auto sec = raw_.sections.find(section);
        if (sec == raw_.sections.end()) return nullptr;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return nullptr;
        consumed_.insert(section + "\n" + key);
        return &it->second;
    }

    static bool to_double(const std::string& s, double& out) {
        errno = 0;
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (errno != 0 || end == s.c_str() || *end != '\0') return false;
        out = v;
        return true;
    }

    void issue(const RawValue& rv, const std::string& section,
               const std::string& key, const std::string& message) {
        issues_.push_back({rv.line, rv.col,
                           "[" + section + "] " + key + ": " + message,
                           false});
    }

    const RawConfig& raw_;
    std::vector<ParseIssue>& issues_;
    std::set<std::string> consumed_;
};

geodesic::Stepper read_stepper(Reader& r, const std::string& section) {
    geodesic::Stepper st;
    std::string method = r.get_string(section, "method", "rkf45");
    if (method == "rk4") {
        st.kind = geodesic::Stepper::Kind::rk4;
    } else if (method == "rkf45") {
        st.kind = geodesic::Stepper::Kind::rkf45;
    } else {
        r.complain(section, "method",
                   "unknown method '" + method + "' (rk4 or rkf45)");
    }
    st.step = r.get_double(section, "step", st.step);
    st.rel_tol = r.get_double(section, "rel_tol", st.rel_tol);
    st.sample_every =
        static_cast<int>(r.get_int(section, "sample_every", st.sample_every));
    if (st.step <= 0) r.complain(section, "step", "must be positive");
    if (st.rel_tol <= 0) r.complain(section, "rel_tol", "must be positive");
    if (st.sample_every < 1)
        r.complain(section, "sample_every", "must be at least 1");
    return st;
}

FamilySpec read_family(Reader& r, std::vector<ParseIssue>& issues) {
    FamilySpec spec;
    if (!r.has_section("family") && !r.has("family", "name")) {
        issues.push_back(
            {0, 0, "missing section [family] with key 'name'", false});
        return spec;
    }
    spec.name = r.get_string("family", "name", "");
    if (spec.name.empty()) {
        r.complain("family", "name", "family name is required");
        return spec;
    }
    static const std::set<std::string> known = {
        "gaussian3d", "rao_gaussian_as_printed", "rao_gaussian_standard",
        "constant", "inverse_square_diag"};
    if (!known.count(spec.name)) {
        r.complain("family", "name", "unknown family '" + spec.name + "'");
        return spec;
    }
    spec.r = r.get_double("family", "r", 0.0);
    spec.dim = static_cast<int>(r.get_int("family", "dim", 2));
    spec.entries = r.get_vector("family", "entries", {});
    if (spec.name == "gaussian3d" && !(std::abs(spec.r) < 1))
        r.complain("family", "r", "correlation must satisfy |r| < 1");
    if (spec.name != "gaussian3d" && r.has("family", "r"))
        r.complain("family", "r", "only gaussian3d takes a correlation");
    if (spec.dim < 1) r.complain("family", "dim", "must be at least 1");
    if (spec.name == "constant" && !spec.entries.empty() &&
        spec.entries.size() !=
            static_cast<std::size_t>(spec.dim) * spec.dim) {
        r.complain("family", "entries",
                   "need dim*dim entries for the constant metric");
    }
    if (spec.name != "constant" && !spec.entries.empty())
        r.complain("family", "entries", "only the constant family takes entries");
    return spec;
}

void check_point_sizes(Reader& r, const std::string& section,
                       const FamilySpec& family,
                       const std::vector<std::pair<std::string,
                                                   const std::vector<double>*>>&
                           vectors) {
    std::unique_ptr<manifold::MetricFamily> fam;
    try {
        fam = make_family(family);
    } catch (const Error&) {
        return;  // family issues were already recorded
    }
    for (const auto& [key, vec] : vectors) {
        if (!r.has(section, key) && vec->empty()) continue;  // already flagged
        if (static_cast<int>(vec->size()) != fam->dim()) {
            r.complain(section, key,
                       "expected " + std::to_string(fam->dim()) +
                           " components for family '" + family.name + "'");
        }
    }
}

void check_admissible(Reader& r, const std::string& section,
                      const std::string& key, const FamilySpec& family,
                      const std::vector<double>& theta) {
    std::unique_ptr<manifold::MetricFamily> fam;
    try {
        fam = make_family(family);
    } catch (const Error&) {
        return;
    }
    if (static_cast<int>(theta.size()) != fam->dim()) return;
    Eigen::VectorXd v(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) v[i] = theta[i];
    try {
        fam->require_admissible(v);
    } catch (const DomainError& e) {
        r.complain(section, key, e.what());
    }
}

}  // namespace

ConfigError::ConfigError(std::vector<ParseIssue> issues)
    : Error(render_issues(issues)), issues_(std::move(issues)) {}

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::geodesic: return "geodesic";
        case ScenarioKind::deviation: return "deviation";
        case ScenarioKind::curvature_scan: return "curvature-scan";
        case ScenarioKind::lv: return "lotka-volterra";
        case ScenarioKind::growth: return "growth";
        case ScenarioKind::money_sim: return "money-sim";
        case ScenarioKind::couple: return "couple";
        case ScenarioKind::maxent: return "maxent";
        case ScenarioKind::fisher_check: return "fisher-check";
    }
    return "?";
}

std::unique_ptr<manifold::MetricFamily> make_family(const FamilySpec& spec) {
    if (spec.name == "gaussian3d")
        return std::make_unique<manifold::Gaussian3D>(spec.r);
    if (spec.name == "rao_gaussian_as_printed")
        return std::make_unique<manifold::RaoGaussianAsPrinted>();
    if (spec.name == "rao_gaussian_standard")
        return std::make_unique<manifold::RaoGaussianStandard>();
    if (spec.name == "inverse_square_diag")
        return std::make_unique<manifold::InverseSquareDiagonal>(spec.dim);
    if (spec.name == "constant") {
        Eigen::MatrixXd g;
        if (spec.entries.empty()) {
            g = Eigen::MatrixXd::Identity(spec.dim, spec.dim);
        } else {
            g.resize(spec.dim, spec.dim);
            for (int i = 0; i < spec.dim; ++i)
                for (int j = 0; j < spec.dim; ++j)
                    g(i, j) = spec.entries[static_cast<std::size_t>(i) *
                                               spec.dim +
                                           j];
        }
        return std::make_unique<manifold::ConstantMetric>(g);
    }
    throw DomainError("unknown metric family '" + spec.name + "'");
}

ScenarioConfig parse_config(const std::string& text) {
    std::vector<ParseIssue> issues;
    RawConfig raw = parse_raw(text, issues);
    Reader r(raw, issues);

    ScenarioConfig cfg;
    std::string kind = r.get_string("scenario", "kind", "");
    if (kind.empty()) {
        issues.push_back(
            {0, 0, "missing required key 'kind' in [scenario]", false});
    }
    cfg.output_dir = r.get_string("scenario", "output_dir", ".");
    cfg.seed = static_cast<std::uint64_t>(r.get_int("scenario", "seed", 0));
    cfg.plots = r.get_bool("scenario", "plots", true);

    if (kind == "geodesic") {
        cfg.kind = ScenarioKind::geodesic;
        GeodesicScenario p;
        p.family = read_family(r, issues);
        r.require("geodesic", "theta0");
        r.require("geodesic", "u0");
        p.theta0 = r.get_vector("geodesic", "theta0", {});
        p.u0 = r.get_vector("geodesic", "u0", {});
        p.s_end = r.get_double("geodesic", "s_end", p.s_end);
        if (p.s_end <= 0) r.complain("geodesic", "s_end", "must be positive");
        p.stepper = read_stepper(r, "geodesic");
        check_point_sizes(r, "geodesic", p.family,
                          {{"theta0", &p.theta0}, {"u0", &p.u0}});
        check_admissible(r, "geodesic", "theta0", p.family, p.theta0);
        cfg.params = std::move(p);
    } else if (kind == "deviation") {
        cfg.kind = ScenarioKind::deviation;
        DeviationScenario p;
        p.family = read_family(r, issues);
        for (const char* key : {"theta0", "u0", "psi0"})
            r.require("deviation", key);
        p.theta0 = r.get_vector("deviation", "theta0", {});
        p.u0 = r.get_vector("deviation", "u0", {});
        p.psi0 = r.get_vector("deviation", "psi0", {});
        p.psi_rate0 = r.get_vector("deviation", "psi_rate0",
                                   std::vector<double>(p.psi0.size(), 0.0));
        p.s_end = r.get_double("deviation", "s_end", p.s_end);
        p.transient_fraction =
            r.get_double("deviation", "transient_fraction", 0.2);
        p.residual_threshold =
            r.get_double("deviation", "residual_threshold", 1e-2);
        if (p.s_end <= 0) r.complain("deviation", "s_end", "must be positive");
        if (p.transient_fraction < 0 || p.transient_fraction >= 1)
            r.complain("deviation", "transient_fraction", "must be in [0, 1)");
        p.stepper = read_stepper(r, "deviation");
        check_point_sizes(r, "deviation", p.family,
                          {{"theta0", &p.theta0},
                           {"u0", &p.u0},
                           {"psi0", &p.psi0},
                           {"psi_rate0", &p.psi_rate0}});
        check_admissible(r, "deviation", "theta0", p.family, p.theta0);
        cfg.params = std::move(p);
    } else if (kind == "curvature-scan") {
        cfg.kind = ScenarioKind::curvature_scan;
        CurvatureScanScenario p;
        p.family = read_family(r, issues);
        r.require("curvature-scan", "start");
        r.require("curvature-scan", "stop");
        p.start = r.get_vector("curvature-scan", "start", {});
        p.stop = r.get_vector("curvature-scan", "stop", {});
        p.samples =
            static_cast<int>(r.get_int("curvature-scan", "samples", 50));
        if (p.samples < 2)
            r.complain("curvature-scan", "samples", "need at least 2 samples");
        check_point_sizes(r, "curvature-scan", p.family,
                          {{"start", &p.start}, {"stop", &p.stop}});
        check_admissible(r, "curvature-scan", "start", p.family, p.start);
        check_admissible(r, "curvature-scan", "stop", p.family, p.stop);
        cfg.params = std::move(p);
    } else if (kind == "lotka-volterra") {
        cfg.kind = ScenarioKind::lv;
        LVScenario p;
        p.alpha1 = r.get_double("lotka-volterra", "alpha1", p.alpha1);
        p.alpha2 = r.get_double("lotka-volterra", "alpha2", p.alpha2);
        p.variant = r.get_string("lotka-volterra", "variant", p.variant);
        p.k0 = r.get_double("lotka-volterra", "k0", p.k0);
        p.i0 = r.get_double("lotka-volterra", "i0", p.i0);
        p.t_end = r.get_double("lotka-volterra", "t_end", p.t_end);
        if (p.alpha1 <= 0)
            r.complain("lotka-volterra", "alpha1", "must be positive");
        if (p.alpha2 <= 0)
            r.complain("lotka-volterra", "alpha2", "must be positive");
        if (p.variant != "standard" && p.variant != "paper")
            r.complain("lotka-volterra", "variant",
                       "unknown variant '" + p.variant +
                           "' (standard or paper)");
        if (p.k0 <= 0) r.complain("lotka-volterra", "k0", "must be positive");
        if (p.i0 <= 0) r.complain("lotka-volterra", "i0", "must be positive");
        if (p.t_end <= 0)
            r.complain("lotka-volterra", "t_end", "must be positive");
        p.stepper = read_stepper(r, "lotka-volterra");
        cfg.params = std::move(p);
    } else if (kind == "growth") {
        cfg.kind = ScenarioKind::growth;
        GrowthScenario p;
        p.mu = r.get_double("growth", "mu", p.mu);
        p.nu = r.get_double("growth", "nu", p.nu);
        p.k0 = r.get_double("growth", "k0", p.k0);
        p.t_end = r.get_double("growth", "t_end", p.t_end);
        if (p.mu <= 0 || p.mu >= 1)
            r.complain("growth", "mu", "saving rate must lie in (0, 1)");
        if (p.nu <= 0) r.complain("growth", "nu", "must be positive");
        if (p.k0 <= 0) r.complain("growth", "k0", "must be positive");
        if (p.t_end <= 0) r.complain("growth", "t_end", "must be positive");
        p.stepper = read_stepper(r, "growth");
        cfg.params = std::move(p);
    } else if (kind == "money-sim") {
        cfg.kind = ScenarioKind::money_sim;
        MoneySimScenario p;
        p.agents = static_cast<int>(r.get_int("money-sim", "agents", p.agents));
        p.m_units = r.get_double("money-sim", "total_money", p.m_units);
        p.steps = r.get_int("money-sim", "steps", p.steps);
        p.init = r.get_string("money-sim", "init", p.init);
        p.rule = r.get_string("money-sim", "rule", p.rule);
        p.delta_units = r.get_double("money-sim", "delta", p.delta_units);
        p.sample_every = r.get_int("money-sim", "sample_every", p.sample_every);
        p.burn_in = r.get_int("money-sim", "burn_in", p.burn_in);
        p.bins = static_cast<int>(r.get_int("money-sim", "bins", p.bins));
        p.hist_max = r.get_double("money-sim", "hist_max", p.hist_max);
        if (p.agents < 2) r.complain("money-sim", "agents", "need at least 2");
        if (p.m_units <= 0)
            r.complain("money-sim", "total_money", "must be positive");
        if (p.steps < 1) r.complain("money-sim", "steps", "must be positive");
        if (p.init != "equal" && p.init != "all_to_one")
            r.complain("money-sim", "init",
                       "unknown init '" + p.init + "' (equal or all_to_one)");
        if (p.rule != "random_split" && p.rule != "fixed_delta")
            r.complain("money-sim", "rule",
                       "unknown rule '" + p.rule +
                           "' (random_split or fixed_delta)");
        if (p.rule == "fixed_delta" && p.delta_units <= 0)
            r.complain("money-sim", "delta", "must be positive");
        if (p.sample_every < 1)
            r.complain("money-sim", "sample_every", "must be positive");
        if (p.burn_in < 0)
            r.complain("money-sim", "burn_in", "must be non-negative");
        if (p.burn_in >= p.steps)
            r.complain("money-sim", "burn_in", "must be smaller than steps");
        if (p.bins < 2) r.complain("money-sim", "bins", "need at least 2 bins");
        cfg.params = std::move(p);
    } else if (kind == "couple") {
        cfg.kind = ScenarioKind::couple;
        CoupleScenario p;
        p.n1 = static_cast<int>(r.get_int("couple", "agents1", p.n1));
        p.n2 = static_cast<int>(r.get_int("couple", "agents2", p.n2));
        p.m1 = r.get_double("couple", "money1", p.m1);
        p.m2 = r.get_double("couple", "money2", p.m2);
        p.steps = r.get_int("couple", "steps", p.steps);
        p.sample_every = r.get_int("couple", "sample_every", p.sample_every);
        if (p.n1 < 2) r.complain("couple", "agents1", "need at least 2");
        if (p.n2 < 2) r.complain("couple", "agents2", "need at least 2");
        if (p.m1 <= 0) r.complain("couple", "money1", "must be positive");
        if (p.m2 <= 0) r.complain("couple", "money2", "must be positive");
        if (p.steps < 1) r.complain("couple", "steps", "must be positive");
        if (p.sample_every < 1)
            r.complain("couple", "sample_every", "must be positive");
        cfg.params = std::move(p);
    } else if (kind == "maxent") {
        cfg.kind = ScenarioKind::maxent;
        MaxEntScenario p;
        p.support = r.get_string("maxent", "support", p.support);
        p.powers = r.get_vector("maxent", "powers", p.powers);
        p.targets = r.get_vector("maxent", "targets", p.targets);
        p.order = static_cast<int>(r.get_int("maxent", "order", p.order));
        p.scale = r.get_double("maxent", "scale", p.scale);
        if (p.support != "half_line" && p.support != "real_line")
            r.complain("maxent", "support",
                       "unknown support '" + p.support +
                           "' (half_line or real_line)");
        if (p.powers.empty())
            r.complain("maxent", "powers", "need at least one constraint");
        if (p.powers.size() != p.targets.size())
            r.complain("maxent", "targets",
                       "need one target per constraint power");
        if (p.support == "real_line") {
            for (double pw : p.powers) {
                if (pw != std::floor(pw) || pw < 1) {
                    r.complain("maxent", "powers",
                               "whole-line constraints need positive integer "
                               "powers");
                    break;
                }
            }
        }
        if (p.order < 2 || p.order > 256)
            r.complain("maxent", "order", "order must lie in [2, 256]");
        cfg.params = std::move(p);
    } else if (kind == "fisher-check") {
        cfg.kind = ScenarioKind::fisher_check;
        FisherCheckScenario p;
        p.density = r.get_string("fisher-check", "density", p.density);
        p.theta = r.get_vector("fisher-check", "theta", p.theta);
        p.order = static_cast<int>(r.get_int("fisher-check", "order", p.order));
        p.map = r.get_string("fisher-check", "map", p.map);
        p.map_a = r.get_double("fisher-check", "map_a", p.map_a);
        p.map_b = r.get_double("fisher-check", "map_b", p.map_b);
        p.chart_map = r.get_string("fisher-check", "chart_map", p.chart_map);
        p.tol = r.get_double("fisher-check", "tol", p.tol);
        std::size_t want = 0;
        if (p.density == "gaussian") {
            want = 2;
        } else if (p.density == "exponential") {
            want = 1;
        } else if (p.density == "gaussian2d_shared_sigma") {
            want = 3;
        } else {
            r.complain("fisher-check", "density",
                       "unknown density '" + p.density + "'");
        }
        if (want > 0 && p.theta.size() != want)
            r.complain("fisher-check", "theta",
                       "density '" + p.density + "' takes " +
                           std::to_string(want) + " parameters");
        if (want > 0 && !p.theta.empty() && p.theta.back() <= 0 &&
            p.theta.size() == want)
            r.complain("fisher-check", "theta",
                       "the scale parameter must be positive");
        if (p.order < 2 || p.order > 256)
            r.complain("fisher-check", "order", "order must lie in [2, 256]");
        if (p.map != "identity" && p.map != "affine" && p.map != "cube" &&
            p.map != "none")
            r.complain("fisher-check", "map",
                       "unknown map '" + p.map +
                           "' (identity, affine, cube, none)");
        if (p.map == "affine" && p.map_a == 0)
            r.complain("fisher-check", "map_a", "affine slope must be nonzero");
        if (p.density == "gaussian2d_shared_sigma" && p.map != "none")
            r.complain("fisher-check", "map",
                       "micro maps only apply to one-dimensional densities");
        if (p.chart_map != "identity" && p.chart_map != "log_scale" &&
            p.chart_map != "none")
            r.complain("fisher-check", "chart_map",
                       "unknown chart map '" + p.chart_map +
                           "' (identity, log_scale, none)");
        if (p.tol <= 0) r.complain("fisher-check", "tol", "must be positive");
        cfg.params = std::move(p);
    } else if (!kind.empty()) {
        issues.push_back({0, 0, "unknown scenario kind '" + kind + "'", false});
    }

    r.finish();
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace statgeo::scenario
