// SPDX-License-Identifier: Apache-2.0
//
// risfocus: near-field beamfocusing simulator for b-bit reconfigurable intelligent surfaces
// Copyright (C) 2026 The risfocus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risfocus/experiment.hpp"

#include "parallel.hpp"
#include "risfocus/closedform.hpp"
#include "risfocus/gain.hpp"
#include "risfocus/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace risfocus
{

namespace
{
constexpr double deg = std::numbers::pi / 180.0;

std::vector<double> linspace(double start, double stop, std::size_t points)
{
    std::vector<double> out(points);
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = start + step * static_cast<double>(i);
    out.back() = stop;
    return out;
}

std::vector<double> normalized(const std::vector<double> &v)
{
    const double peak = *std::max_element(v.begin(), v.end());
    std::vector<double> out(v);
    if (peak > 0.0)
        for (auto &x : out)
            x /= peak;
    return out;
}

double azimuth_rad(double degrees)
{
    return std::clamp(degrees * deg, -std::numbers::pi, std::numbers::pi);
}

double to_db(double linear)
{
    return 10.0 * std::log10(std::max(linear, 1e-30));
}

// Assembles records from named columns, appending normalized and dB columns.
class TableBuilder
{
  public:
    TableBuilder(SweepKind kind, std::size_t rows) : rows_(rows) { table_.kind = kind; }

    void add(std::string name, std::vector<double> values)
    {
        names_.push_back(std::move(name));
        data_.push_back(std::move(values));
    }

    void add_normalized(const std::string &source)
    {
        const auto it = std::find(names_.begin(), names_.end(), source);
        add("normalized_" + source, normalized(data_[static_cast<std::size_t>(it - names_.begin())]));
    }

    void add_db_of_normalized()
    {
        const std::size_t n = names_.size();
        for (std::size_t c = 0; c < n; ++c)
        {
            if (names_[c].rfind("normalized_", 0) != 0)
                continue;
            std::vector<double> db(rows_);
            for (std::size_t r = 0; r < rows_; ++r)
                db[r] = to_db(data_[c][r]);
            add(names_[c] + "_db", std::move(db));
        }
    }

    SweepTable finish()
    {
        table_.columns = names_;
        table_.records.assign(rows_, std::vector<double>(names_.size()));
        for (std::size_t c = 0; c < names_.size(); ++c)
            for (std::size_t r = 0; r < rows_; ++r)
                table_.records[r][c] = data_[c][r];
        return std::move(table_);
    }

  private:
    std::size_t rows_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> data_;
    SweepTable table_;
};

void require(bool ok, const std::string &message)
{
    if (!ok)
        throw ConfigError(message);
}

void require_kind(const ExperimentConfig &cfg, SweepKind kind)
{
    require(cfg.sweep.kind == kind, "sweep kind '" + std::string(to_string(cfg.sweep.kind)) +
                                        "' does not match the requested '" + std::string(to_string(kind)) +
                                        "' run");
}

void check_placement(const Placement &p, const std::string &prefix)
{
    try
    {
        (void)p.point();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(prefix + ": " + e.what());
    }
}

std::map<std::string, std::string, std::less<>> make_descriptions()
{
    return {
        {"setup1a", "depth sweep, tx (-25 deg, 0 deg, 1 m), rx (7 deg, 0 deg, 0.6 m), F in [0.2, 3.0] m"},
        {"setup1b", "depth sweep, tx (-25 deg, 0 deg, 1 m), rx (7 deg, 0 deg, 1.2 m), F in [0.2, 3.0] m"},
        {"setup2", "azimuth sweep, tx (-17 deg, 0 deg, 1 m), rx (0 deg, 0 deg, 0.8 m), focal azimuth in [-20, 20] deg"},
    };
}
} // namespace

std::string_view to_string(SweepKind kind) noexcept
{
    switch (kind)
    {
    case SweepKind::depth:
        return "depth";
    case SweepKind::azimuth:
        return "azimuth";
    case SweepKind::grid2d:
        return "grid2d";
    case SweepKind::mc_validate:
        return "mc-validate";
    }
    return "unknown";
}

std::string_view to_string(DistanceModel model) noexcept
{
    return model == DistanceModel::exact ? "exact" : "taylor";
}

SweepSpec default_sweep(SweepKind kind) noexcept
{
    switch (kind)
    {
    case SweepKind::depth:
        return {SweepKind::depth, 0.2, 3.0, 281, 0.0, 0.0, 0};
    case SweepKind::azimuth:
        return {SweepKind::azimuth, -20.0, 20.0, 401, 0.0, 0.0, 0};
    case SweepKind::grid2d:
        return {SweepKind::grid2d, 0.3, 1.8, 61, -10.0, 10.0, 41};
    case SweepKind::mc_validate:
        return {SweepKind::mc_validate, -2.0, 1.5, 20, 0.0, 0.0, 0};
    }
    return {};
}

void set_sweep_kind(ExperimentConfig &cfg, SweepKind kind)
{
    if (cfg.sweep.kind == kind)
        return;
    cfg.sweep = default_sweep(kind);
    // avg_gain_depth assumes Taylor distances.
    if (kind == SweepKind::mc_validate)
        cfg.distance_model = DistanceModel::taylor;
}

void validate(const ExperimentConfig &cfg)
{
    require(std::isfinite(cfg.frequency_hz) && cfg.frequency_hz > 0.0, "freq_ghz: carrier frequency must be positive");
    require(cfg.rows >= 1 && cfg.cols >= 1, "rows/cols: grid needs at least one element");
    require(cfg.rows == cfg.cols, "rows/cols: closed-form gains need a square grid");
    require(std::isfinite(cfg.spacing.value) && cfg.spacing.value > 0.0, "spacing: must be positive");
    require(cfg.bits >= 1 && cfg.bits <= 62, "bits: must lie in [1, 62]");
    check_placement(cfg.tx, "tx");
    check_placement(cfg.rx, "rx");

    const auto &s = cfg.sweep;
    require(s.points >= 2, "points: a sweep needs at least two points");
    require(std::isfinite(s.start) && std::isfinite(s.stop) && s.start < s.stop, "start/stop: need start < stop");
    switch (s.kind)
    {
    case SweepKind::depth:
        require(s.start > 0.0, "start: focal distances must be positive");
        break;
    case SweepKind::azimuth:
        require(s.start >= -180.0 && s.stop <= 180.0, "start/stop: focal azimuth must lie in [-180, 180] deg");
        break;
    case SweepKind::grid2d:
        require(s.start > 0.0, "start: focal distances must be positive");
        require(s.points2 >= 2, "points2: the azimuth axis needs at least two points");
        require(std::isfinite(s.start2) && std::isfinite(s.stop2) && s.start2 < s.stop2,
                "start2/stop2: need start2 < stop2");
        require(s.start2 >= -180.0 && s.stop2 <= 180.0, "start2/stop2: focal azimuth must lie in [-180, 180] deg");
        break;
    case SweepKind::mc_validate:
        require(s.stop < 1.0 / cfg.rx.range_m,
                "stop: depth offsets must stay below 1/rx_dist_m so the focal distance is positive");
        break;
    }
    if (cfg.with_mc || s.kind == SweepKind::mc_validate)
        require(cfg.trials >= 2, "trials: Monte Carlo needs at least two trials");
}

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names{"setup1a", "setup1b", "setup2"};
    return names;
}

std::string_view preset_description(std::string_view name)
{
    static const auto descriptions = make_descriptions();
    const auto it = descriptions.find(name);
    if (it == descriptions.end())
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    return it->second;
}

ExperimentConfig preset(std::string_view name)
{
    ExperimentConfig cfg;
    cfg.preset = std::string(name);
    if (name == "setup1a")
    {
        cfg.tx = {-25.0, 0.0, 1.0};
        cfg.rx = {7.0, 0.0, 0.6};
        cfg.sweep = default_sweep(SweepKind::depth);
    }
    else if (name == "setup1b")
    {
        cfg.tx = {-25.0, 0.0, 1.0};
        cfg.rx = {7.0, 0.0, 1.2};
        cfg.sweep = default_sweep(SweepKind::depth);
    }
    else if (name == "setup2")
    {
        cfg.tx = {-17.0, 0.0, 1.0};
        cfg.rx = {0.0, 0.0, 0.8};
        cfg.sweep = default_sweep(SweepKind::azimuth);
    }
    else
    {
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }
    return cfg;
}

std::size_t SweepTable::column_index(std::string_view name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw std::out_of_range("no column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> SweepTable::column(std::string_view name) const
{
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto &r : records)
        out.push_back(r[c]);
    return out;
}

SweepTable run_depth_sweep(const ExperimentConfig &cfg)
{
    validate(cfg);
    require_kind(cfg, SweepKind::depth);

    const auto carrier = cfg.carrier();
    const auto grid = cfg.grid();
    const auto q = cfg.quantizer();
    const auto tx = cfg.tx.point();
    const auto rx = cfg.rx.point();
    const double d_f = fraunhofer_distance(grid, carrier);
    const auto axis = linspace(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.points);

    std::vector<double> closed(axis.size());
    std::vector<double> simulated(axis.size());
    detail::parallel_for(axis.size(), [&](std::size_t i) {
        const auto focal = rx.with_range(axis[i]);
        closed[i] = avg_gain_depth(grid.size(), q, d_f, depth_offset(axis[i], rx.range()));
        simulated[i] = quantized_los_gain({grid, carrier, tx, focal, rx, cfg.distance_model}, q);
    });

    TableBuilder table(SweepKind::depth, axis.size());
    table.add("focal_distance_m", axis);
    table.add("closed_form", closed);
    table.add("quantized_los", simulated);
    if (cfg.with_mc)
    {
        std::vector<double> mean(axis.size());
        std::vector<double> se(axis.size());
        for (std::size_t i = 0; i < axis.size(); ++i)
        {
            const auto r = mc_mean_gain({grid, carrier, rx.with_range(axis[i]), rx, cfg.distance_model}, q,
                                        cfg.trials, cfg.seed + i);
            mean[i] = r.mean;
            se[i] = r.std_error;
        }
        table.add("mc_mean", std::move(mean));
        table.add("mc_std_error", std::move(se));
    }
    table.add_normalized("closed_form");
    table.add_normalized("quantized_los");
    if (cfg.db)
        table.add_db_of_normalized();
    return table.finish();
}

SweepTable run_angle_sweep(const ExperimentConfig &cfg)
{
    validate(cfg);
    require_kind(cfg, SweepKind::azimuth);

    const auto carrier = cfg.carrier();
    const auto grid = cfg.grid();
    const auto q = cfg.quantizer();
    const auto tx = cfg.tx.point();
    const auto rx = cfg.rx.point();
    const auto axis = linspace(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.points);

    std::vector<double> closed(axis.size());
    std::vector<double> simulated(axis.size());
    detail::parallel_for(axis.size(), [&](std::size_t i) {
        const auto focal = rx.with_azimuth(azimuth_rad(axis[i]));
        closed[i] = avg_gain_angle(grid.size(), q, grid.spacing(), carrier, angle_offsets(rx, focal));
        simulated[i] = quantized_los_gain({grid, carrier, tx, focal, rx, cfg.distance_model}, q);
    });

    TableBuilder table(SweepKind::azimuth, axis.size());
    table.add("focal_azimuth_deg", axis);
    table.add("closed_form", closed);
    table.add("quantized_los", simulated);
    if (cfg.with_mc)
    {
        std::vector<double> mean(axis.size());
        std::vector<double> se(axis.size());
        for (std::size_t i = 0; i < axis.size(); ++i)
        {
            const auto r = mc_mean_gain({grid, carrier, rx.with_azimuth(azimuth_rad(axis[i])), rx, cfg.distance_model}, q,
                                        cfg.trials, cfg.seed + i);
            mean[i] = r.mean;
            se[i] = r.std_error;
        }
        table.add("mc_mean", std::move(mean));
        table.add("mc_std_error", std::move(se));
    }
    table.add_normalized("closed_form");
    table.add_normalized("quantized_los");
    if (cfg.db)
        table.add_db_of_normalized();
    return table.finish();
}

SweepTable run_grid_sweep(const ExperimentConfig &cfg)
{
    validate(cfg);
    require_kind(cfg, SweepKind::grid2d);

    const auto carrier = cfg.carrier();
    const auto grid = cfg.grid();
    const auto q = cfg.quantizer();
    const auto tx = cfg.tx.point();
    const auto rx = cfg.rx.point();
    const double d_f = fraunhofer_distance(grid, carrier);
    const auto distances = linspace(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.points);
    const auto azimuths = linspace(cfg.sweep.start2, cfg.sweep.stop2, cfg.sweep.points2);
    const std::size_t cells = distances.size() * azimuths.size();

    std::vector<double> f_col(cells), az_col(cells), depth_col(cells), angle_col(cells), simulated(cells);
    detail::parallel_for(cells, [&](std::size_t k) {
        const std::size_t i = k / azimuths.size();
        const std::size_t j = k % azimuths.size();
        const SphericalPoint focal(azimuth_rad(azimuths[j]), rx.elevation(), distances[i]);
        f_col[k] = distances[i];
        az_col[k] = azimuths[j];
        depth_col[k] = avg_gain_depth(grid.size(), q, d_f, depth_offset(distances[i], rx.range()));
        angle_col[k] = avg_gain_angle(grid.size(), q, grid.spacing(), carrier, angle_offsets(rx, focal));
        simulated[k] = quantized_los_gain({grid, carrier, tx, focal, rx, cfg.distance_model}, q);
    });

    TableBuilder table(SweepKind::grid2d, cells);
    table.add("focal_distance_m", std::move(f_col));
    table.add("focal_azimuth_deg", std::move(az_col));
    table.add("closed_form_depth", std::move(depth_col));
    table.add("closed_form_angle", std::move(angle_col));
    table.add("quantized_los", std::move(simulated));
    table.add_normalized("closed_form_depth");
    table.add_normalized("closed_form_angle");
    table.add_normalized("quantized_los");
    if (cfg.db)
        table.add_db_of_normalized();
    return table.finish();
}

SweepTable run_mc_validation(const ExperimentConfig &cfg)
{
    validate(cfg);
    require_kind(cfg, SweepKind::mc_validate);

    const auto carrier = cfg.carrier();
    const auto grid = cfg.grid();
    const auto q = cfg.quantizer();
    const auto rx = cfg.rx.point();
    const double d_f = fraunhofer_distance(grid, carrier);
    const auto deltas = linspace(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.points);

    std::vector<double> focal_distance(deltas.size()), closed(deltas.size()), mean(deltas.size()),
        se(deltas.size()), pass(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i)
    {
        focal_distance[i] = 1.0 / (1.0 / rx.range() - deltas[i]);
        const auto focal = rx.with_range(focal_distance[i]);
        closed[i] = avg_gain_depth(grid.size(), q, d_f, depth_offset(focal_distance[i], rx.range()));
        const auto r = mc_mean_gain({grid, carrier, focal, rx, cfg.distance_model}, q, cfg.trials, cfg.seed + i);
        mean[i] = r.mean;
        se[i] = r.std_error;
        pass[i] = std::abs(r.mean - closed[i]) <= 3.0 * r.std_error ? 1.0 : 0.0;
    }

    TableBuilder table(SweepKind::mc_validate, deltas.size());
    table.add("depth_offset_per_m", deltas);
    table.add("focal_distance_m", std::move(focal_distance));
    table.add("closed_form", std::move(closed));
    table.add("mc_mean", std::move(mean));
    table.add("mc_std_error", std::move(se));
    table.add("mc_pass", std::move(pass));
    return table.finish();
}

SweepTable run_sweep(const ExperimentConfig &cfg)
{
    switch (cfg.sweep.kind)
    {
    case SweepKind::depth:
        return run_depth_sweep(cfg);
    case SweepKind::azimuth:
        return run_angle_sweep(cfg);
    case SweepKind::grid2d:
        return run_grid_sweep(cfg);
    case SweepKind::mc_validate:
        return run_mc_validation(cfg);
    }
    throw ConfigError("unknown sweep kind");
}

std::size_t failing_points(const SweepTable &table)
{
    const std::size_t c = table.column_index("mc_pass");
    return static_cast<std::size_t>(
        std::count_if(table.records.begin(), table.records.end(), [c](const auto &r) { return r[c] == 0.0; }));
}

} // namespace risfocus
