// SPDX-License-Identifier: Apache-2.0
//
// ris-ntn-sim: RIS-assisted non-terrestrial downlink simulator
// Copyright (C) 2026 The ris-ntn-sim authors
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

#include "risntn/sim_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace risntn
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto not_space = [](char c)
            { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
            while (!s.empty() && !not_space(s.front()))
                s.remove_prefix(1);
            while (!s.empty() && !not_space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        std::vector<std::string_view> split_list(std::string_view text)
        {
            std::vector<std::string_view> items;
            while (true)
            {
                const auto comma = text.find(',');
                items.push_back(trim(text.substr(0, comma)));
                if (comma == std::string_view::npos)
                    break;
                text.remove_prefix(comma + 1);
            }
            return items;
        }

        [[noreturn]] void type_error(const std::string &key, std::string_view value, const char *expected)
        {
            throw ConfigError(ErrorKind::TypeError, key,
                              "key '" + key + "': expected " + expected + ", got '" + std::string(value) + "'");
        }

        [[noreturn]] void constraint_error(const std::string &key, const std::string &reason)
        {
            throw ConfigError(ErrorKind::ConstraintError, key, "key '" + key + "': " + reason);
        }

        double parse_double(const std::string &key, std::string_view v)
        {
            double out = 0.0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
                type_error(key, v, "a real number");
            return out;
        }

        std::uint64_t parse_uint(const std::string &key, std::string_view v)
        {
            std::uint64_t out = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
                type_error(key, v, "a non-negative integer");
            return out;
        }

        using Setter = std::function<void(SimConfig &, const std::string &, std::string_view)>;

        Setter real(double SimConfig::*field)
        {
            return [field](SimConfig &c, const std::string &k, std::string_view v)
            { c.*field = parse_double(k, v); };
        }

        Setter gain(double AntennaGains::*field)
        {
            return [field](SimConfig &c, const std::string &k, std::string_view v)
            { c.gains.*field = parse_double(k, v); };
        }

        const std::map<std::string, Setter, std::less<>> &setters()
        {
            static const std::map<std::string, Setter, std::less<>> table = {
                {"carrier_hz", real(&SimConfig::carrier_hz)},
                {"tx_power_dbm", real(&SimConfig::tx_power_dbm)},
                {"bandwidth_hz", real(&SimConfig::bandwidth_hz)},
                {"noise_psd_dbm_hz", real(&SimConfig::noise_psd_dbm_hz)},
                {"static_power_w", real(&SimConfig::static_power_w)},
                {"leo_altitude_m", real(&SimConfig::leo_altitude_m)},
                {"haps_altitude_m", real(&SimConfig::haps_altitude_m)},
                {"tx_gain_dbi", gain(&AntennaGains::tx_dbi)},
                {"ris_element_gain_dbi", gain(&AntennaGains::ris_element_dbi)},
                {"rx_gain_dbi", gain(&AntennaGains::rx_dbi)},
                {"k_factor_db",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 { c.fading.k_factor_db = parse_double(k, v); }},
                {"trials",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 { c.trials = parse_uint(k, v); }},
                {"seed",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 { c.seed = parse_uint(k, v); }},
                {"elements_sweep",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 {
                     c.elements_sweep.clear();
                     for (auto item : split_list(v))
                         c.elements_sweep.push_back(static_cast<std::size_t>(parse_uint(k, item)));
                 }},
                {"architectures",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 {
                     try
                     {
                         c.architectures = parse_architecture_list(v);
                     }
                     catch (const Error &e)
                     {
                         throw ConfigError(ErrorKind::TypeError, k, "key '" + k + "': " + e.what());
                     }
                 }},
                {"fading",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 {
                     if (v == "rician")
                         c.fading.model = FadingSpec::Model::Rician;
                     else if (v == "pure_los")
                         c.fading.model = FadingSpec::Model::PureLos;
                     else
                         type_error(k, v, "rician or pure_los");
                 }},
                {"los_phase",
                 [](SimConfig &c, const std::string &k, std::string_view v)
                 {
                     if (v == "iid_uniform")
                         c.fading.los_phase = FadingSpec::LosPhase::IidUniform;
                     else if (v == "common_los")
                         c.fading.los_phase = FadingSpec::LosPhase::CommonLos;
                     else
                         type_error(k, v, "iid_uniform or common_los");
                 }},
            };
            return table;
        }
    }

    std::string format_double(double value)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
        return std::string(buf, ptr);
    }

    std::vector<Architecture> parse_architecture_list(std::string_view text)
    {
        std::vector<Architecture> out;
        for (auto item : split_list(text))
            out.push_back(Architecture::parse(item));
        return out;
    }

    std::string format_architecture_list(const std::vector<Architecture> &archs)
    {
        std::string out;
        for (std::size_t i = 0; i < archs.size(); ++i)
            out += (i ? "," : "") + archs[i].label();
        return out;
    }

    LinkGeometry SimConfig::geometry() const
    {
        return build_geometry(leo_altitude_m, haps_altitude_m, carrier_hz, gains);
    }

    void SimConfig::check() const
    {
        const std::pair<const char *, double> finite_fields[] = {
            {"carrier_hz", carrier_hz},
            {"tx_power_dbm", tx_power_dbm},
            {"bandwidth_hz", bandwidth_hz},
            {"noise_psd_dbm_hz", noise_psd_dbm_hz},
            {"static_power_w", static_power_w},
            {"leo_altitude_m", leo_altitude_m},
            {"haps_altitude_m", haps_altitude_m},
            {"k_factor_db", fading.k_factor_db},
            {"tx_gain_dbi", gains.tx_dbi},
            {"ris_element_gain_dbi", gains.ris_element_dbi},
            {"rx_gain_dbi", gains.rx_dbi},
        };
        for (const auto &[key, value] : finite_fields)
            if (!std::isfinite(value))
                constraint_error(key, "must be finite");

        if (!(carrier_hz > 0.0))
            constraint_error("carrier_hz", "must be positive");
        if (!(bandwidth_hz > 0.0))
            constraint_error("bandwidth_hz", "must be positive");
        if (static_power_w < 0.0)
            constraint_error("static_power_w", "must be non-negative");
        if (!(haps_altitude_m > 0.0))
            constraint_error("haps_altitude_m", "must be positive");
        if (!(leo_altitude_m > haps_altitude_m))
            constraint_error("leo_altitude_m", "must exceed haps_altitude_m");
        if (trials < 1 || trials > max_trials)
            constraint_error("trials", "must lie in [1, 2^31]");
        if (elements_sweep.empty())
            constraint_error("elements_sweep", "must list at least one element count");
        for (auto m : elements_sweep)
            if (m < 1 || m > max_sweep_elements)
                constraint_error("elements_sweep", "element counts must lie in [1, 65536]");
        if (std::set(elements_sweep.begin(), elements_sweep.end()).size() != elements_sweep.size())
            constraint_error("elements_sweep", "element counts must be distinct");
        if (architectures.empty())
            constraint_error("architectures", "must list at least one architecture");
        for (std::size_t i = 0; i < architectures.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (architectures[i] == architectures[j])
                    constraint_error("architectures", "duplicate entry " + architectures[i].label());
    }

    SimConfig parse_config(std::string_view text)
    {
        SimConfig cfg;
        std::set<std::string, std::less<>> seen;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(ErrorKind::TypeError, std::string(line),
                                  "line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                                      std::string(line) + "'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));

            const auto it = setters().find(key);
            if (it == setters().end())
                throw ConfigError(ErrorKind::UnknownKey, key, "unknown key '" + key + "'");
            if (!seen.insert(key).second)
                constraint_error(key, "given more than once");
            it->second(cfg, key, value);
        }
        cfg.check();
        return cfg;
    }

    SimConfig load_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::IoError, "cannot read config file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str());
    }

    std::string to_config_text(const SimConfig &c)
    {
        std::ostringstream os;
        os << "carrier_hz = " << format_double(c.carrier_hz) << '\n'
           << "tx_power_dbm = " << format_double(c.tx_power_dbm) << '\n'
           << "bandwidth_hz = " << format_double(c.bandwidth_hz) << '\n'
           << "noise_psd_dbm_hz = " << format_double(c.noise_psd_dbm_hz) << '\n'
           << "static_power_w = " << format_double(c.static_power_w) << '\n'
           << "leo_altitude_m = " << format_double(c.leo_altitude_m) << '\n'
           << "haps_altitude_m = " << format_double(c.haps_altitude_m) << '\n';
        os << "elements_sweep = ";
        for (std::size_t i = 0; i < c.elements_sweep.size(); ++i)
            os << (i ? "," : "") << c.elements_sweep[i];
        os << '\n'
           << "architectures = " << format_architecture_list(c.architectures) << '\n'
           << "fading = " << (c.fading.model == FadingSpec::Model::Rician ? "rician" : "pure_los") << '\n'
           << "k_factor_db = " << format_double(c.fading.k_factor_db) << '\n'
           << "los_phase = "
           << (c.fading.los_phase == FadingSpec::LosPhase::IidUniform ? "iid_uniform" : "common_los") << '\n'
           << "trials = " << c.trials << '\n'
           << "seed = " << c.seed << '\n'
           << "tx_gain_dbi = " << format_double(c.gains.tx_dbi) << '\n'
           << "ris_element_gain_dbi = " << format_double(c.gains.ris_element_dbi) << '\n'
           << "rx_gain_dbi = " << format_double(c.gains.rx_dbi) << '\n';
        return os.str();
    }
}
