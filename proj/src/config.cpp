#include "tensileg/config.hpp"

#include "tensileg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

namespace tensileg {

namespace {

using TomlValue = std::variant<double, bool, std::string, std::vector<double>>;

struct Entry {
    TomlValue value;
    int line = 0;
};

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

bool valid_key(std::string_view key) {
    if (key.empty()) {
        return false;
    }
    return std::all_of(key.begin(), key.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

double parse_number(const std::string& text, int line) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" +
                          text + "'");
    }
    return value;
}

TomlValue parse_value(const std::string& text, int line) {
    if (text.empty()) {
        throw ConfigError("line " + std::to_string(line) + ": missing value");
    }
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') {
            throw ConfigError("line " + std::to_string(line) + ": unterminated string");
        }
        return text.substr(1, text.size() - 2);
    }
    if (text.front() == '[') {
        if (text.back() != ']') {
            throw ConfigError("line " + std::to_string(line) + ": unterminated array");
        }
        std::vector<double> values;
        const std::string inner = trim(std::string_view(text).substr(1, text.size() - 2));
        if (!inner.empty()) {
            std::size_t start = 0;
            while (true) {
                const auto comma = inner.find(',', start);
                const std::string cell = trim(comma == std::string::npos
                                                  ? std::string_view(inner).substr(start)
                                                  : std::string_view(inner).substr(
                                                        start, comma - start));
                values.push_back(parse_number(cell, line));
                if (comma == std::string::npos) {
                    break;
                }
                start = comma + 1;
            }
        }
        return values;
    }
    return parse_number(text, line);
}

std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
            in_string = !in_string;
        } else if (line[i] == '#' && !in_string) {
            return line.substr(0, i);
        }
    }
    return line;
}

/// Flat dotted-key view of the parsed file plus consumption tracking, so
/// anything left unconsumed is reported as an unknown key with its line.
class ParsedFile {
public:
    static ParsedFile from_text(const std::string& text) {
        ParsedFile file;
        std::istringstream in(text);
        std::string raw;
        int line_number = 0;
        std::string prefix;
        while (std::getline(in, raw)) {
            ++line_number;
            const std::string line = trim(strip_comment(raw));
            if (line.empty()) {
                continue;
            }
            if (line.front() == '[') {
                if (line.back() != ']') {
                    throw ConfigError("line " + std::to_string(line_number) +
                                      ": unterminated table header");
                }
                prefix = trim(std::string_view(line).substr(1, line.size() - 2));
                if (!valid_key(prefix)) {
                    throw ConfigError("line " + std::to_string(line_number) +
                                      ": invalid table name '" + prefix + "'");
                }
                continue;
            }
            const auto equals = line.find('=');
            if (equals == std::string::npos) {
                throw ConfigError("line " + std::to_string(line_number) +
                                  ": expected 'key = value'");
            }
            const std::string key = trim(std::string_view(line).substr(0, equals));
            if (!valid_key(key)) {
                throw ConfigError("line " + std::to_string(line_number) + ": invalid key '" +
                                  key + "'");
            }
            const std::string dotted = prefix.empty() ? key : prefix + "." + key;
            if (file.entries_.count(dotted) != 0) {
                throw ConfigError("line " + std::to_string(line_number) + ": duplicate key '" +
                                  dotted + "'");
            }
            file.entries_[dotted] =
                Entry{parse_value(trim(std::string_view(line).substr(equals + 1)), line_number),
                      line_number};
        }
        return file;
    }

    template <typename T>
    std::optional<T> take(const std::string& key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        const Entry entry = it->second;
        entries_.erase(it);
        if (const T* value = std::get_if<T>(&entry.value)) {
            return *value;
        }
        throw ConfigError("line " + std::to_string(entry.line) + ": key '" + key +
                          "' has the wrong type");
    }

    std::optional<double> take_number(const std::string& key) { return take<double>(key); }

    std::optional<int> take_int(const std::string& key) {
        const auto value = take<double>(key);
        if (!value) {
            return std::nullopt;
        }
        if (*value != std::floor(*value)) {
            throw ConfigError("key '" + key + "' must be an integer");
        }
        return static_cast<int>(*value);
    }

    /// Keys still present that start with the given dotted prefix.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const {
        std::vector<std::string> keys;
        for (const auto& [key, entry] : entries_) {
            if (key.rfind(prefix, 0) == 0) {
                keys.push_back(key);
            }
        }
        return keys;
    }

    void reject_leftovers() const {
        if (entries_.empty()) {
            return;
        }
        const auto& [key, entry] = *entries_.begin();
        throw ConfigError("line " + std::to_string(entry.line) + ": unknown key '" + key +
                          "'");
    }

private:
    std::map<std::string, Entry> entries_;
};

double length_scale(UnitSystem units) {
    return units == UnitSystem::Millimeters ? 1e-3 : 1.0;
}

void take_length(ParsedFile& file, const std::string& key, UnitSystem units, double& target) {
    if (const auto value = file.take_number(key)) {
        target = *value * length_scale(units);
    }
}

void take_scalar(ParsedFile& file, const std::string& key, double& target) {
    if (const auto value = file.take_number(key)) {
        target = *value;
    }
}

void take_count(ParsedFile& file, const std::string& key, int& target) {
    if (const auto value = file.take_int(key)) {
        target = *value;
    }
}

void take_array(ParsedFile& file, const std::string& key, std::vector<double>& target,
                double scale = 1.0) {
    if (auto value = file.take<std::vector<double>>(key)) {
        target = std::move(*value);
        for (double& v : target) {
            v *= scale;
        }
    }
}

} // namespace

LeadScrewSpec ToolConfig::make_leadscrew_spec() const {
    LeadScrewSpec spec;
    spec.mean_diameter = leadscrew.mean_diameter;
    spec.lead = leadscrew.lead;
    spec.friction = leadscrew.friction;
    spec.axial_force = leadscrew.axial_force_n;
    spec.motor_torque_available = leadscrew.motor_torque_nm;
    return spec;
}

ToolConfig ToolConfig::parse(const std::string& text, UnitSystem units,
                             const std::filesystem::path& base_dir) {
    ParsedFile file = ParsedFile::from_text(text);
    ToolConfig config;
    const double scale = length_scale(units);

    take_length(file, "leg.pelvis_length", units, config.leg.pelvis_length);
    take_length(file, "leg.femur_length", units, config.leg.femur_length);
    take_length(file, "leg.tibia_length", units, config.leg.tibia_length);
    take_length(file, "leg.total_extended_length", units, config.leg.total_extended_length);
    if (const auto deg = file.take_number("leg.rest_flexion_hip_deg")) {
        config.leg.rest_flexion_hip = deg_to_rad(*deg);
    }
    if (const auto deg = file.take_number("leg.rest_flexion_knee_deg")) {
        config.leg.rest_flexion_knee = deg_to_rad(*deg);
    }
    take_length(file, "leg.drum_radius", units, config.leg.drum_radius);
    take_length(file, "leg.tristar_radius", units, config.leg.tristar_radius);
    take_scalar(file, "leg.lumped_mass_kg", config.leg.lumped_mass);
    take_scalar(file, "leg.damping_c", config.leg.damping_c);
    take_scalar(file, "leg.spring_stiffness", config.leg.spring_stiffness);
    take_array(file, "leg.engagement_offsets", config.leg.engagement_offsets, scale);

    take_length(file, "rotary.pulley_radius", units, config.rotary.pulley_radius);
    take_scalar(file, "rotary.spring_stiffness", config.rotary.spring_stiffness);
    take_scalar(file, "rotary.cable_stiffness", config.rotary.cable_stiffness);
    take_scalar(file, "rotary.k_l", config.rotary.k_l);
    take_scalar(file, "rotary.k_q", config.rotary.k_q);
    take_array(file, "rotary.pretension_forces_n", config.rotary.pretension_forces_n);
    take_scalar(file, "rotary.theta_max_rad", config.rotary.theta_max_rad);
    take_count(file, "rotary.theta_samples", config.rotary.theta_samples);

    take_length(file, "leadscrew.mean_diameter", units, config.leadscrew.mean_diameter);
    take_length(file, "leadscrew.lead", units, config.leadscrew.lead);
    take_scalar(file, "leadscrew.friction", config.leadscrew.friction);
    take_scalar(file, "leadscrew.axial_force_n", config.leadscrew.axial_force_n);
    if (const auto torque = file.take_number("leadscrew.motor_torque_nm")) {
        config.leadscrew.motor_torque_nm = *torque;
    }

    take_scalar(file, "size.payload_mass_kg", config.size.payload_mass_kg);
    take_scalar(file, "size.safety_factor", config.size.safety_factor);

    take_length(file, "compression.max_compression", units, config.compression.max_compression);
    take_length(file, "compression.step", units, config.compression.step);
    take_array(file, "compression.settings_mm", config.compression.settings_mm);

    take_length(file, "drop.drop_height", units, config.drop.drop_height);
    take_scalar(file, "drop.added_mass_kg", config.drop.added_mass_kg);
    take_scalar(file, "drop.integrator_dt_s", config.drop.integrator_dt_s);
    take_scalar(file, "drop.sim_duration_s", config.drop.sim_duration_s);
    take_array(file, "drop.settings_mm", config.drop.settings_mm);

    take_count(file, "analysis.sg_window", config.analysis.sg_window);
    take_count(file, "analysis.sg_poly_order", config.analysis.sg_poly_order);
    take_count(file, "analysis.butterworth_order", config.analysis.butterworth_order);
    take_scalar(file, "analysis.butterworth_cutoff_hz", config.analysis.butterworth_cutoff_hz);

    take_length(file, "characterize.arm_length", units, config.characterize.arm_length);

    // Variant tables: [characterize.variants.<name>] with fixed member keys.
    const std::string variant_prefix = "characterize.variants.";
    std::vector<std::string> names;
    for (const auto& key : file.keys_with_prefix(variant_prefix)) {
        const auto rest = key.substr(variant_prefix.size());
        const auto dot = rest.find('.');
        if (dot == std::string::npos) {
            throw ConfigError("unknown key '" + key + "'");
        }
        const std::string name = rest.substr(0, dot);
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(name);
        }
    }
    std::sort(names.begin(), names.end());
    for (const auto& name : names) {
        CharacterizeVariantConfig variant;
        variant.name = name;
        const std::string base = variant_prefix + name + ".";
        if (const auto v = file.take_number(base + "cross_section_mm2")) {
            variant.cross_section_mm2 = *v;
        }
        if (const auto v = file.take_number(base + "pretension_percent")) {
            variant.pretension_percent = *v;
        }
        const auto rotation = file.take<std::string>(base + "rotation_csv");
        const auto compression = file.take<std::string>(base + "compression_csv");
        if (!rotation || !compression) {
            throw ConfigError("variant '" + name +
                              "' needs both rotation_csv and compression_csv");
        }
        variant.rotation_csv = base_dir / *rotation;
        variant.compression_csv = base_dir / *compression;
        config.characterize.variants.push_back(std::move(variant));
    }

    file.reject_leftovers();
    return config;
}

ToolConfig ToolConfig::load(const std::filesystem::path& path, UnitSystem units) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), units, path.parent_path());
}

} // namespace tensileg
