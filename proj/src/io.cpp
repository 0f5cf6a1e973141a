#include "ehsec/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ehsec {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kMilli = 1000.0;

constexpr std::array<std::string_view, 16> kRequiredKeys = {
    "n_sensors",       "n_slots",          "n_frames",       "rate_bps_hz",
    "slot_duration_s", "comm_duration_s",  "noise_dest_mw",  "noise_eve_mw",
    "sigma_alpha",     "sigma_beta",       "proc_energy_mj", "comm_energy_mj",
    "initial_battery_mj", "harvest_rate_mw", "scheme",       "master_seed"};

constexpr std::array<std::string_view, 4> kOptionalKeys = {
    "fixed_power_mw", "fixed_slots", "slot_harvest_mj", "link_model"};

// Locates the first occurrence of "key" in the source text.
int line_of(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

class Reader {
 public:
  Reader(const json& doc, std::string_view text) : doc_(doc), text_(text) {}

  [[noreturn]] void fail(std::string_view key, const std::string& message) const {
    const int line = line_of(text_, key);
    std::string what = std::string(key) + ": " + message;
    if (line > 0) what += " (line " + std::to_string(line) + ")";
    throw ConfigError(std::string(key), line, what);
  }

  const json& at(std::string_view key) const {
    return doc_.at(std::string(key));
  }
  bool has(std::string_view key) const {
    return doc_.contains(std::string(key));
  }

  int integer(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    const auto n = v.get<long long>();
    if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
      fail(key, "integer out of range");
    }
    return static_cast<int>(n);
  }

  double number(std::string_view key) const { return as_number(key, at(key)); }

  double as_number(std::string_view key, const json& v) const {
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
  }

  std::vector<double> numbers(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const json& item : v) out.push_back(as_number(key, item));
    return out;
  }

  std::string string(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

 private:
  const json& doc_;
  std::string_view text_;
};

std::vector<double> scaled(std::vector<double> values, double divisor) {
  for (double& v : values) v /= divisor;
  return values;
}

std::vector<double> scaled_up(std::vector<double> values, double factor) {
  for (double& v : values) v *= factor;
  return values;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  return out;
}

}  // namespace

NetworkConfig parse_config(std::string_view text) {
  json doc;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError("", 0, std::string("malformed JSON: ") + e.what());
    }
  }
  if (!doc.is_object()) {
    throw ConfigError("", 0, "config must be a JSON object");
  }
  Reader in(doc, text);

  for (const auto& [key, value] : doc.items()) {
    const auto known = [&](auto& list) {
      return std::find(list.begin(), list.end(), key) != list.end();
    };
    if (!known(kRequiredKeys) && !known(kOptionalKeys)) {
      in.fail(key, "unknown key");
    }
  }
  for (std::string_view key : kRequiredKeys) {
    if (!in.has(key)) {
      throw ConfigError(std::string(key), 0,
                        std::string(key) + ": missing required key");
    }
  }

  NetworkConfig config;
  config.n_sensors = in.integer("n_sensors");
  config.n_slots = in.integer("n_slots");
  config.n_frames = in.integer("n_frames");
  config.rate_bps_hz = in.number("rate_bps_hz");
  config.slot_duration_s = in.number("slot_duration_s");
  config.comm_duration_s = in.number("comm_duration_s");
  config.noise_dest_w = in.number("noise_dest_mw") / kMilli;
  config.noise_eve_w = in.number("noise_eve_mw") / kMilli;
  config.sigma_alpha = in.number("sigma_alpha");
  config.sigma_beta = in.number("sigma_beta");
  config.proc_energy_j = in.number("proc_energy_mj") / kMilli;
  config.initial_battery_j = in.number("initial_battery_mj") / kMilli;
  config.harvest_rate_w = in.number("harvest_rate_mw") / kMilli;

  if (in.at("comm_energy_mj").is_array()) {
    config.comm_energy_j = scaled(in.numbers("comm_energy_mj"), kMilli);
  } else {
    config.comm_energy_j.assign(
        static_cast<std::size_t>(std::max(config.n_sensors, 0)),
        in.number("comm_energy_mj") / kMilli);
  }

  const std::string scheme = in.string("scheme");
  if (auto s = parse_scheme(scheme)) {
    config.scheme = *s;
  } else {
    in.fail("scheme", "unknown scheme '" + scheme +
                          "' (expected proposed, fpas, fpfs or apfs)");
  }

  const json& seed = in.at("master_seed");
  if (!seed.is_number_unsigned()) {
    in.fail("master_seed", "expected a non-negative integer");
  }
  config.master_seed = seed.get<std::uint64_t>();

  config.fixed_power_w.reset();
  if (in.has("fixed_power_mw")) {
    config.fixed_power_w = in.number("fixed_power_mw") / kMilli;
  }
  config.fixed_slots.reset();
  if (in.has("fixed_slots")) {
    const json& v = in.at("fixed_slots");
    if (!v.is_array()) in.fail("fixed_slots", "expected an array of slot lists");
    std::vector<std::vector<int>> map;
    std::set<long long> seen;
    for (const json& list : v) {
      if (!list.is_array()) {
        in.fail("fixed_slots", "expected an array of slot lists");
      }
      std::vector<int> slots;
      for (const json& slot : list) {
        if (!slot.is_number_integer()) {
          in.fail("fixed_slots", "slot numbers must be integers");
        }
        const auto j = slot.get<long long>();
        if (j < 1 || j > config.n_slots) {
          in.fail("fixed_slots", "slot " + std::to_string(j) +
                                     " is outside 1.." +
                                     std::to_string(config.n_slots));
        }
        if (!seen.insert(j).second) {
          in.fail("fixed_slots", "slot " + std::to_string(j) +
                                     " is assigned to more than one sensor");
        }
        slots.push_back(static_cast<int>(j - 1));
      }
      map.push_back(std::move(slots));
    }
    config.fixed_slots = std::move(map);
  }
  if (in.has("slot_harvest_mj")) {
    config.slot_harvest_j = scaled(in.numbers("slot_harvest_mj"), kMilli);
  }
  if (in.has("link_model")) {
    const std::string model = in.string("link_model");
    if (auto m = parse_link_model(model)) {
      config.link_model = *m;
    } else {
      in.fail("link_model", "unknown link model '" + model +
                                "' (expected wiretap or outage_only)");
    }
  }

  try {
    validate(config);
  } catch (const ConfigError& e) {
    const int line = line_of(text, e.key());
    std::string what = e.what();
    if (line > 0) what += " (line " + std::to_string(line) + ")";
    throw ConfigError(e.key(), line, what);
  }
  return config;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, "cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const NetworkConfig& config) {
  ordered_json doc;
  doc["n_sensors"] = config.n_sensors;
  doc["n_slots"] = config.n_slots;
  doc["n_frames"] = config.n_frames;
  doc["rate_bps_hz"] = config.rate_bps_hz;
  doc["slot_duration_s"] = config.slot_duration_s;
  doc["comm_duration_s"] = config.comm_duration_s;
  doc["noise_dest_mw"] = config.noise_dest_w * kMilli;
  doc["noise_eve_mw"] = config.noise_eve_w * kMilli;
  doc["sigma_alpha"] = config.sigma_alpha;
  doc["sigma_beta"] = config.sigma_beta;
  doc["proc_energy_mj"] = config.proc_energy_j * kMilli;
  doc["comm_energy_mj"] = scaled_up(config.comm_energy_j, kMilli);
  doc["initial_battery_mj"] = config.initial_battery_j * kMilli;
  doc["harvest_rate_mw"] = config.harvest_rate_w * kMilli;
  doc["scheme"] = std::string(to_string(config.scheme));
  doc["master_seed"] = config.master_seed;
  if (config.fixed_power_w) doc["fixed_power_mw"] = *config.fixed_power_w * kMilli;
  if (config.fixed_slots) {
    ordered_json map = ordered_json::array();
    for (const auto& slots : *config.fixed_slots) {
      ordered_json list = ordered_json::array();
      for (int j : slots) list.push_back(j + 1);
      map.push_back(std::move(list));
    }
    doc["fixed_slots"] = std::move(map);
  }
  if (config.slot_harvest_j) {
    doc["slot_harvest_mj"] = scaled_up(*config.slot_harvest_j, kMilli);
  }
  if (config.link_model != LinkModel::kWiretap) {
    doc["link_model"] = std::string(to_string(config.link_model));
  }
  return doc.dump(2) + "\n";
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_number failed");
  return std::string(buf.data(), end);
}

void write_per_frame_csv(const std::filesystem::path& path,
                         const SimResult& result) {
  auto out = open_output(path);
  out << "frame,sensor,packets,battery_j\n";
  for (std::size_t f = 0; f < result.per_frame_packets.size(); ++f) {
    const auto& packets = result.per_frame_packets[f];
    for (std::size_t k = 0; k < packets.size(); ++k) {
      out << f + 1 << ',' << k + 1 << ',' << packets[k] << ','
          << format_number(result.per_frame_battery_j[f][k]) << '\n';
    }
  }
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<SimResult>& results) {
  auto out = open_output(path);
  out << "scheme,avg_sum_throughput_bps_hz\n";
  for (const SimResult& r : results) {
    out << to_string(r.scheme) << ',' << format_number(r.avg_sum_throughput)
        << '\n';
  }
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows) {
  auto out = open_output(path);
  out << "scheme,param,value,avg_sum_throughput_bps_hz\n";
  for (const SweepRow& row : rows) {
    out << to_string(row.scheme) << ',' << to_string(row.parameter) << ','
        << format_number(row.value) << ','
        << format_number(row.avg_sum_throughput) << '\n';
  }
}

void write_manifest(const std::filesystem::path& path,
                    const RunManifest& manifest) {
  ordered_json doc;
  doc["tool_version"] = manifest.tool_version;
  doc["command"] = manifest.command;
  doc["master_seed"] = manifest.config.master_seed;
  doc["wall_clock_s"] = manifest.wall_clock_s;
  doc["outputs"] = manifest.outputs;
  if (!manifest.sweep_param.empty()) {
    doc["sweep"] = {{"param", manifest.sweep_param},
                    {"grid", manifest.sweep_grid},
                    {"schemes", manifest.sweep_schemes}};
  }
  doc["config"] = ordered_json::parse(serialize_config(manifest.config));
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

}  // namespace ehsec
