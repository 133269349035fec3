#include "uuvnav/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace uuvnav {

namespace {

class SectionReader {
 public:
  SectionReader(const Json& section, std::string name)
      : section_(section), name_(std::move(name)) {
    if (!section.is_object()) {
      throw std::invalid_argument(name_ + ": expected an object");
    }
  }

  double number(const std::string& key, double fallback) {
    return get<double>(key, fallback, "a number");
  }

  bool boolean(const std::string& key, bool fallback) {
    return get<bool>(key, fallback, "a boolean");
  }

  std::uint64_t integer(const std::string& key, std::uint64_t fallback) {
    return get<std::uint64_t>(key, fallback, "an integer");
  }

  Vec15 vec15(const std::string& key, const Vec15& fallback) {
    if (!section_.contains(key)) return fallback;
    seen_.insert(key);
    const Json& v = section_.at(key);
    if (!v.is_array() || v.size() != kStateDim) {
      throw std::invalid_argument(name_ + "." + key +
                                  ": expected an array of 15 numbers");
    }
    Vec15 out;
    for (int i = 0; i < kStateDim; ++i) out[i] = v.at(i).get<double>();
    return out;
  }

  const Json* object(const std::string& key) {
    if (!section_.contains(key)) return nullptr;
    seen_.insert(key);
    return &section_.at(key);
  }

  void finish() const {
    for (const auto& [key, value] : section_.items()) {
      if (!seen_.count(key)) {
        throw std::invalid_argument(name_ + "." + key + ": unknown key");
      }
    }
  }

 private:
  template <typename T>
  T get(const std::string& key, T fallback, const char* kind) {
    if (!section_.contains(key)) return fallback;
    seen_.insert(key);
    try {
      return section_.at(key).get<T>();
    } catch (const Json::exception&) {
      throw std::invalid_argument(name_ + "." + key + ": expected " + kind);
    }
  }

  const Json& section_;
  std::string name_;
  std::set<std::string> seen_;
};

}  // namespace

Json config_to_json(const ScenarioConfig& cfg) {
  Json doc;

  doc["trajectory"] = {{"width", cfg.trajectory.width},
                       {"length", cfg.trajectory.height},
                       {"speed", cfg.trajectory.speed},
                       {"depth", cfg.trajectory.depth},
                       {"hold", cfg.trajectory.hold},
                       {"accel", cfg.trajectory.accel},
                       {"turn rate", cfg.trajectory.turn_rate}};

  Json q = Json::array(), p0 = Json::array();
  for (int i = 0; i < kStateDim; ++i) {
    q.push_back(cfg.process_noise.diag[i]);
    p0.push_back(cfg.p0_diag[i]);
  }
  doc["filter"] = {{"rate", cfg.filter_rate},
                   {"q_diagonal", q},
                   {"p0_diagonal", p0},
                   {"gating",
                    {{"enabled", cfg.gate.enabled},
                     {"threshold", cfg.gate.threshold}}}};

  doc["imu"] = {
      {"enabled", cfg.has(SensorKind::Imu)},
      {"rate", cfg.imu_rate},
      {"Gyroscope noise density", cfg.imu.gyro_noise_density},
      {"Gyroscope random walk", cfg.imu.gyro_random_walk},
      {"Gyroscope bias correlation time", cfg.imu.gyro_bias_corr_time},
      {"Gyroscope turn on bias sigma", cfg.imu.gyro_turn_on_bias_sigma},
      {"Accelerometer noise density", cfg.imu.accel_noise_density},
      {"Accelerometer random walk", cfg.imu.accel_random_walk},
      {"Accelerometer bias correlation time", cfg.imu.accel_bias_corr_time},
      {"Accelerometer turn on bias sigma", cfg.imu.accel_turn_on_bias_sigma},
      {"Orientation noise sigma", cfg.imu.orientation_noise_sigma}};

  doc["dvl"] = {{"enabled", cfg.has(SensorKind::Dvl)},
                {"rate", cfg.dvl_rate},
                {"Noise sigma", cfg.dvl.noise_sigma},
                {"Noise amplitude", cfg.dvl.noise_amplitude}};

  doc["pressure"] = {{"enabled", cfg.has(SensorKind::Pressure)},
                     {"rate", cfg.pressure_rate},
                     {"Noise sigma", cfg.pressure.noise_sigma},
                     {"Noise amplitude", cfg.pressure.noise_amplitude},
                     {"Standard pressure", cfg.pressure.standard_pressure},
                     {"kPaPerM", cfg.pressure.kpa_per_m}};

  doc["usbl"] = {{"enabled", cfg.has(SensorKind::Usbl)},
                 {"rate", cfg.usbl_rate},
                 {"Noise sigma", cfg.usbl.noise_sigma},
                 {"Stuck probability", cfg.usbl.stuck_probability},
                 {"Stuck duration", cfg.usbl.stuck_duration}};

  doc["surface_fix"] = {{"enabled", cfg.has(SensorKind::SurfaceFix)},
                        {"Noise sigma", cfg.surface_fix.noise_sigma},
                        {"Period", cfg.surface_fix.period}};

  doc["experiment"] = {{"seed", cfg.seed}, {"duration", cfg.duration}};

  return doc;
}

ScenarioConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("config: expected a JSON object");
  }

  ScenarioConfig cfg;
  cfg.sensors.clear();
  std::set<std::string> top_seen;

  auto section = [&](const char* name) -> const Json* {
    top_seen.insert(name);
    if (!doc.contains(name)) return nullptr;
    return &doc.at(name);
  };

  if (const Json* s = section("trajectory")) {
    SectionReader r(*s, "trajectory");
    cfg.trajectory.width = r.number("width", cfg.trajectory.width);
    cfg.trajectory.height = r.number("length", cfg.trajectory.height);
    cfg.trajectory.speed = r.number("speed", cfg.trajectory.speed);
    cfg.trajectory.depth = r.number("depth", cfg.trajectory.depth);
    cfg.trajectory.hold = r.number("hold", cfg.trajectory.hold);
    cfg.trajectory.accel = r.number("accel", cfg.trajectory.accel);
    cfg.trajectory.turn_rate = r.number("turn rate", cfg.trajectory.turn_rate);
    r.finish();
  }

  if (const Json* s = section("filter")) {
    SectionReader r(*s, "filter");
    cfg.filter_rate = r.number("rate", cfg.filter_rate);
    cfg.process_noise.diag = r.vec15("q_diagonal", cfg.process_noise.diag);
    cfg.p0_diag = r.vec15("p0_diagonal", cfg.p0_diag);
    if (const Json* g = r.object("gating")) {
      SectionReader gr(*g, "filter.gating");
      cfg.gate.enabled = gr.boolean("enabled", cfg.gate.enabled);
      cfg.gate.threshold = gr.number("threshold", cfg.gate.threshold);
      gr.finish();
    }
    r.finish();
  }

  if (const Json* s = section("imu")) {
    SectionReader r(*s, "imu");
    if (r.boolean("enabled", true)) cfg.sensors.insert(SensorKind::Imu);
    cfg.imu_rate = r.number("rate", cfg.imu_rate);
    auto& p = cfg.imu;
    p.gyro_noise_density =
        r.number("Gyroscope noise density", p.gyro_noise_density);
    p.gyro_random_walk = r.number("Gyroscope random walk", p.gyro_random_walk);
    p.gyro_bias_corr_time =
        r.number("Gyroscope bias correlation time", p.gyro_bias_corr_time);
    p.gyro_turn_on_bias_sigma =
        r.number("Gyroscope turn on bias sigma", p.gyro_turn_on_bias_sigma);
    p.accel_noise_density =
        r.number("Accelerometer noise density", p.accel_noise_density);
    p.accel_random_walk =
        r.number("Accelerometer random walk", p.accel_random_walk);
    p.accel_bias_corr_time =
        r.number("Accelerometer bias correlation time", p.accel_bias_corr_time);
    p.accel_turn_on_bias_sigma =
        r.number("Accelerometer turn on bias sigma", p.accel_turn_on_bias_sigma);
    p.orientation_noise_sigma =
        r.number("Orientation noise sigma", p.orientation_noise_sigma);
    r.finish();
  } else {
    cfg.sensors.insert(SensorKind::Imu);
  }

  if (const Json* s = section("dvl")) {
    SectionReader r(*s, "dvl");
    if (r.boolean("enabled", true)) cfg.sensors.insert(SensorKind::Dvl);
    cfg.dvl_rate = r.number("rate", cfg.dvl_rate);
    cfg.dvl.noise_sigma = r.number("Noise sigma", cfg.dvl.noise_sigma);
    cfg.dvl.noise_amplitude =
        r.number("Noise amplitude", cfg.dvl.noise_amplitude);
    r.finish();
  }

  if (const Json* s = section("pressure")) {
    SectionReader r(*s, "pressure");
    if (r.boolean("enabled", true)) cfg.sensors.insert(SensorKind::Pressure);
    cfg.pressure_rate = r.number("rate", cfg.pressure_rate);
    auto& p = cfg.pressure;
    p.noise_sigma = r.number("Noise sigma", p.noise_sigma);
    p.noise_amplitude = r.number("Noise amplitude", p.noise_amplitude);
    p.standard_pressure = r.number("Standard pressure", p.standard_pressure);
    p.kpa_per_m = r.number("kPaPerM", p.kpa_per_m);
    r.finish();
  } else {
    cfg.sensors.insert(SensorKind::Pressure);
  }

  if (const Json* s = section("usbl")) {
    SectionReader r(*s, "usbl");
    if (r.boolean("enabled", true)) cfg.sensors.insert(SensorKind::Usbl);
    cfg.usbl_rate = r.number("rate", cfg.usbl_rate);
    auto& p = cfg.usbl;
    p.noise_sigma = r.number("Noise sigma", p.noise_sigma);
    p.stuck_probability = r.number("Stuck probability", p.stuck_probability);
    p.stuck_duration = r.number("Stuck duration", p.stuck_duration);
    r.finish();
  }

  if (const Json* s = section("surface_fix")) {
    SectionReader r(*s, "surface_fix");
    if (r.boolean("enabled", false)) cfg.sensors.insert(SensorKind::SurfaceFix);
    cfg.surface_fix.noise_sigma =
        r.number("Noise sigma", cfg.surface_fix.noise_sigma);
    cfg.surface_fix.period = r.number("Period", cfg.surface_fix.period);
    r.finish();
  }

  if (const Json* s = section("experiment")) {
    SectionReader r(*s, "experiment");
    cfg.seed = r.integer("seed", cfg.seed);
    cfg.duration = r.number("duration", cfg.duration);
    r.finish();
  }

  for (const auto& [key, value] : doc.items()) {
    if (!top_seen.count(key)) {
      throw std::invalid_argument("config." + key + ": unknown section");
    }
  }

  cfg.validate();
  return cfg;
}

void apply_override(Json& doc, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("override '" + spec +
                                "': expected section.key=value");
  }
  const std::string path = spec.substr(0, eq);
  const std::string value = spec.substr(eq + 1);

  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t dot = path.find('.'); dot != std::string::npos;
       dot = path.find('.', start)) {
    parts.push_back(path.substr(start, dot - start));
    start = dot + 1;
  }
  parts.push_back(path.substr(start));
  if (parts.size() < 2 || parts.front().empty() || parts.back().empty()) {
    throw std::invalid_argument("override '" + spec +
                                "': expected section.key=value");
  }

  Json* node = &doc;
  for (size_t i = 0; i + 1 < parts.size(); ++i) node = &(*node)[parts[i]];
  Json parsed = Json::parse(value, nullptr, false);
  (*node)[parts.back()] = parsed.is_discarded() ? Json(value) : parsed;
}

ScenarioConfig parse_config(const Json& doc,
                            const std::vector<std::string>& overrides) {
  Json patched = doc;
  for (const auto& o : overrides) apply_override(patched, o);
  return config_from_json(patched);
}

ScenarioConfig load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config file '" + path.string() +
                             "' is not readable");
  }
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& ex) {
    throw std::runtime_error("config file '" + path.string() +
                             "': " + ex.what());
  }
  return parse_config(doc, overrides);
}

}  // namespace uuvnav
