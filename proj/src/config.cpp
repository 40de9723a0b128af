#include "swervesafe/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace swervesafe {

Config default_config() {
  Config c;
  c.geometry = {.d_f = 2.4, .d_r = 2.3, .b_l = 0.9, .b_r = 0.9, .l_f = 1.19, .l_r = 1.37};
  c.safety = {.rho = 0.1,
              .mu = 0.1,
              .alpha = 3.7,
              .a_max_accel = 2.0,
              .a_min_brake = 2.0,
              .a_max_brake = 8.0,
              .a_lat_max = 4.0,
              .a_lat_min = 2.0,
              .delta_max = std::numbers::pi / 6.0};
  c.dynamic = {.m = 1239.0,
               .I_zz = 1752.0,
               .e_SP = 0.5,
               .R_wheel = 0.302,
               .c_w = 0.3,
               .rho_drag = 1.25,
               .A = 1.438,
               .pacejka_front = {.B = 10.96, .C = 1.3, .D = 4560.4, .E = -0.5},
               .pacejka_rear = {.B = 12.67, .C = 1.3, .D = 3947.81, .E = -0.5}};
  return c;
}

namespace {

using FieldMap = std::map<std::string, double Config::*, std::less<>>;

struct FieldRef {
  const char* key;
  double* value;
};

std::vector<FieldRef> field_table(Config& c) {
  auto& g = c.geometry;
  auto& s = c.safety;
  auto& d = c.dynamic;
  return {
      {"d_f", &g.d_f},
      {"d_r", &g.d_r},
      {"b_l", &g.b_l},
      {"b_r", &g.b_r},
      {"l_f", &g.l_f},
      {"l_r", &g.l_r},
      {"rho", &s.rho},
      {"mu", &s.mu},
      {"alpha", &s.alpha},
      {"a_max_accel", &s.a_max_accel},
      {"a_min_brake", &s.a_min_brake},
      {"a_max_brake", &s.a_max_brake},
      {"a_lat_max", &s.a_lat_max},
      {"a_lat_min", &s.a_lat_min},
      {"delta_max", &s.delta_max},
      {"m", &d.m},
      {"I_zz", &d.I_zz},
      {"e_SP", &d.e_SP},
      {"R_wheel", &d.R_wheel},
      {"c_w", &d.c_w},
      {"rho_drag", &d.rho_drag},
      {"A", &d.A},
      {"B_f", &d.pacejka_front.B},
      {"C_f", &d.pacejka_front.C},
      {"D_f", &d.pacejka_front.D},
      {"E_f", &d.pacejka_front.E},
      {"B_r", &d.pacejka_rear.B},
      {"C_r", &d.pacejka_rear.C},
      {"D_r", &d.pacejka_rear.D},
      {"E_r", &d.pacejka_rear.E},
  };
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void require(bool ok, const std::string& field, const std::string& bound) {
  if (!ok) throw ConfigError(field + " " + bound);
}

void require_positive_magnitude(double v, const std::string& field) {
  require(v > 0.0, field, "must be a positive magnitude");
}

}  // namespace

void validate(const Config& c) {
  const auto& g = c.geometry;
  require(g.d_f > 0.0, "d_f", "must be > 0");
  require(g.d_r > 0.0, "d_r", "must be > 0");
  require(g.b_l > 0.0, "b_l", "must be > 0");
  require(g.b_r > 0.0, "b_r", "must be > 0");
  require(g.l_f > 0.0, "l_f", "must be > 0");
  require(g.l_r > 0.0, "l_r", "must be > 0");
  require(g.l_f <= g.d_f, "l_f", "must be <= d_f");
  require(g.l_r <= g.d_r, "l_r", "must be <= d_r");

  const auto& s = c.safety;
  require_positive_magnitude(s.a_max_accel, "a_max_accel");
  require_positive_magnitude(s.a_min_brake, "a_min_brake");
  require_positive_magnitude(s.a_max_brake, "a_max_brake");
  require_positive_magnitude(s.a_lat_max, "a_lat_max");
  require_positive_magnitude(s.a_lat_min, "a_lat_min");
  require(s.a_min_brake <= s.a_max_brake, "a_min_brake", "must be <= a_max_brake");
  require(s.a_lat_min <= s.a_lat_max, "a_lat_min", "must be <= a_lat_max");
  require(s.delta_max > 0.0 && s.delta_max < std::numbers::pi / 2.0, "delta_max",
          "must be in (0, pi/2)");
  require(s.rho >= 0.0, "rho", "must be >= 0");
  require(s.mu >= 0.0, "mu", "must be >= 0");
  require(s.alpha > 0.0, "alpha", "must be > 0");

  const auto& d = c.dynamic;
  require(d.m > 0.0, "m", "must be > 0");
  require(d.I_zz > 0.0, "I_zz", "must be > 0");
  require(d.pacejka_front.D > 0.0, "D_f", "must be > 0");
  require(d.pacejka_rear.D > 0.0, "D_r", "must be > 0");
}

Config load_config(std::istream& in) {
  Config c = default_config();
  auto fields = field_table(c);

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected `key = value`");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    double* slot = nullptr;
    for (auto& f : fields) {
      if (key == f.key) {
        slot = f.value;
        break;
      }
    }
    if (!slot) {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key `" + key + "`");
    }

    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(parsed)) {
      throw ConfigError("line " + std::to_string(lineno) + ": bad numeric value `" + value +
                        "` for `" + key + "`");
    }
    *slot = parsed;
  }

  validate(c);
  return c;
}

Config load_config_string(const std::string& text) {
  std::istringstream in(text);
  return load_config(in);
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return load_config(in);
}

void save_config(const Config& c, std::ostream& out) {
  Config copy = c;
  for (const auto& f : field_table(copy)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", *f.value);
    out << f.key << " = " << buf << "\n";
  }
}

std::string config_to_string(const Config& c) {
  std::ostringstream out;
  save_config(c, out);
  return out.str();
}

std::string config_hash(const Config& c) {
  const std::string text = config_to_string(c);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace swervesafe
