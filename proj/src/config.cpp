#include "cirfocus/config.hpp"

#include <array>
#include <sstream>

namespace cirfocus {

namespace {

constexpr std::array<const char*, 9> kAblationNames = {
    "no_FM",         "no_VFM",         "no_TFM",
    "no_MGFP",       "no_target_VFM",  "no_target_MGFP",
    "no_revision",   "no_BBC",         "no_FR",
};

}  // namespace

const char* ablation_name(Ablation a) {
  return kAblationNames[static_cast<int>(a)];
}

Ablation ablation_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kAblationNames.size(); ++i) {
    if (name == kAblationNames[i]) return static_cast<Ablation>(i);
  }
  throw ConfigError("unknown ablation flag: " + name);
}

HyperConfig full_profile() {
  HyperConfig c;
  c.profile = "full";
  c.D = 1024;
  c.D_I = 1280;
  c.D_T = 1024;
  c.C = 257;
  c.S = 77;
  c.P = 4;
  c.tau = 0.1;
  c.mu = 0.5;
  c.batch_size = 16;
  c.lr_head = 1e-4;
  c.lr_backbone = 1e-6;
  c.epochs = 10;
  return c;
}

HyperConfig stub_profile() {
  HyperConfig c;
  c.profile = "stub";
  c.D = 16;
  c.D_I = 32;
  c.D_T = 24;
  c.C = 5;
  c.S = 8;
  c.P = 2;
  c.tau = 0.1;
  c.mu = 0.5;
  c.batch_size = 4;
  c.lr_head = 1e-3;
  c.lr_backbone = 0.0;
  c.epochs = 10;
  return c;
}

HyperConfig profile_config(const std::string& name) {
  if (name == "full") return full_profile();
  if (name == "stub") return stub_profile();
  throw ConfigError("unknown profile: " + name + " (expected full or stub)");
}

namespace {

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    int n = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer for " + key + ": " + v);
  }
}

double parse_real(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + key + ": " + v);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  std::string s = to_lower(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("invalid boolean for " + key + ": " + v);
}

}  // namespace

void apply_override(HyperConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "profile") {
    std::string keep_ablations;  // profile resets numeric fields only
    auto flags = cfg.ablations;
    cfg = profile_config(value);
    cfg.ablations = flags;
  } else if (key == "D") {
    cfg.D = parse_int(key, value);
  } else if (key == "D_I") {
    cfg.D_I = parse_int(key, value);
  } else if (key == "D_T") {
    cfg.D_T = parse_int(key, value);
  } else if (key == "C") {
    cfg.C = parse_int(key, value);
  } else if (key == "S") {
    cfg.S = parse_int(key, value);
  } else if (key == "P") {
    cfg.P = parse_int(key, value);
  } else if (key == "tau") {
    cfg.tau = parse_real(key, value);
  } else if (key == "mu") {
    cfg.mu = parse_real(key, value);
  } else if (key == "batch_size") {
    cfg.batch_size = parse_int(key, value);
  } else if (key == "lr_head") {
    cfg.lr_head = parse_real(key, value);
  } else if (key == "lr_backbone") {
    cfg.lr_backbone = parse_real(key, value);
  } else if (key == "epochs") {
    cfg.epochs = parse_int(key, value);
  } else if (key == "weight_decay") {
    cfg.weight_decay = parse_real(key, value);
  } else if (key == "beta1") {
    cfg.beta1 = parse_real(key, value);
  } else if (key == "beta2") {
    cfg.beta2 = parse_real(key, value);
  } else if (key == "adam_eps") {
    cfg.adam_eps = parse_real(key, value);
  } else if (key == "grad_clip") {
    cfg.grad_clip = parse_real(key, value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
  } else if (key == "max_steps") {
    cfg.max_steps = parse_int(key, value);
  } else if (key == "train_backbone") {
    cfg.train_backbone = parse_bool(key, value);
  } else if (key == "detach_target_distribution") {
    cfg.detach_target_distribution = parse_bool(key, value);
  } else if (key == "ablations") {
    cfg.ablations.clear();
    for (const auto& name : split(value, ',')) {
      std::string n = trim(name);
      if (!n.empty()) cfg.ablations.insert(ablation_from_name(n));
    }
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

HyperConfig parse_config_text(const std::string& text) {
  // Two passes: "profile" picks the base defaults regardless of position.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string profile = "stub";
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected key=value, got: " + s);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "profile")
      profile = value;
    else
      pairs.emplace_back(key, value);
  }
  HyperConfig cfg = profile_config(profile);
  for (const auto& [k, v] : pairs) apply_override(cfg, k, v);
  return cfg;
}

HyperConfig load_config(const fs::path& path) {
  return parse_config_text(read_file(path));
}

std::string config_to_text(const HyperConfig& c) {
  std::ostringstream ss;
  ss << "profile = " << c.profile << "\n";
  ss << "D = " << c.D << "\n";
  ss << "D_I = " << c.D_I << "\n";
  ss << "D_T = " << c.D_T << "\n";
  ss << "C = " << c.C << "\n";
  ss << "S = " << c.S << "\n";
  ss << "P = " << c.P << "\n";
  ss << "tau = " << fmt_double(c.tau) << "\n";
  ss << "mu = " << fmt_double(c.mu) << "\n";
  ss << "batch_size = " << c.batch_size << "\n";
  ss << "lr_head = " << fmt_double(c.lr_head) << "\n";
  ss << "lr_backbone = " << fmt_double(c.lr_backbone) << "\n";
  ss << "epochs = " << c.epochs << "\n";
  ss << "weight_decay = " << fmt_double(c.weight_decay) << "\n";
  ss << "beta1 = " << fmt_double(c.beta1) << "\n";
  ss << "beta2 = " << fmt_double(c.beta2) << "\n";
  ss << "adam_eps = " << fmt_double(c.adam_eps) << "\n";
  ss << "grad_clip = " << fmt_double(c.grad_clip) << "\n";
  ss << "seed = " << c.seed << "\n";
  ss << "max_steps = " << c.max_steps << "\n";
  ss << "train_backbone = " << (c.train_backbone ? "true" : "false") << "\n";
  ss << "detach_target_distribution = "
     << (c.detach_target_distribution ? "true" : "false") << "\n";
  std::vector<std::string> names;
  for (Ablation a : c.ablations) names.emplace_back(ablation_name(a));
  ss << "ablations = " << join(names, ",") << "\n";
  return ss.str();
}

HyperConfig validate_config(const HyperConfig& cfg) {
  std::vector<std::string> bad;
  if (cfg.profile != "full" && cfg.profile != "stub")
    bad.push_back("profile must be full or stub");
  if (cfg.D <= 0) bad.push_back("D must be positive");
  if (cfg.D_I <= 0) bad.push_back("D_I must be positive");
  if (cfg.D_T <= 0) bad.push_back("D_T must be positive");
  if (cfg.C <= 0) bad.push_back("C must be positive");
  if (cfg.S <= 0) bad.push_back("S must be positive");
  if (cfg.P < 1) bad.push_back("P >= 1");
  if (!(cfg.tau > 0)) bad.push_back("tau > 0");
  if (cfg.mu < 0) bad.push_back("mu >= 0");
  if (cfg.batch_size < 1) bad.push_back("batch_size must be positive");
  if (cfg.lr_head < 0) bad.push_back("lr_head must be nonnegative");
  if (cfg.lr_backbone < 0) bad.push_back("lr_backbone must be nonnegative");
  if (cfg.epochs < 0) bad.push_back("epochs must be nonnegative");
  if (cfg.max_steps < 0) bad.push_back("max_steps must be nonnegative");
  if (cfg.grad_clip < 0) bad.push_back("grad_clip must be nonnegative");
  if (cfg.ablated(Ablation::no_BBC) && cfg.ablated(Ablation::no_FR))
    bad.push_back("no_BBC and no_FR together leave an empty objective");
  if (!bad.empty())
    throw ConfigError("invalid config: " + join(bad, "; "));
  return cfg;
}

}  // namespace cirfocus
