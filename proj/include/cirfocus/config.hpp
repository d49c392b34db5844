#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "cirfocus/matrix.hpp"
#include "cirfocus/util.hpp"

namespace cirfocus {

// Pipeline stages that can be switched off for derivative runs.
enum class Ablation {
  no_FM,           // drop both query-side focus mappings
  no_VFM,          // raw visual features for the reference image
  no_TFM,          // raw text features for the modification text
  no_MGFP,         // query-side focus projection -> average pooling
  no_target_VFM,   // raw visual features for the target image
  no_target_MGFP,  // target-side focus projection -> average pooling
  no_revision,     // composed feature = plain sum, gates unused
  no_BBC,          // drop the contrastive ranking term
  no_FR,           // drop the focus regularization term
};

const char* ablation_name(Ablation a);
Ablation ablation_from_name(const std::string& name);

struct HyperConfig {
  std::string profile = "stub";  // "full" or "stub"

  int D = 16;      // joint embedding width
  int D_I = 32;    // visual penultimate width
  int D_T = 24;    // text penultimate width
  int C = 5;       // visual channel count
  int S = 8;       // text sequence length
  int P = 2;       // focus channels
  double tau = 0.1;
  double mu = 0.5;
  int batch_size = 4;
  double lr_head = 1e-3;
  double lr_backbone = 0.0;
  int epochs = 10;

  // optimizer
  double weight_decay = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double grad_clip = 0.0;  // 0 = off

  std::uint64_t seed = 42;
  int max_steps = 0;  // 0 = no cap
  bool train_backbone = true;
  bool detach_target_distribution = false;

  std::set<Ablation> ablations;

  bool ablated(Ablation a) const { return ablations.count(a) != 0; }
  Dims dims() const { return Dims{C, D_I, S, D, P}; }
};

HyperConfig full_profile();
HyperConfig stub_profile();
HyperConfig profile_config(const std::string& name);

// Flat key=value text. '#' starts a comment; the "profile" key selects the
// base defaults and every other key overrides one field.
HyperConfig parse_config_text(const std::string& text);
HyperConfig load_config(const fs::path& path);
void apply_override(HyperConfig& cfg, const std::string& key, const std::string& value);
std::string config_to_text(const HyperConfig& cfg);

// Returns cfg unchanged or throws ConfigError listing every violated invariant.
HyperConfig validate_config(const HyperConfig& cfg);

}  // namespace cirfocus
