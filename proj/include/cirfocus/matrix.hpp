#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>

#include "cirfocus/util.hpp"

namespace cirfocus {

using Mat = Eigen::MatrixXd;

// Semantic role of a feature matrix. Each role fixes the expected shape
// for a given dimension set; construction validates it (no silent reshape).
enum class Role {
  local_visual,    // C x D_I
  local_text,      // S x D
  global_stack,    // 3 x D
  attended,        // shape of the attention query
  fused_local,     // fused, pre-projection
  weighted_local,  // P x D
  weighted_global, // P x D
  focused,         // 2P x D
  reduced,         // P x D
  composed,        // P x D
  pooled,          // 1 x D
};

const char* role_name(Role role);

// Model-wide dimension set used to check role shapes.
struct Dims {
  int C = 0;    // visual channel count
  int D_I = 0;  // visual penultimate width
  int S = 0;    // text sequence length
  int D = 0;    // joint embedding width
  int P = 0;    // focus channels
};

class FeatureMatrix {
 public:
  FeatureMatrix(Mat data, Role role, const Dims& dims);

  const Mat& data() const { return data_; }
  Mat& data() { return data_; }
  Role role() const { return role_; }
  int rows() const { return static_cast<int>(data_.rows()); }
  int cols() const { return static_cast<int>(data_.cols()); }

 private:
  Mat data_;
  Role role_;
};

// Throws ShapeError unless `m` matches the role's shape and is finite.
void check_role_shape(const Mat& m, Role role, const Dims& dims);

// Portable binary matrix file: magic "CFMX", dtype byte (0 = f64),
// u32 rows, u32 cols, little-endian payload. Used for golden fixtures
// and the gallery embedding cache.
void save_matrix(const fs::path& path, const Mat& m);
Mat load_matrix(const fs::path& path);

}  // namespace cirfocus
