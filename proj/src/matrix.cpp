#include "cirfocus/matrix.hpp"

#include <cstring>
#include <sstream>

namespace cirfocus {

const char* role_name(Role role) {
  switch (role) {
    case Role::local_visual: return "local_visual";
    case Role::local_text: return "local_text";
    case Role::global_stack: return "global_stack";
    case Role::attended: return "attended";
    case Role::fused_local: return "fused_local";
    case Role::weighted_local: return "weighted_local";
    case Role::weighted_global: return "weighted_global";
    case Role::focused: return "focused";
    case Role::reduced: return "reduced";
    case Role::composed: return "composed";
    case Role::pooled: return "pooled";
  }
  return "?";
}

namespace {

struct Shape {
  int rows = -1;  // -1 means unconstrained
  int cols = -1;
};

Shape expected_shape(Role role, const Dims& d) {
  switch (role) {
    case Role::local_visual: return {d.C, d.D_I};
    case Role::local_text: return {d.S, d.D};
    case Role::global_stack: return {3, d.D};
    case Role::weighted_local:
    case Role::weighted_global:
    case Role::reduced:
    case Role::composed: return {d.P, d.D};
    case Role::focused: return {2 * d.P, d.D};
    case Role::pooled: return {1, d.D};
    case Role::attended:
    case Role::fused_local: return {-1, -1};
  }
  return {-1, -1};
}

}  // namespace

void check_role_shape(const Mat& m, Role role, const Dims& dims) {
  Shape want = expected_shape(role, dims);
  if ((want.rows >= 0 && m.rows() != want.rows) ||
      (want.cols >= 0 && m.cols() != want.cols)) {
    std::ostringstream ss;
    ss << "feature matrix role " << role_name(role) << " expects shape ("
       << want.rows << ", " << want.cols << "), got (" << m.rows() << ", "
       << m.cols() << ")";
    throw ShapeError(ss.str());
  }
  if (!m.allFinite()) {
    throw ShapeError(std::string("feature matrix role ") + role_name(role) +
                     " contains non-finite entries");
  }
}

FeatureMatrix::FeatureMatrix(Mat data, Role role, const Dims& dims)
    : data_(std::move(data)), role_(role) {
  check_role_shape(data_, role_, dims);
}

void save_matrix(const fs::path& path, const Mat& m) {
  std::string buf;
  buf.reserve(16 + static_cast<std::size_t>(m.size()) * sizeof(double));
  buf += "CFMX";
  buf.push_back(0);  // dtype: f64
  std::uint32_t rows = static_cast<std::uint32_t>(m.rows());
  std::uint32_t cols = static_cast<std::uint32_t>(m.cols());
  buf.append(reinterpret_cast<const char*>(&rows), sizeof(rows));
  buf.append(reinterpret_cast<const char*>(&cols), sizeof(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double v = m(r, c);
      buf.append(reinterpret_cast<const char*>(&v), sizeof(v));
    }
  }
  atomic_write_file(path, buf);
}

Mat load_matrix(const fs::path& path) {
  std::string buf = read_file(path);
  if (buf.size() < 13 || buf.compare(0, 4, "CFMX") != 0)
    throw ParseError("bad matrix file header: " + path.string());
  if (buf[4] != 0) throw ParseError("unsupported matrix dtype: " + path.string());
  std::uint32_t rows = 0, cols = 0;
  std::memcpy(&rows, buf.data() + 5, sizeof(rows));
  std::memcpy(&cols, buf.data() + 9, sizeof(cols));
  std::size_t need = 13 + static_cast<std::size_t>(rows) * cols * sizeof(double);
  if (buf.size() != need)
    throw ParseError("truncated matrix file: " + path.string());
  Mat m(rows, cols);
  const char* p = buf.data() + 13;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      double v;
      std::memcpy(&v, p, sizeof(v));
      p += sizeof(v);
      m(r, c) = v;
    }
  }
  return m;
}

}  // namespace cirfocus
