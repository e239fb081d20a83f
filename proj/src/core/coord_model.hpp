#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilcalc {

enum class ModelKind { Affine, Torus };

// A flat coordinate chart: affine space R^n, or the n-torus with angle
// coordinates of period 2*pi.
struct CoordModel {
  ModelKind kind;
  int dim;
  std::vector<std::string> coords;

  bool operator==(const CoordModel& o) const {
    return kind == o.kind && dim == o.dim && coords == o.coords;
  }
};

using ModelPtr = std::shared_ptr<const CoordModel>;

inline std::vector<std::string> default_coords(int n) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) names.push_back(xyz[i]);
  } else {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

inline ModelPtr make_model(ModelKind kind, int n, std::vector<std::string> names = {}) {
  if (n < 1) throw std::invalid_argument("model dimension must be >= 1");
  if (names.empty()) names = default_coords(n);
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("coordinate name count does not match dimension");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("coordinate names must be unique");
  return std::make_shared<CoordModel>(CoordModel{kind, n, std::move(names)});
}

inline ModelPtr affine_model(int n, std::vector<std::string> names = {}) {
  return make_model(ModelKind::Affine, n, std::move(names));
}

inline ModelPtr torus_model(int n, std::vector<std::string> names = {}) {
  return make_model(ModelKind::Torus, n, std::move(names));
}

inline bool same_model(const ModelPtr& a, const ModelPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace weilcalc
