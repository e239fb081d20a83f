#pragma once

#include "coord_model.hpp"

namespace weilcalc {

// Trivialized vector bundle over a coordinate model with a fixed global frame.
struct TrivBundle {
  ModelPtr model;
  int rank;
  std::string frame_prefix = "e";

  bool operator==(const TrivBundle& o) const {
    return same_model(model, o.model) && rank == o.rank && frame_prefix == o.frame_prefix;
  }
};

using BundlePtr = std::shared_ptr<const TrivBundle>;

inline BundlePtr make_bundle(const ModelPtr& m, int rank, std::string prefix = "e") {
  if (rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
  return std::make_shared<TrivBundle>(TrivBundle{m, rank, std::move(prefix)});
}

inline bool same_bundle(const BundlePtr& a, const BundlePtr& b) {
  return a == b || (a && b && *a == *b);
}

// The endomorphism bundle End(V); frame index out * rank + in stands for the
// matrix unit mapping e_in to e_out.
inline BundlePtr end_bundle(const BundlePtr& v) {
  return make_bundle(v->model, v->rank * v->rank, v->frame_prefix + "E");
}

inline int end_index(int rank, int out, int in) { return out * rank + in; }

}  // namespace weilcalc
