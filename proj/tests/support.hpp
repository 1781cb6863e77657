#pragma once
#include <functional>
#include <vector>

#include "kdvlab/profile.hpp"

/// Samples f on every node of g.
inline kdvlab::SampledProfile tabulate(const kdvlab::Grid& g,
                                       const std::function<kdvlab::cplx(double)>& f) {
  std::vector<kdvlab::cplx> v(g.size);
  for (std::size_t i = 0; i < g.size; ++i) v[i] = f(g.coordinate(i));
  return {g, std::move(v)};
}
