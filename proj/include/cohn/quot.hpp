#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohn/tuple.hpp"

namespace cohn {

// A module with r marked vectors: a candidate point of Quot(O^r, n). The
// frame is a point of the Quot scheme only when it generates the module.
struct FramedModule {
  CommutingTuple module;
  std::vector<Vector> frame;

  std::size_t r() const noexcept { return frame.size(); }
  // n x r matrix whose columns are the frame vectors.
  Matrix frame_matrix() const;
};

// Dimension of the smallest A-stable subspace containing the frame.
std::size_t krylov_dim(const FramedModule& f);
bool is_generating(const FramedModule& f);

// The underlying module. Throws NOT_SURJECTIVE when the frame does not generate.
const CommutingTuple& rho(const FramedModule& f);

// r = n and the frame is a basis. Throws WRONG_FRAME_COUNT.
bool is_atlas_point(const FramedModule& f);

// The unique h with h A_i = A'_i h and h v_j = w_j, if it exists and is
// invertible. Throws NOT_SURJECTIVE if either frame fails to generate.
std::optional<GroupElement> quot_equal(const FramedModule& f, const FramedModule& g);

// Right multiplication of the frame matrix by g. Throws WRONG_FRAME_COUNT.
FramedModule gl_action_on_atlas(const FramedModule& f, const GroupElement& g);

// Transport (module, frame) along g: (g.t, g v_j).
FramedModule transport(const FramedModule& f, const GroupElement& g);

}  // namespace cohn
