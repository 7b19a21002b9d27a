#include "cohn/quot.hpp"

#include <stdexcept>

#include "cohn/error.hpp"
#include "cohn/linalg.hpp"

namespace cohn {

namespace {

void check_frame(const FramedModule& f) {
  for (std::size_t j = 0; j < f.frame.size(); ++j) {
    if (f.frame[j].size() != f.module.n())
      fail(ErrorCode::SizeMismatch,
           "frame vector " + std::to_string(j + 1) + " has length " + std::to_string(f.frame[j].size()) +
               ", expected " + std::to_string(f.module.n()));
    for (const auto& x : f.frame[j])
      if (!(x.field() == f.module.field())) fail(ErrorCode::MixedFields, "frame entry over " + x.field().name());
  }
}

// Echelon accumulator: keeps an rref basis and reports whether a vector was new.
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t n) : field_(f), n_(n) {}

  bool add(const Vector& v) {
    Vector w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar& c = w[pivots_[k]];
      if (!c.is_zero()) {
        const Scalar factor = c;
        for (std::size_t j = 0; j < n_; ++j) w[j] -= factor * rows_[k][j];
      }
    }
    std::size_t piv = 0;
    while (piv < n_ && w[piv].is_zero()) ++piv;
    if (piv == n_) return false;
    const Scalar inv = w[piv].inverse();
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
      if (row[piv].is_zero()) continue;
      const Scalar factor = row[piv];
      for (std::size_t j = 0; j < n_; ++j) row[j] -= factor * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t dim() const noexcept { return rows_.size(); }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Matrix FramedModule::frame_matrix() const { return Matrix::from_columns(module.field(), module.n(), frame); }

std::size_t krylov_dim(const FramedModule& f) {
  check_frame(f);
  const std::size_t n = f.module.n();
  SpanBuilder span(f.module.field(), n);
  // Frame vectors in order; every new vector is pushed through A_1..A_d.
  std::vector<Vector> queue;
  for (const auto& v : f.frame)
    if (span.add(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size() && span.dim() < n; ++head) {
    for (const auto& a : f.module.mats()) {
      Vector w = a * queue[head];
      if (span.add(w)) queue.push_back(std::move(w));
    }
  }
  return span.dim();
}

bool is_generating(const FramedModule& f) { return krylov_dim(f) == f.module.n(); }

const CommutingTuple& rho(const FramedModule& f) {
  if (!is_generating(f)) fail(ErrorCode::NotSurjective, "frame does not generate the module");
  return f.module;
}

bool is_atlas_point(const FramedModule& f) {
  check_frame(f);
  if (f.r() != f.module.n())
    fail(ErrorCode::WrongFrameCount, "atlas points need r = n",
         {{"r", f.r()}, {"n", f.module.n()}});
  return is_invertible(f.frame_matrix());
}

std::optional<GroupElement> quot_equal(const FramedModule& f, const FramedModule& g) {
  if (f.module.d() != g.module.d()) fail(ErrorCode::ArityMismatch, "framed modules with different d");
  if (!(f.module.field() == g.module.field())) fail(ErrorCode::MixedFields, "framed modules over different fields");
  if (f.r() != g.r()) fail(ErrorCode::WrongFrameCount, "framed modules with different frame counts",
                           {{"left", f.r()}, {"right", g.r()}});
  if (!is_generating(f) || !is_generating(g)) fail(ErrorCode::NotSurjective, "frame does not generate the module");
  if (f.module.n() != g.module.n()) return std::nullopt;
  const Field k = f.module.field();
  const std::size_t n = f.module.n();
  if (n == 0) return GroupElement::identity(k, 0);

  // Unknown h (n x n, row-major). Block rows: h A_i - A'_i h = 0, then h v_j = w_j.
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < f.module.d(); ++i) blocks.push_back(sylvester_operator(f.module[i], g.module[i]));
  Matrix frame_rows(k, n * f.r(), n * n);
  Vector rhs(f.module.d() * n * n, Scalar(k));
  for (std::size_t j = 0; j < f.r(); ++j)
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) frame_rows(j * n + a, a * n + b) = f.frame[j][b];
      rhs.push_back(g.frame[j][a]);
    }
  blocks.push_back(frame_rows);
  const Matrix system = vstack(blocks);
  // Generation forces the homogeneous part to vanish, so any solution is unique.
  if (!kernel_basis(system).empty()) throw std::logic_error("quot_equal solution space is not a single point");
  const auto sol = solve_any(system, rhs);
  if (!sol) return std::nullopt;
  Matrix h(k, n, n);
  for (std::size_t e = 0; e < n * n; ++e) h(e / n, e % n) = (*sol)[e];
  if (!is_invertible(h)) return std::nullopt;
  GroupElement cert(std::move(h));
  const FramedModule moved = transport(f, cert);
  if (!(moved.module == g.module) || moved.frame != g.frame)
    throw std::logic_error("quot_equal certificate failed verification");
  return cert;
}

FramedModule gl_action_on_atlas(const FramedModule& f, const GroupElement& g) {
  check_frame(f);
  if (f.r() != f.module.n()) fail(ErrorCode::WrongFrameCount, "atlas action needs r = n", {{"r", f.r()}, {"n", f.module.n()}});
  if (g.n() != f.r()) fail(ErrorCode::SizeMismatch, "group element has the wrong size");
  const Matrix moved = f.frame_matrix() * g.matrix();
  std::vector<Vector> frame;
  for (std::size_t j = 0; j < moved.cols(); ++j) frame.push_back(moved.column_vector(j));
  return FramedModule{f.module, std::move(frame)};
}

FramedModule transport(const FramedModule& f, const GroupElement& g) {
  check_frame(f);
  std::vector<Vector> frame;
  for (const auto& v : f.frame) frame.push_back(g.matrix() * v);
  return FramedModule{conjugate(f.module, g), std::move(frame)};
}

}  // namespace cohn
