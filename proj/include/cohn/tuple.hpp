#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "cohn/matrix.hpp"
#include "cohn/poly.hpp"

namespace cohn {

// d pairwise commuting n x n matrices over one field: a module of length n
// over k[x_1, ..., x_d]. Instances only come out of validate() (or
// operations that preserve commutation), so the invariant always holds.
class CommutingTuple {
 public:
  // Checks shapes, fields and every commutator exactly. d is taken from the
  // list and must be >= 1; n from the matrices (n = 0 is the empty module).
  static CommutingTuple validate(Field field, std::size_t n, std::vector<Matrix> mats);
  static CommutingTuple validate(std::vector<Matrix> mats);
  // The zero tuple of length n in d variables.
  static CommutingTuple zero(Field field, std::size_t n, std::size_t d);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return mats_.size(); }
  const std::vector<Matrix>& mats() const noexcept { return mats_; }
  const Matrix& operator[](std::size_t i) const { return mats_[i]; }

  friend bool operator==(const CommutingTuple& a, const CommutingTuple& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.mats_ == b.mats_;
  }

 private:
  CommutingTuple(Field field, std::size_t n, std::vector<Matrix> mats)
      : field_(field), n_(n), mats_(std::move(mats)) {}

  friend CommutingTuple assume_commuting(Field, std::size_t, std::vector<Matrix>);

  Field field_;
  std::size_t n_;
  std::vector<Matrix> mats_;
};

// For operations that preserve commutation by construction.
CommutingTuple assume_commuting(Field field, std::size_t n, std::vector<Matrix> mats);

// An invertible matrix with its inverse.
class GroupElement {
 public:
  // Throws SINGULAR_G.
  explicit GroupElement(Matrix g);
  static GroupElement identity(Field f, std::size_t n);

  const Matrix& matrix() const noexcept { return g_; }
  const Matrix& inverse() const noexcept { return inv_; }
  std::size_t n() const noexcept { return g_.rows(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  GroupElement inverted() const;

 private:
  GroupElement(Matrix g, Matrix inv) : g_(std::move(g)), inv_(std::move(inv)) {}

  Matrix g_;
  Matrix inv_;
};

// Young diagram of lattice cells (i, j), closed under decreasing coordinates.
class Staircase {
 public:
  // Throws NOT_YOUNG_DIAGRAM.
  explicit Staircase(std::set<std::pair<std::size_t, std::size_t>> cells);
  // Staircase under the partition with the given row lengths (non-increasing).
  static Staircase from_row_lengths(const std::vector<std::size_t>& lengths);

  const std::set<std::pair<std::size_t, std::size_t>>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

 private:
  std::set<std::pair<std::size_t, std::size_t>> cells_;
};

bool check_relations(const CommutingTuple& t, const std::vector<MultiPoly>& relations);
bool is_punctual(const CommutingTuple& t);
CommutingTuple conjugate(const CommutingTuple& t, const GroupElement& g);
CommutingTuple direct_sum(const CommutingTuple& s, const CommutingTuple& t);
CommutingTuple translate(const CommutingTuple& t, const std::vector<Scalar>& shift);

// Tr(A1 [A2, A3]) for any three square matrices of equal size.
Scalar trace_potential(const std::vector<Matrix>& triple);
// Gradient of trace_potential with respect to the entries of each matrix,
// in row-major layout: ([A2,A3]^T, [A3,A1]^T, [A1,A2]^T).
std::vector<Matrix> potential_gradient(const std::vector<Matrix>& triple);

// Dimension of the Zariski tangent space of the commuting variety at t.
std::size_t tangent_space_dim(const CommutingTuple& t);

// Multiplication by x and y on the monomial basis of k[x,y]/I for the
// monomial ideal I complementary to the staircase. Cells are ordered as in
// the set (lexicographically); M_x sends (i,j) to (i+1,j), M_y to (i,j+1).
CommutingTuple from_staircase(const Staircase& s, Field f);

// The 1-tuple (companion matrix of f). f must be monic of degree >= 1.
CommutingTuple companion(const UniPoly& f);

}  // namespace cohn
