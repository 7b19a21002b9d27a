#include "cohn/tuple.hpp"

#include "cohn/error.hpp"
#include "cohn/linalg.hpp"

namespace cohn {

CommutingTuple assume_commuting(Field field, std::size_t n, std::vector<Matrix> mats) {
  return CommutingTuple(field, n, std::move(mats));
}

CommutingTuple CommutingTuple::validate(Field field, std::size_t n, std::vector<Matrix> mats) {
  if (mats.empty()) fail(ErrorCode::ArityMismatch, "a tuple needs at least one matrix (d >= 1)");
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Matrix& m = mats[i];
    if (!(m.field() == field))
      fail(ErrorCode::MixedFields, "matrix " + std::to_string(i + 1) + " is over " + m.field().name() +
                                       ", expected " + field.name());
    m.uniform_field();
    if (m.rows() != n || m.cols() != n)
      fail(ErrorCode::SizeMismatch, "matrix " + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" +
                                        std::to_string(n),
           {{"index", i + 1}, {"shape", {m.rows(), m.cols()}}});
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      Matrix c = commutator(mats[i], mats[j]);
      if (!c.is_zero())
        fail(ErrorCode::NotCommuting,
             "matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute",
             {{"pair", {i + 1, j + 1}}, {"commutator", matrix_json(c)}});
    }
  return CommutingTuple(field, n, std::move(mats));
}

CommutingTuple CommutingTuple::validate(std::vector<Matrix> mats) {
  if (mats.empty()) fail(ErrorCode::ArityMismatch, "a tuple needs at least one matrix (d >= 1)");
  const Field f = mats.front().field();
  const std::size_t n = mats.front().rows();
  return validate(f, n, std::move(mats));
}

CommutingTuple CommutingTuple::zero(Field field, std::size_t n, std::size_t d) {
  if (d == 0) fail(ErrorCode::ArityMismatch, "a tuple needs at least one matrix (d >= 1)");
  return CommutingTuple(field, n, std::vector<Matrix>(d, Matrix(field, n, n)));
}

GroupElement::GroupElement(Matrix g) : g_(std::move(g)) {
  if (!g_.is_square()) fail(ErrorCode::SingularG, "group element must be square");
  try {
    inv_ = cohn::inverse(g_);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularG) fail(ErrorCode::SingularG, "group element is singular");
    throw;
  }
}

GroupElement GroupElement::identity(Field f, std::size_t n) {
  return GroupElement(Matrix::identity(f, n), Matrix::identity(f, n));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.g_ * b.g_, b.inv_ * a.inv_);
}

GroupElement GroupElement::inverted() const { return GroupElement(inv_, g_); }

Staircase::Staircase(std::set<std::pair<std::size_t, std::size_t>> cells) : cells_(std::move(cells)) {
  for (const auto& [i, j] : cells_) {
    if ((i > 0 && !cells_.contains({i - 1, j})) || (j > 0 && !cells_.contains({i, j - 1})))
      fail(ErrorCode::NotYoungDiagram,
           "cell (" + std::to_string(i) + "," + std::to_string(j) + ") has a missing predecessor",
           {{"cell", {i, j}}});
  }
}

Staircase Staircase::from_row_lengths(const std::vector<std::size_t>& lengths) {
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t j = 0; j < lengths.size(); ++j)
    for (std::size_t i = 0; i < lengths[j]; ++i) cells.insert({i, j});
  return Staircase(std::move(cells));
}

bool check_relations(const CommutingTuple& t, const std::vector<MultiPoly>& relations) {
  for (const auto& f : relations) {
    if (f.variables() != t.d())
      fail(ErrorCode::ArityMismatch, "relation in " + std::to_string(f.variables()) + " variables for a tuple with d = " +
                                         std::to_string(t.d()));
    if (!eval_multipoly(f, t.mats()).is_zero()) return false;
  }
  return true;
}

bool is_punctual(const CommutingTuple& t) {
  for (const auto& a : t.mats())
    if (!pow(a, t.n()).is_zero()) return false;
  return true;
}

CommutingTuple conjugate(const CommutingTuple& t, const GroupElement& g) {
  if (g.n() != t.n()) fail(ErrorCode::SizeMismatch, "group element has the wrong size");
  if (!(g.matrix().field() == t.field())) fail(ErrorCode::MixedFields, "group element over another field");
  std::vector<Matrix> out;
  out.reserve(t.d());
  for (const auto& a : t.mats()) out.push_back(g.matrix() * a * g.inverse());
  return assume_commuting(t.field(), t.n(), std::move(out));
}

CommutingTuple direct_sum(const CommutingTuple& s, const CommutingTuple& t) {
  if (s.d() != t.d()) fail(ErrorCode::ArityMismatch, "direct sum of tuples with different d");
  if (!(s.field() == t.field())) fail(ErrorCode::MixedFields, "direct sum of tuples over different fields");
  std::vector<Matrix> out;
  out.reserve(s.d());
  for (std::size_t i = 0; i < s.d(); ++i) out.push_back(block_diagonal(s[i], t[i]));
  return assume_commuting(s.field(), s.n() + t.n(), std::move(out));
}

CommutingTuple translate(const CommutingTuple& t, const std::vector<Scalar>& shift) {
  if (shift.size() != t.d()) fail(ErrorCode::ArityMismatch, "translation vector has the wrong length");
  std::vector<Matrix> out;
  out.reserve(t.d());
  const Matrix id = Matrix::identity(t.field(), t.n());
  for (std::size_t i = 0; i < t.d(); ++i) out.push_back(t[i] + id * shift[i]);
  return assume_commuting(t.field(), t.n(), std::move(out));
}

namespace {

void require_triple(const std::vector<Matrix>& triple) {
  if (triple.size() != 3) fail(ErrorCode::ArityMismatch, "the trace potential needs exactly three matrices");
  const std::size_t n = triple[0].rows();
  for (const auto& m : triple) {
    if (!m.is_square() || m.rows() != n) fail(ErrorCode::SizeMismatch, "potential needs square matrices of equal size");
    if (!(m.field() == triple[0].field())) fail(ErrorCode::MixedFields, "potential over mixed fields");
  }
}

}  // namespace

Scalar trace_potential(const std::vector<Matrix>& triple) {
  require_triple(triple);
  return (triple[0] * commutator(triple[1], triple[2])).trace();
}

std::vector<Matrix> potential_gradient(const std::vector<Matrix>& triple) {
  require_triple(triple);
  return {commutator(triple[1], triple[2]).transpose(), commutator(triple[2], triple[0]).transpose(),
          commutator(triple[0], triple[1]).transpose()};
}

std::size_t tangent_space_dim(const CommutingTuple& t) {
  const std::size_t n = t.n(), d = t.d(), nn = n * n;
  if (d < 2 || n == 0) return d * nn;
  // Block row (i,j): -ad(A_j) X_i + ad(A_i) X_j = 0, with ad(A)X = AX - XA.
  // sylvester_operator(A, A) is X -> XA - AX = -ad(A).
  const std::size_t pairs = d * (d - 1) / 2;
  Matrix system(t.field(), pairs * nn, d * nn);
  std::size_t block = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j, ++block) {
      const Matrix neg_ad_j = sylvester_operator(t[j], t[j]);
      const Matrix neg_ad_i = sylvester_operator(t[i], t[i]);
      for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c) {
          system(block * nn + r, i * nn + c) = neg_ad_j(r, c);
          system(block * nn + r, j * nn + c) = -neg_ad_i(r, c);
        }
    }
  return d * nn - rank(system);
}

CommutingTuple from_staircase(const Staircase& s, Field f) {
  const std::vector<std::pair<std::size_t, std::size_t>> cells(s.cells().begin(), s.cells().end());
  const std::size_t n = cells.size();
  auto index_of = [&](std::pair<std::size_t, std::size_t> c) -> std::ptrdiff_t {
    auto it = s.cells().find(c);
    if (it == s.cells().end()) return -1;
    return std::distance(s.cells().begin(), it);
  };
  Matrix mx(f, n, n), my(f, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [i, j] = cells[k];
    if (auto to = index_of({i + 1, j}); to >= 0) mx(static_cast<std::size_t>(to), k) = Scalar::one(f);
    if (auto to = index_of({i, j + 1}); to >= 0) my(static_cast<std::size_t>(to), k) = Scalar::one(f);
  }
  return assume_commuting(f, n, {std::move(mx), std::move(my)});
}

CommutingTuple companion(const UniPoly& f) {
  if (!f.is_monic() || f.degree() < 1)
    fail(ErrorCode::NotMonic, "companion needs a monic polynomial of degree >= 1, got " + f.to_string());
  const std::size_t n = static_cast<std::size_t>(f.degree());
  Matrix c(f.field(), n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Scalar::one(f.field());
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return assume_commuting(f.field(), n, {std::move(c)});
}

}  // namespace cohn
