#include "cohn/cycle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cohn/error.hpp"
#include "cohn/linalg.hpp"

namespace cohn {

std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.coords[i] <=> b.coords[i]; c != 0) return c;
  return a.coords.size() <=> b.coords.size();
}

Cycle Cycle::from_entries(std::vector<CycleEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.point < y.point; });
  Cycle c;
  for (auto& e : entries) {
    if (e.multiplicity == 0) continue;
    if (!c.entries_.empty() && c.entries_.back().point == e.point)
      c.entries_.back().multiplicity += e.multiplicity;
    else
      c.entries_.push_back(std::move(e));
  }
  return c;
}

std::size_t Cycle::degree() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

Cycle Cycle::shifted(const std::vector<Scalar>& by) const {
  std::vector<CycleEntry> out = entries_;
  for (auto& e : out) {
    if (e.point.coords.size() != by.size()) fail(ErrorCode::ArityMismatch, "shift vector has the wrong length");
    for (std::size_t i = 0; i < by.size(); ++i) e.point.coords[i] += by[i];
  }
  return from_entries(std::move(out));
}

Cycle operator+(const Cycle& a, const Cycle& b) {
  std::vector<CycleEntry> all = a.entries_;
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return Cycle::from_entries(std::move(all));
}

std::size_t Partition::weight() const noexcept {
  std::size_t w = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) w += (i + 1) * alpha[i];
  return w;
}

std::string Partition::notation() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!first) os << " ";
    os << (i + 1) << "^" << alpha[i];
    first = false;
  }
  os << ")";
  return os.str();
}

std::vector<std::vector<Scalar>> separating_candidates(Field f, std::size_t d, std::size_t budget) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < d && out.size() < budget; ++i) {
    std::vector<Scalar> c(d, Scalar(f));
    c[i] = Scalar::one(f);
    out.push_back(std::move(c));
  }
  for (long k = 1; out.size() < budget; ++k) {
    std::vector<Scalar> c;
    Scalar power = Scalar::one(f);
    const Scalar base(f, k);
    for (std::size_t i = 0; i < d; ++i) {
      c.push_back(power);
      power *= base;
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct Piece {
  ClosedPoint point;
  Matrix basis;  // n x m, columns span the joint generalized eigenspace
  std::vector<Matrix> restricted;
};

struct Decomposition {
  SupportStatus status = SupportStatus::Split;
  std::vector<std::size_t> unsplit_degrees;
  std::vector<Piece> pieces;  // sorted by point
};

enum class Attempt { Separated, NotSeparating, NotSplit };

Attempt try_form(const CommutingTuple& t, const std::vector<Scalar>& c, Decomposition& out) {
  const Field f = t.field();
  const std::size_t n = t.n();
  Matrix l(f, n, n);
  for (std::size_t i = 0; i < t.d(); ++i)
    if (!c[i].is_zero()) l += t[i] * c[i];
  const RootSplit split = roots_with_multiplicity(char_poly(l));
  if (split.unsplit.degree() > 0) {
    out.unsplit_degrees = {static_cast<std::size_t>(split.unsplit.degree())};
    return Attempt::NotSplit;
  }
  std::vector<Piece> pieces;
  const Matrix id = Matrix::identity(f, n);
  for (const auto& [lambda, mult] : split.roots) {
    const Matrix nil = pow(l - id * lambda, n);
    const Matrix basis = Matrix::from_columns(f, n, kernel_basis(nil));
    if (basis.cols() != mult) throw std::logic_error("generalized eigenspace dimension differs from multiplicity");
    Piece piece{ClosedPoint{}, basis, {}};
    for (std::size_t i = 0; i < t.d(); ++i) {
      auto r = solve_full_column_rank(basis, t[i] * basis);
      if (!r) throw std::logic_error("generalized eigenspace is not invariant");
      const RootSplit ri = roots_with_multiplicity(char_poly(*r));
      if (ri.unsplit.degree() > 0) {
        out.unsplit_degrees = {static_cast<std::size_t>(ri.unsplit.degree())};
        return Attempt::NotSplit;
      }
      if (ri.roots.size() != 1) return Attempt::NotSeparating;
      piece.point.coords.push_back(ri.roots.front().first);
      piece.restricted.push_back(std::move(*r));
    }
    pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.point < b.point; });
  out.pieces = std::move(pieces);
  return Attempt::Separated;
}

Decomposition decompose(const CommutingTuple& t, const CycleOptions& opts) {
  Decomposition out;
  for (const auto& c : separating_candidates(t.field(), t.d(), opts.genericity_budget)) {
    switch (try_form(t, c, out)) {
      case Attempt::Separated:
        out.status = SupportStatus::Split;
        return out;
      case Attempt::NotSplit:
        out.status = SupportStatus::NotSplit;
        return out;
      case Attempt::NotSeparating:
        break;
    }
  }
  out.status = SupportStatus::GenericityExhausted;
  return out;
}

[[noreturn]] void raise(const Decomposition& dec, const CycleOptions& opts) {
  if (dec.status == SupportStatus::NotSplit)
    fail(ErrorCode::NotSplit, "support is not defined over the base field", {{"unsplit_degrees", dec.unsplit_degrees}});
  fail(ErrorCode::GenericityExhausted,
       "no separating linear form among " + std::to_string(opts.genericity_budget) + " candidates",
       {{"budget", opts.genericity_budget}});
}

Cycle to_cycle(const Decomposition& dec) {
  std::vector<CycleEntry> entries;
  for (const auto& p : dec.pieces) entries.push_back({p.point, p.basis.cols()});
  return Cycle::from_entries(std::move(entries));
}

}  // namespace

SupportOutcome try_cycle(const CommutingTuple& t, const CycleOptions& opts) {
  Decomposition dec = decompose(t, opts);
  SupportOutcome out;
  out.status = dec.status;
  out.unsplit_degrees = dec.unsplit_degrees;
  if (dec.status == SupportStatus::Split) out.cycle = to_cycle(dec);
  return out;
}

Cycle cycle(const CommutingTuple& t, const CycleOptions& opts) {
  Decomposition dec = decompose(t, opts);
  if (dec.status != SupportStatus::Split) raise(dec, opts);
  return to_cycle(dec);
}

Partition stratum(const Cycle& c) {
  Partition p;
  p.alpha.assign(c.degree(), 0);
  for (const auto& e : c.entries()) ++p.alpha[e.multiplicity - 1];
  return p;
}

CommutingTuple LocalSummand::recentered() const {
  std::vector<Scalar> back;
  for (const auto& x : point.coords) back.push_back(-x);
  return translate(block, back);
}

Localization localize(const CommutingTuple& t, const CycleOptions& opts) {
  Decomposition dec = decompose(t, opts);
  if (dec.status != SupportStatus::Split) raise(dec, opts);
  std::vector<Matrix> columns;
  std::vector<LocalSummand> summands;
  for (auto& p : dec.pieces) {
    columns.push_back(p.basis);
    const std::size_t m = p.basis.cols();
    summands.push_back({p.point, assume_commuting(t.field(), m, std::move(p.restricted))});
  }
  Matrix g_inv = columns.empty() ? Matrix(t.field(), 0, 0) : hstack(columns);
  GroupElement g = GroupElement(g_inv).inverted();
  return Localization{std::move(g), std::move(summands)};
}

Scalar det_pushforward(const MultiPoly& f, const CommutingTuple& t) {
  if (f.variables() != t.d())
    fail(ErrorCode::ArityMismatch, "polynomial in " + std::to_string(f.variables()) + " variables for d = " +
                                       std::to_string(t.d()));
  return det(eval_multipoly(f, t.mats()));
}

}  // namespace cohn
