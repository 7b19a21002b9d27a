#include "cohn/isom.hpp"

#include <stdexcept>

#include "cohn/error.hpp"
#include "cohn/linalg.hpp"
#include "cohn/sampler.hpp"

namespace cohn {

namespace {

void require_compatible(const CommutingTuple& s, const CommutingTuple& t) {
  if (s.d() != t.d())
    fail(ErrorCode::ArityMismatch, "tuples have d = " + std::to_string(s.d()) + " and d = " + std::to_string(t.d()));
  if (!(s.field() == t.field()))
    fail(ErrorCode::MixedFields, "tuples over " + s.field().name() + " and " + t.field().name());
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeffs, const Matrix& zero) {
  Matrix m = zero;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!coeffs[j].is_zero()) m += basis[j] * coeffs[j];
  return m;
}

}  // namespace

HomSpace hom_basis(const CommutingTuple& s, const CommutingTuple& t) {
  require_compatible(s, t);
  const std::size_t ns = s.n(), nt = t.n();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < s.d(); ++i) blocks.push_back(sylvester_operator(s[i], t[i]));
  std::vector<Matrix> basis;
  for (const auto& v : kernel_basis(vstack(blocks))) {
    Matrix h(s.field(), nt, ns);
    for (std::size_t k = 0; k < v.size(); ++k) h(k / ns, k % ns) = v[k];
    basis.push_back(std::move(h));
  }
  return HomSpace{s, t, std::move(basis)};
}

std::size_t aut_dim(const CommutingTuple& t) { return hom_basis(t, t).dim(); }

std::size_t min_generators(const CommutingTuple& t) {
  if (!is_punctual(t)) fail(ErrorCode::NotPunctual, "minimal generator count is defined for punctual modules only");
  if (t.n() == 0) return 0;
  return t.n() - rank(hstack(t.mats()));
}

std::optional<GroupElement> is_isomorphic(const CommutingTuple& s, const CommutingTuple& t, const IsomOptions& opts) {
  require_compatible(s, t);
  if (s.n() != t.n()) return std::nullopt;
  const Field f = s.field();
  const std::size_t n = s.n();
  if (n == 0) return GroupElement::identity(f, 0);

  // Invariant fast paths; each rejection is sound.
  for (std::size_t i = 0; i < s.d(); ++i)
    if (!(char_poly(s[i]) == char_poly(t[i]))) return std::nullopt;
  const SupportOutcome cs = try_cycle(s, opts.cycle), ct = try_cycle(t, opts.cycle);
  if (cs.status == SupportStatus::Split && ct.status == SupportStatus::Split && !(cs.cycle == ct.cycle))
    return std::nullopt;
  const std::size_t as = aut_dim(s);
  if (as != aut_dim(t)) return std::nullopt;
  const HomSpace hom = hom_basis(s, t);
  if (hom.dim() != as) return std::nullopt;

  const Matrix zero(f, n, n);
  auto certify = [&](const Matrix& g) -> std::optional<GroupElement> {
    if (!is_invertible(g)) return std::nullopt;
    GroupElement cert(g);
    if (!(conjugate(s, cert) == t)) throw std::logic_error("isomorphism certificate failed verification");
    return cert;
  };

  const std::size_t k = hom.dim();
  const bool within_grid = k <= opts.grid_budget;
  Rng rng(opts.seed);
  const std::size_t trials = within_grid ? opts.pre_grid_trials : opts.random_trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Scalar> coeffs;
    for (std::size_t j = 0; j < k; ++j) coeffs.push_back(random_scalar(f, rng, 1000));
    if (auto cert = certify(combine(hom.basis, coeffs, zero))) return cert;
  }
  if (!within_grid)
    fail(ErrorCode::GridBudgetExceeded,
         "dim Hom = " + std::to_string(k) + " exceeds the grid budget " + std::to_string(opts.grid_budget),
         {{"hom_dim", k}, {"grid_budget", opts.grid_budget}, {"random_trials", opts.random_trials}});

  // A nonzero polynomial of degree n does not vanish on S^k when |S| > n;
  // over F_p with p <= n the grid is the whole of F_p^k, which is what
  // invertibility over F_p means.
  const std::uint64_t side = (f.is_prime() && f.characteristic() <= n) ? f.characteristic() : n + 1;
  std::vector<std::uint64_t> digits(k, 0);
  for (;;) {
    std::vector<Scalar> coeffs;
    for (auto dgt : digits) coeffs.emplace_back(f, static_cast<long>(dgt));
    if (auto cert = certify(combine(hom.basis, coeffs, zero))) return cert;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < side) break;
      digits[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

}  // namespace cohn
