#include <algorithm>
#include <map>

#include "cohn/error.hpp"
#include "cohn/poly.hpp"

namespace cohn {

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    auto step = [&](mpz_class& v) {
      v = (v * v + c) % n;
    };
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  std::map<mpz_class, unsigned> factors;
  factor_into(abs(value), factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Divides out (t - r) as often as possible; returns the multiplicity.
std::size_t deflate(UniPoly& f, const Scalar& r) {
  const UniPoly lin = UniPoly::linear_root(r);
  std::size_t mult = 0;
  while (f.degree() >= 1 && f.evaluate(r).is_zero()) {
    f = f.divmod(lin).first;
    ++mult;
  }
  return mult;
}

RootSplit rational_roots(const UniPoly& f) {
  const Field q = f.field();
  RootSplit out{{}, UniPoly(q)};
  UniPoly work = f;
  // Root 0 first, then search the nonzero part.
  std::size_t zeros = 0;
  while (zeros < work.coefficients().size() && work.coeff(zeros).is_zero()) ++zeros;
  if (zeros > 0) {
    std::vector<Scalar> shifted(work.coefficients().begin() + static_cast<long>(zeros), work.coefficients().end());
    work = UniPoly(q, std::move(shifted));
  }
  std::vector<std::pair<Scalar, std::size_t>> found;
  if (zeros > 0) found.emplace_back(Scalar::zero(q), zeros);

  if (work.degree() >= 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : work.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class content = 0;
    for (const auto& c : work.coefficients()) {
      mpz_class v = c.rational().get_num() * (lcm_den / c.rational().get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      ints.push_back(v);
    }
    for (auto& v : ints) v /= content;
    // Cauchy bound on root magnitude.
    mpq_class bound = 0;
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
      mpq_class ratio(abs(ints[i]), abs(ints.back()));
      ratio.canonicalize();
      if (ratio > bound) bound = ratio;
    }
    bound += 1;
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    std::vector<mpq_class> candidates;
    for (const auto& a : nums)
      for (const auto& b : dens) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        mpq_class c(a, b);
        if (c > bound) continue;
        candidates.push_back(c);
        candidates.push_back(-c);
      }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& c : candidates) {
      if (work.degree() < 1) break;
      Scalar r(q, c);
      if (std::size_t m = deflate(work, r)) found.emplace_back(r, m);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.roots = std::move(found);
  out.unsplit = work.monic();
  return out;
}

RootSplit residue_roots(const UniPoly& f) {
  const Field fp = f.field();
  RootSplit out{{}, UniPoly(fp)};
  UniPoly work = f;
  for (std::uint64_t r = 0; r < fp.characteristic() && work.degree() >= 1; ++r) {
    Scalar x(fp, static_cast<long>(r));
    if (std::size_t m = deflate(work, x)) out.roots.emplace_back(x, m);
  }
  out.unsplit = work.monic();
  return out;
}

}  // namespace

RootSplit roots_with_multiplicity(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPoly, "roots of the zero polynomial");
  return f.field().is_rational() ? rational_roots(f) : residue_roots(f);
}

}  // namespace cohn
