#include "cohn/census.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cohn/error.hpp"
#include "cohn/fp_dense.hpp"
#include "cohn/linalg.hpp"

namespace cohn {

std::string CensusFilter::name() const {
  std::string out;
  auto add = [&](const char* part) {
    if (!out.empty()) out += "+";
    out += part;
  };
  if (nilpotent) add("nilpotent");
  if (per_stratum) add("strata");
  if (!relations.empty()) add("relations");
  return out.empty() ? "all" : out;
}

mpz_class gl_order(std::size_t n, std::uint64_t q) {
  mpz_class qn, qi = 1, order = 1;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
  for (std::size_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

namespace {

using fp::Flat;

void check_request(const CensusRequest& req) {
  if (!is_prime_u64(req.q) || req.q >= (std::uint64_t{1} << 31))
    fail(ErrorCode::NonprimeQ, "q = " + std::to_string(req.q) + " is not a supported prime",
         {{"q", std::to_string(req.q)}});
  if (req.d == 0) fail(ErrorCode::ArityMismatch, "census needs d >= 1");
  for (const auto& r : req.filter.relations)
    if (r.variables() != req.d) fail(ErrorCode::ArityMismatch, "relation arity differs from d");
  mpz_class work;
  mpz_ui_pow_ui(work.get_mpz_t(), req.q, req.d * req.n * req.n);
  if (work > req.budget)
    fail(ErrorCode::BudgetExceeded, "q^(d n^2) = " + work.get_str() + " exceeds the census budget " + req.budget.get_str(),
         {{"work", work.get_str()}, {"budget", req.budget.get_str()}});
}

// Calls fn on every element of span(basis) (all q^k coefficient vectors).
void for_each_in_span(const std::vector<Flat>& basis, std::size_t len, const simd::Modulus& m,
                      const std::function<void(const Flat&)>& fn) {
  const std::size_t k = basis.size();
  Flat x(len, 0);
  std::vector<std::uint32_t> digits(k, 0);
  for (;;) {
    fn(x);
    std::size_t pos = k;
    for (;;) {
      if (pos == 0) return;
      --pos;
      simd::axpy_mod(x, basis[pos], 1, m);
      if (++digits[pos] < m.p) break;
      digits[pos] = 0;  // q copies of W_pos added: x is back to its prior value
    }
  }
}

Matrix to_matrix(const Flat& a, std::size_t n, Field f) {
  Matrix m(f, n, n);
  for (std::size_t e = 0; e < n * n; ++e) m(e / n, e % n) = Scalar(f, static_cast<long>(a[e]));
  return m;
}

CommutingTuple to_tuple(const std::vector<Flat>& mats, std::size_t n, Field f) {
  std::vector<Matrix> out;
  for (const auto& a : mats) out.push_back(to_matrix(a, n, f));
  return assume_commuting(f, n, std::move(out));
}

class Walker {
 public:
  Walker(const CensusRequest& req, bool need_leaves)
      : req_(req), m_(static_cast<std::uint32_t>(req.q)), nn_(req.n * req.n), need_leaves_(need_leaves) {}

  // Leaf callback gets the full tuple; bulk callback gets a count of
  // unfiltered completions (q^dim of the last common centralizer).
  std::function<void(const std::vector<Flat>&)> on_leaf;
  std::function<void(const mpz_class&)> on_bulk;

  void run() {
    std::vector<Flat> all;
    for (std::size_t e = 0; e < nn_; ++e) {
      Flat u(nn_, 0);
      u[e] = 1;
      all.push_back(std::move(u));
    }
    prefix_.clear();
    descend(all);
  }

 private:
  void descend(const std::vector<Flat>& basis) {
    const std::size_t level = prefix_.size();
    if (level + 1 == req_.d && !need_leaves_) {
      mpz_class c;
      mpz_ui_pow_ui(c.get_mpz_t(), req_.q, basis.size());
      on_bulk(c);
      return;
    }
    for_each_in_span(basis, nn_, m_, [&](const Flat& x) {
      if (req_.filter.nilpotent && !fp::is_nilpotent(x, req_.n, m_)) return;
      prefix_.push_back(x);
      if (level + 1 == req_.d)
        on_leaf(prefix_);
      else
        descend(fp::centralizer_within(basis, x, req_.n, m_));
      prefix_.pop_back();
    });
  }

  const CensusRequest& req_;
  simd::Modulus m_;
  std::size_t nn_;
  bool need_leaves_;
  std::vector<Flat> prefix_;
};

}  // namespace

CensusResult enumerate(const CensusRequest& req) {
  check_request(req);
  const Field f = Field::prime(req.q);
  CensusResult out;
  out.gl_order = gl_order(req.n, req.q);
  if (req.filter.per_stratum) out.per_stratum.emplace();
  const bool need_leaves = req.filter.nilpotent || req.filter.per_stratum || !req.filter.relations.empty();
  Walker walker(req, need_leaves);
  walker.on_bulk = [&](const mpz_class& c) { out.raw_count += c; };
  walker.on_leaf = [&](const std::vector<Flat>& mats) {
    if (!req.filter.relations.empty() || req.filter.per_stratum) {
      const CommutingTuple t = to_tuple(mats, req.n, f);
      if (!req.filter.relations.empty() && !check_relations(t, req.filter.relations)) return;
      if (req.filter.per_stratum) {
        const SupportOutcome s = try_cycle(t, req.cycle);
        if (s.status == SupportStatus::Split)
          (*out.per_stratum)[stratum(s.cycle)] += 1;
        else
          out.unsplit_count += 1;
      }
    }
    out.raw_count += 1;
  };
  walker.run();
  out.groupoid_count = mpq_class(out.raw_count, out.gl_order);
  out.groupoid_count.canonicalize();
  return out;
}

std::vector<OrbitRecord> orbit_census(const CensusRequest& req) {
  check_request(req);
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), req.q, req.d * req.n * req.n);
  if (space >= (mpz_class(1) << 63))
    fail(ErrorCode::BudgetExceeded, "tuple space too large to encode", {{"work", space.get_str()}});
  const Field f = Field::prime(req.q);
  const simd::Modulus m(static_cast<std::uint32_t>(req.q));
  const std::size_t n = req.n, nn = n * n, d = req.d;

  auto encode = [&](const std::vector<Flat>& mats) {
    std::uint64_t code = 0;
    for (std::size_t i = d; i-- > 0;)
      for (std::size_t e = nn; e-- > 0;) code = code * req.q + mats[i][e];
    return code;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<Flat> mats(d, Flat(nn));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t e = 0; e < nn; ++e) {
        mats[i][e] = static_cast<std::uint32_t>(code % req.q);
        code /= req.q;
      }
    return mats;
  };

  // Orbits are computed on the unfiltered commuting variety; the filters are
  // only checked for constancy along each orbit.
  CensusRequest all = req;
  all.filter = CensusFilter{};
  std::vector<std::uint64_t> codes;
  Walker walker(all, true);
  walker.on_leaf = [&](const std::vector<Flat>& mats) { codes.push_back(encode(mats)); };
  walker.run();
  std::sort(codes.begin(), codes.end());

  std::vector<std::pair<Flat, Flat>> group;  // (g, g^-1)
  {
    std::vector<Flat> units;
    for (std::size_t e = 0; e < nn; ++e) {
      Flat u(nn, 0);
      u[e] = 1;
      units.push_back(std::move(u));
    }
    for_each_in_span(units, nn, m, [&](const Flat& g) {
      const Matrix gm = to_matrix(g, n, f);
      if (!is_invertible(gm)) return;
      const Matrix inv = inverse(gm);
      Flat gi(nn);
      for (std::size_t e = 0; e < nn; ++e) gi[e] = inv(e / n, e % n).residue();
      group.emplace_back(g, std::move(gi));
    });
  }
  const mpz_class order = gl_order(n, req.q);
  if (mpz_class(static_cast<unsigned long>(group.size())) != order)
    throw std::logic_error("enumerated GL_n has the wrong order");

  auto nilpotent = [&](const std::vector<Flat>& mats) {
    for (const auto& a : mats)
      if (!fp::is_nilpotent(a, n, m)) return false;
    return true;
  };
  auto related = [&](const std::vector<Flat>& mats) {
    return req.filter.relations.empty() || check_relations(to_tuple(mats, n, f), req.filter.relations);
  };

  std::vector<bool> seen(codes.size(), false);
  std::vector<OrbitRecord> out;
  Flat tmp(nn);
  for (std::size_t idx = 0; idx < codes.size(); ++idx) {
    if (seen[idx]) continue;
    const std::vector<Flat> rep = decode(codes[idx]);
    std::vector<std::uint64_t> orbit;
    std::size_t stabilizer = 0;
    for (const auto& [g, gi] : group) {
      std::vector<Flat> moved(d, Flat(nn));
      for (std::size_t i = 0; i < d; ++i) {
        fp::mul(tmp, g, rep[i], n, m);
        fp::mul(moved[i], tmp, gi, n, m);
      }
      const std::uint64_t c = encode(moved);
      if (c == codes[idx]) ++stabilizer;
      orbit.push_back(c);
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    const bool rep_nil = nilpotent(rep), rep_rel = related(rep);
    for (auto c : orbit) {
      auto it = std::lower_bound(codes.begin(), codes.end(), c);
      if (it == codes.end() || *it != c) throw std::logic_error("conjugate left the commuting variety");
      seen[static_cast<std::size_t>(it - codes.begin())] = true;
      const auto member = decode(c);
      if (nilpotent(member) != rep_nil || related(member) != rep_rel)
        throw std::logic_error("census filter is not constant on an orbit");
    }
    OrbitRecord rec{to_tuple(rep, n, f), mpz_class(static_cast<unsigned long>(orbit.size())),
                    mpz_class(static_cast<unsigned long>(stabilizer)), rep_nil};
    if (rec.orbit_size * rec.aut_order != order) throw std::logic_error("orbit-stabilizer identity failed");
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace cohn
