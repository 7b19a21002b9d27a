#include "cohn/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cohn/error.hpp"

namespace cohn {

UniPoly::UniPoly(Field f, std::vector<Scalar> ascending) : field_(f), coeffs_(std::move(ascending)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == f)) fail(ErrorCode::MixedFields, "polynomial coefficient over " + c.field().name());
  normalize();
}

UniPoly UniPoly::from_ints(Field f, const std::vector<long>& ascending) {
  std::vector<Scalar> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(f, v);
  return UniPoly(f, std::move(c));
}

UniPoly UniPoly::monomial(Field f, std::size_t degree, Scalar coeff) {
  std::vector<Scalar> c(degree + 1, Scalar(f));
  c[degree] = std::move(coeff);
  return UniPoly(f, std::move(c));
}

UniPoly UniPoly::linear_root(const Scalar& c) { return UniPoly(c.field(), {-c, Scalar::one(c.field())}); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::evaluate(const Scalar& x) const {
  Scalar acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix UniPoly::evaluate(const Matrix& m) const {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "polynomial evaluated at a non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x *= inv;
  return UniPoly(field_, std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (!(field_ == o.field_)) fail(ErrorCode::MixedFields, "polynomials over different fields");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (!(field_ == o.field_)) fail(ErrorCode::MixedFields, "polynomials over different fields");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) fail(ErrorCode::MixedFields, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(a.field_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_) || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) fail(ErrorCode::ZeroPoly, "division by the zero polynomial");
  UniPoly rem = *this;
  if (degree() < divisor.degree()) return {UniPoly(field_), rem};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1), Scalar(field_));
  const Scalar inv = divisor.leading().inverse();
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree()) - dd;
    const Scalar q = rem.leading() * inv;
    quot[shift] = q;
    for (std::size_t i = 0; i <= dd; ++i) rem.coeffs_[shift + i] -= q * divisor.coeffs_[i];
    rem.normalize();
  }
  return {UniPoly(field_, std::move(quot)), rem};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool neg = !s.empty() && s.front() == '-';
    if (neg) s.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    const bool unit = (s == "1");
    if (k == 0 || !unit) os << s;
    if (k > 0) os << (unit ? "" : "*") << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

UniPoly pow(const UniPoly& p, std::size_t e) {
  UniPoly result = UniPoly::from_ints(p.field(), {1});
  for (std::size_t i = 0; i < e; ++i) result = result * p;
  return result;
}

MultiPoly MultiPoly::constant(Field f, std::size_t variables, const Scalar& c) {
  MultiPoly p(f, variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Field f, std::size_t variables, std::size_t index) {
  if (index >= variables) fail(ErrorCode::ArityMismatch, "variable index out of range");
  MultiPoly p(f, variables);
  Exponent e(variables, 0);
  e[index] = 1;
  p.add_term(e, Scalar::one(f));
  return p;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != vars_) fail(ErrorCode::ArityMismatch, "exponent vector of wrong length");
  if (!(c.field() == field_)) fail(ErrorCode::MixedFields, "coefficient over " + c.field().name());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) fail(ErrorCode::ArityMismatch, "polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.vars_ != vars_) fail(ErrorCode::ArityMismatch, "polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) fail(ErrorCode::ArityMismatch, "polynomials in different numbers of variables");
  MultiPoly out(a.field_, a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponent e(a.vars_);
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != vars_) fail(ErrorCode::ArityMismatch, "evaluation point of wrong length");
  Scalar acc(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < vars_; ++i) term *= pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string s = c.to_string();
    bool neg = s.front() == '-';
    if (neg) s.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool wrote = false;
    if (constant || s != "1") {
      os << s;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (wrote ? "*" : "") << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

Matrix eval_multipoly(const MultiPoly& f, const std::vector<Matrix>& mats) {
  if (mats.size() != f.variables())
    fail(ErrorCode::ArityMismatch, "polynomial has " + std::to_string(f.variables()) + " variables but " +
                                       std::to_string(mats.size()) + " matrices were given");
  if (mats.empty()) fail(ErrorCode::SizeMismatch, "no matrices to evaluate at");
  const std::size_t n = mats.front().rows();
  for (const auto& m : mats) {
    if (!m.is_square() || m.rows() != n) fail(ErrorCode::SizeMismatch, "matrices must be square of equal size");
    if (!(m.field() == f.field())) fail(ErrorCode::MixedFields, "matrix over " + m.field().name());
  }
  std::vector<std::vector<Matrix>> powers(mats.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Matrix& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Matrix::identity(f.field(), n));
    while (cache.size() <= e) cache.push_back(cache.back() * mats[var]);
    return cache[e];
  };
  Matrix acc(f.field(), n, n);
  for (const auto& [e, c] : f.terms()) {
    Matrix term = Matrix::identity(f.field(), n);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    acc += term * c;
  }
  return acc;
}

UniPoly char_poly(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
  m.uniform_field();
  const Field f = m.field();
  const std::size_t n = m.rows();
  // Coefficients highest degree first.
  std::vector<Scalar> c{Scalar::one(f)};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // index of the new row/column
    std::vector<Scalar> toeplitz(r + 1, Scalar(f));
    toeplitz[0] = Scalar::one(f);
    toeplitz[1] = -m(k, k);
    // v = M^j R for the leading k x k block M and column R = m(0..k-1, k).
    Vector v(k, Scalar(f));
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t j = 0; j + 2 <= r; ++j) {
      Scalar s(f);
      for (std::size_t i = 0; i < k; ++i) s += m(k, i) * v[i];
      toeplitz[j + 2] = -s;
      if (j + 3 <= r) {
        Vector w(k, Scalar(f));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            if (!m(a, b).is_zero()) w[a] += m(a, b) * v[b];
        v = std::move(w);
      }
    }
    std::vector<Scalar> next(r + 1, Scalar(f));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j) next[i] += toeplitz[i - j] * c[j];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return UniPoly(f, std::move(c));
}

}  // namespace cohn
