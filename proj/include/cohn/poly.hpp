#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohn/matrix.hpp"

namespace cohn {

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(Field f) : field_(f) {}
  UniPoly(Field f, std::vector<Scalar> ascending);
  static UniPoly from_ints(Field f, const std::vector<long>& ascending);
  static UniPoly monomial(Field f, std::size_t degree, Scalar coeff);
  // t - c
  static UniPoly linear_root(const Scalar& c);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(field_); }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  Scalar evaluate(const Scalar& x) const;
  Matrix evaluate(const Matrix& m) const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  // Euclidean division by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();

  Field field_;
  std::vector<Scalar> coeffs_;
};

UniPoly pow(const UniPoly& p, std::size_t e);

// Sparse multivariate polynomial in a fixed number of variables.
class MultiPoly {
 public:
  using Exponent = std::vector<std::uint32_t>;

  MultiPoly(Field f, std::size_t variables) : field_(f), vars_(variables) {}
  static MultiPoly constant(Field f, std::size_t variables, const Scalar& c);
  // The coordinate function x_{index} (0-based).
  static MultiPoly variable(Field f, std::size_t variables, std::size_t index);

  const Field& field() const noexcept { return field_; }
  std::size_t variables() const noexcept { return vars_; }
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds c * x^e; zero results are dropped. Throws ARITY_MISMATCH on a bad exponent length.
  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t vars_;
  std::map<Exponent, Scalar> terms_;
};

// f(A_1, ..., A_d); each monomial is the ordered product A_1^e1 ... A_d^ed.
// Commutation of the A_i is not assumed.
Matrix eval_multipoly(const MultiPoly& f, const std::vector<Matrix>& mats);

// det(tI - m) by the division-free Berkowitz recurrence; valid over every
// field including F_p with p <= n.
UniPoly char_poly(const Matrix& m);

struct RootSplit {
  std::vector<std::pair<Scalar, std::size_t>> roots;  // ascending, distinct
  UniPoly unsplit;                                    // monic, no roots in the base field
};

// Roots of f in the base field with multiplicity. Over Q: rational root
// search on the primitive integer form; over F_p: exhaustive evaluation.
RootSplit roots_with_multiplicity(const UniPoly& f);

}  // namespace cohn
