#pragma once

// Differential forms with polynomial coefficients on R^m, exact over Q.

#include "qctw/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qctw {

class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t idx);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rational constant_term() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Polynomial derivative(std::size_t idx) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Components along the coordinate fields d/dx_0, ..., d/dx_{m-1}.
using VectorField = std::vector<Polynomial>;

VectorField coordinate_field(std::size_t nvars, std::size_t idx);
VectorField operator+(const VectorField& a, const VectorField& b);
VectorField scale(const Polynomial& f, const VectorField& v);

class PolyForm {
 public:
  using Indices = std::vector<std::size_t>;  ///< strictly increasing

  PolyForm() = default;
  PolyForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {}
  static PolyForm function(const Polynomial& f);
  /// dx_idx.
  static PolyForm differential(std::size_t nvars, std::size_t idx);

  std::size_t nvars() const { return nvars_; }
  std::size_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Indices, Polynomial>& terms() const { return terms_; }
  Polynomial coefficient(const Indices& idx) const;

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Polynomial& f, const PolyForm& w);
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

  friend PolyForm wedge(const PolyForm& a, const PolyForm& b);
  friend PolyForm exterior_derivative(const PolyForm& w);
  friend PolyForm interior(const VectorField& v, const PolyForm& w);

 private:
  void add_term(const Indices& idx, const Polynomial& p);

  std::size_t nvars_ = 0;
  std::size_t degree_ = 0;
  std::map<Indices, Polynomial> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& w);
/// Contraction v _| w.
PolyForm interior(const VectorField& v, const PolyForm& w);
/// w(v_1, ..., v_k) as a polynomial; k must equal the degree of w.
Polynomial evaluate(const PolyForm& w, const std::vector<VectorField>& fields);

}  // namespace qctw
