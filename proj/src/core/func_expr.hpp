#pragma once

#include <map>
#include <vector>

#include "coord_model.hpp"
#include "rational.hpp"

namespace weilcalc {

// One basis element of the canonical form. On an affine model this is a
// monomial (exponent vector); on a torus it is 1, cos(k.x) or sin(k.x) with
// an integer frequency vector k, normalized so that the first nonzero entry
// of k is positive.
struct Term {
  enum Kind : unsigned char { One = 0, Mono = 1, Cos = 2, Sin = 3 };
  Kind kind = One;
  std::vector<long> data;

  friend bool operator<(const Term& a, const Term& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.data < b.data;
  }
  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.data == b.data;
  }
};

// Exact scalar function on a coordinate model: a polynomial with rational
// coefficients (affine), or a finite trigonometric polynomial (torus).
// Values are immutable and kept in a unique canonical form, so equality is
// structural comparison.
class FuncExpr {
 public:
  FuncExpr() = default;
  explicit FuncExpr(ModelPtr model) : model_(std::move(model)) {}

  static FuncExpr zero(const ModelPtr& m) { return FuncExpr(m); }
  static FuncExpr constant(const ModelPtr& m, const Rat& c);
  static FuncExpr coordinate(const ModelPtr& m, int i);  // affine only
  static FuncExpr monomial(const ModelPtr& m, const std::vector<long>& exps, const Rat& c);
  static FuncExpr cosine(const ModelPtr& m, const std::vector<long>& freq, const Rat& c = 1);
  static FuncExpr sine(const ModelPtr& m, const std::vector<long>& freq, const Rat& c = 1);

  const ModelPtr& model() const { return model_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Term, Rat>& terms() const { return terms_; }

  FuncExpr operator+(const FuncExpr& g) const;
  FuncExpr operator-(const FuncExpr& g) const;
  FuncExpr operator-() const;
  FuncExpr operator*(const FuncExpr& g) const;
  FuncExpr scaled(const Rat& c) const;
  FuncExpr& operator+=(const FuncExpr& g) { return *this = *this + g; }

  // Exact partial derivative with respect to coordinate i (0-based).
  FuncExpr partial(int i) const;

  // Constant Fourier coefficient; the integral over the torus equals
  // mean_value * (2*pi)^dim. Throws on affine models.
  Rat mean_value() const;

  // Value at the origin of the chart (x = 0).
  Rat value_at_origin() const;

  // Constant value; throws unless is_constant().
  Rat constant_value() const;

  // Canonical textual form, re-parsable by parse_expr.
  std::string str() const;

  friend bool operator==(const FuncExpr& f, const FuncExpr& g) {
    return same_model(f.model_, g.model_) && f.terms_ == g.terms_;
  }

 private:
  void add_term(const Term& t, const Rat& c);
  static void check_same_model(const FuncExpr& f, const FuncExpr& g);

  ModelPtr model_;
  std::map<Term, Rat> terms_;
};

inline FuncExpr operator*(const Rat& c, const FuncExpr& f) { return f.scaled(c); }

}  // namespace weilcalc
