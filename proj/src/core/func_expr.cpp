#include "func_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace weilcalc {

namespace {

bool all_zero(const std::vector<long>& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

std::vector<long> negated(const std::vector<long>& v) {
  std::vector<long> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

// Frequency vectors are normalized so the first nonzero entry is positive;
// returns the sign change this induces on sin terms.
int normalize_freq(std::vector<long>& k) {
  for (long x : k) {
    if (x > 0) return 1;
    if (x < 0) {
      k = negated(k);
      return -1;
    }
  }
  return 1;
}

std::vector<long> freq_sum(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<long> freq_diff(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

}  // namespace

void FuncExpr::check_same_model(const FuncExpr& f, const FuncExpr& g) {
  if (!same_model(f.model_, g.model_))
    throw std::invalid_argument("FuncExpr model mismatch");
}

void FuncExpr::add_term(const Term& t, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FuncExpr FuncExpr::constant(const ModelPtr& m, const Rat& c) {
  FuncExpr f(m);
  if (c == 0) return f;
  if (m->kind == ModelKind::Torus) {
    f.add_term(Term{Term::One, {}}, c);
  } else {
    f.add_term(Term{Term::Mono, std::vector<long>(m->dim, 0)}, c);
  }
  return f;
}

FuncExpr FuncExpr::coordinate(const ModelPtr& m, int i) {
  if (m->kind != ModelKind::Affine)
    throw std::invalid_argument("coordinate functions live on affine models only");
  if (i < 0 || i >= m->dim) throw std::out_of_range("coordinate index");
  std::vector<long> e(m->dim, 0);
  e[i] = 1;
  return monomial(m, e, 1);
}

FuncExpr FuncExpr::monomial(const ModelPtr& m, const std::vector<long>& exps, const Rat& c) {
  if (m->kind != ModelKind::Affine)
    throw std::invalid_argument("monomials live on affine models only");
  if (static_cast<int>(exps.size()) != m->dim) throw std::invalid_argument("exponent size");
  for (long e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  FuncExpr f(m);
  f.add_term(Term{Term::Mono, exps}, c);
  return f;
}

FuncExpr FuncExpr::cosine(const ModelPtr& m, const std::vector<long>& freq, const Rat& c) {
  if (m->kind != ModelKind::Torus)
    throw std::invalid_argument("trigonometric atoms live on torus models only");
  if (static_cast<int>(freq.size()) != m->dim) throw std::invalid_argument("frequency size");
  FuncExpr f(m);
  std::vector<long> k = freq;
  if (all_zero(k)) {
    f.add_term(Term{Term::One, {}}, c);
  } else {
    normalize_freq(k);
    f.add_term(Term{Term::Cos, k}, c);
  }
  return f;
}

FuncExpr FuncExpr::sine(const ModelPtr& m, const std::vector<long>& freq, const Rat& c) {
  if (m->kind != ModelKind::Torus)
    throw std::invalid_argument("trigonometric atoms live on torus models only");
  if (static_cast<int>(freq.size()) != m->dim) throw std::invalid_argument("frequency size");
  FuncExpr f(m);
  std::vector<long> k = freq;
  if (all_zero(k)) return f;  // sin(0) = 0
  int s = normalize_freq(k);
  f.add_term(Term{Term::Sin, k}, s * c);
  return f;
}

bool FuncExpr::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Term& t = terms_.begin()->first;
  if (t.kind == Term::One) return true;
  if (t.kind == Term::Mono) return all_zero(t.data);
  return false;
}

FuncExpr FuncExpr::operator+(const FuncExpr& g) const {
  if (model_ == nullptr) return g;
  if (g.model_ == nullptr) return *this;
  check_same_model(*this, g);
  FuncExpr out = *this;
  for (const auto& [t, c] : g.terms_) out.add_term(t, c);
  return out;
}

FuncExpr FuncExpr::operator-() const { return scaled(-1); }

FuncExpr FuncExpr::operator-(const FuncExpr& g) const { return *this + (-g); }

FuncExpr FuncExpr::scaled(const Rat& c) const {
  FuncExpr out(model_);
  if (c == 0) return out;
  for (const auto& [t, co] : terms_) out.terms_.emplace(t, co * c);
  return out;
}

FuncExpr FuncExpr::operator*(const FuncExpr& g) const {
  check_same_model(*this, g);
  FuncExpr out(model_);
  if (model_->kind == ModelKind::Affine) {
    for (const auto& [ta, ca] : terms_)
      for (const auto& [tb, cb] : g.terms_) {
        std::vector<long> e(model_->dim);
        for (int i = 0; i < model_->dim; ++i) e[i] = ta.data[i] + tb.data[i];
        out.add_term(Term{Term::Mono, e}, ca * cb);
      }
    return out;
  }
  // Torus: products of atoms are rewritten to the canonical basis via the
  // product-to-sum identities, keeping all coefficients rational.
  const Rat half(1, 2);
  auto add_cos = [&](const std::vector<long>& k, const Rat& c) {
    if (c == 0) return;
    if (all_zero(k)) {
      out.add_term(Term{Term::One, {}}, c);
    } else {
      std::vector<long> kk = k;
      normalize_freq(kk);
      out.add_term(Term{Term::Cos, kk}, c);
    }
  };
  auto add_sin = [&](const std::vector<long>& k, const Rat& c) {
    if (c == 0 || all_zero(k)) return;
    std::vector<long> kk = k;
    int s = normalize_freq(kk);
    out.add_term(Term{Term::Sin, kk}, s * c);
  };
  for (const auto& [ta, ca] : terms_)
    for (const auto& [tb, cb] : g.terms_) {
      const Rat c = ca * cb;
      if (ta.kind == Term::One && tb.kind == Term::One) {
        out.add_term(Term{Term::One, {}}, c);
      } else if (ta.kind == Term::One) {
        if (tb.kind == Term::Cos)
          add_cos(tb.data, c);
        else
          add_sin(tb.data, c);
      } else if (tb.kind == Term::One) {
        if (ta.kind == Term::Cos)
          add_cos(ta.data, c);
        else
          add_sin(ta.data, c);
      } else if (ta.kind == Term::Cos && tb.kind == Term::Cos) {
        // cos a cos b = 1/2 cos(a-b) + 1/2 cos(a+b)
        add_cos(freq_diff(ta.data, tb.data), c * half);
        add_cos(freq_sum(ta.data, tb.data), c * half);
      } else if (ta.kind == Term::Sin && tb.kind == Term::Sin) {
        // sin a sin b = 1/2 cos(a-b) - 1/2 cos(a+b)
        add_cos(freq_diff(ta.data, tb.data), c * half);
        add_cos(freq_sum(ta.data, tb.data), -c * half);
      } else if (ta.kind == Term::Sin && tb.kind == Term::Cos) {
        // sin a cos b = 1/2 sin(a+b) + 1/2 sin(a-b)
        add_sin(freq_sum(ta.data, tb.data), c * half);
        add_sin(freq_diff(ta.data, tb.data), c * half);
      } else {
        // cos a sin b = 1/2 sin(a+b) - 1/2 sin(a-b)
        add_sin(freq_sum(ta.data, tb.data), c * half);
        add_sin(freq_diff(ta.data, tb.data), -c * half);
      }
    }
  return out;
}

FuncExpr FuncExpr::partial(int i) const {
  if (i < 0 || i >= model_->dim) throw std::out_of_range("partial: coordinate index");
  FuncExpr out(model_);
  for (const auto& [t, c] : terms_) {
    switch (t.kind) {
      case Term::One:
        break;
      case Term::Mono:
        if (t.data[i] > 0) {
          std::vector<long> e = t.data;
          e[i] -= 1;
          out.add_term(Term{Term::Mono, e}, c * t.data[i]);
        }
        break;
      case Term::Cos:
        if (t.data[i] != 0) out.add_term(Term{Term::Sin, t.data}, -c * t.data[i]);
        break;
      case Term::Sin:
        if (t.data[i] != 0) out.add_term(Term{Term::Cos, t.data}, c * t.data[i]);
        break;
    }
  }
  return out;
}

Rat FuncExpr::mean_value() const {
  if (!model_ || model_->kind != ModelKind::Torus)
    throw std::domain_error("mean_value is defined on torus models only");
  auto it = terms_.find(Term{Term::One, {}});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat FuncExpr::value_at_origin() const {
  Rat v = 0;
  for (const auto& [t, c] : terms_) {
    switch (t.kind) {
      case Term::One:
      case Term::Cos:
        v += c;
        break;
      case Term::Mono:
        if (all_zero(t.data)) v += c;
        break;
      case Term::Sin:
        break;
    }
  }
  return v;
}

Rat FuncExpr::constant_value() const {
  if (!is_constant()) throw std::domain_error("FuncExpr is not constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::string FuncExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;

    std::string body;
    if (t.kind == Term::Mono && !all_zero(t.data)) {
      std::ostringstream bs;
      bool firstv = true;
      for (int i = 0; i < model_->dim; ++i) {
        if (t.data[i] == 0) continue;
        if (!firstv) bs << "*";
        firstv = false;
        bs << model_->coords[i];
        if (t.data[i] > 1) bs << "^" << t.data[i];
      }
      body = bs.str();
    } else if (t.kind == Term::Cos || t.kind == Term::Sin) {
      std::ostringstream bs;
      bs << (t.kind == Term::Cos ? "cos(" : "sin(");
      bool firstv = true;
      for (int i = 0; i < model_->dim; ++i) {
        long k = t.data[i];
        if (k == 0) continue;
        if (firstv) {
          if (k < 0) bs << "-";
        } else {
          bs << (k < 0 ? " - " : " + ");
        }
        firstv = false;
        long ak = k < 0 ? -k : k;
        if (ak != 1) bs << ak << "*";
        bs << model_->coords[i];
      }
      bs << ")";
      body = bs.str();
    }

    if (body.empty()) {
      os << to_string(a);
    } else if (a == 1) {
      os << body;
    } else {
      os << to_string(a) << "*" << body;
    }
  }
  return os.str();
}

}  // namespace weilcalc
