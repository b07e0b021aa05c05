#include "qctw/polyform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qctw {

// --- Polynomial ------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t idx) {
  if (idx >= nvars) throw std::out_of_range("Polynomial::variable");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[idx] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                                  [](int e) { return e == 0; }));
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (qctw::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (qctw::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  if (o.nvars_ != 0 && o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, Rational(-c));
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero()) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Polynomial operator*(const Rational& s, const Polynomial& q) {
  Polynomial p(q.nvars_);
  if (qctw::is_zero(s)) return p;
  for (const auto& [e, c] : q.terms_) p.terms_.emplace(e, s * c);
  return p;
}

Polynomial Polynomial::derivative(std::size_t idx) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    p.add_term(d, Rational(c * e[idx]));
  }
  return p;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool monomial_is_one = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    const Rational mag = abs(c);
    if (mag != 1 || monomial_is_one) os << mag.get_str() << (monomial_is_one ? "" : "*");
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << '*';
      os << names.at(i);
      if (e[i] > 1) os << '^' << e[i];
      first_factor = false;
    }
    first = false;
  }
  return os.str();
}

// --- vector fields -----------------------------------------------------------

VectorField coordinate_field(std::size_t nvars, std::size_t idx) {
  VectorField v(nvars, Polynomial(nvars));
  v.at(idx) = Polynomial::constant(nvars, Rational(1));
  return v;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("VectorField sum: dimension mismatch");
  VectorField v(a);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

VectorField scale(const Polynomial& f, const VectorField& v) {
  VectorField out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f * v[i];
  return out;
}

// --- PolyForm ----------------------------------------------------------------

namespace {

/// Sorted union of disjoint index sets with the sign of the merging permutation;
/// sign 0 when they intersect.
int merge_indices(const PolyForm::Indices& a, const PolyForm::Indices& b, PolyForm::Indices& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the a's not yet placed
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return sign;
}

}  // namespace

PolyForm PolyForm::function(const Polynomial& f) {
  PolyForm w(f.nvars(), 0);
  w.add_term({}, f);
  return w;
}

PolyForm PolyForm::differential(std::size_t nvars, std::size_t idx) {
  if (idx >= nvars) throw std::out_of_range("PolyForm::differential");
  PolyForm w(nvars, 1);
  w.add_term({idx}, Polynomial::constant(nvars, Rational(1)));
  return w;
}

Polynomial PolyForm::coefficient(const Indices& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

void PolyForm::add_term(const Indices& idx, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (nvars_ != o.nvars_ || degree_ != o.degree_) {
    if (o.is_zero()) return *this;
    if (is_zero() && terms_.empty() && nvars_ == 0) {
      *this = o;
      return *this;
    }
    throw std::invalid_argument("PolyForm sum: degree or dimension mismatch");
  }
  for (const auto& [idx, p] : o.terms_) add_term(idx, p);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  return *this += Polynomial::constant(o.nvars_, Rational(-1)) * o;
}

PolyForm operator*(const Polynomial& f, const PolyForm& w) {
  PolyForm out(w.nvars_, w.degree_);
  for (const auto& [idx, p] : w.terms_) out.add_term(idx, f * p);
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("wedge: dimension mismatch");
  PolyForm out(a.nvars_, a.degree_ + b.degree_);
  PolyForm::Indices merged;
  for (const auto& [ia, pa] : a.terms_) {
    for (const auto& [ib, pb] : b.terms_) {
      const int sign = merge_indices(ia, ib, merged);
      if (sign == 0) continue;
      out.add_term(merged, Rational(sign) * (pa * pb));
    }
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& w) {
  PolyForm out(w.nvars_, w.degree_ + 1);
  PolyForm::Indices merged;
  for (const auto& [idx, p] : w.terms_) {
    for (std::size_t v = 0; v < w.nvars_; ++v) {
      const Polynomial dp = p.derivative(v);
      if (dp.is_zero()) continue;
      const int sign = merge_indices({v}, idx, merged);
      if (sign == 0) continue;
      out.add_term(merged, Rational(sign) * dp);
    }
  }
  return out;
}

PolyForm interior(const VectorField& v, const PolyForm& w) {
  if (v.size() != w.nvars_) throw std::invalid_argument("interior: dimension mismatch");
  if (w.degree_ == 0) return PolyForm(w.nvars_, 0);
  PolyForm out(w.nvars_, w.degree_ - 1);
  for (const auto& [idx, p] : w.terms_) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Polynomial& comp = v[idx[pos]];
      if (comp.is_zero()) continue;
      PolyForm::Indices rest;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != pos) rest.push_back(idx[k]);
      const Rational sign = pos % 2 == 0 ? 1 : -1;
      out.add_term(rest, sign * (comp * p));
    }
  }
  return out;
}

Polynomial evaluate(const PolyForm& w, const std::vector<VectorField>& fields) {
  if (fields.size() != w.degree()) throw std::invalid_argument("evaluate: need one field per degree");
  PolyForm cur = w;
  for (const auto& f : fields) cur = interior(f, cur);
  return cur.coefficient({});
}

std::string PolyForm::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, p] : terms_) {
    if (!first) os << " + ";
    os << '(' << p.to_string(names) << ')';
    for (std::size_t k : idx) os << (k == idx.front() ? " " : "^") << 'd' << names.at(k);
    first = false;
  }
  return os.str();
}

}  // namespace qctw
