#include "charpdyn/param_poly.hpp"

#include <stdexcept>

#include "charpdyn/errors.hpp"

namespace charpdyn {

ParamPoly::ParamPoly(FieldPtr field, std::vector<RatFunc> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("ParamPoly: null field");
  for (const auto& c : coeffs_)
    if (!c.field()->same_as(*field_)) throw FieldMismatch("ParamPoly: mixed coefficient fields");
  trim();
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc ParamPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return RatFunc::zero(field_);
  return coeffs_[static_cast<size_t>(i)];
}

bool ParamPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

RatFunc ParamPoly::eval(const RatFunc& lambda) const {
  RatFunc acc = RatFunc::zero(field_);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * lambda + coeffs_[i];
  return acc;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  if (!field_->same_as(*o.field_)) throw FieldMismatch("ParamPoly subtraction across fields");
  std::vector<RatFunc> out;
  const size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    RatFunc a = i < coeffs_.size() ? coeffs_[i] : RatFunc::zero(field_);
    RatFunc b = i < o.coeffs_.size() ? o.coeffs_[i] : RatFunc::zero(field_);
    out.push_back(a - b);
  }
  return ParamPoly(field_, std::move(out));
}

ParamPoly ParamPoly::minus_constant(const RatFunc& c) const {
  std::vector<RatFunc> out = coeffs_;
  if (out.empty()) out.push_back(RatFunc::zero(field_));
  out[0] = out[0] - c;
  return ParamPoly(field_, std::move(out));
}

bool ParamPoly::operator==(const ParamPoly& o) const {
  return field_->same_as(*o.field_) && coeffs_ == o.coeffs_;
}

std::string ParamPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs_[i].is_one();
    if (i == 0 || !unit) {
      std::string c = coeffs_[i].to_string();
      // parenthesize only multi-term or fractional coefficients
      if (c.find('+') != std::string::npos || c.find('/') != std::string::npos)
        c = "(" + c + ")";
      out += c;
    }
    if (i > 0) {
      if (!unit) out += "*";
      out += "L";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// (sum_j a_j t^j)^(p^e) = sum_j a_j^(p^e) t^(j*p^e): the Frobenius power of
// a polynomial is a relabeling with coefficient Frobenius.
PolyFq frobenius_power(const PolyFq& f, int e) {
  if (e == 0 || f.is_zero()) return f;
  int64_t stride = 1;
  for (int i = 0; i < e; ++i) stride *= f.field()->p();
  std::vector<FqElem> out(static_cast<size_t>(f.degree()) * stride + 1, FqElem::zero(f.field()));
  for (int j = 0; j <= f.degree(); ++j) {
    FqElem c = f.coeff(j);
    for (int i = 0; i < e; ++i) c = c.frobenius();
    out[static_cast<size_t>(j) * stride] = std::move(c);
  }
  return PolyFq(f.field(), out);
}

// Dense bivariate in (t, lambda): entry i is the t-polynomial coefficient
// of lambda^i.
using Bi = std::vector<PolyFq>;

Bi bi_mul_basecase(const Bi& a, const Bi& b, const FieldPtr& f) {
  Bi out(a.size() + b.size() - 1, PolyFq::zero(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

Bi bi_add(const Bi& x, const Bi& y, const FieldPtr& f) {
  Bi out(std::max(x.size(), y.size()), PolyFq::zero(f));
  for (size_t i = 0; i < x.size(); ++i) out[i] = out[i] + x[i];
  for (size_t i = 0; i < y.size(); ++i) out[i] = out[i] + y[i];
  return out;
}

void bi_acc(Bi& out, const Bi& x, size_t at, bool subtract) {
  for (size_t i = 0; i < x.size(); ++i)
    out[at + i] = subtract ? out[at + i] - x[i] : out[at + i] + x[i];
}

// Karatsuba on the lambda dimension; the t-coefficient products dominate,
// so saving cross multiplications pays even at modest sizes.
Bi bi_mul(const Bi& a, const Bi& b, const FieldPtr& f) {
  constexpr size_t kBasecaseMax = 16;
  if (std::min(a.size(), b.size()) <= kBasecaseMax) return bi_mul_basecase(a, b, f);
  const size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  const Bi a0(a.begin(), a.begin() + static_cast<ptrdiff_t>(std::min(h, a.size())));
  const Bi b0(b.begin(), b.begin() + static_cast<ptrdiff_t>(std::min(h, b.size())));
  const Bi a1 = a.size() > h ? Bi(a.begin() + static_cast<ptrdiff_t>(h), a.end()) : Bi{};
  const Bi b1 = b.size() > h ? Bi(b.begin() + static_cast<ptrdiff_t>(h), b.end()) : Bi{};

  Bi out(a.size() + b.size() - 1, PolyFq::zero(f));
  const Bi p0 = bi_mul(a0, b0, f);
  bi_acc(out, p0, 0, false);
  if (a1.empty() || b1.empty()) {
    // one factor fits below the split entirely; only one cross term remains
    bi_acc(out, a1.empty() ? bi_mul(a0, b1, f) : bi_mul(a1, b0, f), h, false);
    return out;
  }
  const Bi p2 = bi_mul(a1, b1, f);
  const Bi mid = bi_mul(bi_add(a0, a1, f), bi_add(b0, b1, f), f);
  bi_acc(out, mid, h, false);
  bi_acc(out, p0, h, true);
  bi_acc(out, p2, h, true);
  bi_acc(out, p2, 2 * h, false);
  return out;
}

// x^d with d = s*p^ell: a short prime-to-p power chain, then the cheap
// Frobenius relabeling (both in lambda-index and in each t-coefficient).
Bi bi_pow_d(const Bi& a, const DSplit& split, const FieldPtr& f) {
  Bi acc{PolyFq::one(f)};
  Bi base = a;
  int64_t s = split.s;
  while (s > 0) {
    if (s & 1) acc = bi_mul(acc, base, f);
    s >>= 1;
    if (s > 0) base = bi_mul(base, base, f);
  }
  if (split.ell == 0) return acc;
  int64_t stride = 1;
  for (int i = 0; i < split.ell; ++i) stride *= f->p();
  Bi out((acc.size() - 1) * static_cast<size_t>(stride) + 1, PolyFq::zero(f));
  for (size_t i = 0; i < acc.size(); ++i)
    if (!acc[i].is_zero()) out[i * static_cast<size_t>(stride)] = frobenius_power(acc[i], split.ell);
  return out;
}

PolyFq poly_pow_d(const PolyFq& f, const DSplit& split) {
  return frobenius_power(f.pow(split.s), split.ell);
}

}  // namespace

ParamPoly param_poly(int n, const RatFunc& gamma, const FamilyParams& fam, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("param_poly: n must be >= 1");
  if (!gamma.field()->same_as(*fam.field))
    throw FieldMismatch("param_poly: gamma is not over the family's constant field");
  if (big_pow(fam.d, n - 1) > caps.param_degree)
    throw CapExceeded("param_poly: parameter degree d^(n-1) exceeds the cap");

  const FieldPtr& f = fam.field;
  // Iterate numerators over the common denominator den(gamma)^(d^m):
  // A_(m+1) = A_m^d + lambda * den^(d^(m+1)).
  Bi a{gamma.num()};
  PolyFq den_pow = gamma.den();
  const bool trivial_den = gamma.den().is_one();
  for (int m = 0; m < n; ++m) {
    a = bi_pow_d(a, fam.split, f);
    if (!trivial_den) den_pow = poly_pow_d(den_pow, fam.split);
    if (a.size() < 2) a.resize(2, PolyFq::zero(f));
    a[1] = a[1] + den_pow;
  }

  std::vector<RatFunc> coeffs;
  coeffs.reserve(a.size());
  for (auto& c : a)
    coeffs.push_back(trivial_den ? RatFunc(std::move(c)) : RatFunc(std::move(c), den_pow));
  return ParamPoly(f, std::move(coeffs));
}

}  // namespace charpdyn
