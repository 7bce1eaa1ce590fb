#include "charpdyn/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "charpdyn/errors.hpp"

namespace charpdyn {

namespace {

void require_same_field_poly(const PolyFq& a, const PolyFq& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw FieldMismatch("polynomials over different fields");
}

}  // namespace

PolyFq::PolyFq(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  k_ = field_->k();
}

PolyFq::PolyFq(FieldPtr field, const std::vector<FqElem>& coeffs) : PolyFq(std::move(field)) {
  n_ = coeffs.size();
  res_.assign(n_ * static_cast<size_t>(k_), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].field() || !coeffs[i].field()->same_as(*field_))
      throw FieldMismatch("coefficient from a different field");
    std::copy(coeffs[i].coeffs().begin(), coeffs[i].coeffs().end(), raw(i));
  }
  trim();
}

PolyFq PolyFq::one(const FieldPtr& f) { return constant(FqElem::one(f)); }

PolyFq PolyFq::constant(const FqElem& c) {
  PolyFq r(c.field());
  if (!c.is_zero()) {
    r.n_ = 1;
    r.res_ = c.coeffs();
  }
  return r;
}

PolyFq PolyFq::variable(const FieldPtr& f) {
  PolyFq r(f);
  r.n_ = 2;
  r.res_.assign(2 * static_cast<size_t>(r.k_), 0);
  r.res_[static_cast<size_t>(r.k_)] = 1;
  return r;
}

PolyFq PolyFq::from_ints(const FieldPtr& f, const std::vector<int64_t>& coeffs) {
  std::vector<FqElem> cs;
  cs.reserve(coeffs.size());
  for (int64_t c : coeffs) cs.push_back(FqElem::from_int(f, c));
  return PolyFq(f, cs);
}

void PolyFq::trim() {
  while (n_ > 0) {
    const int64_t* top = raw(n_ - 1);
    bool zero = std::all_of(top, top + k_, [](int64_t c) { return c == 0; });
    if (!zero) break;
    --n_;
  }
  res_.resize(n_ * static_cast<size_t>(k_));
}

bool PolyFq::is_one() const { return n_ == 1 && coeff(0).is_one(); }

bool PolyFq::is_monic() const { return n_ > 0 && leading().is_one(); }

FqElem PolyFq::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= n_) return FqElem::zero(field_);
  return FqElem(field_, std::vector<int64_t>(raw(static_cast<size_t>(i)),
                                             raw(static_cast<size_t>(i)) + k_));
}

FqElem PolyFq::leading() const {
  if (n_ == 0) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeff(degree());
}

std::vector<FqElem> PolyFq::coeffs() const {
  std::vector<FqElem> out;
  out.reserve(n_);
  for (size_t i = 0; i < n_; ++i) out.push_back(coeff(static_cast<int>(i)));
  return out;
}

FqElem PolyFq::eval(const FqElem& x) const {
  FqElem acc = FqElem::zero(field_);
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeff(i);
  return acc;
}

PolyFq PolyFq::operator+(const PolyFq& o) const {
  require_same_field_poly(*this, o);
  PolyFq r(field_);
  r.n_ = std::max(n_, o.n_);
  r.res_.assign(r.n_ * static_cast<size_t>(k_), 0);
  if (k_ == 1) {
    const int64_t p = field_->p();
    for (size_t i = 0; i < r.n_; ++i) {
      int64_t s = (i < n_ ? res_[i] : 0) + (i < o.n_ ? o.res_[i] : 0);
      r.res_[i] = s >= p ? s - p : s;
    }
    r.trim();
    return r;
  }
  for (size_t i = 0; i < r.n_; ++i) {
    const int64_t* a = i < n_ ? raw(i) : nullptr;
    const int64_t* b = i < o.n_ ? o.raw(i) : nullptr;
    if (a && b)
      field_->raw_add(a, b, r.raw(i));
    else if (a)
      std::copy(a, a + k_, r.raw(i));
    else
      std::copy(b, b + k_, r.raw(i));
  }
  r.trim();
  return r;
}

PolyFq PolyFq::operator-(const PolyFq& o) const {
  require_same_field_poly(*this, o);
  PolyFq r(field_);
  r.n_ = std::max(n_, o.n_);
  r.res_.assign(r.n_ * static_cast<size_t>(k_), 0);
  if (k_ == 1) {
    const int64_t p = field_->p();
    for (size_t i = 0; i < r.n_; ++i) {
      int64_t s = (i < n_ ? res_[i] : 0) - (i < o.n_ ? o.res_[i] : 0);
      r.res_[i] = s < 0 ? s + p : s;
    }
    r.trim();
    return r;
  }
  for (size_t i = 0; i < r.n_; ++i) {
    const int64_t* a = i < n_ ? raw(i) : nullptr;
    const int64_t* b = i < o.n_ ? o.raw(i) : nullptr;
    if (a && b)
      field_->raw_sub(a, b, r.raw(i));
    else if (a)
      std::copy(a, a + k_, r.raw(i));
    else
      field_->raw_neg(b, r.raw(i));
  }
  r.trim();
  return r;
}

PolyFq PolyFq::operator-() const {
  PolyFq r(field_);
  r.n_ = n_;
  r.res_.assign(n_ * static_cast<size_t>(k_), 0);
  for (size_t i = 0; i < n_; ++i) field_->raw_neg(raw(i), r.raw(i));
  return r;
}

PolyFq PolyFq::slice(size_t from, size_t to) const {
  PolyFq r(field_);
  to = std::min(to, n_);
  if (from >= to) return r;
  r.n_ = to - from;
  r.res_.assign(res_.begin() + static_cast<ptrdiff_t>(from * static_cast<size_t>(k_)),
                res_.begin() + static_cast<ptrdiff_t>(to * static_cast<size_t>(k_)));
  r.trim();
  return r;
}

PolyFq PolyFq::mul_karatsuba(const PolyFq& a, const PolyFq& b) {
  const size_t h = (std::max(a.n_, b.n_) + 1) / 2;
  const PolyFq a0 = a.slice(0, h), a1 = a.slice(h, a.n_);
  const PolyFq b0 = b.slice(0, h), b1 = b.slice(h, b.n_);
  if (a1.is_zero() || b1.is_zero()) {
    // one factor lives below the split; a single cross product remains
    PolyFq cross = a1.is_zero() ? a0 * b1 : a1 * b0;
    return a0 * b0 + cross.shifted(static_cast<int>(h));
  }
  PolyFq p0 = a0 * b0;
  PolyFq p2 = a1 * b1;
  PolyFq mid = (a0 + a1) * (b0 + b1) - p0 - p2;
  return p0 + mid.shifted(static_cast<int>(h)) + p2.shifted(static_cast<int>(2 * h));
}

PolyFq PolyFq::operator*(const PolyFq& o) const {
  require_same_field_poly(*this, o);
  if (n_ == 0 || o.n_ == 0) return PolyFq(field_);
  // Above this size the saved cross products outweigh the splice overhead;
  // the recursion re-enters through operator* and bottoms out in schoolbook.
  constexpr size_t kKaratsubaMin = 32;
  if (std::min(n_, o.n_) > kKaratsubaMin) return mul_karatsuba(*this, o);
  PolyFq r(field_);
  r.n_ = n_ + o.n_ - 1;
  r.res_.assign(r.n_ * static_cast<size_t>(k_), 0);

  // Delayed reduction: accumulate raw convolutions per output coefficient,
  // reducing in chunks so accumulator entries stay below 2^62.
  // Each product term is < p^2; allow at most 2^61 / p^2 of them per chunk.
  int64_t p = field_->p();
  size_t chunk = static_cast<size_t>(std::max<int64_t>(1, (int64_t(1) << 61) / (p * p)));
  if (k_ == 1) {
    // prime field: one residue per coefficient, so the convolution inlines
    // into a flat mul-add loop instead of per-pair field calls
    const int64_t* a = res_.data();
    const int64_t* b = o.res_.data();
    int64_t* out = r.res_.data();
    for (size_t m = 0; m < r.n_; ++m) {
      size_t lo = m >= o.n_ - 1 ? m - (o.n_ - 1) : 0;
      size_t hi = std::min(m, n_ - 1);
      int64_t sum = 0;
      size_t since_reduce = 0;
      for (size_t i = lo; i <= hi; ++i) {
        sum += a[i] * b[m - i];
        if (++since_reduce >= chunk) {
          sum %= p;
          since_reduce = 0;
        }
      }
      out[m] = sum % p;
    }
    r.trim();
    return r;
  }
  size_t acc_len = static_cast<size_t>(2 * k_ - 1);
  std::vector<int64_t> acc(acc_len);
  for (size_t m = 0; m < r.n_; ++m) {
    std::fill(acc.begin(), acc.end(), 0);
    size_t lo = m >= o.n_ - 1 ? m - (o.n_ - 1) : 0;
    size_t hi = std::min(m, n_ - 1);
    size_t since_reduce = 0;
    for (size_t i = lo; i <= hi; ++i) {
      field_->raw_mul_acc(raw(i), o.raw(m - i), acc.data());
      if (++since_reduce >= chunk) {
        for (auto& v : acc) v %= p;
        since_reduce = 0;
      }
    }
    field_->raw_reduce(acc.data(), r.raw(m));
  }
  r.trim();
  return r;
}

PolyFq PolyFq::operator*(const FqElem& c) const { return *this * constant(c); }

PolyFq PolyFq::pow(int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  PolyFq base = *this, r = one(field_);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

std::pair<PolyFq, PolyFq> PolyFq::divmod(const PolyFq& divisor) const {
  require_same_field_poly(*this, divisor);
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (n_ < divisor.n_) return {PolyFq(field_), *this};
  FqElem lead_inv = divisor.leading().inverse();
  PolyFq rem = *this;
  PolyFq quot(field_);
  quot.n_ = n_ - divisor.n_ + 1;
  quot.res_.assign(quot.n_ * static_cast<size_t>(k_), 0);
  std::vector<int64_t> acc(static_cast<size_t>(2 * k_ - 1), 0);
  while (rem.n_ >= divisor.n_ && rem.n_ > 0) {
    size_t shift = rem.n_ - divisor.n_;
    FqElem c = rem.leading() * lead_inv;
    std::copy(c.coeffs().begin(), c.coeffs().end(), quot.raw(shift));
    // rem -= c * t^shift * divisor
    for (size_t j = 0; j < divisor.n_; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      field_->raw_mul_acc(c.coeffs().data(), divisor.raw(j), acc.data());
      std::vector<int64_t> prod(static_cast<size_t>(k_));
      field_->raw_reduce(acc.data(), prod.data());
      field_->raw_sub(rem.raw(j + shift), prod.data(), rem.raw(j + shift));
    }
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

PolyFq PolyFq::monic() const {
  if (is_zero()) return *this;
  if (is_monic()) return *this;
  return *this * leading().inverse();
}

PolyFq PolyFq::derivative() const {
  if (n_ <= 1) return PolyFq(field_);
  std::vector<FqElem> cs;
  cs.reserve(n_ - 1);
  for (size_t i = 1; i < n_; ++i)
    cs.push_back(coeff(static_cast<int>(i)) * FqElem::from_int(field_, static_cast<int64_t>(i)));
  return PolyFq(field_, cs);
}

PolyFq PolyFq::shifted(int by) const {
  if (by < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || by == 0) return *this;
  PolyFq r(field_);
  r.n_ = n_ + static_cast<size_t>(by);
  r.res_.assign(r.n_ * static_cast<size_t>(k_), 0);
  std::copy(res_.begin(), res_.end(), r.res_.begin() + static_cast<size_t>(by) * static_cast<size_t>(k_));
  return r;
}

bool PolyFq::operator==(const PolyFq& o) const {
  if (!field_ || !o.field_) return field_ == o.field_ && n_ == o.n_;
  return field_->same_as(*o.field_) && n_ == o.n_ && res_ == o.res_;
}

bool PolyFq::operator<(const PolyFq& o) const {
  require_same_field_poly(*this, o);
  if (n_ != o.n_) return n_ < o.n_;
  // coefficients from the top, each as a little-endian residue tuple
  for (size_t i = n_; i-- > 0;) {
    for (int j = k_ - 1; j >= 0; --j) {
      int64_t a = raw(i)[j], b = o.raw(i)[j];
      if (a != b) return a < b;
    }
  }
  return false;
}

size_t PolyFq::hash() const {
  size_t h = 14695981039346656037ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(n_);
  for (int64_t c : res_) mix(static_cast<uint64_t>(c));
  return h;
}

std::string PolyFq::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    FqElem c = coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    std::string cs = c.to_string();
    bool composite = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += composite ? "(" + cs + ")" : cs;
      continue;
    }
    if (!c.is_one()) out += (composite ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyFq gcd(const PolyFq& a, const PolyFq& b) {
  PolyFq x = a, y = b;
  while (!y.is_zero()) {
    PolyFq r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyFq powmod(const PolyFq& base, const BigInt& e, const PolyFq& mod) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  PolyFq b = base % mod, r = PolyFq::one(base.field());
  BigInt n = e;
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) r = (r * b) % mod;
    n >>= 1;
    if (n > 0) b = (b * b) % mod;
  }
  return r;
}

}  // namespace charpdyn
