#include "charpdyn/rat_func.hpp"

#include <stdexcept>

namespace charpdyn {

RatFunc::RatFunc(PolyFq num) : num_(std::move(num)), den_(PolyFq::one(num_.field())) {}

RatFunc::RatFunc(PolyFq num, PolyFq den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = PolyFq::one(num_.field());
    return;
  }
  if (!den_.is_one()) {
    PolyFq g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (!den_.is_monic()) {
      FqElem inv = den_.leading().inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }
}

RatFunc RatFunc::zero(const FieldPtr& f) { return RatFunc(PolyFq::zero(f)); }
RatFunc RatFunc::one(const FieldPtr& f) { return RatFunc(PolyFq::one(f)); }
RatFunc RatFunc::variable(const FieldPtr& f) { return RatFunc(PolyFq::variable(f)); }
RatFunc RatFunc::constant(const FqElem& c) { return RatFunc(PolyFq::constant(c)); }
RatFunc RatFunc::from_int(const FieldPtr& f, int64_t n) {
  return RatFunc(PolyFq::constant(FqElem::from_int(f, n)));
}

FqElem RatFunc::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("not a constant");
  return num_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ + o.num_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ - o.num_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  // reduced stays reduced under powers, so work on num and den directly
  RatFunc r = *this;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  if (e == 0) return one(field());
  if (is_zero()) return zero(field());
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

bool RatFunc::operator<(const RatFunc& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  return num_ < o.num_;
}

size_t RatFunc::hash() const {
  size_t h = num_.hash();
  h ^= den_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace charpdyn
