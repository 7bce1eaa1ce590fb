#include "charpdyn/places.hpp"

#include <algorithm>
#include <stdexcept>

#include "charpdyn/factor.hpp"

namespace charpdyn {

Place::Place(FieldPtr f, bool infinite, PolyFq pi)
    : field_(std::move(f)), infinite_(infinite), pi_(std::move(pi)) {}

Place Place::infinity(const FieldPtr& f) { return Place(f, true, PolyFq(f)); }

Place Place::finite(PolyFq pi) {
  pi = pi.monic();
  if (pi.degree() < 1) throw std::invalid_argument("a finite place needs degree at least 1");
  if (!is_irreducible(pi)) throw std::invalid_argument("place polynomial is reducible");
  FieldPtr f = pi.field();
  return Place(std::move(f), false, std::move(pi));
}

const PolyFq& Place::pi() const {
  if (infinite_) throw std::invalid_argument("the place at infinity has no finite polynomial");
  return pi_;
}

int Place::degree() const { return infinite_ ? 1 : pi_.degree(); }

bool Place::operator==(const Place& o) const {
  if (infinite_ != o.infinite_) return false;
  if (infinite_) return field_->same_as(*o.field_);
  return pi_ == o.pi_;
}

bool Place::operator<(const Place& o) const {
  if (infinite_ != o.infinite_) return infinite_;  // infinity sorts first
  if (infinite_) return false;
  if (degree() != o.degree()) return degree() < o.degree();
  return pi_ < o.pi_;
}

size_t Place::hash() const { return infinite_ ? 0x7fffffffffffffe9ull : pi_.hash(); }

std::string Place::to_string() const { return infinite_ ? "inf" : pi_.to_string(); }

namespace {

// multiplicity of monic pi in nonzero poly f
int64_t multiplicity(const PolyFq& f, const PolyFq& pi) {
  int64_t m = 0;
  PolyFq work = f;
  while (work.degree() >= pi.degree()) {
    auto [q, r] = work.divmod(pi);
    if (!r.is_zero()) break;
    ++m;
    work = std::move(q);
  }
  return m;
}

}  // namespace

int64_t ord(const RatFunc& x, const Place& v) {
  if (x.is_zero()) throw std::invalid_argument("ord of zero (valuation is +infinity)");
  if (v.is_infinity()) return static_cast<int64_t>(x.den().degree()) - x.num().degree();
  return multiplicity(x.num(), v.pi()) - multiplicity(x.den(), v.pi());
}

LogSize log_size(const RatFunc& x, const Place& v) {
  return LogSize{Rat(-ord(x, v) * v.degree())};
}

std::vector<Place> support(const std::vector<RatFunc>& xs) {
  std::vector<Place> places;
  FieldPtr field;
  for (const RatFunc& x : xs) {
    if (x.is_zero()) throw std::invalid_argument("support of zero");
    field = x.field();
    for (const PolyFq* part : {&x.num(), &x.den()}) {
      if (part->degree() < 1) continue;
      for (const PolyFq& pi : distinct_irreducible_factors(*part))
        places.push_back(Place::finite(pi));
    }
  }
  if (!field) throw std::invalid_argument("support of an empty list needs a field");
  places.push_back(Place::infinity(field));
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  return places;
}

Rat check_product_formula(const RatFunc& x) {
  Rat sum = 0;
  for (const Place& v : support({x})) sum += Rat(ord(x, v) * v.degree());
  return sum;
}

Rat weil_height(const RatFunc& x) {
  if (x.is_zero()) return Rat(0);
  // In reduced form the pole sum collapses: den carries the finite poles
  // and the degree gap the pole at infinity. No factorization needed.
  return Rat(std::max(x.num().degree(), x.den().degree()));
}

}  // namespace charpdyn
