#include "charpdyn/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "charpdyn/errors.hpp"

namespace charpdyn {

namespace {

void require_family_member(const RatFunc& x, const FamilyParams& fam, const char* what) {
  if (!x.field()->same_as(*fam.field))
    throw FieldMismatch(std::string(what) + " is not over the family's constant field");
}

// Places that can ever see a pole or positive size along the orbit:
// support of the nonzero inputs, or just infinity when both vanish.
std::vector<Place> active_places(const RatFunc& gamma, const RatFunc& lambda) {
  std::vector<RatFunc> nonzero;
  if (!gamma.is_zero()) nonzero.push_back(gamma);
  if (!lambda.is_zero()) nonzero.push_back(lambda);
  if (nonzero.empty()) return {Place::infinity(gamma.field())};
  return support(nonzero);
}

// log|x|_v as a rational, with zero mapped below every finite value by the
// callers that need it; here zero is simply not allowed.
Rat size_at(const RatFunc& x, const Place& v) { return log_size(x, v).value; }

// d*log|x|_v > max(0, log|lambda|_v); the one-sided escape test. A zero x
// never escapes.
bool escapes_at(const RatFunc& x, const Rat& lambda_size_plus, int64_t d, const Place& v) {
  if (x.is_zero()) return false;
  return d * size_at(x, v) > lambda_size_plus;
}

}  // namespace

FamilyParams FamilyParams::make(FieldPtr field, int64_t d) {
  if (!field) throw std::invalid_argument("FamilyParams: null field");
  DSplit split = decompose_d(d, field->p());
  return FamilyParams{std::move(field), d, split};
}

RatFunc step(const RatFunc& x, const RatFunc& lambda, const FamilyParams& fam) {
  require_family_member(x, fam, "point");
  require_family_member(lambda, fam, "parameter");
  return x.pow(fam.d) + lambda;
}

OrbitResult OrbitResult::preperiodic(int64_t tail, int64_t period) {
  OrbitResult r;
  r.preperiodic_ = Preperiodic{tail, period};
  return r;
}

OrbitResult OrbitResult::escaping(Place witness, int64_t step, LogSize size) {
  OrbitResult r;
  r.escaping_ = Escaping{std::move(witness), step, size};
  return r;
}

const Preperiodic& OrbitResult::certificate() const {
  if (!preperiodic_) throw std::logic_error("orbit result is escaping, not preperiodic");
  return *preperiodic_;
}

const Escaping& OrbitResult::escape() const {
  if (!escaping_) throw std::logic_error("orbit result is preperiodic, not escaping");
  return *escaping_;
}

OrbitResult decide_preperiodic(const RatFunc& gamma, const RatFunc& lambda, const FamilyParams& fam) {
  require_family_member(gamma, fam, "point");
  require_family_member(lambda, fam, "parameter");

  const auto places = active_places(gamma, lambda);
  std::vector<Rat> thresholds;  // max(0, log|lambda|_v) per place
  thresholds.reserve(places.size());
  for (const auto& v : places) {
    Rat t = 0;
    if (!lambda.is_zero()) t = std::max(t, size_at(lambda, v));
    thresholds.push_back(t);
  }

  auto check_escape = [&](const RatFunc& x, int64_t n) -> std::optional<OrbitResult> {
    for (size_t i = 0; i < places.size(); ++i)
      if (escapes_at(x, thresholds[i], fam.d, places[i]))
        return OrbitResult::escaping(places[i], n, log_size(x, places[i]));
    return std::nullopt;
  };

  // Brent's cycle search; each new orbit element gets its escape check as it
  // is produced. No escape ever means bounded height, so the loop is finite.
  if (auto esc = check_escape(gamma, 0)) return *esc;
  RatFunc tortoise = gamma;
  RatFunc hare = step(gamma, lambda, fam);
  int64_t hare_pos = 1;
  if (auto esc = check_escape(hare, hare_pos)) return *esc;
  int64_t power = 1, cycle = 1;
  while (tortoise != hare) {
    if (power == cycle) {
      tortoise = hare;
      power *= 2;
      cycle = 0;
    }
    hare = step(hare, lambda, fam);
    ++hare_pos;
    ++cycle;
    if (auto esc = check_escape(hare, hare_pos)) return *esc;
  }

  // Recover the minimal tail by sliding a window of the cycle length from
  // the start; the cycle length from Brent's phase is already minimal.
  tortoise = gamma;
  hare = gamma;
  for (int64_t i = 0; i < cycle; ++i) hare = step(hare, lambda, fam);
  int64_t tail = 0;
  while (tortoise != hare) {
    tortoise = step(tortoise, lambda, fam);
    hare = step(hare, lambda, fam);
    ++tail;
  }
  return OrbitResult::preperiodic(tail, cycle);
}

LocalHeightResult LocalHeightResult::exact(Rat value) {
  LocalHeightResult r;
  r.exact_ = true;
  r.v_ = std::move(value);
  return r;
}

LocalHeightResult LocalHeightResult::bounded(Rat upper, int iterations) {
  LocalHeightResult r;
  r.exact_ = false;
  r.v_ = std::move(upper);
  r.iterations_ = iterations;
  return r;
}

const Rat& LocalHeightResult::value() const {
  if (!exact_) throw std::logic_error("local height is only bounded, not exact");
  return v_;
}

const Rat& LocalHeightResult::upper() const {
  if (exact_) throw std::logic_error("local height is exact, not bounded");
  return v_;
}

int LocalHeightResult::iterations() const {
  if (exact_) throw std::logic_error("local height is exact, not bounded");
  return iterations_;
}

LocalHeightResult LocalHeightResult::scaled(int64_t factor) const {
  if (factor <= 0) throw std::invalid_argument("scaled: factor must be positive");
  return exact_ ? exact(v_ * factor) : bounded(v_ * factor, iterations_);
}

bool LocalHeightResult::operator==(const LocalHeightResult& o) const {
  return exact_ == o.exact_ && v_ == o.v_ && (exact_ || iterations_ == o.iterations_);
}

LocalHeightResult local_canonical_height(const RatFunc& gamma, const RatFunc& lambda,
                                         const Place& v, const FamilyParams& fam, int max_iter,
                                         const Caps& caps) {
  require_family_member(gamma, fam, "point");
  require_family_member(lambda, fam, "parameter");
  if (!v.field()->same_as(*fam.field)) throw FieldMismatch("place is not over the family's field");
  if (max_iter < 1) throw std::invalid_argument("local_canonical_height: max_iter must be >= 1");

  const int64_t d = fam.d;
  const Rat b = lambda.is_zero() ? Rat(0) : size_at(lambda, v);  // log|lambda|_v; 0 stands in for -inf

  // With log|lambda|_v <= 0 nothing unresolved can happen: either the point
  // is integral too (height 0) or it escapes immediately.
  if (lambda.is_zero() || b <= 0) {
    if (gamma.is_zero() || size_at(gamma, v) <= 0) return LocalHeightResult::exact(0);
    return LocalHeightResult::exact(size_at(gamma, v));
  }

  // b > 0 from here on. At each stage exactly one of three things holds for
  // a = log|x_m|_v: d*a > b resolves to a/d^m, d*a < b resolves to
  // b/d^(m+1), and the tie d*a = b forces another step. A repeat of an
  // orbit value means the orbit is finite, so the height is exactly 0.
  RatFunc x = gamma;
  std::vector<RatFunc> seen;
  Rat denom = 1;  // d^m
  for (int m = 0;; ++m) {
    if (x.is_zero()) return LocalHeightResult::exact(b / (denom * d));
    const Rat a = size_at(x, v);
    if (d * a > b) return LocalHeightResult::exact(a / denom);
    if (d * a < b) return LocalHeightResult::exact(b / (denom * d));
    if (m == max_iter) return LocalHeightResult::bounded(b / (denom * d), max_iter);
    if (std::find(seen.begin(), seen.end(), x) != seen.end())
      return LocalHeightResult::exact(0);
    // A persistent tie doubles operand degrees every step; bail out with the
    // still-valid bracket rather than grind on huge iterates.
    if (weil_height(x) > caps.param_degree)
      return LocalHeightResult::bounded(b / (denom * d), m);
    seen.push_back(x);
    x = step(x, lambda, fam);
    denom *= d;
  }
}

LocalHeightResult green_function(const RatFunc& gamma, const RatFunc& lambda, const Place& v,
                                 const FamilyParams& fam, int max_iter, const Caps& caps) {
  return local_canonical_height(gamma, lambda, v, fam, max_iter, caps).scaled(fam.d);
}

MandelbrotResult mandelbrot_member(const RatFunc& gamma, const RatFunc& lambda, const Place& v,
                                   const FamilyParams& fam, int max_iter, const Caps& caps) {
  LocalHeightResult h = local_canonical_height(gamma, lambda, v, fam, max_iter, caps);
  Membership verdict = Membership::Unresolved;
  if (h.is_exact()) verdict = h.value() == 0 ? Membership::Member : Membership::NonMember;
  return MandelbrotResult{verdict, std::move(h)};
}

GlobalHeight global_canonical_height(const RatFunc& gamma, const RatFunc& lambda,
                                     const FamilyParams& fam, int max_iter, const Caps& caps) {
  const OrbitResult orbit = decide_preperiodic(gamma, lambda, fam);
  GlobalHeight g;
  if (orbit.is_preperiodic()) {
    g.preperiodic = true;
    g.lower = 0;
    g.slack = 0;
    return g;
  }
  // Iterating at least past the escape step guarantees the witness place
  // resolves to an exact positive value, keeping the certificate sharp.
  int iter = max_iter;
  if (orbit.escape().step + 1 > iter)
    iter = static_cast<int>(std::min<int64_t>(orbit.escape().step + 1, 1 << 20));
  g.lower = 0;
  g.slack = 0;
  for (const auto& v : active_places(gamma, lambda)) {
    LocalHeightResult h = local_canonical_height(gamma, lambda, v, fam, iter, caps);
    if (h.is_exact())
      g.lower += h.value();
    else
      g.slack += h.upper();
    g.parts.emplace_back(v, std::move(h));
  }
  return g;
}

}  // namespace charpdyn
