#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charpdyn/caps.hpp"
#include "charpdyn/places.hpp"
#include "charpdyn/rat_func.hpp"

namespace charpdyn {

// The family f_lambda(x) = x^d + lambda over F_{p^k}(t), with the prime-to-p
// decomposition d = s * p^ell cached alongside.
struct FamilyParams {
  FieldPtr field;
  int64_t d;
  DSplit split;

  static FamilyParams make(FieldPtr field, int64_t d);
};

// One application of the map, in reduced form.
RatFunc step(const RatFunc& x, const RatFunc& lambda, const FamilyParams& fam);

// Exact orbit certificates. Preperiodic means f^(tail+period)(x) = f^tail(x)
// with both indices minimal; Escaping carries a place and step at which
// d*log|x_step|_v > max(0, log|lambda|_v) holds, which forces the local
// escape rate positive from then on.
struct Preperiodic {
  int64_t tail;    // >= 0
  int64_t period;  // >= 1
};
struct Escaping {
  Place witness;
  int64_t step;
  LogSize size;  // log-size of the escaping orbit element at the witness
};
class OrbitResult {
 public:
  static OrbitResult preperiodic(int64_t tail, int64_t period);
  static OrbitResult escaping(Place witness, int64_t step, LogSize size);

  bool is_preperiodic() const { return preperiodic_.has_value(); }
  const Preperiodic& certificate() const;  // throws unless preperiodic
  const Escaping& escape() const;          // throws unless escaping

 private:
  OrbitResult() = default;
  std::optional<Preperiodic> preperiodic_;
  std::optional<Escaping> escaping_;
};

// Decides preperiodicity of gamma under f_lambda with an exact certificate
// either way. Terminates unconditionally: orbit elements only ever acquire
// poles inside support({gamma, lambda}), so a never-escaping orbit has
// uniformly bounded height and must cycle.
OrbitResult decide_preperiodic(const RatFunc& gamma, const RatFunc& lambda, const FamilyParams& fam);

// Local escape rate at one place: either the exact rational value or a
// certified bracket [0, upper] after `iterations` unresolved steps. The
// unresolved regime is exactly the tie d*log|x|_v = log|lambda|_v > 0.
class LocalHeightResult {
 public:
  LocalHeightResult() = default;  // exact zero
  static LocalHeightResult exact(Rat value);
  static LocalHeightResult bounded(Rat upper, int iterations);

  bool is_exact() const { return exact_; }
  const Rat& value() const;  // exact results only
  const Rat& upper() const;  // bounded results only
  int iterations() const;    // bounded results only

  // The same certificate scaled by a positive integer.
  LocalHeightResult scaled(int64_t factor) const;

  bool operator==(const LocalHeightResult& o) const;

 private:
  bool exact_ = true;
  Rat v_;
  int iterations_ = 0;
};

// The v-adic canonical height of gamma for f_lambda, in units of log q.
// Closed forms resolve every configuration except the tie regime, which is
// iterated up to max_iter steps (each step shrinking the certified bracket
// by a factor of d) and resolved exactly when the orbit is seen to cycle.
// caps.param_degree guards the degree blowup of a persistent tie: when an
// iterate's height exceeds it, the current (still valid) bracket is
// returned early rather than grinding on gigantic operands.
LocalHeightResult local_canonical_height(const RatFunc& gamma, const RatFunc& lambda,
                                         const Place& v, const FamilyParams& fam,
                                         int max_iter = 64, const Caps& caps = Caps{});

// d times the local height: the parameter-space Green's function at lambda.
LocalHeightResult green_function(const RatFunc& gamma, const RatFunc& lambda, const Place& v,
                                 const FamilyParams& fam, int max_iter = 64,
                                 const Caps& caps = Caps{});

// Membership of lambda in the generalized Mandelbrot set at v (the locus
// where gamma's orbit stays v-adically bounded): Member iff the local
// height is exactly 0, NonMember iff exactly positive, Unresolved when only
// a bracket is available.
enum class Membership { Member, NonMember, Unresolved };
struct MandelbrotResult {
  Membership verdict;
  LocalHeightResult height;
};
MandelbrotResult mandelbrot_member(const RatFunc& gamma, const RatFunc& lambda, const Place& v,
                                   const FamilyParams& fam, int max_iter = 64,
                                   const Caps& caps = Caps{});

// Sum of the local heights over the support. Exact (slack 0) when every
// place resolves; otherwise the true value lies in [lower, lower + slack].
// A preperiodicity certificate short-circuits to exactly 0.
struct GlobalHeight {
  Rat lower;
  Rat slack;
  bool preperiodic = false;
  std::vector<std::pair<Place, LocalHeightResult>> parts;

  bool is_exact() const { return slack == 0; }
  Rat upper() const { return lower + slack; }
};
GlobalHeight global_canonical_height(const RatFunc& gamma, const RatFunc& lambda,
                                     const FamilyParams& fam, int max_iter = 64,
                                     const Caps& caps = Caps{});

}  // namespace charpdyn
