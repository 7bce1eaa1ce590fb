#include "charpdyn/lab.hpp"

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "charpdyn/errors.hpp"
#include "charpdyn/extension.hpp"
#include "charpdyn/roots.hpp"

namespace charpdyn {

TrichotomyReport classify(const RatFunc& alpha, const RatFunc& beta, const FamilyParams& fam) {
  if (!alpha.field()->same_as(*fam.field) || !beta.field()->same_as(*fam.field))
    throw FieldMismatch("classify: points are not over the family's constant field");
  TrichotomyReport r;
  r.cond1 = alpha.is_constant() && beta.is_constant();
  r.cond2 = fam.split.s == 1 && (beta - alpha).is_constant();
  r.cond3 = alpha.pow(fam.d) == beta.pow(fam.d);
  return r;
}

namespace {

// Lifts the pair and one parameter to the least common constant-field level
// and decides both orbits there.
EquivalencePoint test_point(const RatFunc& alpha, const RatFunc& beta, const FamilyParams& fam,
                            const RatFunc& lambda) {
  const FieldPtr base = fam.field;
  const FieldPtr lam_field = lambda.field();
  if (lam_field->p() != base->p())
    throw FieldMismatch("verify_equivalence: parameter has a different characteristic");

  RatFunc a = alpha, b = beta, l = lambda;
  FamilyParams fam_joint = fam;
  if (!lam_field->same_as(*base)) {
    const int joint = static_cast<int>(std::lcm(base->k(), lam_field->k()));
    const FieldPtr big = FqField::make(base->p(), joint);
    const FieldEmbedding from_base(base, big);
    a = from_base.lift(alpha);
    b = from_base.lift(beta);
    l = lam_field->same_as(*big) ? lambda : FieldEmbedding(lam_field, big).lift(lambda);
    fam_joint = FamilyParams::make(big, fam.d);
  }
  OrbitResult oa = decide_preperiodic(a, l, fam_joint);
  OrbitResult ob = decide_preperiodic(b, l, fam_joint);
  const bool agree = oa.is_preperiodic() == ob.is_preperiodic();
  return EquivalencePoint{lambda, std::move(oa), std::move(ob), agree};
}

}  // namespace

EquivalenceReport verify_equivalence(const RatFunc& alpha, const RatFunc& beta,
                                     const FamilyParams& fam,
                                     const std::vector<RatFunc>& lambdas) {
  EquivalenceReport report;
  report.classification = classify(alpha, beta, fam);
  report.points.reserve(lambdas.size());
  for (const auto& lambda : lambdas) {
    report.points.push_back(test_point(alpha, beta, fam, lambda));
    if (!report.points.back().agree) ++report.disagreements;
  }
  return report;
}

std::vector<RatFunc> sample_lambdas(const RatFunc& alpha, const FamilyParams& fam, uint64_t seed,
                                    int n_max, int random_count, const Caps& caps) {
  const FieldPtr base = fam.field;
  std::vector<RatFunc> out;

  // Constants at level 2 cover level 1 as a set, but base-level values keep
  // their cheaper representation, so collect both.
  for (const auto& c : enumerate_field(base, caps)) out.push_back(RatFunc::constant(c));
  const FieldPtr quad = FqField::make(base->p(), base->k() * 2);
  const FieldEmbedding emb(base, quad);
  std::set<FqElem> base_image;
  for (const auto& c : enumerate_field(base, caps)) base_image.insert(emb.lift(c));
  for (const auto& c : enumerate_field(quad, caps))
    if (!base_image.count(c)) out.push_back(RatFunc::constant(c));

  for (auto& lambda : preperiodic_params(alpha, fam, n_max, n_max - 1, caps))
    out.push_back(std::move(lambda));

  // Seeded pseudorandom parameters of height <= 3. Duplicates are skipped;
  // tiny fields may not have enough distinct values, hence the attempt cap.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> coeff(0, base->p() - 1);
  auto random_poly = [&](int max_deg) {
    std::vector<FqElem> cs;
    for (int i = 0; i <= max_deg; ++i) {
      std::vector<int64_t> digits(static_cast<size_t>(base->k()));
      for (auto& dig : digits) dig = coeff(rng);
      cs.emplace_back(base, std::move(digits));
    }
    return PolyFq(base, cs);
  };
  // Dedup only against base-field entries; the extension constants compare
  // through a different field object and can never equal a base-field draw.
  std::set<RatFunc> already;
  for (const auto& lambda : out)
    if (lambda.field()->same_as(*base)) already.insert(lambda);
  int found = 0;
  for (int attempt = 0; found < random_count && attempt < random_count * 40; ++attempt) {
    PolyFq num = random_poly(3);
    PolyFq den = random_poly(3);
    if (den.is_zero()) continue;
    RatFunc lambda(num, den);
    if (already.insert(lambda).second) {
      out.push_back(std::move(lambda));
      ++found;
    }
  }
  return out;
}

EquivalenceReport verify_equivalence_sampled(const RatFunc& alpha, const RatFunc& beta,
                                             const FamilyParams& fam, uint64_t seed,
                                             const Caps& caps) {
  return verify_equivalence(alpha, beta, fam, sample_lambdas(alpha, fam, seed, 3, 50, caps));
}

bool diff_formula_check(const RatFunc& alpha, const RatFunc& beta, const RatFunc& lambda,
                        const FamilyParams& fam, int n_max) {
  if (fam.split.s != 1)
    throw std::invalid_argument("diff_formula_check: requires d to be a power of p");
  RatFunc xa = alpha, xb = beta;
  RatFunc nu_pow = alpha - beta;
  for (int n = 1; n <= n_max; ++n) {
    xa = step(xa, lambda, fam);
    xb = step(xb, lambda, fam);
    nu_pow = nu_pow.pow(fam.d);
    if (xa - xb != nu_pow) return false;
  }
  return true;
}

std::vector<FqElem> search_constant_params(const RatFunc& gamma, const FamilyParams& fam,
                                           int k_max, const Caps& caps) {
  if (k_max < 1) throw std::invalid_argument("search_constant_params: k_max must be >= 1");
  const FieldPtr base = fam.field;
  FieldPtr work = base;
  RatFunc g = gamma;
  FamilyParams fam_work = fam;
  if (k_max > 1) {
    work = FqField::make(base->p(), base->k() * k_max);
    g = FieldEmbedding(base, work).lift(gamma);
    fam_work = FamilyParams::make(work, fam.d);
  }
  std::vector<FqElem> out;
  for (const auto& c : enumerate_field(work, caps))
    if (decide_preperiodic(g, RatFunc::constant(c), fam_work).is_preperiodic()) out.push_back(c);
  return out;
}

std::vector<RatFunc> preperiodic_params(const RatFunc& gamma, const FamilyParams& fam, int n_max,
                                        int m_max, const Caps& caps) {
  if (n_max < 1) throw std::invalid_argument("preperiodic_params: n_max must be >= 1");
  std::set<RatFunc> found;
  std::vector<ParamPoly> iterates;  // index n-1 holds the n-th iterate polynomial
  for (int n = 1; n <= n_max; ++n) iterates.push_back(param_poly(n, gamma, fam, caps));
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m < n && m <= m_max; ++m) {
      const ParamPoly f = m == 0 ? iterates[static_cast<size_t>(n - 1)].minus_constant(gamma)
                                 : iterates[static_cast<size_t>(n - 1)] -
                                       iterates[static_cast<size_t>(m - 1)];
      for (auto& root : rational_roots(f, caps)) found.insert(std::move(root));
    }
  }
  return std::vector<RatFunc>(found.begin(), found.end());
}

std::vector<RatFunc> simultaneous_search(const RatFunc& alpha, const RatFunc& beta,
                                         const FamilyParams& fam, int n_max, int m_max,
                                         const Caps& caps) {
  std::vector<RatFunc> out;
  for (auto& lambda : preperiodic_params(alpha, fam, n_max, m_max, caps)) {
    if (decide_preperiodic(alpha, lambda, fam).is_preperiodic() &&
        decide_preperiodic(beta, lambda, fam).is_preperiodic())
      out.push_back(std::move(lambda));
  }
  return out;
}

bool local_heights_agree(const LocalHeightResult& a, const LocalHeightResult& b,
                         const Rat& tie_threshold) {
  if (a.is_exact() && b.is_exact()) return a.value() == b.value();
  if (!a.is_exact() && !b.is_exact())
    return a.upper() < tie_threshold && b.upper() < tie_threshold;
  const LocalHeightResult& exact = a.is_exact() ? a : b;
  const LocalHeightResult& bracket = a.is_exact() ? b : a;
  return exact.value() <= bracket.upper();
}

}  // namespace charpdyn
