#pragma once

#include <cstdint>
#include <vector>

#include "charpdyn/dynamics.hpp"

namespace charpdyn {

// The three special conditions on a pair (alpha, beta). When any holds,
// preperiodicity of alpha under f_lambda is equivalent to preperiodicity of
// beta at every parameter; otherwise only finitely many parameters can make
// both preperiodic.
struct TrichotomyReport {
  bool cond1;  // alpha and beta both lie in the constant field
  bool cond2;  // d is a power of p and beta - alpha is constant
  bool cond3;  // alpha^d = beta^d
  bool special() const { return cond1 || cond2 || cond3; }
};

TrichotomyReport classify(const RatFunc& alpha, const RatFunc& beta, const FamilyParams& fam);

// One tested parameter with both orbit certificates.
struct EquivalencePoint {
  RatFunc lambda;
  OrbitResult alpha_orbit;
  OrbitResult beta_orbit;
  bool agree;  // same preperiodic-vs-escaping verdict
};
struct EquivalenceReport {
  TrichotomyReport classification;
  std::vector<EquivalencePoint> points;
  size_t disagreements = 0;
  bool all_agree() const { return disagreements == 0; }
};

// Tests, for each lambda, that alpha and beta get the same preperiodicity
// verdict. Parameters may live in constant-field extensions of the family's
// field (or of each other); everything is lifted to the joint level first.
// Pairs for which special() holds must never disagree; for other pairs the
// report simply records what happened.
EquivalenceReport verify_equivalence(const RatFunc& alpha, const RatFunc& beta,
                                     const FamilyParams& fam,
                                     const std::vector<RatFunc>& lambdas);

// The default parameter sample: every constant at extension levels 1 and 2,
// every parameter making alpha preperiodic found below the given collision
// depth, and pseudorandom parameters of height <= 3 drawn from the seed.
std::vector<RatFunc> sample_lambdas(const RatFunc& alpha, const FamilyParams& fam, uint64_t seed,
                                    int n_max = 3, int random_count = 50,
                                    const Caps& caps = Caps{});

EquivalenceReport verify_equivalence_sampled(const RatFunc& alpha, const RatFunc& beta,
                                             const FamilyParams& fam, uint64_t seed,
                                             const Caps& caps = Caps{});

// When d = p^ell, iterate differences collapse to Frobenius powers:
// f^n(alpha) - f^n(beta) = (alpha - beta)^(d^n). Checks the identity
// exactly for 1 <= n <= n_max; rejects d not a power of p.
bool diff_formula_check(const RatFunc& alpha, const RatFunc& beta, const RatFunc& lambda,
                        const FamilyParams& fam, int n_max);

// All constant parameters in F_{q^k_max} whose orbit of gamma is finite:
// the whole field when gamma is constant, empty when it is not.
std::vector<FqElem> search_constant_params(const RatFunc& gamma, const FamilyParams& fam,
                                           int k_max, const Caps& caps = Caps{});

// Every parameter in F_q(t) making gamma preperiodic with collision
// f^n(gamma) = f^m(gamma) for some 0 <= m <= m_max, m < n <= n_max.
std::vector<RatFunc> preperiodic_params(const RatFunc& gamma, const FamilyParams& fam, int n_max,
                                        int m_max, const Caps& caps = Caps{});

// The preperiodic_params of alpha filtered down to parameters where beta is
// preperiodic too: the desk-scale simultaneous-preperiodicity search.
std::vector<RatFunc> simultaneous_search(const RatFunc& alpha, const RatFunc& beta,
                                         const FamilyParams& fam, int n_max, int m_max,
                                         const Caps& caps = Caps{});

// Comparison rule for local heights that may carry interval certificates:
// exact results must match exactly; brackets count as agreeing when both
// have been squeezed below the threshold; a mixed pair agrees when the
// exact value lies inside the bracket.
bool local_heights_agree(const LocalHeightResult& a, const LocalHeightResult& b,
                         const Rat& tie_threshold);

}  // namespace charpdyn
