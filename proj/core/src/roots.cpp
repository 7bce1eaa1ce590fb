#include "charpdyn/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "charpdyn/errors.hpp"
#include "charpdyn/extension.hpp"
#include "charpdyn/factor.hpp"

namespace charpdyn {

namespace {

PolyFq poly_lcm(const PolyFq& a, const PolyFq& b) {
  return ((a * b) / gcd(a, b)).monic();
}

// Lagrange basis over the sample points: basis[j](tau_i) = [i == j].
std::vector<PolyFq> lagrange_basis(const std::vector<FqElem>& taus, const FieldPtr& f) {
  std::vector<PolyFq> basis;
  basis.reserve(taus.size());
  const PolyFq t = PolyFq::variable(f);
  for (size_t j = 0; j < taus.size(); ++j) {
    PolyFq num = PolyFq::one(f);
    FqElem den = FqElem::one(f);
    for (size_t i = 0; i < taus.size(); ++i) {
      if (i == j) continue;
      num = num * (t - PolyFq::constant(taus[i]));
      den = den * (taus[j] - taus[i]);
    }
    basis.push_back(num * den.inverse());
  }
  return basis;
}

}  // namespace

std::vector<RatFunc> rational_roots(const ParamPoly& F, const Caps& caps) {
  const FieldPtr base = F.field();
  const int N = F.degree();
  if (N < 0) throw std::invalid_argument("rational_roots: the zero polynomial has every root");
  if (N == 0) return {};
  if (!F.is_monic()) throw std::invalid_argument("rational_roots: polynomial must be monic");

  // Clear denominators with the substitution lambda = mu / b, b the common
  // denominator: G(mu) = b^N * F(mu/b) is monic with coefficients in
  // F_q[t], so its roots mu are polynomials and lambda = mu / b.
  PolyFq b = PolyFq::one(base);
  for (const auto& c : F.coeffs())
    if (!c.is_zero()) b = poly_lcm(b, c.den());
  const RatFunc b_rat = RatFunc(b);
  std::vector<PolyFq> g(static_cast<size_t>(N) + 1, PolyFq::zero(base));
  for (int i = 0; i <= N; ++i) {
    const RatFunc term = F.coeff(i) * b_rat.pow(N - i);
    if (!term.is_polynomial()) throw std::logic_error("rational_roots: denominator clearing failed");
    g[static_cast<size_t>(i)] = term.num();
  }

  std::vector<RatFunc> out;
  // A vanishing constant term means lambda = 0 is a root; strip the mu
  // power it contributes and continue with the cofactor.
  size_t low = 0;
  while (low < g.size() && g[low].is_zero()) ++low;
  if (low > 0) {
    out.push_back(RatFunc::zero(base));
    g.erase(g.begin(), g.begin() + static_cast<long>(low));
  }
  const int n = static_cast<int>(g.size()) - 1;  // degree after stripping
  if (n == 0) return out;

  // Monic over F_q[t] bounds root degrees: n*deg(mu) <= max_i(deg g_i + i*deg(mu)),
  // so deg(mu) <= max over i < n of deg(g_i)/(n - i).
  int64_t bound = 0;
  for (int i = 0; i < n; ++i)
    if (!g[static_cast<size_t>(i)].is_zero())
      bound = std::max<int64_t>(bound, g[static_cast<size_t>(i)].degree() / (n - i));

  // Enough distinct sample points to pin a degree-<=bound polynomial.
  const int64_t samples = bound + 1;
  BigInt level_order = base->order();
  int ext = 1;
  while (level_order < samples) {
    level_order *= base->order();
    ++ext;
    if (ext > caps.ext_factor)
      throw CapExceeded("rational_roots: sample-point exhaustion at the allowed extension degree");
  }
  const FieldPtr work = ext == 1 ? base : FqField::make(base->p(), base->k() * ext);
  std::optional<FieldEmbedding> emb;
  if (ext > 1) emb.emplace(base, work);

  std::vector<PolyFq> g_work;
  g_work.reserve(g.size());
  for (const auto& gi : g) g_work.push_back(emb ? emb->lift(gi) : gi);

  // Sample points in enumeration order, built digit by digit so huge work
  // fields cost nothing beyond the points actually used.
  std::vector<FqElem> taus;
  taus.reserve(static_cast<size_t>(samples));
  for (int64_t j = 0; j < samples; ++j) {
    std::vector<int64_t> digits(static_cast<size_t>(work->k()), 0);
    int64_t rem = j;
    for (size_t pos = 0; rem > 0; ++pos, rem /= work->p()) digits[pos] = rem % work->p();
    taus.emplace_back(work, std::move(digits));
  }

  // Per-sample root sets; an empty set anywhere kills all candidates.
  std::vector<std::vector<FqElem>> per_sample;
  per_sample.reserve(taus.size());
  BigInt tuples = 1;
  for (const auto& tau : taus) {
    std::vector<FqElem> vals;
    vals.reserve(g_work.size());
    for (const auto& gi : g_work) vals.push_back(gi.eval(tau));
    auto roots = field_roots(PolyFq(work, vals));
    if (roots.empty()) return out;
    tuples *= static_cast<int64_t>(roots.size());
    per_sample.push_back(std::move(roots));
  }
  if (tuples > caps.root_tuples)
    throw CapExceeded("rational_roots: interpolation tuple count exceeds the cap");

  // Interpolate every consistent choice of one root per sample and collect
  // the candidates whose coefficients descend to the base field.
  const auto basis = lagrange_basis(taus, work);
  std::set<PolyFq> candidates;
  std::vector<size_t> idx(per_sample.size(), 0);
  for (;;) {
    PolyFq mu = PolyFq::zero(work);
    for (size_t j = 0; j < idx.size(); ++j)
      mu = mu + basis[j] * per_sample[j][idx[j]];
    if (emb) {
      auto lowered = emb->lower(mu);
      if (lowered) candidates.insert(std::move(*lowered));
    } else {
      candidates.insert(std::move(mu));
    }
    size_t j = 0;
    while (j < idx.size() && ++idx[j] == per_sample[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }

  // Exact verification is the final arbiter.
  for (const auto& mu : candidates) {
    const RatFunc lambda(mu, b);
    if (F.eval(lambda).is_zero()) out.push_back(lambda);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatFunc> periodic_params(const RatFunc& gamma, int n, const FamilyParams& fam,
                                     const Caps& caps) {
  return rational_roots(param_poly(n, gamma, fam, caps).minus_constant(gamma), caps);
}

}  // namespace charpdyn
