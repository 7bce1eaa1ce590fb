#include "charpdyn/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace charpdyn {

namespace {

// p^(k-1)-th power: the inverse of Frobenius on F_{p^k}
FqElem frobenius_inverse(const FqElem& c) {
  FqElem r = c;
  for (int i = 1; i < c.field()->k(); ++i) r = r.frobenius();
  return r;
}

// For f with f' = 0 (every exponent divisible by p), the unique g with
// g^p = f, up to the leading unit: g = sum_i a_i^(1/p) t^(i/p).
PolyFq pth_root(const PolyFq& f) {
  int64_t p = f.field()->p();
  std::vector<FqElem> cs;
  cs.reserve(static_cast<size_t>(f.degree() / p + 1));
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    cs.push_back(frobenius_inverse(f.coeff(i)));
  return PolyFq(f.field(), cs);
}

// t^(q^e) - t mod f
PolyFq frob_power_minus_t(int e, const PolyFq& f) {
  const FieldPtr& F = f.field();
  BigInt q = F->order();
  PolyFq w = PolyFq::variable(F);
  for (int i = 0; i < e; ++i) w = powmod(w, q, f);
  return (w - PolyFq::variable(F)) % f;
}

// Split a squarefree product of irreducibles all of degree dd. Cantor and
// Zassenhaus style: random gcd splitting, seeded from the input so the
// factor order is reproducible.
void equal_degree_split(const PolyFq& f, int dd, std::mt19937_64& rng,
                        std::vector<PolyFq>& out) {
  if (f.degree() == dd) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& F = f.field();
  int64_t p = F->p();
  int k = F->k();
  BigInt q = F->order();
  auto random_poly = [&](int deg_bound) {
    std::vector<FqElem> cs;
    cs.reserve(static_cast<size_t>(deg_bound));
    for (int i = 0; i < deg_bound; ++i) {
      std::vector<int64_t> res(static_cast<size_t>(k));
      for (auto& r : res) r = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
      cs.emplace_back(F, std::move(res));
    }
    return PolyFq(F, cs);
  };
  PolyFq splitter(F);
  while (true) {
    PolyFq h = random_poly(2 * dd);
    if (h.is_zero()) continue;
    PolyFq g = gcd(h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      splitter = g;
      break;
    }
    if (p == 2) {
      // trace map over F_2: h + h^2 + ... + h^(2^(k*dd-1))
      PolyFq tr = h % f, pw = h % f;
      for (int i = 1; i < k * dd; ++i) {
        pw = (pw * pw) % f;
        tr = tr + pw;
      }
      g = gcd(tr, f);
    } else {
      BigInt e = (big_pow(p, k * dd) - 1) / 2;
      PolyFq w = powmod(h, e, f) - PolyFq::one(F);
      g = gcd(w, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      splitter = g;
      break;
    }
  }
  equal_degree_split(splitter, dd, rng, out);
  equal_degree_split((f / splitter).monic(), dd, rng, out);
}

}  // namespace

bool is_irreducible(const PolyFq& f) {
  int n = f.degree();
  if (n < 1) return false;
  if (!frob_power_minus_t(n, f).is_zero()) return false;
  int rem = n;
  auto trivial_at = [&](int r) { return gcd(frob_power_minus_t(n / r, f), f).degree() == 0; };
  for (int r = 2; r * r <= rem; ++r) {
    if (rem % r != 0) continue;
    while (rem % r == 0) rem /= r;
    if (!trivial_at(r)) return false;
  }
  if (rem > 1 && !trivial_at(rem)) return false;
  return true;
}

PolyFq radical(const PolyFq& f) {
  if (f.is_zero()) throw std::invalid_argument("radical of zero polynomial");
  if (f.degree() == 0) return PolyFq::one(f.field());
  PolyFq d = f.derivative();
  if (d.is_zero()) return radical(pth_root(f));  // f is a p-th power
  // v collects the factors of multiplicity prime to p, each once
  PolyFq v = (f / gcd(f, d)).monic();
  // what remains after stripping every v-factor has all multiplicities
  // divisible by p, so it is a p-th power and recursion terminates
  PolyFq w = f;
  for (PolyFq g = gcd(w, v); g.degree() > 0; g = gcd(w, v)) w = w / g;
  if (w.degree() == 0) return v;
  return (v * radical(w)).monic();
}

std::vector<PolyFq> distinct_irreducible_factors(const PolyFq& f) {
  if (f.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
  std::vector<PolyFq> out;
  if (f.degree() == 0) return out;
  PolyFq work = radical(f);
  std::mt19937_64 rng(static_cast<uint64_t>(f.hash()) ^ 0x9e3779b97f4a7c15ull);

  // distinct-degree pass on the squarefree radical
  const FieldPtr& F = f.field();
  BigInt q = F->order();
  PolyFq frob = PolyFq::variable(F);  // t^(q^dd) mod work, updated per round
  for (int dd = 1; work.degree() >= 2 * dd; ++dd) {
    frob = powmod(frob, q, work);
    PolyFq g = gcd(frob - PolyFq::variable(F), work);
    if (g.degree() > 0) {
      equal_degree_split(g, dd, rng, out);
      work = (work / g).monic();
      frob = frob % work;
    }
  }
  if (work.degree() > 0) out.push_back(work.monic());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FqElem> field_roots(const PolyFq& f) {
  std::vector<FqElem> roots;
  for (const PolyFq& g : distinct_irreducible_factors(f))
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace charpdyn
