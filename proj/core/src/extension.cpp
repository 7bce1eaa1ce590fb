#include "charpdyn/extension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "charpdyn/errors.hpp"
#include "charpdyn/factor.hpp"

namespace charpdyn {

int64_t splitting_degree(int64_t n, int64_t p) {
  if (n < 1) throw std::invalid_argument("splitting_degree: n must be >= 1");
  if (n == 1) return 1;
  if (std::gcd(n, p) != 1) throw std::invalid_argument("splitting_degree: gcd(n, p) must be 1");
  int64_t pm = p % n;
  for (int64_t m = 1;; ++m) {
    if (pm == 1) return m;
    pm = pm * p % n;  // n, p fit in int32 range at desk scale, no overflow
  }
}

namespace {

// The small field's modulus with coefficients read into the big field.
PolyFq modulus_in(const FqField& small, const FieldPtr& big) {
  return PolyFq::from_ints(big, small.modulus());
}

}  // namespace

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->p() != big_->p()) throw FieldMismatch("embedding across different characteristics");
  const int k = small_->k();
  const int K = big_->k();
  if (K % k != 0) throw FieldMismatch("embedding requires the small degree to divide the big one");

  gen_powers_.reserve(k);
  gen_powers_.push_back(FqElem::one(big_));
  if (k > 1) {
    FqElem image = FqElem::one(big_);
    if (small_->same_as(*big_)) {
      image = FqElem::gen(big_);  // the identity, not a Frobenius twist
    } else {
      // Send the small generator to the least root of its minimal polynomial;
      // any root works, least makes the embedding reproducible.
      auto roots = field_roots(modulus_in(*small_, big_));
      if (roots.empty()) throw FieldMismatch("small modulus has no root in the big field");
      image = roots.front();
    }
    for (int i = 1; i < k; ++i) gen_powers_.push_back(gen_powers_.back() * image);
  }

  // Row-reduce the K x k matrix of basis images, dragging an identity block
  // along; full column rank turns the matrix into [I_k; 0], so the identity
  // block becomes the lowering transform.
  const int64_t p = big_->p();
  std::vector<int64_t> m(static_cast<size_t>(K) * k);
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < K; ++r) m[static_cast<size_t>(r) * k + j] = gen_powers_[j].coeffs()[r];
  solve_.assign(static_cast<size_t>(K) * K, 0);
  for (int r = 0; r < K; ++r) solve_[static_cast<size_t>(r) * K + r] = 1;

  auto inv_mod_p = [p](int64_t a) {
    int64_t r = 1, base = a % p, e = p - 2;  // Fermat; p prime
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < K && m[static_cast<size_t>(piv) * k + col] == 0) ++piv;
    if (piv == K) throw FieldMismatch("basis images are dependent; modulus not irreducible?");
    if (piv != col) {
      for (int j = 0; j < k; ++j)
        std::swap(m[static_cast<size_t>(piv) * k + j], m[static_cast<size_t>(col) * k + j]);
      for (int j = 0; j < K; ++j)
        std::swap(solve_[static_cast<size_t>(piv) * K + j], solve_[static_cast<size_t>(col) * K + j]);
    }
    const int64_t scale = inv_mod_p(m[static_cast<size_t>(col) * k + col]);
    for (int j = 0; j < k; ++j)
      m[static_cast<size_t>(col) * k + j] = m[static_cast<size_t>(col) * k + j] * scale % p;
    for (int j = 0; j < K; ++j)
      solve_[static_cast<size_t>(col) * K + j] = solve_[static_cast<size_t>(col) * K + j] * scale % p;
    for (int r = 0; r < K; ++r) {
      if (r == col) continue;
      const int64_t factor = m[static_cast<size_t>(r) * k + col];
      if (factor == 0) continue;
      for (int j = 0; j < k; ++j) {
        auto& cell = m[static_cast<size_t>(r) * k + j];
        cell = (cell - factor * m[static_cast<size_t>(col) * k + j] % p + p) % p;
      }
      for (int j = 0; j < K; ++j) {
        auto& cell = solve_[static_cast<size_t>(r) * K + j];
        cell = (cell - factor * solve_[static_cast<size_t>(col) * K + j] % p + p) % p;
      }
    }
  }
}

FqElem FieldEmbedding::lift(const FqElem& x) const {
  if (!x.field()->same_as(*small_)) throw FieldMismatch("lift: element not from the small field");
  FqElem acc = FqElem::zero(big_);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    const int64_t c = x.coeffs()[i];
    if (c != 0) acc = acc + gen_powers_[i] * FqElem::from_int(big_, c);
  }
  return acc;
}

std::optional<FqElem> FieldEmbedding::lower(const FqElem& x) const {
  if (!x.field()->same_as(*big_)) throw FieldMismatch("lower: element not from the big field");
  const int k = small_->k();
  const int K = big_->k();
  const int64_t p = big_->p();
  std::vector<int64_t> out(static_cast<size_t>(k), 0);
  for (int r = 0; r < K; ++r) {
    int64_t acc = 0;
    for (int j = 0; j < K; ++j)
      acc = (acc + solve_[static_cast<size_t>(r) * K + j] * x.coeffs()[j]) % p;
    if (r < k)
      out[static_cast<size_t>(r)] = acc;
    else if (acc != 0)
      return std::nullopt;  // outside the embedded copy
  }
  return FqElem(small_, std::move(out));
}

PolyFq FieldEmbedding::lift(const PolyFq& f) const {
  std::vector<FqElem> coeffs;
  coeffs.reserve(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(lift(f.coeff(i)));
  return PolyFq(big_, coeffs);
}

std::optional<PolyFq> FieldEmbedding::lower(const PolyFq& f) const {
  std::vector<FqElem> coeffs;
  coeffs.reserve(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) {
    auto c = lower(f.coeff(i));
    if (!c) return std::nullopt;
    coeffs.push_back(std::move(*c));
  }
  return PolyFq(small_, coeffs);
}

RatFunc FieldEmbedding::lift(const RatFunc& x) const {
  return RatFunc(lift(x.num()), lift(x.den()));
}

std::optional<RatFunc> FieldEmbedding::lower(const RatFunc& x) const {
  // Reduced forms are canonical, so x descends exactly when its reduced
  // numerator and denominator do coefficientwise.
  auto n = lower(x.num());
  if (!n) return std::nullopt;
  auto d = lower(x.den());
  if (!d) return std::nullopt;
  return RatFunc(std::move(*n), std::move(*d));
}

std::vector<Place> places_above(const Place& v, const FieldEmbedding& emb) {
  if (!v.field()->same_as(*emb.small()))
    throw FieldMismatch("places_above: place not over the small field");
  if (v.is_infinity()) return {Place::infinity(emb.big())};
  std::vector<Place> out;
  for (const auto& f : distinct_irreducible_factors(emb.lift(v.pi()))) out.push_back(Place::finite(f));
  std::sort(out.begin(), out.end());
  return out;
}

FqElem residue_at(const RatFunc& x, const Place& v) {
  if (!x.field()->same_as(*v.field())) throw FieldMismatch("residue_at: mixed fields");
  if (x.is_zero()) return FqElem::zero(x.field());
  const int64_t o = ord(x, v);
  if (o < 0) throw std::invalid_argument("residue_at: element has a pole at the place");
  if (v.is_infinity()) {
    if (o > 0) return FqElem::zero(x.field());
    return x.num().leading() / x.den().leading();
  }
  const FieldPtr base = x.field();
  const FieldPtr res_field = FqField::make(base->p(), base->k() * v.degree());
  if (o > 0) return FqElem::zero(res_field);
  if (v.degree() == 1) {
    const FqElem theta = -v.pi().coeff(0);  // the root of the monic linear pi
    return x.num().eval(theta) / x.den().eval(theta);
  }
  const FieldEmbedding emb(base, res_field);
  const auto roots = field_roots(emb.lift(v.pi()));
  const FqElem& theta = roots.front();  // least root: the canonical identification
  return emb.lift(x.num()).eval(theta) / emb.lift(x.den()).eval(theta);
}

std::optional<FqElem> find_unity_translate(const FqElem& a, int64_t d, const Caps& caps) {
  if (a.is_zero()) throw std::invalid_argument("find_unity_translate: a must be nonzero");
  if (d < 2) throw std::invalid_argument("find_unity_translate: d must be >= 2");
  const FieldPtr base = a.field();
  const int64_t p = base->p();
  const auto split = decompose_d(d, p);
  if (split.s == 1) return std::nullopt;  // the only d-th root of unity is 1 itself

  // Smallest constant-field level containing all s prime-to-p d-th roots of
  // unity and the input: lcm of the base degree with ord_s(p).
  const int64_t level = std::lcm<int64_t>(base->k(), splitting_degree(split.s, p));
  FieldPtr work = base;
  FqElem lifted = a;
  if (level != base->k()) {
    work = FqField::make(p, static_cast<int>(level));
    lifted = FieldEmbedding(base, work).lift(a);
  }

  const FqElem one = FqElem::one(work);
  auto admissible = [&](const FqElem& c) {
    return (lifted + c).pow(d) == one && c.pow(d) != one;
  };
  // Nonzero candidates first; zero is admissible only when a^d = 1 already.
  for (const auto& c : enumerate_field(work, caps))
    if (!c.is_zero() && admissible(c)) return c;
  if (admissible(FqElem::zero(work))) return FqElem::zero(work);
  return std::nullopt;  // unreachable when s >= 2: the search space contains all s roots
}

}  // namespace charpdyn
