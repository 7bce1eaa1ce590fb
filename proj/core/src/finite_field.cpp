#include "charpdyn/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "charpdyn/errors.hpp"

namespace charpdyn {

namespace {

// --- arithmetic on monic-free dense polynomials over F_p (residue vectors) ---
// Only used for modulus selection; everything later goes through PolyFq.

using PVec = std::vector<int64_t>;

int pdeg(const PVec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

PVec ptrim(PVec a) {
  a.resize(static_cast<size_t>(pdeg(a) + 1));
  return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
  }
  // reduce by the monic modulus
  int dm = pdeg(mod);
  for (int i = pdeg(acc); i >= dm; --i) {
    int64_t c = acc[static_cast<size_t>(i)] % p;
    if (c == 0) continue;
    acc[static_cast<size_t>(i)] = 0;
    for (int j = 0; j < dm; ++j)
      acc[static_cast<size_t>(i - dm + j)] =
          (acc[static_cast<size_t>(i - dm + j)] + c * (p - mod[static_cast<size_t>(j)])) % p;
  }
  return ptrim(std::move(acc));
}

PVec ppowmod(PVec base, BigInt e, const PVec& mod, int64_t p) {
  PVec r{1};
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = pmulmod(r, base, mod, p);
    e >>= 1;
    if (e > 0) base = pmulmod(base, base, mod, p);
  }
  return r;
}

PVec pgcd(PVec a, PVec b, int64_t p) {
  auto inv_mod_p = [p](int64_t x) {
    // extended Euclid on integers
    int64_t t = 0, nt = 1, r = p, nr = x % p;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return ((t % p) + p) % p;
  };
  a = ptrim(std::move(a));
  b = ptrim(std::move(b));
  while (!b.empty()) {
    // a mod b
    int db = pdeg(b);
    int64_t lead_inv = inv_mod_p(b[static_cast<size_t>(db)]);
    while (pdeg(a) >= db) {
      int da = pdeg(a);
      int64_t c = (a[static_cast<size_t>(da)] * lead_inv) % p;
      for (int j = 0; j <= db; ++j)
        a[static_cast<size_t>(da - db + j)] =
            ((a[static_cast<size_t>(da - db + j)] - c * b[static_cast<size_t>(j)]) % p + p) % p;
      a = ptrim(std::move(a));
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// x^(p^e) - x reduced mod f, as a trimmed vector
PVec frob_power_minus_x(int e, const PVec& f, int64_t p) {
  PVec w = ppowmod(PVec{0, 1}, big_pow(p, e), f, p);
  w.resize(std::max<size_t>(w.size(), 2), 0);
  w[1] = ((w[1] - 1) % p + p) % p;
  return ptrim(std::move(w));
}

// Deterministic irreducibility over F_p: f monic of degree k is irreducible
// iff x^(p^k) = x (mod f) and gcd(x^(p^(k/r)) - x, f) = 1 for each prime r | k.
bool irreducible_over_prime_field(const PVec& f, int64_t p) {
  int k = pdeg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  // deg f >= 2 from here on, so subtracting x inside frob_power_minus_x
  // never needs a further reduction
  if (!frob_power_minus_x(k, f, p).empty()) return false;
  int rem = k;
  auto coprime_at = [&](int r) { return pdeg(pgcd(frob_power_minus_x(k / r, f, p), f, p)) == 0; };
  for (int r = 2; r * r <= rem; ++r) {
    if (rem % r != 0) continue;
    while (rem % r == 0) rem /= r;
    if (!coprime_at(r)) return false;
  }
  if (rem > 1 && !coprime_at(rem)) return false;
  return true;
}

// Smallest monic irreducible of degree k, ordering coefficient vectors as
// base-p integers. Degree 1 gives x itself.
PVec least_irreducible(int64_t p, int k) {
  PVec f(static_cast<size_t>(k) + 1, 0);
  f[static_cast<size_t>(k)] = 1;
  // enumerate the k low coefficients as base-p digits of n = 0, 1, ...
  BigInt count = big_pow(p, k);
  for (BigInt n = 0; n < count; ++n) {
    BigInt m = n;
    for (int i = 0; i < k; ++i) {
      f[static_cast<size_t>(i)] = static_cast<int64_t>(m % p);
      m /= p;
    }
    if (irreducible_over_prime_field(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found (unreachable)");
}

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- FqField ---

FqField::FqField(int64_t p, int k, std::vector<int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

FieldPtr FqField::make(int64_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field degree must be at least 1");
  // registry so repeated makes share one representation
  static std::mutex mu;
  static std::map<std::pair<int64_t, int>, std::weak_ptr<const FqField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  if (auto it = registry.find(key); it != registry.end())
    if (auto f = it->second.lock()) return f;
  FieldPtr f(new FqField(p, k, least_irreducible(p, k)));
  registry[key] = f;
  return f;
}

BigInt FqField::order() const { return big_pow(p_, k_); }

bool FqField::same_as(const FqField& other) const {
  return this == &other || (p_ == other.p_ && k_ == other.k_);
}

std::string FqField::spec_string() const {
  return std::to_string(p_) + "^" + std::to_string(k_);
}

void FqField::raw_add(const int64_t* a, const int64_t* b, int64_t* out) const {
  for (int i = 0; i < k_; ++i) {
    int64_t s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FqField::raw_sub(const int64_t* a, const int64_t* b, int64_t* out) const {
  for (int i = 0; i < k_; ++i) {
    int64_t s = a[i] - b[i];
    out[i] = s < 0 ? s + p_ : s;
  }
}

void FqField::raw_neg(const int64_t* a, int64_t* out) const {
  for (int i = 0; i < k_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
}

void FqField::raw_mul_acc(const int64_t* a, const int64_t* b, int64_t* acc) const {
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j) acc[i + j] += a[i] * b[j];
  }
}

void FqField::raw_reduce(int64_t* acc, int64_t* out) const {
  // fold degrees 2k-2 .. k by g^k = -(modulus tail), then canonicalize
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    int64_t c = acc[i] % p_;
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) acc[i - k_ + j] += c * (p_ - modulus_[static_cast<size_t>(j)]);
  }
  for (int i = 0; i < k_; ++i) out[i] = acc[i] % p_;
}

// --- FqElem ---

FqElem::FqElem(FieldPtr field, std::vector<int64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("element needs a field");
  coeffs_.resize(static_cast<size_t>(field_->k()), 0);
  for (auto& c : coeffs_) {
    c %= field_->p();
    if (c < 0) c += field_->p();
  }
}

FqElem FqElem::zero(const FieldPtr& f) { return FqElem(f, {}); }

FqElem FqElem::one(const FieldPtr& f) { return FqElem(f, {1}); }

FqElem FqElem::from_int(const FieldPtr& f, int64_t n) { return FqElem(f, {n}); }

FqElem FqElem::gen(const FieldPtr& f) {
  if (f->k() < 2) throw std::invalid_argument("prime field has no power-basis generator");
  return FqElem(f, {0, 1});
}

bool FqElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool FqElem::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool FqElem::in_prime_field() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

int64_t FqElem::as_int() const {
  if (!in_prime_field()) throw std::invalid_argument("element is not in the prime subfield");
  return coeffs_[0];
}

void require_same_field(const FqElem& a, const FqElem& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw FieldMismatch("elements of different fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
  require_same_field(*this, o);
  std::vector<int64_t> out(coeffs_.size());
  field_->raw_add(coeffs_.data(), o.coeffs_.data(), out.data());
  return FqElem(field_, std::move(out));
}

FqElem FqElem::operator-(const FqElem& o) const {
  require_same_field(*this, o);
  std::vector<int64_t> out(coeffs_.size());
  field_->raw_sub(coeffs_.data(), o.coeffs_.data(), out.data());
  return FqElem(field_, std::move(out));
}

FqElem FqElem::operator-() const {
  std::vector<int64_t> out(coeffs_.size());
  field_->raw_neg(coeffs_.data(), out.data());
  return FqElem(field_, std::move(out));
}

FqElem FqElem::operator*(const FqElem& o) const {
  require_same_field(*this, o);
  int k = field_->k();
  std::vector<int64_t> acc(static_cast<size_t>(2 * k - 1), 0);
  field_->raw_mul_acc(coeffs_.data(), o.coeffs_.data(), acc.data());
  std::vector<int64_t> out(static_cast<size_t>(k));
  field_->raw_reduce(acc.data(), out.data());
  return FqElem(field_, std::move(out));
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  // extended Euclid in F_p[x]: r0 = modulus, r1 = this; track only the
  // coefficient of r1 since the modulus term is discarded at the end
  int64_t p = field_->p();
  auto inv_mod_p = [p](int64_t x) {
    int64_t t = 0, nt = 1, r = p, nr = x % p;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return ((t % p) + p) % p;
  };
  auto sub_scaled = [p](PVec& a, const PVec& b, int64_t c, int shift) {
    if (a.size() < b.size() + static_cast<size_t>(shift))
      a.resize(b.size() + static_cast<size_t>(shift), 0);
    for (size_t j = 0; j < b.size(); ++j)
      a[j + static_cast<size_t>(shift)] = ((a[j + static_cast<size_t>(shift)] - c * b[j]) % p + p) % p;
  };
  PVec r0(field_->modulus()), r1 = ptrim(PVec(coeffs_));
  PVec t0{}, t1{1};
  while (pdeg(r1) > 0) {
    int64_t lead_inv = inv_mod_p(r1[static_cast<size_t>(pdeg(r1))]);
    while (pdeg(r0) >= pdeg(r1) && pdeg(r0) >= 0) {
      int shift = pdeg(r0) - pdeg(r1);
      int64_t c = (r0[static_cast<size_t>(pdeg(r0))] * lead_inv) % p;
      sub_scaled(r0, r1, c, shift);
      sub_scaled(t0, t1, c, shift);
      r0 = ptrim(std::move(r0));
    }
    std::swap(r0, r1);
    std::swap(t0, t1);
  }
  // r1 is now a nonzero constant (modulus is irreducible); scale its cofactor
  int64_t scale = inv_mod_p(r1[0]);
  PVec out(static_cast<size_t>(field_->k()), 0);
  for (size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = (t1[i] * scale) % p;
  return FqElem(field_, std::move(out));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::pow(const BigInt& e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  FqElem base = *this, r = FqElem::one(field_);
  BigInt n = e;
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

FqElem FqElem::pow(int64_t e) const { return pow(BigInt(e)); }

FqElem FqElem::frobenius() const { return pow(BigInt(field_->p())); }

bool FqElem::operator==(const FqElem& o) const {
  if (!field_ || !o.field_) return field_ == o.field_;
  return field_->same_as(*o.field_) && coeffs_ == o.coeffs_;
}

bool FqElem::operator<(const FqElem& o) const {
  require_same_field(*this, o);
  return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(), o.coeffs_.rbegin(),
                                      o.coeffs_.rend());
}

size_t FqElem::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  if (field_) {
    mix(static_cast<uint64_t>(field_->p()));
    mix(static_cast<uint64_t>(field_->k()));
  }
  for (int64_t c : coeffs_) mix(static_cast<uint64_t>(c));
  return h;
}

std::string FqElem::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    int64_t c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += "g";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// --- free operations ---

DSplit decompose_d(int64_t d, int64_t p) {
  if (d < 2) throw std::invalid_argument("degree d must be at least 2");
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  DSplit out{d, d, 0};
  while (out.s % p == 0) {
    out.s /= p;
    ++out.ell;
  }
  return out;
}

int64_t count_dth_roots_of_unity(int64_t d, const FqField& field) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  BigInt m = field.order() - 1;
  BigInt g = boost::multiprecision::gcd(BigInt(d), m);
  return static_cast<int64_t>(g);
}

std::vector<FqElem> enumerate_field(const FieldPtr& f, const Caps& caps) {
  BigInt n = f->order();
  if (n > caps.enumeration)
    throw CapExceeded("field of order " + n.str() + " exceeds enumeration cap " +
                      std::to_string(caps.enumeration));
  int64_t count = static_cast<int64_t>(n);
  std::vector<FqElem> out;
  out.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) {
    std::vector<int64_t> coeffs(static_cast<size_t>(f->k()));
    int64_t m = i;
    for (auto& c : coeffs) {
      c = m % f->p();
      m /= f->p();
    }
    out.emplace_back(f, std::move(coeffs));
  }
  return out;
}

}  // namespace charpdyn
