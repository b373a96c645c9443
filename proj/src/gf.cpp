#include "lascar/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lascar {

namespace {

// Irreducible moduli for the prime-power fields, encoded as the integer whose
// base-p digits are the coefficients of x^k - f(x) ... i.e. we store the full
// reduction polynomial of x^k as an element code.  Conway-style choices:
//   GF(4):  x^2 = x + 1          -> code 1*2+1 = 3
//   GF(8):  x^3 = x + 1          -> code 3
//   GF(9):  x^2 = x + 1 over F3  (Conway x^2+2x+2: x^2 = -2x-2 = x+1) -> 1*3+1 = 4
//   GF(16): x^4 = x + 1          -> code 3
int reduction_code(int p, int k) {
  if (p == 2 && k == 2) return 3;
  if (p == 2 && k == 3) return 3;
  if (p == 3 && k == 2) return 4;
  if (p == 2 && k == 4) return 3;
  throw std::invalid_argument("gf: unsupported prime power");
}

struct Factored {
  int p, k;
};

bool factor_prime_power(int q, Factored* out) {
  if (q < 2) return false;
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int k = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) return false;
    out->p = p;
    out->k = k;
    return true;
  }
  return false;
}

int digit_add(int a, int b, int p, int k) {
  int r = 0, mult = 1;
  for (int i = 0; i < k; ++i) {
    r += ((a % p + b % p) % p) * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

// Polynomial multiplication of codes mod the reduction rule x^k = red.
int poly_mul(int a, int b, int p, int k, int red) {
  // coefficients of a
  std::vector<int> acc(2 * k, 0);
  std::vector<int> da(k), db(k);
  for (int i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + da[i] * db[j]) % p;
  // reduce degrees >= k downward
  std::vector<int> dr(k);
  {
    int r = red;
    for (int i = 0; i < k; ++i) {
      dr[i] = r % p;
      r /= p;
    }
  }
  for (int d = 2 * k - 2; d >= k; --d) {
    int c = acc[d];
    if (c == 0) continue;
    acc[d] = 0;
    for (int i = 0; i < k; ++i) acc[d - k + i] = (acc[d - k + i] + c * dr[i]) % p;
  }
  int code = 0, mult = 1;
  for (int i = 0; i < k; ++i) {
    code += acc[i] * mult;
    mult *= p;
  }
  return code;
}

}  // namespace

Gf::Gf(int q) : q_(q) {
  Factored f{};
  if (!factor_prime_power(q, &f) || q > 16)
    throw std::invalid_argument("gf: q must be a prime power <= 16");
  p_ = f.p;
  k_ = f.k;
  modulus_ = (k_ == 1) ? 0 : reduction_code(p_, k_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      add_[a * q + b] = static_cast<uint8_t>(digit_add(a, b, p_, k_));
      mul_[a * q + b] = static_cast<uint8_t>(
          k_ == 1 ? (a * b) % p_ : poly_mul(a, b, p_, k_, modulus_));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = static_cast<uint8_t>(b);
      if (a != 0 && mul(a, b) == 1) inv_[a] = static_cast<uint8_t>(b);
    }
  }
}

int Gf::inv(int a) const {
  if (a == 0) throw std::domain_error("gf: inverse of zero");
  return inv_[a];
}

int Gf::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int Gf::frobenius(int a, int e) const {
  int r = a;
  long long steps = ((e % k_) + k_) % k_;
  for (long long i = 0; i < steps; ++i) r = pow(r, p_);
  return r;
}

std::vector<int> Gf::elements() const {
  std::vector<int> v(q_);
  for (int i = 0; i < q_; ++i) v[i] = i;
  return v;
}

std::vector<int> Gf::units() const {
  std::vector<int> v(q_ - 1);
  for (int i = 1; i < q_; ++i) v[i - 1] = i;
  return v;
}

const Gf& Gf::get(int q) {
  static std::mutex mu;
  static std::map<int, const Gf*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, new Gf(q)).first;
  return *it->second;
}

bool Gf::supported(int q) {
  Factored f{};
  if (!factor_prime_power(q, &f) || q > 16) return false;
  if (f.k == 1) return true;
  return (f.p == 2 && f.k <= 4) || (f.p == 3 && f.k == 2);
}

}  // namespace lascar
