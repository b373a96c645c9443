#ifndef LASCAR_GF_HPP_
#define LASCAR_GF_HPP_

#include <cstdint>
#include <vector>

namespace lascar {

/// Arithmetic tables for GF(q), q = p^k a prime power <= 16.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of the representing polynomial (little-endian), so addition
/// is digit-wise mod p and the multiplicative structure is generated from a
/// fixed irreducible polynomial per field (see gf.cpp for the list).
/// Tables are immutable after construction and safe to share across threads.
class Gf {
public:
  /// Shared table for a supported q. Throws for unsupported q.
  static const Gf& get(int q);
  static bool supported(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return k_; }
  /// Irreducible modulus as an integer code (monic part implicit), 0 for prime fields.
  int modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws on 0
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;
  /// a^(p^e): the e-th Frobenius power.
  int frobenius(int a, int e = 1) const;

  /// All q elements, 0 first.
  std::vector<int> elements() const;
  /// The q-1 nonzero elements in increasing code order.
  std::vector<int> units() const;

private:
  explicit Gf(int q);
  int q_, p_, k_, modulus_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace lascar

#endif  // LASCAR_GF_HPP_
