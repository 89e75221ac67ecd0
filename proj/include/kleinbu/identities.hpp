#pragma once

// Exact word identities in F(u, v) relating the special kernel words, and the
// integer parameters of the obstruction equation they feed into.

#include <cstdint>

#include "kleinbu/word.hpp"

namespace kleinbu {

/// Parameters of a class α with α(1,0) = (δ_{i+1}δ_{j+1} r1, 2 s1 + i) and
/// α(0,1) = (δ_{i+1}δ_{j+1} r2, 2 s2 + j), together with the quantified pair
/// (m, n) = (m_2, n_2) of the second braid's twist.
struct MasterParams {
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::int64_t i = 0;  // 0 or 1
  std::int64_t j = 0;  // 0 or 1
  std::int64_t m = 0;
  std::int64_t n = 0;
};

/// Exponents forced on the normal forms of a witness pair.
struct DerivedExponents {
  std::int64_t a1;
  std::int64_t a2;
  std::int64_t b1;
  std::int64_t b2;
  std::int64_t g;
  std::int64_t m1;  // δ_{i+1} δ_{j+1} r1
};

/// Throws PreconditionError unless i, j ∈ {0, 1}.
DerivedExponents derive(MasterParams const& p);

/// Q_{k,l} = O_{l,k}^-1 (Π_{i=1}^{σ_k k} B_{2l, -i + k(1+σ_k)/2})^{σ_k}
/// as an equality of reduced words. Requires k != 0.
bool q_identity_check(std::int64_t k, std::int64_t l);

/// O_{s2-n, 2δ_i m - 2δ_{i+1}δ_{n+1} r1}^{-δ_{j+1}} Q_{-2δ_i m, s2-n}^{δ_j}
///   = u^{a1-b1+ε_i b1} v^{b2} u^{-a1 ε_{n+i}} v^{-b2}
bool oq_merge_identity(MasterParams const& p);

/// J_{δ_{i+1}(n-s2), -2 m1} c_{-1,0}(I_{-δ_i b2}) = v^{-b2} (B^{δ_i} v u^{-2 m1})^{b2}
bool ji_merge_identity(MasterParams const& p);

/// T_{a1 ε_{n+i}, δ_{n+i}} = u^{a1 ε_{n+i}} (B^{ε_{n+i}} u^{ε_{n+i+1}})^{a1}
bool t_collection_identity(MasterParams const& p);

/// O_{a2/2, δ_{n+i+1}} c_{0,δ_{n+i+1}}(J_{a2/2, 1-2g})
///   = v^{a2} (B^{ε_{n+i}} (B^{δ_{n+i}} v u^{-2g})^2)^{-a2/2}
bool oj_collection_identity(MasterParams const& p);

}  // namespace kleinbu
