#pragma once

// The linear obstruction equation in the abelianised kernel, the functionals
// that annihilate its linear part, and bounded contradiction checks.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kleinbu/classifier.hpp"
#include "kleinbu/identities.hpp"
#include "kleinbu/kernel.hpp"

namespace kleinbu {

/// Ax(x) + Ay(y) + C = 0 must have a solution (x, y) for some (m, n) when the
/// class fails the Borsuk-Ulam property.
struct MasterEquation {
  MasterParams params;
  LinearOp ax;
  LinearOp ay;
  KernelVector constant;
  DerivedExponents derived;
};

MasterEquation build_master(MasterParams const& p);

/// Integer- or Z_2-valued homomorphism on the kernel, given on the basis.
class Functional {
 public:
  enum class Codomain { integers, mod2 };

  Functional(std::string name, Codomain codomain, std::function<std::int64_t(BasisIndex)> on_basis)
      : name_(std::move(name)), codomain_(codomain), on_basis_(std::move(on_basis)) {}

  std::string const& name() const noexcept { return name_; }
  Codomain codomain() const noexcept { return codomain_; }
  /// Value in Z, or the representative in {0, 1} for Z_2.
  std::int64_t operator()(KernelVector const& v) const;
  std::int64_t on_basis(std::int64_t k, std::int64_t l) const { return (*this)(KernelVector::unit(k, l)); }

 private:
  std::string name_;
  Codomain codomain_;
  std::function<std::int64_t(BasisIndex)> on_basis_;
};

/// ξ(B_{k,l}) = δ_w + δ_{w+1} k mod 2. Requires w ∈ {0, 1}.
Functional xi_23(std::int64_t w);
/// ξ(B_{k,l}) = 1 iff k ≡ 0 or k ≡ 2n - 2z - 1 mod 4|s|. Requires s != 0.
Functional xi_5(std::int64_t s, std::int64_t n, std::int64_t z);
/// ξ1(B_{k,l}) = δ_{k+n}, integer valued.
Functional xi1_7(std::int64_t n);
/// ξ2(B_{k,l}) = k + n + 1 mod 2 if l ≡ ε_n m - r2/2 mod 2|r1|, else 0.
/// Requires r1 > 0 and r2 even.
Functional xi2_7(std::int64_t r1, std::int64_t r2, std::int64_t m, std::int64_t n);
/// ξ3(B_{k,l}) = 1 iff k ≡ n mod 4|s|. Requires s != 0.
Functional xi3_7(std::int64_t s, std::int64_t n);

/// Parameters of the Type 4 operators μ and ν.
struct MuNuParams {
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t s = 0;
  std::int64_t z = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
};

/// μ and ν from their closed forms on the basis:
///   μ(B_{k,l}) = B_{k-2z+2n-4s, l+ε_k(2δ_{n+1}(m-r1)+ε_{n+1}r2)}
///              + ε_{k+n} B_{-k, ε_{k+n+1} l - 2δ_k(m+ε_{n+1}r1)}
///   ν(B_{k,l}) = B_{k-4s, l-2δ_{n+k+1} r1} - B_{k,l}
std::pair<LinearOp, LinearOp> mu_nu_7(MuNuParams const& p);
/// μ = c_{2n-2z-4s, 2δ_{n+1}(m-r1)+ε_{n+1}r2} + θ(m+ε_{n+1}r1, δ_n)∘ρ and
/// ν = c_{-4s,-2δ_{n+1}r1}∘θ(r1, 0) - id.
std::pair<LinearOp, LinearOp> mu_nu_7_composed(MuNuParams const& p);

/// An equation Ax(x) + Ay(y) + C = 0 as written out for a specific family.
struct DisplayedEquation {
  LinearOp ax;
  LinearOp ay;
  KernelVector constant;
};

/// Master equation at s1 = s, i = 1, s2 = zw, j = w, r1 = r2 = 0.
DisplayedEquation displayed_types12(std::int64_t s, std::int64_t z, std::int64_t w, std::int64_t m,
                                    std::int64_t n);
/// Master equation at s1 = s, i = 0, s2 = z, j = 1, r1 = r2 = 0.
DisplayedEquation displayed_type3(std::int64_t s, std::int64_t z, std::int64_t m, std::int64_t n);
/// Master equation at s1 = s, i = j = 0, s2 = z, with Ax = μ and Ay = ν.
DisplayedEquation displayed_type4(std::int64_t r1, std::int64_t r2, std::int64_t s, std::int64_t z,
                                  std::int64_t m, std::int64_t n);

/// The scalar obtained by applying ξ1 term by term to the Type 4 equation,
/// before simplification. Equals -2 r2 s.
std::int64_t xi1_scalar_7(std::int64_t r1, std::int64_t r2, std::int64_t s, std::int64_t z, std::int64_t m,
                          std::int64_t n);

struct CertificateBounds {
  std::int64_t window = 6;  // |k|, |l| <= window
  std::int64_t mn = 4;      // |m|, |n| <= mn
};

struct CertificateFailure {
  std::string kind;  // "linear-x", "linear-y", "constant" or "identity"
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::string detail;
};

struct CertificateReport {
  HomClass cls;
  HomClass reduced;
  std::string family;
  std::string functional;
  MasterParams master;  // m and n unused
  CertificateBounds bounds;
  bool linear_killed = false;
  bool constant_nonzero_for_all = false;
  bool identities_hold = false;
  std::vector<CertificateFailure> failures;

  bool success() const noexcept { return linear_killed && constant_nonzero_for_all && identities_hold; }
};

/// Selects the family and functional for the s2-reduced class and checks, for
/// all (m, n) in the window, that the functional kills Ax and Ay on every basis
/// vector of the window and is nonzero on C. Also checks the family's
/// functional identities on the window. Throws PreconditionError for classes
/// without the Borsuk-Ulam property and UnsupportedFamily for Types 1-3 with
/// i = 1.
CertificateReport check_certificate(HomClass const& c, CertificateBounds const& bounds = {});

}  // namespace kleinbu
