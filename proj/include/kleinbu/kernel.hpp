#pragma once

// The abelianised kernel of g: F(u, v) → Z ⋊ Z, a free abelian group on the
// classes of B_{k,l} = v^k u^l B u^-l v^-k.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "kleinbu/klein.hpp"
#include "kleinbu/word.hpp"

namespace kleinbu {

struct BasisIndex {
  std::int64_t k = 0;
  std::int64_t l = 0;

  friend bool operator==(BasisIndex const&, BasisIndex const&) = default;
  friend auto operator<=>(BasisIndex const&, BasisIndex const&) = default;
};

/// Finitely supported integer combination of basis elements B_{k,l}. Zero
/// coefficients are never stored, so equality is coefficientwise.
class KernelVector {
 public:
  using Storage = std::map<BasisIndex, std::int64_t>;

  KernelVector() = default;
  static KernelVector unit(std::int64_t k, std::int64_t l, std::int64_t c = 1);

  void add(BasisIndex b, std::int64_t c);
  void add(std::int64_t k, std::int64_t l, std::int64_t c) { add({k, l}, c); }

  std::int64_t coefficient(std::int64_t k, std::int64_t l) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  Storage::const_iterator begin() const noexcept { return coeffs_.begin(); }
  Storage::const_iterator end() const noexcept { return coeffs_.end(); }

  KernelVector& operator+=(KernelVector const& rhs);
  KernelVector& operator-=(KernelVector const& rhs);
  KernelVector& operator*=(std::int64_t s);

  friend KernelVector operator+(KernelVector a, KernelVector const& b) { return a += b; }
  friend KernelVector operator-(KernelVector a, KernelVector const& b) { return a -= b; }
  friend KernelVector operator-(KernelVector a) { return a *= -1; }
  friend KernelVector operator*(std::int64_t s, KernelVector a) { return a *= s; }

  friend bool operator==(KernelVector const&, KernelVector const&) = default;

 private:
  Storage coeffs_;
};

/// Sorted "(k,l):c" terms separated by spaces; the zero vector is "0".
std::string format(KernelVector const& v);
KernelVector parse_kernel_vector(std::string_view text);

/// An endomorphism of the kernel given by its values on basis elements.
class LinearOp {
 public:
  using BasisMap = std::function<KernelVector(BasisIndex)>;

  LinearOp() : LinearOp(identity()) {}
  explicit LinearOp(BasisMap on_basis) : on_basis_(std::move(on_basis)) {}

  static LinearOp identity();
  static LinearOp zero();

  KernelVector on_basis(BasisIndex b) const { return on_basis_(b); }
  KernelVector operator()(KernelVector const& v) const;

  friend LinearOp operator+(LinearOp const& f, LinearOp const& g);
  friend LinearOp operator-(LinearOp const& f, LinearOp const& g);
  /// (f ∘ g)(x) = f(g(x))
  friend LinearOp compose(LinearOp const& f, LinearOp const& g);

 private:
  BasisMap on_basis_;
};

/// v^k u^l B u^-l v^-k
Word expand(std::int64_t k, std::int64_t l);

/// Coordinates of the class of w in the B_{k,l} basis, by a Reidemeister-
/// Schreier scan over the transversal {v^n u^{ε_n m}}. Throws
/// PreconditionError unless g(w) = (0, 0).
KernelVector project(Word const& w);

/// θ(m,n)_Ab(B_{k,l}) = ε_n B_{k, ε_n l - 2 δ_k m}
LinearOp theta_ab(KleinElt t);
/// ρ_Ab(B_{k,l}) = ε_k B_{-k, ε_{k+1} l}
LinearOp rho_ab();
/// (c_{p,q})_Ab(B_{k,l}) = B_{k+p, l + ε_k q}
LinearOp c_ab(std::int64_t p, std::int64_t q);

KernelVector theta_ab(KleinElt t, KernelVector const& v);
KernelVector rho_ab(KernelVector const& v);
KernelVector c_ab(std::int64_t p, std::int64_t q, KernelVector const& v);

/// v^p u^q x u^-q v^-p
Word c_word(std::int64_t p, std::int64_t q, Word const& x);

/// True iff projecting the exact conjugate c_{p,q}(x) agrees with applying
/// (c_{p,q})_Ab to the projection of x. Requires g(x) = (0, 0).
bool conjugation_agrees(std::int64_t p, std::int64_t q, Word const& x);

// Special kernel words.
/// T_{k,r} = u^k (B^{ε_r} u^{-ε_r})^{k ε_r}, r ∈ {0, 1}
Word word_t(std::int64_t k, std::int64_t r);
/// I_k = v^k (v B)^-k
Word word_i(std::int64_t k);
/// O_{k,l} = [v^{2k}, u^l]
Word word_o(std::int64_t k, std::int64_t l);
/// J_{k,l} = v^{2k} (v u^l)^{-2k}
Word word_j(std::int64_t k, std::int64_t l);
/// Q_{k,l} = u^k v^{2l+1} u^k v^{-2l-1}
Word word_q(std::int64_t k, std::int64_t l);

// Closed-form abelianisations of the special words.
KernelVector tilde_t(std::int64_t k, std::int64_t r);
KernelVector tilde_i(std::int64_t k);
KernelVector tilde_o(std::int64_t k, std::int64_t l);
KernelVector tilde_j(std::int64_t k, std::int64_t l);
KernelVector tilde_q(std::int64_t k, std::int64_t l);

}  // namespace kleinbu
