#pragma once

// Normal forms of homomorphisms Z ⊕ Z → Z ⋊ Z up to conjugation, and the
// Borsuk-Ulam decision for each normal form.

#include <cstdint>
#include <string>

#include "kleinbu/klein.hpp"

namespace kleinbu {

/// A candidate homomorphism, given by the images of (1,0) and (0,1).
struct HomDescriptor {
  KleinElt img10;
  KleinElt img01;
  friend bool operator==(HomDescriptor const&, HomDescriptor const&) = default;
};

/// One of the four representative shapes:
///   Type 1: (1,0) ↦ (i, 2 s1 + 1), (0,1) ↦ (0, 2 s2)
///   Type 2: (1,0) ↦ (i, 2 s1 + 1), (0,1) ↦ (i, 2 s2 + 1)
///   Type 3: (1,0) ↦ (0, 2 s1),     (0,1) ↦ (i, 2 s2 + 1)
///   Type 4: (1,0) ↦ (r1, 2 s1),    (0,1) ↦ (r2, 2 s2)
/// Types 1 to 3 use i ∈ {0, 1} and keep r1 = r2 = 0; Type 4 keeps i = 0,
/// r1 ≥ 0 and, when r1 = 0, r2 ≥ 0.
struct HomClass {
  int type = 1;
  std::int64_t i = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;

  static HomClass type1(std::int64_t i, std::int64_t s1, std::int64_t s2) { return {1, i, 0, 0, s1, s2}; }
  static HomClass type2(std::int64_t i, std::int64_t s1, std::int64_t s2) { return {2, i, 0, 0, s1, s2}; }
  static HomClass type3(std::int64_t i, std::int64_t s1, std::int64_t s2) { return {3, i, 0, 0, s1, s2}; }
  static HomClass type4(std::int64_t r1, std::int64_t r2, std::int64_t s1, std::int64_t s2) {
    return {4, 0, r1, r2, s1, s2};
  }

  friend bool operator==(HomClass const&, HomClass const&) = default;
  friend auto operator<=>(HomClass const&, HomClass const&) = default;
};

struct Verdict {
  bool bu = false;
  /// "(a)", "(b)", "(c)", "(d)(i)", "(d)(ii)", "(d)(iii)" when bu holds,
  /// otherwise a description of the failed clause. Carries a note when the
  /// unreduced reading of the Type 4 clauses would give the other answer.
  std::string branch;
  HomClass reduced;
  /// Verdict obtained by applying the Type 4 clauses to the unreduced s2.
  bool literal_bu = false;
};

/// True iff the two images commute.
bool validate(HomDescriptor const& h);

/// Throws PreconditionError unless the class has one of the listed shapes.
void check_shape(HomClass const& c);

/// The unique listed representative conjugate to h. Throws PreconditionError
/// if h is not a homomorphism.
HomClass normalize(HomDescriptor const& h);

/// The images of (1,0) and (0,1) under the representative.
HomDescriptor images(HomClass const& c);

/// Conjugate of h by (a, b): each image (m, n) goes to (a(1 - ε_n) + ε_b m, n).
HomDescriptor conjugate(HomDescriptor const& h, KleinElt by);

/// True iff the classes agree in type and all parameters except s2, and the
/// raw second coordinates of their (0,1)-images agree mod 4.
bool central_shift_equiv(HomClass const& c, HomClass const& d);

/// The class with s2 replaced by s2 mod 2.
HomClass reduce(HomClass const& c);

Verdict decide(HomClass const& c);

/// "Type 4 (r1,r2,s1,s2)=(1,2,0,0)" or "Type 1 (i,s1,s2)=(0,3,0)".
std::string format(HomClass const& c);

}  // namespace kleinbu
