#pragma once

// Explicit braid pairs (a, b) certifying failure of the Borsuk-Ulam property:
// a b l_σ(a) = b, p1(a) = α(1,0) and p1(b l_σ(b)) = α(0,1).

#include <cstdint>
#include <optional>
#include <string>

#include "kleinbu/braid.hpp"
#include "kleinbu/classifier.hpp"

namespace kleinbu {

struct WitnessChecks {
  bool relation = false;      // a b l_σ(a) = b
  bool first_image = false;   // p1(a) = α(1,0)
  bool second_image = false;  // p1(b l_σ(b)) = α(0,1)
  bool all() const noexcept { return relation && first_image && second_image; }
  friend bool operator==(WitnessChecks const&, WitnessChecks const&) = default;
};

enum class WitnessSource { constructed, shifted, searched };

std::string to_string(WitnessSource s);

struct WitnessReport {
  HomClass cls;
  BraidElt a;
  BraidElt b;
  WitnessChecks checks;
  WitnessSource source = WitnessSource::constructed;
};

/// Outcome of checking a candidate pair, with both sides of every condition.
struct PairVerification {
  WitnessChecks checks;
  BraidElt relation_lhs;  // a b l_σ(a)
  BraidElt relation_rhs;  // b
  KleinElt first_actual;
  KleinElt first_expected;
  KleinElt second_actual;
  KleinElt second_expected;

  bool ok() const noexcept { return checks.all(); }
  /// Empty when ok(); otherwise one line per failed condition.
  std::string failure_detail() const;
};

PairVerification verify_pair(BraidElt const& a, BraidElt const& b, HomClass const& c);

/// Builds the explicit pair for the s2-reduced class, then shifts b by the
/// central element (1; 0, 2k) to reach the requested s2. Throws
/// PreconditionError if the class has the Borsuk-Ulam property and
/// UnsupportedFamily for Type 1 and Type 3 classes with i = 1.
WitnessReport build_witness(HomClass const& c);

/// The pair for the class with s2 reduced mod 2, before any shift.
WitnessReport base_witness(HomClass const& c);

/// Multiplies b by (1; 0, 2k) and re-verifies against `target`.
WitnessReport shift_witness(WitnessReport const& w, std::int64_t k, HomClass const& target);

struct SearchBounds {
  /// Words are products of at most this many symbols from u^±1, v^±1, B^±1.
  int max_length = 4;
  /// Twist coordinates of b range over |m|, |n| <= max_coord.
  std::int64_t max_coord = 2;
  /// Additionally allow the symbols B_{k,l}^±1 with 0 < max(|k|,|l|) <= radius.
  std::int64_t kernel_radius = 0;
};

struct SearchResult {
  std::optional<WitnessReport> report;
  /// Number of (a-word, b-twist, b-word) triples in the search space.
  std::uint64_t volume = 0;
  /// Triples that reached the exact relation check.
  std::uint64_t relation_checks = 0;
  std::uint64_t distinct_words = 0;
};

/// Exhaustive search inside the bounds. The twist of a is forced to α(1,0);
/// if that lies outside the coordinate box nothing is searched. Among all
/// verified pairs the one minimising (size, a-index, b-twist, b-index) is
/// returned, where size counts symbols plus |m| + |n| of b's twist.
SearchResult search_witness(HomClass const& c, SearchBounds const& bounds = {});

/// True iff both braids of the report lie inside the search space.
bool within_bounds(WitnessReport const& w, SearchBounds const& bounds);

}  // namespace kleinbu
