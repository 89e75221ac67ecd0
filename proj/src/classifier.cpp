#include "kleinbu/classifier.hpp"

#include <sstream>

#include "kleinbu/errors.hpp"

namespace kleinbu {

bool validate(HomDescriptor const& h) { return h.img10 * h.img01 == h.img01 * h.img10; }

void check_shape(HomClass const& c) {
  if (c.type < 1 || c.type > 4) throw PreconditionError("class type must be 1, 2, 3 or 4");
  if (c.type == 4) {
    if (c.i != 0) throw PreconditionError("Type 4 classes carry no i parameter");
    if (c.r1 < 0) throw PreconditionError("Type 4 requires r1 >= 0");
    if (c.r1 == 0 && c.r2 < 0) throw PreconditionError("Type 4 with r1 = 0 requires r2 >= 0");
    return;
  }
  if (c.i != 0 && c.i != 1) throw PreconditionError("i must be 0 or 1");
  if (c.r1 != 0 || c.r2 != 0) throw PreconditionError("Types 1-3 carry no r parameters");
}

HomDescriptor images(HomClass const& c) {
  switch (c.type) {
    case 1: return {{c.i, 2 * c.s1 + 1}, {0, 2 * c.s2}};
    case 2: return {{c.i, 2 * c.s1 + 1}, {c.i, 2 * c.s2 + 1}};
    case 3: return {{0, 2 * c.s1}, {c.i, 2 * c.s2 + 1}};
    case 4: return {{c.r1, 2 * c.s1}, {c.r2, 2 * c.s2}};
    default: throw PreconditionError("class type must be 1, 2, 3 or 4");
  }
}

HomDescriptor conjugate(HomDescriptor const& h, KleinElt by) {
  auto conj = [&](KleinElt x) { return by * x * by.inverse(); };
  return {conj(h.img10), conj(h.img01)};
}

HomClass normalize(HomDescriptor const& h) {
  if (!validate(h)) throw PreconditionError("images do not commute: not a homomorphism from Z + Z");
  auto const [m1, n1] = h.img10;
  auto const [m2, n2] = h.img01;
  bool const odd1 = delta(n1) == 1;
  bool const odd2 = delta(n2) == 1;
  // Conjugation keeps second coordinates, shifts first coordinates attached
  // to odd second coordinates by even amounts, and flips the sign of the
  // others when the conjugator has odd second coordinate.
  if (odd1 && !odd2) return HomClass::type1(mod_floor(m1, 2), (n1 - 1) / 2, n2 / 2);
  if (odd1 && odd2) return HomClass::type2(mod_floor(m1, 2), (n1 - 1) / 2, (n2 - 1) / 2);
  if (!odd1 && odd2) return HomClass::type3(mod_floor(m2, 2), n1 / 2, (n2 - 1) / 2);
  std::int64_t r1 = m1;
  std::int64_t r2 = m2;
  if (r1 < 0 || (r1 == 0 && r2 < 0)) {
    r1 = -r1;
    r2 = -r2;
  }
  return HomClass::type4(r1, r2, n1 / 2, n2 / 2);
}

bool central_shift_equiv(HomClass const& c, HomClass const& d) {
  if (c.type != d.type || c.i != d.i || c.r1 != d.r1 || c.r2 != d.r2 || c.s1 != d.s1) return false;
  return mod_floor(images(c).img01.n - images(d).img01.n, 4) == 0;
}

HomClass reduce(HomClass const& c) {
  HomClass r = c;
  r.s2 = mod_floor(c.s2, 2);
  return r;
}

namespace {

struct Type4Outcome {
  bool bu;
  std::string branch;
};

// The Type 4 clauses read with the given value of s2.
Type4Outcome type4_clauses(HomClass const& c, std::int64_t s2) {
  if (c.r2 * c.s1 != 0) return {true, "(d)(i)"};
  if (c.r2 == 0 && s2 == 0 && c.s1 != 0) return {true, "(d)(ii)"};
  if (c.s1 == 0 && s2 == 0 && c.r1 != 0 && delta(c.r2) == 0) return {true, "(d)(iii)"};
  return {false, "(d) fails: none of (i), (ii), (iii) holds"};
}

}  // namespace

Verdict decide(HomClass const& c) {
  check_shape(c);
  Verdict v;
  v.reduced = reduce(c);
  switch (c.type) {
    case 1:
      v.bu = delta(c.s2) == 0;
      v.branch = v.bu ? "(a)" : "(a) fails: s2 is odd";
      break;
    case 2:
      v.bu = true;
      v.branch = "(b)";
      break;
    case 3:
      v.bu = c.s1 != 0;
      v.branch = v.bu ? "(c)" : "(c) fails: s1 = 0";
      break;
    default: {
      auto const reduced = type4_clauses(c, v.reduced.s2);
      auto const literal = type4_clauses(c, c.s2);
      v.bu = reduced.bu;
      v.branch = reduced.branch;
      v.literal_bu = literal.bu;
      if (literal.bu != reduced.bu) {
        std::ostringstream note;
        note << v.branch << " [applied at s2 mod 2 = " << v.reduced.s2 << "; literal s2 = " << c.s2
             << " would give bu=" << (literal.bu ? "true" : "false") << "]";
        v.branch = note.str();
      }
      return v;
    }
  }
  v.literal_bu = v.bu;
  return v;
}

std::string format(HomClass const& c) {
  std::ostringstream out;
  out << "Type " << c.type << ' ';
  if (c.type == 4) {
    out << "(r1,r2,s1,s2)=(" << c.r1 << ',' << c.r2 << ',' << c.s1 << ',' << c.s2 << ')';
  } else {
    out << "(i,s1,s2)=(" << c.i << ',' << c.s1 << ',' << c.s2 << ')';
  }
  return out.str();
}

}  // namespace kleinbu
