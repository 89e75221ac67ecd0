#include "kleinbu/witness.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "kleinbu/errors.hpp"
#include "kleinbu/kernel.hpp"

namespace kleinbu {

std::string to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::constructed: return "constructed";
    case WitnessSource::shifted: return "shifted";
    case WitnessSource::searched: return "searched";
  }
  return "unknown";
}

std::string PairVerification::failure_detail() const {
  std::ostringstream out;
  if (!checks.relation) {
    out << "relation a*b*lsigma(a) = b fails: lhs " << format(relation_lhs) << ", rhs "
        << format(relation_rhs) << '\n';
  }
  if (!checks.first_image) {
    out << "first image p1(a) = alpha(1,0) fails: lhs " << format(first_actual) << ", rhs "
        << format(first_expected) << '\n';
  }
  if (!checks.second_image) {
    out << "second image p1(b*lsigma(b)) = alpha(0,1) fails: lhs " << format(second_actual)
        << ", rhs " << format(second_expected) << '\n';
  }
  return out.str();
}

PairVerification verify_pair(BraidElt const& a, BraidElt const& b, HomClass const& c) {
  HomDescriptor const img = images(c);
  PairVerification r;
  r.relation_lhs = a * b * lsigma(a);
  r.relation_rhs = b;
  r.first_actual = p1(a);
  r.first_expected = img.img10;
  r.second_actual = p1(b * lsigma(b));
  r.second_expected = img.img01;
  r.checks.relation = r.relation_lhs == r.relation_rhs;
  r.checks.first_image = r.first_actual == r.first_expected;
  r.checks.second_image = r.second_actual == r.second_expected;
  return r;
}

namespace {

BraidElt braid(Word w, std::int64_t m, std::int64_t n) { return {std::move(w), {m, n}}; }

WitnessReport finish(HomClass const& c, BraidElt a, BraidElt b, WitnessSource source) {
  PairVerification const v = verify_pair(a, b, c);
  if (!v.ok()) {
    throw ConsistencyError("witness for " + format(c) + " failed verification:\n" + v.failure_detail());
  }
  return {c, std::move(a), std::move(b), v.checks, source};
}

void require_non_bu(HomClass const& c) {
  if (decide(c).bu) throw PreconditionError("class has the Borsuk-Ulam property: " + format(c));
  if (c.type != 4 && c.i != 0) {
    throw UnsupportedFamily("no explicit construction for " + format(c) + " (i = 1)");
  }
}

// Types 1 and 3 with i = 0. w = 0 gives (0, 2s+1), (0, 2); w = 1 gives
// (0, 0), (0, 2z+1).
std::pair<BraidElt, BraidElt> odd_family(std::int64_t s, std::int64_t z, std::int64_t w) {
  Word const& B = big_b();
  Word const x = (Word::v(2 * s + 2) * (B * Word::v(2)).pow(-s - 1)).pow(1 - w);
  BraidElt a = braid(Word::v((4 * s + 2) * (w - 1)) * x, 0, (2 * s + 1) * (1 - w));
  BraidElt b = braid(Word::v(w), 0, w * (z - 1) + 1);
  return {std::move(a), std::move(b)};
}

std::pair<BraidElt, BraidElt> type4_family(HomClass const& c) {
  Word const& B = big_b();
  std::int64_t const r1 = c.r1;
  std::int64_t const r2 = c.r2;
  if (c.s2 == 1) {
    std::int64_t const s = c.s1;
    BraidElt a = braid(Word::v(-2 * s) * (Word::u(2 * r1 - 1) * Word::v(-1)).pow(2 * s) * B.pow(-r1), r1,
                       2 * s);
    BraidElt b = braid(Word::u(-omega(s) * r2) * B.pow(1 - omega(s)), 0, 1);
    return {std::move(a), std::move(b)};
  }
  if (delta(r2) == 0) return {braid({}, 0, 0), braid({}, r2 / 2, 0)};
  // r2 odd: a = a1^r1 and b = (b1 σ)^-r2 σ^-1, folded into P_2 as
  // C^{-(r2+1)/2} b1 with C = b1 l_σ(b1) σ².
  BraidElt const a1 = braid(Word::u(-2), 1, 0);
  BraidElt const b1 = braid(Word::u(-1), 0, 0);
  BraidElt const cc = b1 * lsigma(b1) * sigma_squared();
  return {bpow(a1, r1), bpow(cc, -(r2 + 1) / 2) * b1};
}

}  // namespace

WitnessReport base_witness(HomClass const& c) {
  require_non_bu(c);
  HomClass const r = reduce(c);
  std::pair<BraidElt, BraidElt> ab;
  switch (r.type) {
    case 1: ab = odd_family(r.s1, 0, 0); break;
    case 3: ab = odd_family(0, r.s2, 1); break;
    case 4: ab = type4_family(r); break;
    default: throw ConsistencyError("no construction for " + format(r));
  }
  return finish(r, std::move(ab.first), std::move(ab.second), WitnessSource::constructed);
}

WitnessReport shift_witness(WitnessReport const& w, std::int64_t k, HomClass const& target) {
  BraidElt b = w.b * braid({}, 0, 2 * k);
  return finish(target, w.a, std::move(b), k == 0 ? w.source : WitnessSource::shifted);
}

WitnessReport build_witness(HomClass const& c) {
  WitnessReport const base = base_witness(c);
  // Raw second coordinates differ by 2 (s2 - s2 mod 2), a multiple of 4.
  std::int64_t const k = (c.s2 - base.cls.s2) / 2;
  return shift_witness(base, k, c);
}

namespace {

struct Symbol {
  Word word;
  int inverse_of;
};

std::vector<Symbol> symbols(SearchBounds const& bounds) {
  std::vector<Word> base{Word::u(), Word::v(), big_b()};
  for (std::int64_t k = -bounds.kernel_radius; k <= bounds.kernel_radius; ++k) {
    for (std::int64_t l = -bounds.kernel_radius; l <= bounds.kernel_radius; ++l) {
      if (k != 0 || l != 0) base.push_back(expand(k, l));
    }
  }
  std::vector<Symbol> out;
  for (auto const& w : base) {
    int const idx = static_cast<int>(out.size());
    out.push_back({w, idx + 1});
    out.push_back({w.inverse(), idx});
  }
  return out;
}

struct Enumerated {
  std::vector<Word> words;
  std::vector<int> size;
  std::unordered_map<Word, std::size_t, WordHash> index;
};

// Breadth-first over symbol strings without adjacent inverse pairs, keeping
// the first (hence shortest) string reaching each reduced word.
Enumerated enumerate_words(SearchBounds const& bounds) {
  std::vector<Symbol> const sym = symbols(bounds);
  Enumerated e;
  struct Partial {
    Word w;
    int last;
  };
  std::vector<Partial> layer{{Word{}, -1}};
  e.words.push_back(Word{});
  e.size.push_back(0);
  e.index.emplace(Word{}, 0);
  for (int len = 1; len <= bounds.max_length; ++len) {
    std::vector<Partial> next;
    for (auto const& p : layer) {
      for (int s = 0; s < static_cast<int>(sym.size()); ++s) {
        if (p.last >= 0 && sym[static_cast<std::size_t>(p.last)].inverse_of == s) continue;
        Word w = p.w * sym[static_cast<std::size_t>(s)].word;
        if (e.index.emplace(w, e.words.size()).second) {
          e.words.push_back(w);
          e.size.push_back(len);
        }
        next.push_back({std::move(w), s});
      }
    }
    layer = std::move(next);
  }
  return e;
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

bool in_box(KleinElt t, std::int64_t c) { return abs64(t.m) <= c && abs64(t.n) <= c; }

}  // namespace

bool within_bounds(WitnessReport const& w, SearchBounds const& bounds) {
  if (!in_box(w.a.t, bounds.max_coord) || !in_box(w.b.t, bounds.max_coord)) return false;
  Enumerated const e = enumerate_words(bounds);
  return e.index.contains(w.a.w) && e.index.contains(w.b.w);
}

SearchResult search_witness(HomClass const& c, SearchBounds const& bounds) {
  HomDescriptor const img = images(c);
  SearchResult result;
  KleinElt const ta = img.img10;
  if (!in_box(ta, bounds.max_coord)) return result;

  Enumerated const e = enumerate_words(bounds);
  std::size_t const nw = e.words.size();
  result.distinct_words = nw;

  std::vector<KleinElt> twists;
  for (std::int64_t m = -bounds.max_coord; m <= bounds.max_coord; ++m) {
    for (std::int64_t n = -bounds.max_coord; n <= bounds.max_coord; ++n) twists.push_back({m, n});
  }
  result.volume = static_cast<std::uint64_t>(nw) * twists.size() * nw;

  std::unordered_map<KleinElt, std::vector<std::size_t>, KleinHash> by_image;
  for (std::size_t i = 0; i < nw; ++i) by_image[gmap(e.words[i])].push_back(i);
  std::vector<std::optional<Word>> theta_a(nw);

  using Key = std::tuple<std::int64_t, std::size_t, std::size_t, std::size_t>;
  std::optional<Key> best;

  for (std::size_t ia = 0; ia < nw; ++ia) {
    BraidElt const a{e.words[ia], ta};
    BraidElt const la = lsigma(a);
    for (std::size_t it = 0; it < twists.size(); ++it) {
      KleinElt const tb = twists[it];
      if (ta * tb * la.t != tb) continue;
      // p1(b l_σ(b)) = t_b g(w_b) t_b forces g(w_b).
      auto const bucket = by_image.find(tb.inverse() * img.img01 * tb.inverse());
      if (bucket == by_image.end()) continue;
      Word const tail = theta(ta * tb, la.w);
      std::int64_t const twist_size = abs64(tb.m) + abs64(tb.n);
      for (std::size_t ib : bucket->second) {
        Key const key{e.size[ia] + e.size[ib] + twist_size, ia, it, ib};
        if (best && key >= *best) continue;
        auto& tw = theta_a[ib];
        if (!tw) tw = theta(ta, e.words[ib]);
        ++result.relation_checks;
        if (e.words[ia] * *tw * tail == e.words[ib]) best = key;
      }
    }
  }
  if (best) {
    auto const [size, ia, it, ib] = *best;
    (void)size;
    result.report = finish(c, BraidElt{e.words[ia], ta}, BraidElt{e.words[ib], twists[it]},
                           WitnessSource::searched);
  }
  return result;
}

}  // namespace kleinbu
