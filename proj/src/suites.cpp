#include "kleinbu/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "kleinbu/braid.hpp"
#include "kleinbu/certificate.hpp"
#include "kleinbu/classifier.hpp"
#include "kleinbu/errors.hpp"
#include "kleinbu/identities.hpp"
#include "kleinbu/kernel.hpp"
#include "kleinbu/witness.hpp"

namespace kleinbu {

namespace {

constexpr std::size_t kMaxFailures = 20;

class Ctx {
 public:
  Ctx(SuiteResult& r, std::uint64_t seed) : r_(r), rng_(seed) {}

  void check(bool ok, std::function<std::string()> const& repro) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < kMaxFailures) r_.failures.push_back(repro());
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  Word random_word(int max_runs, std::int64_t max_exp) {
    std::vector<Letter> letters;
    int const runs = static_cast<int>(uniform(0, max_runs));
    for (int i = 0; i < runs; ++i) {
      letters.push_back({uniform(0, 1) == 0 ? Gen::u : Gen::v, uniform(-max_exp, max_exp)});
    }
    return Word::from_letters(letters);
  }
  BraidElt random_braid() { return {random_word(6, 3), {uniform(-4, 4), uniform(-4, 4)}}; }
  // Random product of B_{k,l}^±1 together with its expected projection.
  std::pair<Word, KernelVector> random_kernel_product(int max_factors, std::int64_t radius) {
    Word w;
    KernelVector v;
    int const factors = static_cast<int>(uniform(0, max_factors));
    for (int i = 0; i < factors; ++i) {
      std::int64_t const k = uniform(-radius, radius);
      std::int64_t const l = uniform(-radius, radius);
      std::int64_t const sgn = uniform(0, 1) == 0 ? 1 : -1;
      w *= expand(k, l).pow(sgn);
      v.add(k, l, sgn);
    }
    return {w, v};
  }

 private:
  SuiteResult& r_;
  std::mt19937_64 rng_;
};

std::string str(BraidElt const& a) { return format(a); }
std::string str(KleinElt a) { return format(a); }

void structural(Ctx& ctx) {
  std::vector<Word> probes{Word::u(), Word::v(), big_b(), parse_word("u^2 v^-3 u v")};
  for (std::int64_t m = -4; m <= 4; ++m) {
    for (std::int64_t n = -4; n <= 4; ++n) {
      KleinElt const t{m, n};
      ctx.check(theta(t, big_b()) == big_b().pow(eps(n)), [&] { return "theta" + str(t) + "(B) != B^eps_n"; });
      for (std::int64_t m2 = -4; m2 <= 4; ++m2) {
        for (std::int64_t n2 = -4; n2 <= 4; ++n2) {
          KleinElt const t2{m2, n2};
          for (auto const& w : probes) {
            ctx.check(theta(t * t2, w) == theta(t, theta(t2, w)), [&] {
              return "theta(" + str(t) + "*" + str(t2) + ")(" + format(w) + ") != composition";
            });
          }
        }
      }
    }
  }
  BraidElt const s2 = sigma_squared();
  BraidElt const centre{Word{}, {0, 2}};
  for (int i = 0; i < 200; ++i) {
    BraidElt const a = ctx.random_braid();
    BraidElt const b = ctx.random_braid();
    ctx.check(lsigma(a * b) == lsigma(a) * lsigma(b),
              [&] { return "lsigma(a*b) != lsigma(a)*lsigma(b) for a=" + str(a) + " b=" + str(b); });
    ctx.check(lsigma(lsigma(a)) == s2 * a * binv(s2),
              [&] { return "lsigma^2(a) != (B;0,0) a (B;0,0)^-1 for a=" + str(a); });
    ctx.check(a * centre == centre * a, [&] { return "(1;0,2) does not commute with " + str(a); });
    ctx.check(a * binv(a) == BraidElt{}, [&] { return "a*binv(a) != 1 for a=" + str(a); });
  }
}

void tilde(Ctx& ctx) {
  for (int i = 0; i < 200; ++i) {
    auto [w, v] = ctx.random_kernel_product(8, 5);
    auto [w2, v2] = ctx.random_kernel_product(8, 5);
    ctx.check(project(w) == v, [&] { return "project(" + format(w) + ") != " + format(v); });
    ctx.check(project(w * w2) == project(w) + project(w2),
              [&] { return "project not additive on " + format(w) + " * " + format(w2); });
  }
  for (std::int64_t k = -5; k <= 5; ++k) {
    for (std::int64_t l = -5; l <= 5; ++l) {
      ctx.check(project(expand(k, l)) == KernelVector::unit(k, l),
                [&] { return "project(expand(" + std::to_string(k) + "," + std::to_string(l) + ")) != e_kl"; });
    }
  }
  auto const ks = [](std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  for (std::int64_t k = -4; k <= 4; ++k) {
    for (std::int64_t r = 0; r <= 1; ++r) {
      ctx.check(project(word_t(k, r)) == tilde_t(k, r), [&] { return "project(T" + ks(k, r) + ") != tildeT"; });
    }
    ctx.check(project(word_i(k)) == tilde_i(k), [&] { return "project(I_" + std::to_string(k) + ") != tildeI"; });
    for (std::int64_t l = -4; l <= 4; ++l) {
      ctx.check(project(word_o(k, l)) == tilde_o(k, l), [&] { return "project(O" + ks(k, l) + ") != tildeO"; });
      ctx.check(project(word_j(k, l)) == tilde_j(k, l), [&] { return "project(J" + ks(k, l) + ") != tildeJ"; });
      ctx.check(project(word_q(k, l)) == tilde_q(k, l), [&] { return "project(Q" + ks(k, l) + ") != tildeQ"; });
    }
  }
  for (int i = 0; i < 60; ++i) {
    auto [x, v] = ctx.random_kernel_product(4, 3);
    KleinElt const t{ctx.uniform(-3, 3), ctx.uniform(-3, 3)};
    std::int64_t const p = ctx.uniform(-3, 3);
    std::int64_t const q = ctx.uniform(-3, 3);
    ctx.check(project(theta(t, x)) == theta_ab(t, v),
              [&] { return "theta_ab" + str(t) + " incompatible with theta on " + format(x); });
    ctx.check(project(rho(x)) == rho_ab(v), [&] { return "rho_ab incompatible with rho on " + format(x); });
    ctx.check(conjugation_agrees(p, q, x), [&] { return "c_ab" + ks(p, q) + " incompatible on " + format(x); });
  }
}

void q_identity(Ctx& ctx) {
  for (std::int64_t k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    for (std::int64_t l = -4; l <= 4; ++l) {
      ctx.check(q_identity_check(k, l), [&] { return "Q identity fails at k=" + std::to_string(k) + " l=" + std::to_string(l); });
    }
  }
  using Identity = bool (*)(MasterParams const&);
  struct Named {
    char const* name;
    Identity f;
  };
  Named const ids[] = {{"O/Q", oq_merge_identity},
                       {"J/I", ji_merge_identity},
                       {"T", t_collection_identity},
                       {"O/J", oj_collection_identity}};
  for (std::int64_t r1 = -3; r1 <= 3; ++r1)
    for (std::int64_t r2 = -3; r2 <= 3; ++r2)
      for (std::int64_t s1 = -3; s1 <= 3; ++s1)
        for (std::int64_t s2 = -3; s2 <= 3; ++s2)
          for (std::int64_t m = -3; m <= 3; ++m)
            for (std::int64_t n = -3; n <= 3; ++n)
              for (std::int64_t i = 0; i <= 1; ++i)
                for (std::int64_t j = 0; j <= 1; ++j) {
                  MasterParams const p{r1, r2, s1, s2, i, j, m, n};
                  for (auto const& id : ids) {
                    ctx.check(id.f(p), [&] {
                      std::ostringstream o;
                      o << id.name << " identity fails at (r1,r2,s1,s2,i,j,m,n)=(" << r1 << ',' << r2 << ',' << s1
                        << ',' << s2 << ',' << i << ',' << j << ',' << m << ',' << n << ')';
                      return o.str();
                    });
                  }
                }
}

void formula(Ctx& ctx) {
  auto random_normal_form = [&] {
    Word w = Word::u(ctx.uniform(-3, 3)) * Word::v(ctx.uniform(-3, 3));
    int const factors = static_cast<int>(ctx.uniform(0, 3));
    for (int f = 0; f < factors; ++f) {
      w *= expand(ctx.uniform(-3, 3), ctx.uniform(-3, 3)).pow(ctx.uniform(0, 1) == 0 ? 1 : -1);
    }
    return BraidElt{w, {ctx.uniform(-3, 3), ctx.uniform(-3, 3)}};
  };
  for (int i = 0; i < 200; ++i) {
    BraidElt const a = random_normal_form();
    BraidElt const b = random_normal_form();
    ctx.check(formula_b_lsigma_a(a, b) == b * lsigma(a),
              [&] { return "formula b*lsigma(a) mismatch for a=" + str(a) + " b=" + str(b); });
    ctx.check(formula_a_b_lsigma_a(a, b) == a * b * lsigma(a),
              [&] { return "formula a*b*lsigma(a) mismatch for a=" + str(a) + " b=" + str(b); });
  }
}

// All normalized classes with parameters in [-R, R].
std::vector<HomClass> grid(std::int64_t R) {
  std::vector<HomClass> out;
  for (int t = 1; t <= 3; ++t)
    for (std::int64_t i = 0; i <= 1; ++i)
      for (std::int64_t s1 = -R; s1 <= R; ++s1)
        for (std::int64_t s2 = -R; s2 <= R; ++s2) out.push_back({t, i, 0, 0, s1, s2});
  for (std::int64_t r1 = 0; r1 <= R; ++r1)
    for (std::int64_t r2 = (r1 == 0 ? 0 : -R); r2 <= R; ++r2)
      for (std::int64_t s1 = -R; s1 <= R; ++s1)
        for (std::int64_t s2 = -R; s2 <= R; ++s2) out.push_back(HomClass::type4(r1, r2, s1, s2));
  return out;
}

bool covered(HomClass const& c) { return c.type == 4 || c.i == 0; }

void witness_grid(Ctx& ctx) {
  std::size_t built = 0;
  std::size_t shifted = 0;
  for (auto const& c : grid(3)) {
    if (decide(c).bu || !covered(c)) continue;
    try {
      WitnessReport const w = build_witness(c);
      PairVerification const v = verify_pair(w.a, w.b, c);
      ctx.check(v.ok(), [&] { return "witness for " + format(c) + " fails: " + v.failure_detail(); });
      ++built;
      WitnessReport const base = base_witness(c);
      for (std::int64_t k = -2; k <= 2; ++k) {
        HomClass target = base.cls;
        target.s2 += 2 * k;
        WitnessReport const s = shift_witness(base, k, target);
        ctx.check(verify_pair(s.a, s.b, target).ok(), [&] { return "shifted witness fails for " + format(target); });
        ++shifted;
      }
    } catch (std::exception const& e) {
      ctx.check(false, [&] { return "build_witness(" + format(c) + ") threw: " + e.what(); });
    }
  }
  ctx.note("non-BU covered classes witnessed: " + std::to_string(built));
  ctx.note("shifted witnesses re-verified: " + std::to_string(shifted));
}

void certificate_grid(Ctx& ctx) {
  std::size_t certified = 0;
  for (auto const& c : grid(2)) {
    if (!decide(c).bu || !covered(c)) continue;
    try {
      CertificateReport const r = check_certificate(c, {6, 4});
      ctx.check(r.success(), [&] {
        std::string s = "certificate for " + format(c) + " (" + r.family + ") fails";
        if (!r.failures.empty()) {
          auto const& f = r.failures.front();
          s += ": " + f.kind + " at m=" + std::to_string(f.m) + " n=" + std::to_string(f.n) + " k=" +
               std::to_string(f.k) + " l=" + std::to_string(f.l) + " " + f.detail;
        }
        return s;
      });
      ++certified;
    } catch (std::exception const& e) {
      ctx.check(false, [&] { return "check_certificate(" + format(c) + ") threw: " + e.what(); });
    }
  }
  ctx.note("BU covered classes certified: " + std::to_string(certified));
}

bool same_on_window(LinearOp const& f, LinearOp const& g, std::int64_t W) {
  for (std::int64_t k = -W; k <= W; ++k)
    for (std::int64_t l = -W; l <= W; ++l)
      if (f.on_basis({k, l}) != g.on_basis({k, l})) return false;
  return true;
}

void specialization(Ctx& ctx) {
  constexpr std::int64_t W = 6;
  constexpr std::int64_t MN = 4;
  auto compare = [&](MasterParams const& p, DisplayedEquation const& d, std::string const& family) {
    MasterEquation const eq = build_master(p);
    auto repro = [&](char const* part) {
      std::ostringstream o;
      o << family << ": " << part << " differs at (r1,r2,s1,s2,i,j,m,n)=(" << p.r1 << ',' << p.r2 << ',' << p.s1
        << ',' << p.s2 << ',' << p.i << ',' << p.j << ',' << p.m << ',' << p.n << ')';
      return o.str();
    };
    ctx.check(eq.constant == d.constant, [&] { return repro("constant"); });
    ctx.check(same_on_window(eq.ax, d.ax, W), [&] { return repro("x operator"); });
    ctx.check(same_on_window(eq.ay, d.ay, W), [&] { return repro("y operator"); });
  };
  for (std::int64_t m = -MN; m <= MN; ++m) {
    for (std::int64_t n = -MN; n <= MN; ++n) {
      for (std::int64_t s = -2; s <= 2; ++s) {
        for (std::int64_t z = 0; z <= 1; ++z) {
          for (std::int64_t w = 0; w <= 1; ++w) {
            compare({0, 0, s, z * w, 1, w, m, n}, displayed_types12(s, z, w, m, n), "types-1-2");
          }
          compare({0, 0, s, z, 0, 1, m, n}, displayed_type3(s, z, m, n), "type-3");
          for (std::int64_t r1 = -2; r1 <= 2; ++r1) {
            for (std::int64_t r2 = -2; r2 <= 2; ++r2) {
              compare({r1, r2, s, z, 0, 0, m, n}, displayed_type4(r1, r2, s, z, m, n), "type-4");
              auto const [mu, nu] = mu_nu_7({r1, r2, s, z, m, n});
              auto const [mu2, nu2] = mu_nu_7_composed({r1, r2, s, z, m, n});
              ctx.check(same_on_window(mu, mu2, W) && same_on_window(nu, nu2, W), [&] {
                std::ostringstream o;
                o << "mu/nu displayed != composed at (r1,r2,s,z,m,n)=(" << r1 << ',' << r2 << ',' << s << ',' << z
                  << ',' << m << ',' << n << ')';
                return o.str();
              });
            }
          }
        }
      }
    }
  }
}

// The verdict table restated independently of decide's clause structure.
bool expected_bu(HomClass const& c) {
  switch (c.type) {
    case 1: return c.s2 % 2 == 0;
    case 2: return true;
    case 3: return c.s1 != 0;
    default: break;
  }
  bool const z_odd = c.s2 % 2 != 0;
  if (c.r2 * c.s1 != 0) return true;
  if (z_odd) return false;
  return (c.r2 == 0 && c.s1 != 0) || (c.s1 == 0 && c.r1 != 0 && c.r2 % 2 == 0);
}

void classifier_cross(Ctx& ctx) {
  SearchBounds const bounds{4, 2, 0};
  std::size_t searched = 0;
  std::size_t agreed = 0;
  std::size_t unsupported_found = 0;
  for (auto const& c : grid(3)) {
    Verdict const v = decide(c);
    ctx.check(v.bu == expected_bu(c), [&] { return "decide(" + format(c) + ") disagrees with the verdict table"; });
    ctx.check(normalize(images(c)) == c, [&] { return "normalize(images(" + format(c) + ")) is not the identity"; });
    for (std::int64_t a = -2; a <= 2; ++a) {
      for (std::int64_t b = -1; b <= 1; ++b) {
        HomDescriptor const h = conjugate(images(c), {a, b});
        ctx.check(normalize(h) == c, [&] { return "normalize not conjugation invariant for " + format(c); });
      }
    }
    SearchResult const s = search_witness(c, bounds);
    if (s.volume == 0) continue;
    ++searched;
    if (v.bu) {
      ctx.check(!s.report.has_value(), [&] { return "search found a pair for BU class " + format(c); });
      continue;
    }
    if (!covered(c)) {
      if (s.report) ++unsupported_found;
      continue;
    }
    WitnessReport const w = build_witness(c);
    if (within_bounds(w, bounds)) {
      ctx.check(s.report.has_value(), [&] { return "search misses in-bound witness for " + format(c); });
      ++agreed;
    }
  }
  ctx.note("classes searched: " + std::to_string(searched));
  ctx.note("non-BU classes with in-bound constructed witness found by search: " + std::to_string(agreed));
  ctx.note("i=1 non-BU classes with a searched witness: " + std::to_string(unsupported_found));
}

void mod4(Ctx& ctx) {
  for (auto const& c : grid(4)) {
    Verdict const v = decide(c);
    for (std::int64_t d = -4; d <= 4; ++d) {
      HomClass other = c;
      other.s2 += d;
      bool const equiv = central_shift_equiv(c, other);
      ctx.check(equiv == (d % 2 == 0), [&] { return "central_shift_equiv wrong for " + format(c) + " vs " + format(other); });
      if (equiv) {
        ctx.check(decide(other).bu == v.bu, [&] { return "decide not invariant: " + format(c) + " vs " + format(other); });
      }
    }
    if (c.type == 4 && c.r2 != 0) {
      HomDescriptor h = images(c);
      h.img01.m = -h.img01.m;
      if (c.r1 == 0) {
        ctx.check(normalize(h) == c, [&] { return "r2 -> -r2 not identified at r1 = 0 for " + format(c); });
      } else {
        ctx.check(decide(normalize(h)).bu == v.bu, [&] { return "decide not invariant under r2 -> -r2 for " + format(c); });
      }
    }
    if (!v.bu && covered(c)) {
      WitnessReport const base = base_witness(c);
      for (std::int64_t k = -2; k <= 2; ++k) {
        HomClass target = base.cls;
        target.s2 += 2 * k;
        ctx.check(central_shift_equiv(base.cls, target), [&] { return "shift target not equivalent"; });
        WitnessReport const s = shift_witness(base, k, target);
        ctx.check(s.checks.all(), [&] { return "shifted witness fails for " + format(target); });
      }
    }
  }
}

struct Entry {
  char const* name;
  void (*run)(Ctx&);
};

constexpr Entry kSuites[] = {
    {"structural", structural},         {"tilde", tilde},
    {"q-identity", q_identity},         {"formula", formula},
    {"witness-grid", witness_grid},     {"certificate-grid", certificate_grid},
    {"specialization", specialization}, {"classifier-cross", classifier_cross},
    {"mod4", mod4},
};

}  // namespace

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = [] {
    std::vector<std::string> v;
    for (auto const& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string const& name, std::uint64_t seed) {
  for (auto const& e : kSuites) {
    if (name != e.name) continue;
    SuiteResult r;
    r.name = name;
    Ctx ctx(r, seed);
    auto const t0 = std::chrono::steady_clock::now();
    e.run(ctx);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace kleinbu
