#include "kleinbu/certificate.hpp"

#include <sstream>

#include "kleinbu/errors.hpp"
#include "kleinbu/klein.hpp"

namespace kleinbu {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

KernelVector e(std::int64_t k, std::int64_t l, std::int64_t c = 1) { return KernelVector::unit(k, l, c); }

}  // namespace

MasterEquation build_master(MasterParams const& p) {
  DerivedExponents const d = derive(p);
  std::int64_t const i = p.i;
  std::int64_t const j = p.j;
  std::int64_t const m = p.m;
  std::int64_t const n = p.n;
  std::int64_t const a1e = d.a1 * eps(n + i);

  MasterEquation eq{p, LinearOp::identity(), LinearOp::identity(), {}, d};
  eq.ax = c_ab(d.a2 - d.b2, d.a1 - d.b1) + compose(theta_ab({d.g, delta(n + i)}), rho_ab());
  eq.ay = compose(c_ab(d.a2, a1e), theta_ab({d.m1, delta(i)})) - LinearOp::identity();

  KernelVector oq = tilde_o(2 * p.s1 + i, d.a1 - d.b1);
  oq -= delta(j + 1) * tilde_o(p.s2 - n, 2 * delta(i) * m - 2 * delta(i + 1) * delta(n + 1) * p.r1);
  oq += delta(j) * tilde_q(-2 * delta(i) * m, p.s2 - n);

  KernelVector& c = eq.constant;
  c += c_ab(d.a2, 0, tilde_t(a1e, delta(n + i)));
  c += c_ab(d.a2 - d.b2, 0, oq);
  c += c_ab(d.a2, a1e, tilde_j(delta(i + 1) * (n - p.s2), -2 * d.m1));
  c += c_ab(d.a2 - 1, d.a1 * eps(n + i + 1), tilde_i(-delta(i) * d.b2));
  c += c_ab(0, delta(n + i + 1), tilde_j(-2 * p.s1 - i, 1 - 2 * d.g));
  c += tilde_o(-2 * p.s1 - i, delta(n + i - 1));
  c.add(0, 0, delta(n + i) + delta(i) * eps(n + i) - d.g);
  c.add(d.a2, a1e, delta(i) - delta(n + i) + eps(i) * m);
  c.add(d.a2 - d.b2, d.a1 - d.b1, d.m1 - delta(i));
  return eq;
}

std::int64_t Functional::operator()(KernelVector const& v) const {
  std::int64_t total = 0;
  for (auto const& [b, c] : v) total += c * on_basis_(b);
  return codomain_ == Codomain::mod2 ? mod_floor(total, 2) : total;
}

Functional xi_23(std::int64_t w) {
  if (w != 0 && w != 1) throw PreconditionError("xi_23 requires w in {0, 1}");
  return {"xi_23(w=" + std::to_string(w) + ")", Functional::Codomain::mod2,
          [w](BasisIndex b) { return w == 1 ? std::int64_t{1} : delta(b.k); }};
}

Functional xi_5(std::int64_t s, std::int64_t n, std::int64_t z) {
  if (s == 0) throw PreconditionError("xi_5 requires s != 0 (modulus 4|s|)");
  std::int64_t const mod = 4 * abs64(s);
  std::int64_t const target = 2 * n - 2 * z - 1;
  return {"xi_5(s=" + std::to_string(s) + ",n=" + std::to_string(n) + ",z=" + std::to_string(z) + ")",
          Functional::Codomain::mod2, [=](BasisIndex b) -> std::int64_t {
            return mod_floor(b.k, mod) == 0 || mod_floor(b.k - target, mod) == 0 ? 1 : 0;
          }};
}

Functional xi1_7(std::int64_t n) {
  return {"xi1_7(n=" + std::to_string(n) + ")", Functional::Codomain::integers,
          [n](BasisIndex b) { return delta(b.k + n); }};
}

Functional xi2_7(std::int64_t r1, std::int64_t r2, std::int64_t m, std::int64_t n) {
  if (r1 <= 0) throw PreconditionError("xi2_7 requires r1 > 0 (modulus 2|r1|)");
  if (delta(r2) != 0) throw PreconditionError("xi2_7 requires r2 even");
  std::int64_t const mod = 2 * r1;
  std::int64_t const target = eps(n) * m - r2 / 2;
  return {"xi2_7(r1=" + std::to_string(r1) + ",r2=" + std::to_string(r2) + ",m=" + std::to_string(m) +
              ",n=" + std::to_string(n) + ")",
          Functional::Codomain::mod2, [=](BasisIndex b) -> std::int64_t {
            return mod_floor(b.l - target, mod) == 0 ? delta(b.k + n + 1) : 0;
          }};
}

Functional xi3_7(std::int64_t s, std::int64_t n) {
  if (s == 0) throw PreconditionError("xi3_7 requires s != 0 (modulus 4|s|)");
  std::int64_t const mod = 4 * abs64(s);
  return {"xi3_7(s=" + std::to_string(s) + ",n=" + std::to_string(n) + ")", Functional::Codomain::mod2,
          [=](BasisIndex b) -> std::int64_t { return mod_floor(b.k - n, mod) == 0 ? 1 : 0; }};
}

std::pair<LinearOp, LinearOp> mu_nu_7(MuNuParams const& p) {
  std::int64_t const shift = 2 * delta(p.n + 1) * (p.m - p.r1) + eps(p.n + 1) * p.r2;
  LinearOp mu([p, shift](BasisIndex b) {
    KernelVector v = e(b.k - 2 * p.z + 2 * p.n - 4 * p.s, b.l + eps(b.k) * shift);
    v.add(-b.k, eps(b.k + p.n + 1) * b.l - 2 * delta(b.k) * (p.m + eps(p.n + 1) * p.r1), eps(b.k + p.n));
    return v;
  });
  LinearOp nu([p](BasisIndex b) {
    KernelVector v = e(b.k - 4 * p.s, b.l - 2 * delta(p.n + b.k + 1) * p.r1);
    v.add(b.k, b.l, -1);
    return v;
  });
  return {std::move(mu), std::move(nu)};
}

std::pair<LinearOp, LinearOp> mu_nu_7_composed(MuNuParams const& p) {
  std::int64_t const shift = 2 * delta(p.n + 1) * (p.m - p.r1) + eps(p.n + 1) * p.r2;
  LinearOp mu = c_ab(2 * p.n - 2 * p.z - 4 * p.s, shift) +
                compose(theta_ab({p.m + eps(p.n + 1) * p.r1, delta(p.n)}), rho_ab());
  LinearOp nu = compose(c_ab(-4 * p.s, -2 * delta(p.n + 1) * p.r1), theta_ab({p.r1, 0})) - LinearOp::identity();
  return {std::move(mu), std::move(nu)};
}

DisplayedEquation displayed_types12(std::int64_t s, std::int64_t z, std::int64_t w, std::int64_t m,
                                    std::int64_t n) {
  std::int64_t const p = 2 * n - (2 * z + 1) * w - 4 * s - 2;
  std::int64_t const q = 2 * m * eps(w) * delta(n + w);
  DisplayedEquation eq{c_ab(p, q) + compose(theta_ab({m, delta(n + 1)}), rho_ab()),
                       compose(c_ab(-4 * s - 2, 2 * m), theta_ab({0, 1})) - LinearOp::identity(),
                       {}};
  KernelVector oq = tilde_o(2 * s + 1, q);
  oq -= delta(w + 1) * tilde_o(z * w - n, 2 * m);
  oq += delta(w) * tilde_q(-2 * m, z * w - n);
  KernelVector& c = eq.constant;
  c += c_ab(-4 * s - 2, 0, tilde_t(2 * m, delta(n + 1)));
  c += c_ab(p, 0, oq);
  c += c_ab(-4 * s - 3, -2 * m, tilde_i(2 * n - (2 * z + 1) * w));
  c += c_ab(0, delta(n), tilde_j(-2 * s - 1, 1 - 2 * m));
  c += tilde_o(-2 * s - 1, delta(n));
  c += (delta(n) - m) * (e(0, 0) + e(-4 * s - 2, 2 * m));
  c -= e(p, q);
  return eq;
}

DisplayedEquation displayed_type3(std::int64_t s, std::int64_t z, std::int64_t m, std::int64_t n) {
  std::int64_t const p = 2 * n - 2 * z - 4 * s - 1;
  DisplayedEquation eq{c_ab(p, -2 * delta(n) * m) + compose(theta_ab({m, delta(n)}), rho_ab()),
                       c_ab(-4 * s, 0) - LinearOp::identity(),
                       {}};
  KernelVector& c = eq.constant;
  c += c_ab(p, 0, tilde_o(2 * s, -2 * delta(n) * m));
  c += c_ab(0, delta(n + 1), tilde_j(-2 * s, 1 - 2 * m));
  c += tilde_o(-2 * s, delta(n + 1));
  c += (m - delta(n)) * (e(-4 * s, 0) - e(0, 0));
  return eq;
}

DisplayedEquation displayed_type4(std::int64_t r1, std::int64_t r2, std::int64_t s, std::int64_t z,
                                  std::int64_t m, std::int64_t n) {
  auto [mu, nu] = mu_nu_7({r1, r2, s, z, m, n});
  std::int64_t const shift = 2 * delta(n + 1) * (m - r1) + eps(n + 1) * r2;
  DisplayedEquation eq{std::move(mu), std::move(nu), {}};
  KernelVector& c = eq.constant;
  c += c_ab(-4 * s, 0, tilde_t(-2 * delta(n + 1) * r1, delta(n)));
  c += c_ab(2 * n - 2 * z - 4 * s, 0, tilde_o(2 * s, shift) - tilde_o(z - n, -2 * delta(n + 1) * r1));
  c += c_ab(-4 * s, -2 * delta(n + 1) * r1, tilde_j(n - z, -2 * r1));
  c += c_ab(0, delta(n + 1), tilde_j(-2 * s, 2 * eps(n) * r1 - 2 * m + 1));
  c += tilde_o(-2 * s, delta(n + 1));
  c.add(0, 0, eps(n) * r1 - m + delta(n));
  c.add(-4 * s, -2 * delta(n + 1) * r1, m - delta(n));
  c.add(2 * n - 2 * z - 4 * s, shift, r1);
  return eq;
}

std::int64_t xi1_scalar_7(std::int64_t r1, std::int64_t r2, std::int64_t s, std::int64_t z, std::int64_t m,
                          std::int64_t n) {
  std::int64_t const dn = delta(n);
  std::int64_t const dn1 = delta(n + 1);
  std::int64_t const en = eps(n);
  return -2 * dn * dn1 * r1 +
         en * (2 * s * (2 * dn1 * (m - r1) + eps(n + 1) * r2) + 2 * (z - n) * dn1 * r1 - 2 * s * dn1) -
         dn1 * (-2 * s * (-2 * m + 2 * en * r1 + 1) - 2 * (n - z) * r1) + dn * (en * r1 + r1);
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 64;

enum class Family { types12, type3, type4_i, type4_ii, type4_iii };

std::string family_name(Family f) {
  switch (f) {
    case Family::types12: return "types-1-2";
    case Family::type3: return "type-3";
    case Family::type4_i: return "type-4(i)";
    case Family::type4_ii: return "type-4(ii)";
    case Family::type4_iii: return "type-4(iii)";
  }
  return "unknown";
}

struct Selection {
  Family family;
  MasterParams master;
  std::int64_t w = 0;  // types 1-2 only
  std::int64_t z = 0;
};

Selection select(HomClass const& r) {
  switch (r.type) {
    case 1: return {Family::types12, {0, 0, r.s1, 0, 1, 0, 0, 0}, 0, 0};
    case 2: return {Family::types12, {0, 0, r.s1, r.s2, 1, 1, 0, 0}, 1, r.s2};
    case 3: return {Family::type3, {0, 0, r.s1, r.s2, 0, 1, 0, 0}, 0, r.s2};
    default: break;
  }
  MasterParams const mp{r.r1, r.r2, r.s1, r.s2, 0, 0, 0, 0};
  if (r.r2 * r.s1 != 0) return {Family::type4_i, mp, 0, r.s2};
  if (r.r1 > 0 && delta(r.r2) == 0 && r.s2 == 0) return {Family::type4_ii, mp, 0, 0};
  if (r.r1 == 0 && r.r2 == 0 && r.s2 == 0 && r.s1 != 0) return {Family::type4_iii, mp, 0, 0};
  throw ConsistencyError("no certificate family for " + format(r));
}

Functional functional_for(Selection const& sel, std::int64_t m, std::int64_t n) {
  MasterParams const& p = sel.master;
  switch (sel.family) {
    case Family::types12: return xi_23(sel.w);
    case Family::type3: return xi_5(p.s1, n, sel.z);
    case Family::type4_i: return xi1_7(n);
    case Family::type4_ii: return xi2_7(p.r1, p.r2, m, n);
    case Family::type4_iii: return xi3_7(p.s1, n);
  }
  throw ConsistencyError("unknown certificate family");
}

// The functional's name with the quantified pair (m, n) left free.
std::string family_functional_name(Selection const& sel) {
  MasterParams const& p = sel.master;
  std::string const s = std::to_string(p.s1);
  switch (sel.family) {
    case Family::types12: return "xi_23(w=" + std::to_string(sel.w) + ")";
    case Family::type3: return "xi_5(s=" + s + ",n,z=" + std::to_string(sel.z) + ")";
    case Family::type4_i: return "xi1_7(n)";
    case Family::type4_ii: return "xi2_7(r1=" + std::to_string(p.r1) + ",r2=" + std::to_string(p.r2) + ",m,n)";
    case Family::type4_iii: return "xi3_7(s=" + s + ",n)";
  }
  throw ConsistencyError("unknown certificate family");
}

class Recorder {
 public:
  explicit Recorder(CertificateReport& r) : report_(r) {}
  void fail(std::string kind, std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t l, std::string detail) {
    if (report_.failures.size() < kMaxRecordedFailures) {
      report_.failures.push_back({std::move(kind), m, n, k, l, std::move(detail)});
    }
  }
  // Records a failed identity when lhs != rhs.
  void expect(bool ok, std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t l, std::string const& what) {
    if (!ok) {
      report_.identities_hold = false;
      fail("identity", m, n, k, l, what);
    }
  }

 private:
  CertificateReport& report_;
};

// The per-family identities used by the contradiction arguments.
void check_identities(Selection const& sel, CertificateBounds const& b, Recorder& rec) {
  std::int64_t const W = b.window;
  MasterParams const& p = sel.master;
  std::int64_t const s = p.s1;

  for (std::int64_t m = -b.mn; m <= b.mn; ++m) {
    for (std::int64_t n = -b.mn; n <= b.mn; ++n) {
      Functional const f = functional_for(sel, m, n);
      switch (sel.family) {
        case Family::types12: {
          std::int64_t const w = sel.w;
          std::int64_t const z = sel.z;
          for (std::int64_t k = -W; k <= W; ++k) {
            for (std::int64_t l = -W; l <= W; ++l) {
              KernelVector const v = e(k, l);
              rec.expect(f(theta_ab({m, n}, v)) == f(v), m, n, k, l, "xi o theta(m,n) = xi");
              if (m == 0 && n == 0) {
                rec.expect(f(rho_ab(v)) == f(v), m, n, k, l, "xi o rho = xi");
                rec.expect(f(v) == f(e(k, 0)), m, n, k, l, "xi(B_kl) = xi(B_k0)");
              }
            }
          }
          if (m == 0 && n == 0) {
            for (std::int64_t pp = -W; pp <= W; ++pp) {
              for (std::int64_t qq = -W; qq <= W; ++qq) {
                if (w == 0 && delta(pp) == 1) continue;
                for (std::int64_t k = -2; k <= 2; ++k) {
                  rec.expect(f(c_ab(pp, qq, e(k, 1))) == f(e(k, 1)), pp, qq, k, 1, "xi o c_pq = xi");
                }
              }
            }
            for (std::int64_t k = -W; k <= W; ++k) {
              for (std::int64_t l = -W; l <= W; ++l) {
                if (k == 0 || l == 0) continue;
                rec.expect(f(tilde_o(k, l)) == mod_floor(abs64(k) * abs64(l) * delta(w + 1), 2), 0, 0, k, l,
                           "xi(O~_kl) = |k||l| delta_{w+1}");
              }
            }
          }
          if (m != 0) {
            rec.expect(f(tilde_t(2 * m, delta(n + 1))) == 0, m, n, 0, 0, "xi(T~_{2m,d(n+1)}) = 0");
            rec.expect(f(tilde_q(-2 * m, z * w - n)) == 0, m, n, 0, 0, "xi(Q~_{-2m,zw-n}) = 0");
          }
          rec.expect(f(tilde_j(-2 * s - 1, 1 - 2 * m)) == 1, m, n, 0, 0, "xi(J~_{-2s-1,1-2m}) = 1");
          break;
        }
        case Family::type3: {
          rec.expect(f(tilde_j(-2 * s, 1 - 2 * m)) == 1, m, n, 0, 0, "xi(J~_{-2s,1-2m}) = 1");
          for (std::int64_t k = -W; k <= W; ++k) {
            for (std::int64_t l = -W; l <= W; ++l) {
              KernelVector const v = e(k, l);
              rec.expect(f(c_ab(-4 * s, 0, v)) == f(v), m, n, k, l, "xi o c_{-4s,0} = xi");
              for (std::int64_t t = -2; t <= 2; ++t) {
                rec.expect(f(e(k + 4 * t * s, 0)) == f(v), m, n, k, l, "xi(B_{k+4ts,0}) = xi(B_kl)");
              }
            }
          }
          for (std::int64_t u = -3; u <= 3; ++u) {
            rec.expect(f(c_ab(m, n, tilde_o(2 * s, u))) == 0, m, n, 0, u, "xi o c_pq(O~_{2s,u}) = 0");
          }
          break;
        }
        case Family::type4_i: {
          for (std::int64_t k = -W; k <= W; ++k) {
            for (std::int64_t l = -W; l <= W; ++l) {
              if (abs64(k) <= 3 && abs64(l) <= 3) {
                rec.expect(f(tilde_o(k, l)) == eps(n) * k * l, m, n, k, l, "xi1(O~_kl) = eps_n kl");
                rec.expect(f(tilde_j(k, l)) == -delta(n + 1) * k * l, m, n, k, l, "xi1(J~_kl) = -d(n+1) kl");
              }
            }
            for (std::int64_t r = 0; r <= 1; ++r) {
              rec.expect(f(tilde_t(k, r)) == delta(n) * k, m, n, k, r, "xi1(T~_kr) = d(n) k");
            }
          }
          std::int64_t const scalar = xi1_scalar_7(p.r1, p.r2, s, sel.z, m, n);
          rec.expect(scalar == -2 * p.r2 * s, m, n, 0, 0, "displayed xi1 scalar = -2 r2 s");
          rec.expect(f(build_master({p.r1, p.r2, s, sel.z, 0, 0, m, n}).constant) == scalar, m, n, 0, 0,
                     "xi1(C) = displayed xi1 scalar");
          break;
        }
        case Family::type4_ii: {
          rec.expect(f(tilde_t(-2 * delta(n + 1) * p.r1, delta(n))) == delta(n + 1), m, n, 0, 0,
                     "xi2(T~_{-2d(n+1)r1,d(n)}) = n+1");
          rec.expect(f(tilde_j(n, -2 * p.r1)) == delta(n), m, n, 0, 0, "xi2(J~_{n,-2r1}) = n");
          for (std::int64_t k = -W; k <= W; ++k) {
            for (std::int64_t l = -W; l <= W; ++l) {
              for (std::int64_t t = -1; t <= 1; ++t) {
                rec.expect(f(e(k + 2 * t, l + 2 * t * p.r1)) == f(e(k, l)), m, n, k, l,
                           "xi2(B_{k+2t,l+2t r1}) = xi2(B_kl)");
              }
            }
          }
          break;
        }
        case Family::type4_iii: {
          rec.expect(f(tilde_j(-2 * s, 1 - 2 * m)) == delta(n), m, n, 0, 0, "xi3(J~_{-2s,1-2m}) = n");
          rec.expect(f(tilde_o(-2 * s, delta(n + 1))) == delta(n + 1), m, n, 0, 0, "xi3(O~_{-2s,d(n+1)}) = n+1");
          rec.expect(f(c_ab(2 * n - 4 * s, 0, tilde_o(2 * s, 2 * delta(n + 1) * m))) == 0, m, n, 0, 0,
                     "xi3(c_{2n-4s,0} O~_{2s,2d(n+1)m}) = 0");
          for (std::int64_t k = -W; k <= W; ++k) {
            for (std::int64_t l = -W; l <= W; ++l) {
              for (std::int64_t t = -2; t <= 2; ++t) {
                rec.expect(f(e(k + 4 * t * s, l)) == f(e(k, 0)), m, n, k, l, "xi3(B_{k+4ts,l}) = xi3(B_k0)");
              }
            }
          }
          break;
        }
      }
    }
  }
}

}  // namespace

CertificateReport check_certificate(HomClass const& c, CertificateBounds const& bounds) {
  Verdict const v = decide(c);
  if (!v.bu) throw PreconditionError("class does not have the Borsuk-Ulam property: " + format(c));
  if (c.type != 4 && c.i != 0) {
    throw UnsupportedFamily("no certificate family for " + format(c) + " (i = 1)");
  }
  Selection const sel = select(v.reduced);

  CertificateReport report;
  report.cls = c;
  report.reduced = v.reduced;
  report.family = family_name(sel.family);
  report.functional = family_functional_name(sel);
  report.master = sel.master;
  report.bounds = bounds;
  report.linear_killed = true;
  report.constant_nonzero_for_all = true;
  report.identities_hold = true;
  Recorder rec(report);

  std::int64_t const W = bounds.window;
  for (std::int64_t m = -bounds.mn; m <= bounds.mn; ++m) {
    for (std::int64_t n = -bounds.mn; n <= bounds.mn; ++n) {
      MasterParams mp = sel.master;
      mp.m = m;
      mp.n = n;
      MasterEquation const eq = build_master(mp);
      Functional const f = functional_for(sel, m, n);
      for (std::int64_t k = -W; k <= W; ++k) {
        for (std::int64_t l = -W; l <= W; ++l) {
          if (std::int64_t const x = f(eq.ax.on_basis({k, l})); x != 0) {
            report.linear_killed = false;
            rec.fail("linear-x", m, n, k, l, "functional value " + std::to_string(x));
          }
          if (std::int64_t const y = f(eq.ay.on_basis({k, l})); y != 0) {
            report.linear_killed = false;
            rec.fail("linear-y", m, n, k, l, "functional value " + std::to_string(y));
          }
        }
      }
      if (f(eq.constant) == 0) {
        report.constant_nonzero_for_all = false;
        rec.fail("constant", m, n, 0, 0, "functional vanishes on C = " + format(eq.constant));
      }
    }
  }
  check_identities(sel, bounds, rec);
  return report;
}

}  // namespace kleinbu
