#include "kleinbu/serialize.hpp"

#include <sstream>

#include "kleinbu/errors.hpp"

namespace kleinbu {

Json to_json(HomClass const& c) {
  Json j;
  j["type"] = c.type;
  if (c.type == 4) {
    j["r1"] = c.r1;
    j["r2"] = c.r2;
  } else {
    j["i"] = c.i;
  }
  j["s1"] = c.s1;
  j["s2"] = c.s2;
  return j;
}

HomClass hom_class_from_json(Json const& j) {
  try {
    HomClass c;
    c.type = j.at("type").get<int>();
    if (c.type == 4) {
      c.r1 = j.at("r1").get<std::int64_t>();
      c.r2 = j.at("r2").get<std::int64_t>();
    } else {
      c.i = j.at("i").get<std::int64_t>();
    }
    c.s1 = j.at("s1").get<std::int64_t>();
    c.s2 = j.at("s2").get<std::int64_t>();
    check_shape(c);
    return c;
  } catch (nlohmann::json::exception const& e) {
    throw PreconditionError(std::string("malformed class document: ") + e.what());
  }
}

Json to_json(Verdict const& v) {
  Json j;
  j["bu"] = v.bu;
  j["branch"] = v.branch;
  j["reduced"] = to_json(v.reduced);
  j["literal_bu"] = v.literal_bu;
  return j;
}

Verdict verdict_from_json(Json const& j) {
  try {
    return {j.at("bu").get<bool>(), j.at("branch").get<std::string>(), hom_class_from_json(j.at("reduced")),
            j.at("literal_bu").get<bool>()};
  } catch (nlohmann::json::exception const& e) {
    throw PreconditionError(std::string("malformed verdict document: ") + e.what());
  }
}

namespace {

Json checks_json(WitnessChecks const& c) {
  return {{"relation", c.relation}, {"first_image", c.first_image}, {"second_image", c.second_image}};
}

WitnessSource source_from_string(std::string const& s) {
  if (s == "constructed") return WitnessSource::constructed;
  if (s == "shifted") return WitnessSource::shifted;
  if (s == "searched") return WitnessSource::searched;
  throw PreconditionError("unknown witness source '" + s + "'");
}

}  // namespace

Json to_json(WitnessReport const& w) {
  Json j;
  j["class"] = to_json(w.cls);
  j["a"] = format(w.a);
  j["b"] = format(w.b);
  j["checks"] = checks_json(w.checks);
  j["source"] = to_string(w.source);
  return j;
}

WitnessReport witness_from_json(Json const& j) {
  try {
    WitnessReport w;
    w.cls = hom_class_from_json(j.at("class"));
    w.a = parse_braid(j.at("a").get<std::string>());
    w.b = parse_braid(j.at("b").get<std::string>());
    Json const& c = j.at("checks");
    w.checks = {c.at("relation").get<bool>(), c.at("first_image").get<bool>(), c.at("second_image").get<bool>()};
    w.source = source_from_string(j.at("source").get<std::string>());
    return w;
  } catch (nlohmann::json::exception const& e) {
    throw PreconditionError(std::string("malformed witness document: ") + e.what());
  }
}

Json to_json(SearchResult const& r) {
  Json j;
  j["found"] = r.report.has_value();
  j["volume"] = r.volume;
  j["relation_checks"] = r.relation_checks;
  j["distinct_words"] = r.distinct_words;
  if (r.report) j["witness"] = to_json(*r.report);
  return j;
}

Json to_json(CertificateReport const& r) {
  Json j;
  j["class"] = to_json(r.cls);
  j["reduced"] = to_json(r.reduced);
  j["family"] = r.family;
  j["functional"] = r.functional;
  j["master"] = {{"r1", r.master.r1}, {"r2", r.master.r2}, {"s1", r.master.s1},
                 {"s2", r.master.s2}, {"i", r.master.i},   {"j", r.master.j}};
  j["window"] = r.bounds.window;
  j["mn"] = r.bounds.mn;
  j["linear_killed"] = r.linear_killed;
  j["constant_nonzero_for_all"] = r.constant_nonzero_for_all;
  j["identities_hold"] = r.identities_hold;
  j["success"] = r.success();
  Json fails = Json::array();
  for (auto const& f : r.failures) {
    fails.push_back({{"kind", f.kind}, {"m", f.m}, {"n", f.n}, {"k", f.k}, {"l", f.l}, {"detail", f.detail}});
  }
  j["failures"] = std::move(fails);
  return j;
}

std::string format(Verdict const& v) {
  std::ostringstream out;
  out << "bu=" << (v.bu ? "true" : "false") << "\nbranch: " << v.branch << "\nreduced: " << format(v.reduced);
  return out.str();
}

std::string format(WitnessReport const& w) {
  std::ostringstream out;
  out << "class: " << format(w.cls) << "\na: " << format(w.a) << "\nb: " << format(w.b)
      << "\nrelation: " << (w.checks.relation ? "ok" : "FAIL")
      << "\nfirst image: " << (w.checks.first_image ? "ok" : "FAIL")
      << "\nsecond image: " << (w.checks.second_image ? "ok" : "FAIL") << "\nsource: " << to_string(w.source);
  return out.str();
}

std::string format(CertificateReport const& r) {
  std::ostringstream out;
  out << "class: " << format(r.cls) << "\nreduced: " << format(r.reduced) << "\nfamily: " << r.family
      << "\nfunctional: " << r.functional << "\nwindow: |k|,|l| <= " << r.bounds.window
      << "; |m|,|n| <= " << r.bounds.mn << "\nlinear part killed: " << (r.linear_killed ? "yes" : "no")
      << "\nconstant nonzero for all (m,n): " << (r.constant_nonzero_for_all ? "yes" : "no")
      << "\nidentities hold: " << (r.identities_hold ? "yes" : "no")
      << "\nresult: " << (r.success() ? "success" : "FAILURE");
  for (auto const& f : r.failures) {
    out << "\n  " << f.kind << " at m=" << f.m << " n=" << f.n << " k=" << f.k << " l=" << f.l << ": " << f.detail;
  }
  return out.str();
}

}  // namespace kleinbu
