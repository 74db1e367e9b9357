#include "pezzo/acceptance/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include "pezzo/brauer/hilbert_oracle.hpp"
#include "pezzo/dp6/finite.hpp"
#include "pezzo/proof/certificate.hpp"
#include "pezzo/proof/kernel.hpp"

namespace pezzo::acceptance {

using nlohmann::json;

nlohmann::json CriterionResult::to_json() const {
  return {{"id", id}, {"name", name}, {"group", group}, {"status", passed ? "PASS" : "FAIL"}, {"details", details}};
}

std::string CriterionResult::line() const {
  char buf[160];
  if (limit_seconds > 0) {
    std::snprintf(buf, sizeof buf, "[%s] %2d %-28s %8.3f s (limit %.0f s)", passed ? "PASS" : "FAIL", id, name.c_str(),
                  seconds, limit_seconds);
  } else {
    std::snprintf(buf, sizeof buf, "[%s] %2d %-28s %8.3f s", passed ? "PASS" : "FAIL", id, name.c_str(), seconds);
  }
  return buf;
}

std::vector<std::string> groups() { return {"brauer", "lattice", "surface", "proof", "determinism"}; }

namespace {

using brauer::InvariantVector;
using brauer::Place;

struct Criterion {
  int id;
  const char* name;
  const char* group;
  double limit;
  std::function<bool(json&, const SuiteOptions&)> run;
};

bool hilbert_oracle(json& d, const SuiteOptions&) {
  std::vector<Place> places{Place::real()};
  for (long p : {2, 3, 5, 7, 11, 13}) places.push_back(Place::prime(p));
  long cases = 0, mismatches = 0;
  for (const auto& v : places) {
    for (long a = -10; a <= 10; ++a) {
      for (long b = -10; b <= 10; ++b) {
        if (a == 0 || b == 0) continue;
        ++cases;
        mismatches += brauer::hilbert_symbol(Rational(a), Rational(b), v) != brauer::hilbert_symbol_bruteforce(a, b, v);
      }
    }
  }
  d = {{"cases", cases}, {"mismatches", mismatches}};
  return mismatches == 0;
}

bool reciprocity(json& d, const SuiteOptions&) {
  std::mt19937_64 rng(500);
  long bad = 0;
  for (int i = 0; i < 500; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = static_cast<long>(rng() % 2001) - 1000;
    while (b == 0) b = static_cast<long>(rng() % 2001) - 1000;
    std::vector<Place> places{Place::real(), Place::prime(2)};
    for (long p : brauer::prime_factors(Integer(a) * b))
      if (p != 2) places.push_back(Place::prime(p));
    brauer::Fraction1 sum;
    for (const auto& v : places) {
      if (brauer::hilbert_symbol(Rational(a), Rational(b), v) == -1) sum = sum + brauer::Fraction1(1, 2);
    }
    bad += !sum.is_zero();
  }
  d = {{"classes", 500}, {"violations", bad}};
  return bad == 0;
}

bool projection_formula(json& d, const SuiteOptions&) {
  std::mt19937_64 rng(200);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  std::vector<brauer::QuadField> fields{brauer::QuadField::of(-1), brauer::QuadField::of(2), brauer::QuadField::of(-3),
                                        brauer::QuadField::of(5)};
  long checks = 0, bad = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<long> ps;
    for (long p : primes)
      if (rng() % 2) ps.push_back(p);
    if (ps.empty()) ps.push_back(primes[rng() % primes.size()]);
    long den = std::vector<long>{2, 3, 4, 6}[rng() % 4];
    auto u = brauer::random_class(rng, den, ps, true);
    for (const auto& k : fields) {
      ++checks;
      bad += !(brauer::corestriction(brauer::restriction(u, k)) == brauer::multiple(2, u));
    }
  }
  d = {{"checks", checks}, {"failures", bad}};
  return bad == 0;
}

bool hexagon_suite(json& d, const SuiteOptions&) {
  const auto& hex = hexagon::Hexagon::instance();
  bool ok = true;
  json subs = json::array();
  for (const auto& r : hexagon::all_subgroup_reports()) {
    const auto& sub = hex.subgroups()[r.subgroup_id];
    Integer tr = 0;
    for (int g : sub.elements) tr += hex.pic().action(g).trace();
    bool avg = tr % Integer(static_cast<unsigned long>(sub.order())) == 0 &&
               tr / Integer(static_cast<unsigned long>(sub.order())) == Integer(static_cast<unsigned long>(r.fixed_rank));
    bool sub_ok = r.sequences_exact && r.h1.empty() && avg;
    ok = ok && sub_ok;
    subs.push_back({{"id", r.subgroup_id}, {"order", r.order}, {"ok", sub_ok}});
  }
  auto full = lattice::fixed_submodule(hex.pic(), hex.group()->full());
  bool k_gen = full.cols() == 1;
  json kvec = json::array();
  if (k_gen) {
    Integer g = 0;
    auto col = full.col(0);
    for (const auto& x : col) {
      g = gcd(g, x);
      kvec.push_back(x.get_str());
    }
    auto k = hexagon::canonical_class();
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < 4; ++i) {
      plus = plus && col[i] == k[i];
      minus = minus && col[i] == -k[i];
    }
    k_gen = g == 1 && (plus || minus);
  }
  d = {{"subgroups", subs}, {"fixed_full", kvec}, {"fixed_full_is_K", k_gen}};
  return ok && subs.size() == 16 && k_gen;
}

bool stable_iso(json& d, const SuiteOptions&) {
  const auto& hex = hexagon::Hexagon::instance();
  const auto& w = hexagon::stable_iso_witness();
  if (!w.search.found) {
    d = {{"found", false}};
    return false;
  }
  auto src = hex.stable_source(), dst = hex.stable_target();
  const auto& m = w.search.intertwiner;
  bool all = true;
  for (std::size_t g = 0; g < hex.elements().size(); ++g) {
    all = all && m * src.action(static_cast<int>(g)) == dst.action(static_cast<int>(g)) * m;
  }
  Integer det = lattice::determinant(m);
  bool unimodular = det == 1 || det == -1;
  d = {{"found", true},
       {"bound", w.search.bound},
       {"candidates", w.search.candidates_tested},
       {"determinant", det.get_str()},
       {"intertwines_all_elements", all},
       {"matrix", json::parse(m.to_json())}};
  return all && unimodular;
}

bool split_counts(json& d, const SuiteOptions&) {
  bool ok = true;
  json rows = json::array();
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uint64_t expected = p * p + 4 * p + 1;
    std::uint64_t model = dp6::split_model_points(GF::prime(p), 1);
    auto s = dp6::make_surface({p, false, dp6::LType::Split});
    std::uint64_t serial = dp6::count_points_serial(dp6::compile(s, s.field()));
    std::uint64_t parallel = dp6::count_points_parallel(dp6::compile(s, s.field()));
    ok = ok && model == expected && serial == expected && parallel == expected;
    rows.push_back({{"q", p}, {"model", model}, {"quadric_serial", serial}, {"quadric_parallel", parallel}, {"expected", expected}});
  }
  d = rows;
  return ok;
}

bool segre(json& d, const SuiteOptions&) {
  bool ok = true;
  json rows = json::array();
  for (std::uint32_t p : {2u, 3u}) {
    auto rep = dp6::verify_split_equivalence(dp6::make_surface({p, false, dp6::LType::Split}));
    ok = ok && rep.holds();
    rows.push_back({{"q", p}, {"surface", rep.surface_points}, {"model", rep.model_points}, {"bijection", rep.holds()}});
  }
  d = rows;
  return ok;
}

struct SurfaceData {
  dp6::TwistSpec spec;
  dp6::Surface surface;
  dp6::LineConfiguration lines;
  hexagon::HexAut phi;
};

std::vector<SurfaceData> corpus_data() {
  std::vector<SurfaceData> out;
  for (const auto& spec : dp6::twist_corpus()) {
    auto s = dp6::make_surface(spec);
    auto l = dp6::find_lines(s);
    auto phi = dp6::frobenius_on_lines(s, l);
    out.push_back({spec, std::move(s), std::move(l), phi});
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool zeta(json& d, const SuiteOptions& opt) {
  json rows = json::array(), failures = json::array();
  int twisted = 0;
  for (const auto& sd : corpus_data()) {
    bool surface_ok = true;
    for (unsigned k = 1; dp6::projective_size(ipow(sd.spec.p, k), 6) <= dp6::kDefaultBudget; ++k) {
      auto rec = dp6::count_points(sd.surface, k, sd.phi, opt.trace_table);
      rec.surface = sd.spec.id();
      surface_ok = surface_ok && rec.matches();
      rows.push_back(rec.to_json());
    }
    if (!surface_ok) failures.push_back(sd.spec.id());
    twisted += surface_ok && !sd.phi.is_identity();
  }
  d = {{"records", rows}, {"twisted_surfaces_passing", twisted}, {"failures", failures}};
  return failures.empty() && twisted >= 4;
}

bool line_config(json& d, const SuiteOptions&) {
  bool ok = true;
  json rows = json::array();
  for (const auto& sd : corpus_data()) {
    bool match = dp6::frobenius_matches_type(sd.surface, sd.phi);
    ok = ok && sd.lines.ok() && match;
    rows.push_back({{"surface", sd.spec.id()},
                    {"field", sd.lines.field.name()},
                    {"lines", sd.lines.lines.size()},
                    {"hexagon", sd.lines.hexagon},
                    {"equations_vanish", sd.lines.equations_vanish},
                    {"frobenius", sd.phi.word()},
                    {"class", hexagon::class_name(hexagon::classify(sd.phi))},
                    {"matches_type", match}});
  }
  d = rows;
  return ok;
}

bool torus(json& d, const SuiteOptions&) {
  bool ok = true;
  json rows = json::array();
  for (const auto& sd : corpus_data()) {
    auto t = dp6::torus_count_check(sd.surface, sd.lines, sd.phi);
    ok = ok && t.holds();
    json r = t.to_json();
    r["surface"] = sd.spec.id();
    rows.push_back(r);
  }
  d = rows;
  return ok;
}

bool kernel_shapes(json& d, const SuiteOptions&) {
  std::mt19937_64 rng(100);
  long bad = 0;
  std::map<std::string, long> tally;
  for (int i = 0; i < 100; ++i) {
    auto c = proof::random_case(rng);
    for (const auto& s : proof::kernel_shapes(c)) {
      bad += !(proof::in_master_list(s) && s.well_formed() && proof::types_match_case(c, s));
      ++tally[proof::shape_name(s.shape)];
    }
  }
  d = {{"cases", 100}, {"violations", bad}, {"shapes", tally}};
  return bad == 0;
}

bool proof_replays(json& d, const SuiteOptions&) {
  long first = 0, second = 0, reproducible = 0;
  auto corpus = proof::index6_corpus(6, 50);
  for (const auto& a : corpus) {
    auto c1 = proof::replay_first_proof(a);
    auto c2 = proof::replay_second_proof(a);
    first += c1.contradiction;
    second += c2.contradiction;
    bool same = c1.to_json().dump() == proof::replay_first_proof(a).to_json().dump() &&
                c2.to_json().dump() == proof::replay_second_proof(a).to_json().dump();
    reproducible += proof::recheck(c1).ok() && proof::recheck(c2).ok() && same;
  }
  long witness = brauer::index(proof::degree6_witness());
  d = {{"instances", corpus.size()},
       {"first_contradictions", first},
       {"second_contradictions", second},
       {"reproducible", reproducible},
       {"witness_index", witness}};
  return first == 50 && second == 50 && reproducible == 50 && witness == 6;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c{
      {1, "hilbert-oracle", "brauer", 30, hilbert_oracle},
      {2, "reciprocity", "brauer", 5, reciprocity},
      {3, "projection-formula", "brauer", 5, projection_formula},
      {4, "hexagon-lattices", "lattice", 10, hexagon_suite},
      {5, "stable-isomorphism", "lattice", 0, stable_iso},
      {6, "split-model-counts", "surface", 60, split_counts},
      {7, "segre-equivalence", "surface", 0, segre},
      {8, "twisted-zeta", "surface", 0, zeta},
      {9, "line-configuration", "surface", 0, line_config},
      {10, "torus-orbits", "surface", 0, torus},
      {11, "kernel-shapes", "proof", 0, kernel_shapes},
      {12, "proof-replays", "proof", 0, proof_replays},
  };
  return c;
}

CriterionResult run_one(const Criterion& c, const SuiteOptions& opt) {
  CriterionResult r{c.id, c.name, c.group, false, 0, c.limit, json()};
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = c.run(r.details, opt);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details = {{"exception", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.limit > 0 && r.seconds > c.limit) r.passed = false;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (options.filter.empty() || options.filter == c.group) out.push_back(run_one(c, options));
  }
  if (options.filter.empty() || options.filter == "determinism") {
    CriterionResult r{13, "determinism", "determinism", false, 0, 0, json()};
    auto t0 = std::chrono::steady_clock::now();
    SuiteOptions inner = options;
    inner.filter.clear();
    std::vector<std::string> dumps;
    for (int run = 0; run < 2; ++run) {
      std::vector<CriterionResult> rs;
      for (const auto& c : criteria()) rs.push_back(run_one(c, inner));
      dumps.push_back(suite_json(rs).dump());
    }
    r.passed = dumps[0] == dumps[1];
    r.details = {{"runs", 2}, {"bytes", dumps[0].size()}, {"identical", r.passed}};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

nlohmann::json suite_json(const std::vector<CriterionResult>& results) {
  json list = json::array();
  bool all = true;
  for (const auto& r : results) {
    list.push_back(r.to_json());
    all = all && r.passed;
  }
  return {{"criteria", list}, {"passed", all}};
}

}  // namespace pezzo::acceptance
