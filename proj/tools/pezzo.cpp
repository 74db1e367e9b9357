#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>

#include "pezzo/acceptance/suite.hpp"
#include "pezzo/brauer/brauer.hpp"
#include "pezzo/dp6/finite.hpp"
#include "pezzo/dp6/lemma.hpp"
#include "pezzo/error.hpp"
#include "pezzo/hexagon/hexagon.hpp"
#include "pezzo/lattice/int_matrix.hpp"
#include "pezzo/proof/certificate.hpp"

using nlohmann::json;
using namespace pezzo;

namespace {

constexpr const char* kSchema = "pezzo/1";

const char* kSchemas = R"(Output schemas (every document carries "schema": "pezzo/1"):
  brauer index|order|decompose|kernel   {"index"|"order"|"C","D"|"kernel": ...}
  brauer hilbert                         {"symbol": +1|-1}
  brauer quaternion|tensor|cor           {"class": invariant vector}
  brauer restrict                        {"class": invariant vector over K}
  invariant vector: {"inf": "0"|"1/2", "primes": {"p": "a/b"}}
  over K:           {"K": "d"|"split", "inf": [..], "primes": {"p": [slot invariants]}}
  lattice hnf|snf|kernel                 matrices as arrays of decimal strings
  hexagon report                         {"subgroups": [{subgroup_id, order, generators, fixed_rank, h1, ...}]}
  hexagon traces|stable-iso              {"traces": {class: trace}} | {"intertwiner": matrix, ...}
  surface build|count|lines|frobenius|check-zeta|torus
  replay                                 {"certificate": {...}, "transcript": "..."}
  selftest                               {"criteria": [{id, name, group, status, details}], "passed": bool}
Errors: exit 1 with {"error": {"code", "message"}}; usage errors exit 2.)";

void emit(json j) {
  j["schema"] = kSchema;
  std::cout << j.dump(2) << "\n";
}

json parse_payload(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(ErrorCode::ParseError, std::string("payload: ") + e.what());
  }
}

brauer::InvariantVector vec(const std::string& text) { return brauer::InvariantVector::parse_json(parse_payload(text)); }

dp6::TwistSpec twist(std::uint32_t q, const std::string& model) {
  if (!is_prime(q)) throw DomainError(ErrorCode::InvalidArgument, "surface models need a prime q");
  static const std::map<std::string, std::pair<bool, dp6::LType>> models{
      {"split", {false, dp6::LType::Split}},       {"split-mixed", {false, dp6::LType::Mixed}},
      {"split-inert", {false, dp6::LType::Inert}}, {"inert-split", {true, dp6::LType::Split}},
      {"inert-mixed", {true, dp6::LType::Mixed}},  {"inert-inert", {true, dp6::LType::Inert}}};
  auto it = models.find(model);
  if (it == models.end()) throw DomainError(ErrorCode::InvalidArgument, "unknown model '" + model + "'");
  return {q, it->second.first, it->second.second};
}

lattice::IntMatrix matrix_arg(const std::string& text) {
  try {
    return lattice::IntMatrix::parse_json(text);
  } catch (const json::exception& e) {
    throw DomainError(ErrorCode::ParseError, std::string("matrix: ") + e.what());
  }
}

json matrix_json(const lattice::IntMatrix& m) { return json::parse(m.to_json()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer classes, hexagon lattices and degree-6 del Pezzo surfaces"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  // brauer
  auto* br = app.add_subcommand("brauer", "Brauer classes over Q by local invariants");
  br->require_subcommand(1);
  std::string u_text, v_text, k_text = "-1", place_text = "2";
  std::string a_text, b_text;
  long mult = 2;
  auto* br_index = br->add_subcommand("index", "index of a class");
  br_index->add_option("class", u_text, "invariant vector JSON")->required();
  auto* br_order = br->add_subcommand("order", "order (period) of a class");
  br_order->add_option("class", u_text)->required();
  auto* br_dec = br->add_subcommand("decompose", "C = 3u, D = 4u for a class killed by 6");
  br_dec->add_option("class", u_text)->required();
  auto* br_ker = br->add_subcommand("kernel", "Br(F(SB(A))/F)");
  br_ker->add_option("class", u_text)->required();
  auto* br_tensor = br->add_subcommand("tensor", "sum of two classes");
  br_tensor->add_option("u", u_text)->required();
  br_tensor->add_option("v", v_text)->required();
  auto* br_mult = br->add_subcommand("multiple", "n times a class");
  br_mult->add_option("class", u_text)->required();
  br_mult->add_option("--n", mult);
  auto* br_hil = br->add_subcommand("hilbert", "Hilbert symbol (a,b)_v");
  br_hil->add_option("a", a_text)->required();
  br_hil->add_option("b", b_text)->required();
  br_hil->add_option("--place", place_text, "prime or inf");
  auto* br_quat = br->add_subcommand("quaternion", "class of (a,b)");
  br_quat->add_option("a", a_text)->required();
  br_quat->add_option("b", b_text)->required();
  auto* br_res = br->add_subcommand("restrict", "restriction to Q(sqrt d)");
  br_res->add_option("class", u_text)->required();
  br_res->add_option("--K", k_text, "squarefree d or 'split'");
  auto* br_cor = br->add_subcommand("cor", "corestriction of a class over K");
  br_cor->add_option("class", u_text, "invariant vector over K")->required();

  // lattice
  auto* lat = app.add_subcommand("lattice", "integer matrix normal forms");
  lat->require_subcommand(1);
  std::string m_text;
  auto* lat_hnf = lat->add_subcommand("hnf", "row Hermite normal form");
  lat_hnf->add_option("matrix", m_text, "[[\"1\",\"2\"],...]")->required();
  auto* lat_snf = lat->add_subcommand("snf", "Smith normal form");
  lat_snf->add_option("matrix", m_text)->required();
  auto* lat_ker = lat->add_subcommand("kernel", "integer kernel basis (columns)");
  lat_ker->add_option("matrix", m_text)->required();

  // hexagon
  auto* hex = app.add_subcommand("hexagon", "Picard lattice of the split degree-6 del Pezzo surface");
  hex->require_subcommand(1);
  bool all_subgroups = false;
  int subgroup = -1;
  auto* hex_rep = hex->add_subcommand("report", "fixed ranks, H^1 and exactness per subgroup");
  hex_rep->add_flag("--all-subgroups", all_subgroups);
  hex_rep->add_option("--subgroup", subgroup);
  auto* hex_tr = hex->add_subcommand("traces", "trace of each conjugacy class on Pic");
  auto* hex_iso = hex->add_subcommand("stable-iso", "intertwiner Pic + Z -> Z[pairs] + Z[triangles]");

  // surface
  auto* surf = app.add_subcommand("surface", "quadric models over finite fields");
  surf->require_subcommand(1);
  std::uint32_t q = 2;
  unsigned k = 1;
  std::string model = "split";
  bool serial = false;
  auto add_model = [&](CLI::App* c) {
    c->add_option("--q", q, "prime");
    c->add_option("--model", model, "split, split-mixed, split-inert, inert-split, inert-mixed, inert-inert");
  };
  auto* s_build = surf->add_subcommand("build", "emit the quadric system");
  add_model(s_build);
  auto* s_count = surf->add_subcommand("count", "points over F_{q^k} and the hexagon prediction");
  add_model(s_count);
  s_count->add_option("--k", k);
  s_count->add_flag("--serial", serial, "use the serial kernel");
  auto* s_lines = surf->add_subcommand("lines", "the six lines over the splitting field");
  add_model(s_lines);
  auto* s_frob = surf->add_subcommand("frobenius", "Frobenius element of S2 x S3");
  add_model(s_frob);
  auto* s_zeta = surf->add_subcommand("check-zeta", "counts for every k within budget");
  add_model(s_zeta);
  auto* s_torus = surf->add_subcommand("torus", "points off the lines vs |det(qI - phi)| on T^");
  add_model(s_torus);
  auto* s_split = surf->add_subcommand("split-model", "brute force on x0y0 = x1y1 = x2y2");
  s_split->add_option("--q", q);
  s_split->add_option("--k", k);
  auto* s_lemma = surf->add_subcommand("lemma", "index constraints for S(B,tau,L)");
  std::string bk_text;
  int n_s = 0;
  bool point = false;
  s_lemma->add_option("class", bk_text, "class of B over K (JSON)")->required();
  s_lemma->add_option("--index", n_s);
  s_lemma->add_flag("--rational-point", point);

  // replay
  auto* rep = app.add_subcommand("replay", "replay a proof on a concrete index-6 class");
  std::string which = "first", algebra_text;
  bool text = false;
  rep->add_option("--proof", which)->check(CLI::IsMember({"first", "second"}));
  rep->add_option("--algebra", algebra_text, "invariant vector JSON")->required();
  rep->add_option("--K", k_text, "quadratic field for the first proof");
  rep->add_flag("--text", text, "print only the transcript");
  bool wrap = false;
  rep->add_flag("--cdpgl", wrap, "wrap in the cdim PGL_6 certificate");

  // selftest
  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  std::string filter, corrupt;
  st->add_option("--filter", filter)->check(CLI::IsMember(acceptance::groups()));
  st->add_option("--corrupt-trace", corrupt, "fault injection: add 1 to the trace of a class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (br->parsed()) {
      if (br_index->parsed()) emit({{"index", brauer::index(vec(u_text))}});
      if (br_order->parsed()) emit({{"order", vec(u_text).order()}});
      if (br_dec->parsed()) {
        auto p = brauer::decompose_degree6(vec(u_text));
        emit({{"C", p.c.to_json()}, {"D", p.d.to_json()}});
      }
      if (br_ker->parsed()) {
        json l = json::array();
        for (const auto& x : brauer::chatelet_kernel(vec(u_text))) l.push_back(x.to_json());
        emit({{"kernel", l}});
      }
      if (br_tensor->parsed()) emit({{"class", tensor(vec(u_text), vec(v_text)).to_json()}});
      if (br_mult->parsed()) emit({{"class", multiple(mult, vec(u_text)).to_json()}});
      if (br_hil->parsed()) {
        emit({{"symbol", brauer::hilbert_symbol(Rational::parse(a_text), Rational::parse(b_text), brauer::Place::parse(place_text))}});
      }
      if (br_quat->parsed()) emit({{"class", brauer::quaternion_class(Rational::parse(a_text), Rational::parse(b_text)).to_json()}});
      if (br_res->parsed()) emit({{"class", brauer::restriction(vec(u_text), brauer::QuadField::parse(k_text)).to_json()}});
      if (br_cor->parsed()) {
        emit({{"class", brauer::corestriction(brauer::InvariantVectorK::parse_json(parse_payload(u_text))).to_json()}});
      }
    } else if (lat->parsed()) {
      auto m = matrix_arg(m_text);
      if (lat_hnf->parsed()) {
        auto h = lattice::hermite_normal_form(m);
        emit({{"hnf", matrix_json(h.h)}, {"transform", matrix_json(h.u)}, {"rank", h.rank}});
      }
      if (lat_snf->parsed()) {
        auto s = lattice::smith_normal_form(m);
        json d = json::array();
        for (const auto& x : s.diagonal) d.push_back(x.get_str());
        emit({{"diagonal", d}, {"snf", matrix_json(s.s)}, {"u", matrix_json(s.u)}, {"v", matrix_json(s.v)}});
      }
      if (lat_ker->parsed()) emit({{"kernel", matrix_json(lattice::kernel_basis(m))}});
    } else if (hex->parsed()) {
      if (hex_rep->parsed()) {
        json l = json::array();
        if (all_subgroups || subgroup < 0) {
          for (const auto& r : hexagon::all_subgroup_reports()) l.push_back(r.to_json());
        } else {
          if (static_cast<std::size_t>(subgroup) >= hexagon::Hexagon::instance().subgroups().size()) {
            throw DomainError(ErrorCode::InvalidArgument, "subgroup id out of range");
          }
          l.push_back(hexagon::subgroup_report(static_cast<std::size_t>(subgroup)).to_json());
        }
        emit({{"subgroups", l}});
      }
      if (hex_tr->parsed()) {
        json t = json::object();
        auto table = hexagon::trace_table();
        for (std::size_t c = 0; c < hexagon::kHexClassCount; ++c) t[hexagon::class_name(static_cast<hexagon::HexClass>(c))] = table[c];
        emit({{"traces", t}});
      }
      if (hex_iso->parsed()) {
        const auto& w = hexagon::stable_iso_witness();
        emit({{"found", w.search.found},
              {"verified", w.verified},
              {"bound", w.search.bound},
              {"candidates_tested", w.search.candidates_tested},
              {"intertwiner_space_rank", w.search.intertwiner_space_rank},
              {"intertwiner", matrix_json(w.search.intertwiner)}});
      }
    } else if (surf->parsed()) {
      if (s_split->parsed()) {
        if (!is_prime(q)) throw DomainError(ErrorCode::InvalidArgument, "q must be prime");
        emit({{"q", q}, {"k", k}, {"count", dp6::split_model_points(GF::prime(q), k)}});
      } else if (s_lemma->parsed()) {
        dp6::Observation obs;
        if (n_s) obs.index = n_s;
        if (point) obs.has_rational_point = true;
        auto b = brauer::InvariantVectorK::parse_json(parse_payload(bk_text));
        emit({{"verdict", dp6::lemma_number_check(b, obs).to_json()}});
      } else {
        auto spec = twist(q, model);
        auto s = dp6::make_surface(spec);
        json head{{"surface", spec.id()}};
        if (s_build->parsed()) {
          head["system"] = s.to_json();
          emit(head);
        } else {
          auto lines = dp6::find_lines(s);
          auto phi = dp6::frobenius_on_lines(s, lines);
          if (s_count->parsed()) {
            dp6::PointCountRecord rec;
            if (serial) {
              rec = dp6::count_points(s, k, phi, hexagon::trace_table());
              rec.raw = dp6::count_points_serial(dp6::compile(s, dp6::extension(s.field(), k)));
            } else {
              rec = dp6::count_points(s, k, phi, hexagon::trace_table());
            }
            rec.surface = spec.id();
            emit(rec.to_json());
          }
          if (s_lines->parsed()) {
            head["configuration"] = lines.to_json();
            emit(head);
          }
          if (s_frob->parsed()) {
            head["frobenius"] = phi.word();
            head["class"] = hexagon::class_name(hexagon::classify(phi));
            head["matches_type"] = dp6::frobenius_matches_type(s, phi);
            emit(head);
          }
          if (s_zeta->parsed()) {
            json recs = json::array();
            bool all = true;
            for (unsigned kk = 1; dp6::projective_size(dp6::extension(s.field(), kk).q(), 6) <= dp6::kDefaultBudget; ++kk) {
              auto rec = dp6::count_points(s, kk, phi, hexagon::trace_table());
              rec.surface = spec.id();
              all = all && rec.matches();
              recs.push_back(rec.to_json());
            }
            head["records"] = recs;
            head["all_match"] = all;
            emit(head);
            if (!all) return 1;
          }
          if (s_torus->parsed()) {
            head["torus"] = dp6::torus_count_check(s, lines, phi).to_json();
            emit(head);
          }
        }
      }
    } else if (rep->parsed()) {
      auto a = vec(algebra_text);
      auto cert = which == "first" ? proof::replay_first_proof(a, brauer::QuadField::parse(k_text)) : proof::replay_second_proof(a);
      if (wrap) cert = proof::corollary_cdpgl(cert);
      if (text) {
        std::cout << cert.transcript();
      } else {
        emit({{"certificate", cert.to_json()}, {"transcript", cert.transcript()}});
      }
    } else if (st->parsed()) {
      acceptance::SuiteOptions opt;
      opt.filter = filter;
      if (!corrupt.empty()) {
        bool found = false;
        for (std::size_t c = 0; c < hexagon::kHexClassCount; ++c) {
          if (corrupt == hexagon::class_name(static_cast<hexagon::HexClass>(c))) {
            opt.trace_table[c] += 1;
            found = true;
          }
        }
        if (!found) throw DomainError(ErrorCode::InvalidArgument, "unknown class '" + corrupt + "'");
      }
      auto results = acceptance::run_suite(opt);
      for (const auto& r : results) std::fprintf(stderr, "%s\n", r.line().c_str());
      json j = acceptance::suite_json(results);
      bool ok = j["passed"].get<bool>();
      emit(j);
      return ok ? 0 : 1;
    }
  } catch (const DomainError& e) {
    emit({{"error", {{"code", e.code_name()}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}
