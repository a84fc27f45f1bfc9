// jetfront: front-diagram calculus for Legendrian links in the 1-jet space
// of the circle.  Subcommands cover diagram I/O, classical invariants,
// rewrite-system isotopy search, cable classification, the slope-calculus
// tb oracle, and the dictionary into the 3-sphere.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetfront/classify.hpp"
#include "jetfront/front.hpp"
#include "jetfront/front_io.hpp"
#include "jetfront/moves.hpp"
#include "jetfront/render.hpp"
#include "jetfront/slopes.hpp"
#include "jetfront/translate.hpp"

namespace jf = jetfront;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUnknown = 3;

struct Report {
  json data = json::object();
  bool as_json = false;

  void set(const std::string& key, const json& value) { data[key] = value; }

  void print_scalar(std::ostream& os, const std::string& key, const json& v) const {
    if (v.is_string()) os << key << "=" << v.get<std::string>() << "\n";
    else os << key << "=" << v.dump() << "\n";
  }

  void flush(std::ostream& os) const {
    if (as_json) {
      os << data.dump(2) << "\n";
      return;
    }
    for (auto it = data.begin(); it != data.end(); ++it) {
      if (it.value().is_array()) {
        int i = 0;
        for (const auto& item : it.value()) {
          if (item.is_object()) {
            os << it.key() << "[" << i << "]";
            for (auto f = item.begin(); f != item.end(); ++f)
              os << " " << f.key() << "=" << (f.value().is_string()
                                                  ? f.value().get<std::string>()
                                                  : f.value().dump());
            os << "\n";
          } else {
            print_scalar(os, it.key() + "[" + std::to_string(i) + "]", item);
          }
          ++i;
        }
      } else if (it.value().is_object()) {
        for (auto f = it.value().begin(); f != it.value().end(); ++f)
          print_scalar(os, it.key() + "." + f.key(), f.value());
      } else {
        print_scalar(os, it.key(), it.value());
      }
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

jf::FrontDiagram load_front(const std::string& path) {
  jf::FrontDiagram d = jf::parse_front(read_file(path));
  jf::ValidationReport rep = jf::validate(d);
  if (!rep.ok) {
    std::string msg = "invalid diagram:";
    for (const auto& v : rep.violations)
      msg += " [event " + std::to_string(v.event_index) + "] " + v.rule + ";";
    throw std::runtime_error(msg);
  }
  return d;
}

const char* verdict_name(jf::Verdict v) {
  switch (v) {
    case jf::Verdict::Isotopic: return "Isotopic";
    case jf::Verdict::NotIsotopic: return "NotIsotopic";
    case jf::Verdict::ExceptionalPair: return "ExceptionalPair";
    case jf::Verdict::UnknownCase4Rot: return "UnknownCase4Rot";
  }
  return "?";
}

std::optional<jf::HeightOrder> parse_height_order(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "first-below") return jf::HeightOrder::FirstBelow;
  if (s == "first-above") return jf::HeightOrder::FirstAbove;
  throw std::runtime_error("height order must be first-below or first-above");
}

std::string move_name(const jf::MoveSite& m) {
  std::ostringstream os;
  switch (m.kind) {
    case jf::MoveKind::TriplePoint: os << "triple@" << m.index; break;
    case jf::MoveKind::ZigzagSlide: os << "zigzag-slide@" << m.index; break;
    case jf::MoveKind::Commute: os << "commute@" << m.index; break;
    case jf::MoveKind::RotateBasepoint: os << (m.variant > 0 ? "rotate+" : "rotate-"); break;
    case jf::MoveKind::CuspThroughStrand:
      os << (m.expand ? "cusp-expand@" : "cusp-contract@") << m.index << "/v" << m.variant;
      break;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian front calculus on the annulus"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  // --- invariants ---
  auto* cmd_inv = app.add_subcommand("invariants", "classical invariants per component");
  std::string inv_file;
  cmd_inv->add_option("file", inv_file)->required();

  // --- validate ---
  auto* cmd_val = app.add_subcommand("validate", "check a front file");
  std::string val_file;
  cmd_val->add_option("file", val_file)->required();

  // --- render ---
  auto* cmd_render = app.add_subcommand("render", "render a front to SVG");
  std::string render_file, render_out;
  cmd_render->add_option("file", render_file)->required();
  cmd_render->add_option("-o,--output", render_out)->required();

  // --- classify ---
  auto* cmd_classify = app.add_subcommand("classify", "decide Legendrian isotopy classes");
  bool helix = false, cable = false;
  int tb0 = 0, rot0 = 0, tb1 = 0, rot1 = 0, cl_p = 0, cl_q = 1, cl_m = 0;
  std::string ho_str;
  cmd_classify->add_flag("--helix", helix);
  cmd_classify->add_flag("--cable", cable);
  cmd_classify->add_option("--tb0", tb0);
  cmd_classify->add_option("--rot0", rot0);
  cmd_classify->add_option("--tb1", tb1);
  cmd_classify->add_option("--rot1", rot1);
  cmd_classify->add_option("-p", cl_p);
  cmd_classify->add_option("-q", cl_q);
  cmd_classify->add_option("-m", cl_m);
  cmd_classify->add_option("--height-order", ho_str, "first-below|first-above");

  // --- tbmax ---
  auto* cmd_tbmax = app.add_subcommand("tbmax", "maximal tb of a (p,q)-cable");
  int tm_p = 0, tm_q = 1, tm_m = 0;
  bool with_oracle = false;
  cmd_tbmax->add_option("-p", tm_p)->required();
  cmd_tbmax->add_option("-q", tm_q)->required();
  cmd_tbmax->add_option("-m", tm_m)->required();
  cmd_tbmax->add_flag("--oracle", with_oracle, "also run the intersection-bound oracle");

  // --- enumerate ---
  auto* cmd_enum = app.add_subcommand("enumerate", "mountain range of (tb,rot) pairs");
  int en_p = 0, en_q = 1, en_m = 0, en_floor = 0;
  cmd_enum->add_option("-p", en_p)->required();
  cmd_enum->add_option("-q", en_q)->required();
  cmd_enum->add_option("-m", en_m)->required();
  cmd_enum->add_option("--floor", en_floor)->required();

  // --- translate ---
  auto* cmd_tr = app.add_subcommand("translate", "dictionary into the 3-sphere");
  int trp = 0, trq = 1;
  std::optional<int> trtb, trm;
  cmd_tr->add_option("-p", trp)->required();
  cmd_tr->add_option("-q", trq)->required();
  cmd_tr->add_option("--tb", trtb);
  cmd_tr->add_option("-m,--m0", trm);

  // --- search-isotopy ---
  auto* cmd_search = app.add_subcommand("search-isotopy", "move path between two fronts");
  std::string sfile1, sfile2;
  int sdepth = 14;
  long sstates = 2'000'000;
  cmd_search->add_option("file1", sfile1)->required();
  cmd_search->add_option("file2", sfile2)->required();
  cmd_search->add_option("--depth", sdepth);
  cmd_search->add_option("--states", sstates);

  // --- gen ---
  auto* cmd_gen = app.add_subcommand("gen", "write a standard front file");
  std::vector<std::string> gen_args;
  std::string gen_out;
  cmd_gen->add_option("spec", gen_args, "lambda N | eye | braid P Q | cable P Q")->required();
  cmd_gen->add_option("-o,--output", gen_out)->required();

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.as_json = as_json;
  int exit_code = kExitOk;

  try {
    if (*cmd_inv) {
      jf::FrontDiagram d = load_front(inv_file);
      jf::Trace tr = jf::trace_components(d);
      json comps = json::array();
      for (int c = 0; c < tr.component_count(); ++c) {
        jf::ComponentInvariants iv = tr.invariants(c);
        comps.push_back({{"component", c}, {"tb", iv.tb}, {"rot", iv.rot},
                         {"winding", iv.winding}});
      }
      rep.set("components", comps);
      json sums = json::array();
      for (int a = 0; a < tr.component_count(); ++a)
        for (int b = a + 1; b < tr.component_count(); ++b)
          sums.push_back({{"a", a}, {"b", b},
                          {"sum", jf::inter_component_crossing_sum(d, a, b)}});
      if (!sums.empty()) rep.set("crossings", sums);
    } else if (*cmd_val) {
      jf::FrontDiagram d = jf::parse_front(read_file(val_file));
      jf::ValidationReport r = jf::validate(d);
      rep.set("ok", r.ok);
      if (!r.ok) {
        json v = json::array();
        for (const auto& viol : r.violations)
          v.push_back({{"event", viol.event_index}, {"rule", viol.rule}});
        rep.set("violations", v);
        exit_code = kExitInvalid;
      }
    } else if (*cmd_render) {
      jf::FrontDiagram d = load_front(render_file);
      std::ofstream out(render_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + render_out);
      out << jf::render_svg(d);
      rep.set("output", render_out);
    } else if (*cmd_classify) {
      if (helix == cable) throw std::runtime_error("pick one of --helix or --cable");
      if (helix) {
        jf::ClassResult r =
            jf::classify_helix({tb0, rot0}, {tb1, rot1}, parse_height_order(ho_str));
        rep.set("verdict", verdict_name(r.verdict));
        if (r.normal_form)
          rep.set("normal_form", {{"k0", r.normal_form->k0}, {"l0", r.normal_form->l0},
                                  {"k1", r.normal_form->k1}, {"l1", r.normal_form->l1}});
        if (!r.detail.empty()) rep.set("detail", r.detail);
        if (r.verdict == jf::Verdict::ExceptionalPair) exit_code = kExitUnknown;
      } else {
        jf::CableDescriptor d{cl_p, cl_q, cl_m, rot0, tb1, rot1, parse_height_order(ho_str)};
        jf::RealizabilityReport rr = jf::check_realizable(d);
        rep.set("realizable", rr.status == jf::Realizability::Realizable      ? "yes"
                              : rr.status == jf::Realizability::NotRealizable ? "no"
                                                                              : "unknown");
        if (!rr.reason.empty()) rep.set("reason", rr.reason);
        rep.set("tb_max", jf::tb_max(cl_p, cl_q, cl_m));
        std::optional<int> rmax = jf::rot_at_tb_max(cl_p, cl_q, cl_m);
        rep.set("rot_at_tb_max", rmax ? json(*rmax) : json("unknown"));
        if (rr.status == jf::Realizability::Unknown) exit_code = kExitUnknown;
      }
    } else if (*cmd_tbmax) {
      int closed = jf::tb_max(tm_p, tm_q, tm_m);
      rep.set("tb_max", closed);
      if (with_oracle) {
        int oracle = jf::tb_max_oracle({tm_p, tm_q}, tm_m);
        rep.set("oracle", oracle);
        rep.set("match", closed == oracle);
      }
    } else if (*cmd_enum) {
      auto range = jf::enumerate_mountain_range(en_p, en_q, en_m, en_floor);
      json arr = json::array();
      for (const auto& [tb, rot] : range) arr.push_back({{"tb", tb}, {"rot", rot}});
      rep.set("pairs", arr);
    } else if (*cmd_tr) {
      jf::S3CableType t = jf::cable_type_to_s3(trp, trq);
      rep.set("p_prime", t.p_prime);
      rep.set("q_prime", t.q_prime);
      if (trtb) rep.set("tb_s3", jf::tb_to_s3(*trtb, trq));
      if (trm) rep.set("m_s3", jf::m_to_s3(*trm));
    } else if (*cmd_search) {
      jf::FrontDiagram d1 = load_front(sfile1);
      jf::FrontDiagram d2 = load_front(sfile2);
      jf::SearchResult r = jf::search_isotopy(d1, d2, {sdepth, sstates});
      rep.set("states", r.states);
      switch (r.verdict) {
        case jf::SearchVerdict::Found: {
          rep.set("verdict", "isotopic");
          rep.set("path_length", r.path.size());
          json moves = json::array();
          for (const auto& m : r.path) moves.push_back(move_name(m));
          rep.set("moves", moves);
          break;
        }
        case jf::SearchVerdict::NotIsotopic:
          rep.set("verdict", "not-isotopic");
          rep.set("reason", r.reason);
          break;
        case jf::SearchVerdict::NotFoundWithinBudget:
          rep.set("verdict", "not-found-within-budget");
          rep.set("reason", r.reason);
          exit_code = kExitBudget;
          break;
      }
    } else if (*cmd_gen) {
      jf::FrontDiagram d;
      const std::string& kind = gen_args.at(0);
      if (kind == "lambda") {
        if (gen_args.size() != 2) throw std::runtime_error("usage: gen lambda N");
        d = jf::lambda_front(std::stoi(gen_args[1]));
      } else if (kind == "eye") {
        if (gen_args.size() != 1) throw std::runtime_error("usage: gen eye");
        d = jf::meridian_eye_front();
      } else if (kind == "braid") {
        if (gen_args.size() != 3) throw std::runtime_error("usage: gen braid P Q");
        d = jf::torus_braid_front(std::stoi(gen_args[1]), std::stoi(gen_args[2]));
      } else if (kind == "cable") {
        if (gen_args.size() != 3) throw std::runtime_error("usage: gen cable P Q");
        d = jf::cable_link_front(std::stoi(gen_args[1]), std::stoi(gen_args[2]));
      } else {
        throw std::runtime_error("unknown generator: " + kind);
      }
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + gen_out);
      out << jf::serialize_front(d);
      rep.set("output", gen_out);
    }
  } catch (const std::domain_error& e) {
    rep.set("error", e.what());
    rep.flush(std::cout);
    return kExitUnknown;
  } catch (const std::exception& e) {
    rep.set("error", e.what());
    rep.flush(std::cout);
    return kExitInvalid;
  }

  rep.flush(std::cout);
  return exit_code;
}
