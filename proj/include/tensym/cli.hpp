#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tensym/tensym.hpp"

namespace tensym::cli {

// exit codes: 0 pass, 1 check failed, 2 input error, 3 size guard
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kSizeGuard = 3;

namespace detail {

inline std::string witness_names(const std::vector<int>& w,
                                 const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    if (w[i] >= 0 && w[i] < static_cast<int>(names.size()))
      out += names[w[i]];
    else
      out += std::to_string(w[i]);
  }
  return out;
}

inline void print_report(std::ostream& out, const Report& r,
                         const std::vector<std::string>& names) {
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass && !c.witness.empty())
      out << " witness (" << witness_names(c.witness, names) << ")";
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
}

inline nlohmann::json report_json(const Report& r, const std::vector<std::string>& names) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) {
      nlohmann::json w = nlohmann::json::array();
      for (int i : c.witness)
        w.push_back(i >= 0 && i < static_cast<int>(names.size()) ? names[i]
                                                                 : std::to_string(i));
      jc["witness"] = w;
    }
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(jc);
  }
  return nlohmann::json{{"pass", r.pass()}, {"checks", checks}};
}

// flat key/value mirror of the model document
inline nlohmann::json model_json(const ParsedModel& m) {
  nlohmann::json j;
  const auto& names = m.names;
  auto pairs_json = [&](const std::vector<std::pair<int, int>>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [a, b] : ps) arr.push_back({names[a], names[b]});
    return arr;
  };
  auto map_json = [&](const std::vector<std::uint8_t>& t) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < t.size(); ++i) obj[names[i]] = names[t[i]];
    return obj;
  };
  j["elements"] = names;
  if (m.kind == ModelKind::algebra) {
    const TmsAlgebra& a = *m.algebra;
    j["kind"] = "algebra";
    j["m"] = a.m;
    j["leq"] = pairs_json(cover_pairs(a.lat.order));
    j["N"] = map_json(a.N);
    j["G"] = map_json(a.G);
    j["H"] = map_json(a.H);
  } else {
    const TmsSpace& s = *m.space;
    j["kind"] = "space";
    j["m"] = s.m;
    j["leq"] = pairs_json(cover_pairs(s.order));
    j["g"] = map_json(s.g);
    j["RG"] = pairs_json(s.rg.pairs());
    j["RH"] = pairs_json(s.rh.pairs());
  }
  return j;
}

inline ParsedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

inline void write_output(const std::string& text, const std::string& out_path,
                         std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write '" + out_path + "'");
  f << text;
}

inline std::string blocks_text(const Congruence& c, const std::vector<std::string>& names) {
  std::string out;
  for (int b = 0; b < c.blocks; ++b) {
    out += "{";
    bool first = true;
    for (int x = 0; x < c.n(); ++x)
      if (c.block[x] == b) {
        if (!first) out += " ";
        out += x < static_cast<int>(names.size()) ? names[x] : std::to_string(x);
        first = false;
      }
    out += "}";
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for finite tense m-symmetric algebras and their dual spaces"};
  app.name("tensym");
  app.require_subcommand(1);

  struct {
    std::string file, out_path, report = "text", method = "both";
    int guard = default_guards().algebra;
    int max_size = 2;
    std::vector<int> ms = {};
    std::string out_dir;
  } opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--report", opt.report, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--guard-size", opt.guard, "brute-force carrier cap");
  };

  CLI::App* c_check = app.add_subcommand("check", "validate axioms and classify");
  c_check->add_option("file", opt.file)->required();
  add_common(c_check);

  CLI::App* c_dual = app.add_subcommand("dual", "emit the dual space of an algebra");
  c_dual->add_option("file", opt.file)->required();
  c_dual->add_option("-o", opt.out_path, "output file");
  add_common(c_dual);

  CLI::App* c_complex = app.add_subcommand("complex", "emit the complex algebra of a space");
  c_complex->add_option("file", opt.file)->required();
  c_complex->add_option("-o", opt.out_path, "output file");
  add_common(c_complex);

  CLI::App* c_round = app.add_subcommand("roundtrip", "verify the canonical isomorphism");
  c_round->add_option("file", opt.file)->required();
  add_common(c_round);

  CLI::App* c_cong = app.add_subcommand("congruences", "congruence lattice of an algebra");
  c_cong->add_option("file", opt.file)->required();
  c_cong->add_option("--method", opt.method)
      ->check(CLI::IsMember({"direct", "dual", "both"}));
  add_common(c_cong);

  CLI::App* c_verify = app.add_subcommand("verify-t2", "anti-isomorphism of both congruence routes");
  c_verify->add_option("file", opt.file)->required();
  add_common(c_verify);

  CLI::App* c_enum = app.add_subcommand("enumerate", "build the exhaustive corpus");
  c_enum->add_option("--max-size", opt.max_size, "largest poset carrier")->required();
  c_enum->add_option("--m", opt.ms, "symmetry degrees (repeatable)");
  c_enum->add_option("--out", opt.out_dir, "directory for model files");
  add_common(c_enum);

  CLI::App* c_dot = app.add_subcommand("dot", "Graphviz rendering");
  c_dot->add_option("file", opt.file)->required();
  c_dot->add_option("-o", opt.out_path, "output file");
  add_common(c_dot);

  try {
    std::vector<const char*> argv;
    argv.push_back("tensym");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const bool json = opt.report == "json";
  try {
    if (c_check->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      const bool is_algebra = m.kind == ModelKind::algebra;
      const Report r =
          is_algebra ? validate_tms_algebra(*m.algebra) : validate_tms_space(*m.space);
      if (json) {
        nlohmann::json j = detail::report_json(r, m.names);
        j["command"] = "check";
        j["kind"] = is_algebra ? "algebra" : "space";
        if (is_algebra && r.pass()) {
          const SubvarietyFlags f = classify(*m.algebra);
          j["classification"] = {{"deMorgan", f.de_morgan},
                                 {"kleene", f.kleene},
                                 {"boolean", f.boolean_alg},
                                 {"tenseAlgebra", f.tense_algebra}};
        }
        out << j.dump(2) << "\n";
      } else {
        out << (is_algebra ? "algebra" : "space") << " with "
            << m.names.size() << " element(s)\n";
        detail::print_report(out, r, m.names);
        if (is_algebra && r.pass()) {
          const SubvarietyFlags f = classify(*m.algebra);
          out << "  classification:";
          if (f.de_morgan) out << " deMorgan";
          if (f.kleene) out << " kleene";
          if (f.boolean_alg) out << " boolean";
          if (f.tense_algebra) out << " tenseAlgebra";
          if (!f.de_morgan) out << " (properly m-symmetric)";
          out << "\n";
        }
        out << (r.pass() ? "PASS" : "FAIL") << "\n";
      }
      return r.pass() ? kPass : kCheckFailed;
    }

    if (c_dual->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      if (m.kind != ModelKind::algebra)
        throw SemanticError("'dual' expects an algebra model");
      const TmsSpace s = dual_space(*m.algebra);
      if (json) {
        ParsedModel pm;
        pm.kind = ModelKind::space;
        pm.space = s;
        pm.names = tensym::detail::default_names(s.n(), {});
        out << detail::model_json(pm).dump(2) << "\n";
      } else {
        detail::write_output(render_model(s), opt.out_path, out);
      }
      return kPass;
    }

    if (c_complex->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      if (m.kind != ModelKind::space)
        throw SemanticError("'complex' expects a space model");
      const TmsAlgebra a = complex_algebra(*m.space);
      if (json) {
        ParsedModel pm;
        pm.kind = ModelKind::algebra;
        pm.algebra = a;
        pm.names = tensym::detail::default_names(a.n(), {});
        out << detail::model_json(pm).dump(2) << "\n";
      } else {
        detail::write_output(render_model(a), opt.out_path, out);
      }
      return kPass;
    }

    if (c_round->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      const IsoCheck iso =
          m.kind == ModelKind::algebra ? sigma_iso(*m.algebra) : epsilon_iso(*m.space);
      if (json) {
        nlohmann::json j = detail::report_json(iso.report, m.names);
        j["command"] = "roundtrip";
        j["map"] = iso.map.map;
        out << j.dump(2) << "\n";
      } else {
        out << iso.report.subject << "\n";
        detail::print_report(out, iso.report, m.names);
        out << (iso.report.pass() ? "PASS" : "FAIL") << "\n";
      }
      return iso.report.pass() ? kPass : kCheckFailed;
    }

    if (c_cong->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      if (m.kind != ModelKind::algebra)
        throw SemanticError("'congruences' expects an algebra model");
      const TmsAlgebra& a = *m.algebra;
      std::vector<Congruence> direct, via_dual;
      if (opt.method != "dual") direct = congruences_bruteforce(a, opt.guard).elems;
      if (opt.method != "direct") {
        const DualContext ctx = make_dual_context(a);
        for (Mask y : tms_subsets(ctx.space, std::max(opt.guard, default_guards().space)))
          via_dual.push_back(theta_partition(ctx, y));
        std::sort(via_dual.begin(), via_dual.end(), congruence_canonical_less);
      }
      const auto& primary = opt.method == "dual" ? via_dual : direct;
      const bool match = opt.method != "both" || direct == via_dual;
      if (json) {
        nlohmann::json j{{"command", "congruences"},
                         {"method", opt.method},
                         {"count", primary.size()},
                         {"match", match}};
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : primary) arr.push_back(detail::blocks_text(c, m.names));
        j["congruences"] = arr;
        out << j.dump(2) << "\n";
      } else {
        out << primary.size() << " congruence(s)";
        if (opt.method == "both")
          out << (match ? ", direct and dual routes agree" : ", ROUTES DISAGREE");
        out << "\n";
        for (const auto& c : primary)
          out << "  " << detail::blocks_text(c, m.names) << "\n";
      }
      return match ? kPass : kCheckFailed;
    }

    if (c_verify->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      if (m.kind != ModelKind::algebra)
        throw SemanticError("'verify-t2' expects an algebra model");
      const AntiIsoReport rep =
          verify_anti_isomorphism(*m.algebra, opt.guard,
                                  std::max(opt.guard, default_guards().space));
      if (json) {
        nlohmann::json j = detail::report_json(rep.report, {});
        j["command"] = "verify-t2";
        j["congruences"] = rep.direct.size();
        j["tmsSubsets"] = rep.subsets.size();
        out << j.dump(2) << "\n";
      } else {
        out << rep.direct.size() << " congruences <-> " << rep.subsets.size()
            << " tms-subsets, "
            << (rep.report.pass() ? "anti-isomorphism verified"
                                  : "anti-isomorphism FAILED")
            << "\n";
        detail::print_report(out, rep.report, {});
      }
      return rep.report.pass() ? kPass : kCheckFailed;
    }

    if (c_enum->parsed()) {
      if (opt.ms.empty()) opt.ms = {1};
      const Corpus corpus = build_corpus(opt.max_size, opt.ms);
      if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        std::string index;
        for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
          const auto& e = corpus.entries[i];
          char stem[32];
          std::snprintf(stem, sizeof stem, "%04zu", i);
          const std::string sp = "space_" + std::string(stem) + ".mdl";
          const std::string al = "algebra_" + std::string(stem) + ".mdl";
          detail::write_output(render_model(e.space),
                               (std::filesystem::path(opt.out_dir) / sp).string(), out);
          detail::write_output(render_model(e.algebra),
                               (std::filesystem::path(opt.out_dir) / al).string(), out);
          index += sp + " " + al + " poset=" + std::to_string(e.poset_id) +
                   " decoration=" + std::to_string(e.decoration_id) +
                   " m=" + std::to_string(e.m) + "\n";
        }
        detail::write_output(index,
                             (std::filesystem::path(opt.out_dir) / "index.txt").string(),
                             out);
      }
      if (json) {
        nlohmann::json j{{"command", "enumerate"},
                         {"maxSize", opt.max_size},
                         {"degrees", opt.ms},
                         {"spaces", corpus.entries.size()}};
        out << j.dump(2) << "\n";
      } else {
        out << corpus.entries.size() << " space(s) with complex algebras";
        if (!opt.out_dir.empty()) out << " written to " << opt.out_dir;
        out << "\n";
      }
      return kPass;
    }

    if (c_dot->parsed()) {
      const ParsedModel m = detail::load_model(opt.file);
      const std::string text = m.kind == ModelKind::algebra
                                   ? render_dot(*m.algebra, m.names)
                                   : render_dot(*m.space, m.names);
      detail::write_output(text, opt.out_path, out);
      return kPass;
    }
  } catch (const SizeGuard& e) {
    err << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const InvalidAlgebra& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InvalidSpace& e) {
    err << "invalid space: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace tensym::cli
