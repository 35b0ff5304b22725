#pragma once

// Command-line front end. `run_cli` returns the process exit code:
// 0 verified / printed, 1 verification failed, 2 bad input or hypothesis,
// 3 a cap was exceeded.

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "foldkit/foldkit.hpp"
#include "foldkit_presets.hpp"

namespace foldkit::cli {

enum Exit : int { kOk = 0, kFailed = 1, kInput = 2, kCap = 3 };

struct Options {
  std::string file;
  std::string preset;
  std::string field = "f2";
  std::size_t degree_cap = EngineCaps{}.degree_cap;
  std::size_t dim_cap = EngineCaps{}.dim_cap;
  std::size_t element_cap = 100000;
  bool json = false;
  std::vector<std::string> gens;
};

inline nlohmann::json load_input(const Options& o) {
  if (!o.preset.empty()) {
    for (const auto& [name, text] : presets::all)
      if (name == o.preset) return nlohmann::json::parse(text);
    std::string known;
    for (const auto& [name, text] : presets::all) known += (known.empty() ? "" : ", ") + std::string(name);
    fail(ErrorKind::InvalidInput, "unknown preset '" + o.preset + "' (known: " + known + ")");
  }
  if (o.file.empty()) fail(ErrorKind::InvalidInput, "no input file or --preset given");
  return io::read_file(o.file);
}

inline std::string instance_name(const Options& o) { return o.preset.empty() ? o.file : o.preset; }

inline VerifyCaps verify_caps(const Options& o) { return {{o.degree_cap, o.dim_cap}, o.element_cap}; }

inline std::string matrix_text(const std::vector<std::vector<int>>& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "]\n";
  }
  return out.str();
}

inline int cmd_fold(const Options& o, std::ostream& out) {
  const auto input = io::parse_quiver(load_input(o));
  const auto t = fold(input.quiver, input.action(std::min<std::size_t>(o.element_cap, GroupAction::kDefaultElementCap)));
  if (o.json) {
    out << io::cartan_to_json(t).dump() << "\n";
    return kOk;
  }
  out << "index:";
  for (const auto& i : t.index) out << " " << i;
  out << "\nC:\n" << matrix_text(t.C) << "D:";
  for (auto d : t.D) out << " " << d;
  out << "\nOmega:";
  for (const auto& [i, j] : t.omega) out << " (" << t.index[i] << "," << t.index[j] << ")";
  out << "\n";
  return kOk;
}

inline int print_report(const VerificationReport& r, const Options& o, std::ostream& out) {
  out << (o.json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.passed() ? kOk : kFailed;
}

inline int cmd_verify(const Options& o, bool theorem_b, std::ostream& out) {
  const auto input = io::parse_quiver(load_input(o));
  return std::visit(
      [&](const auto& field) {
        const auto r = theorem_b ? verify_theorem_b(input, field, verify_caps(o), instance_name(o))
                                 : verify_prop_a(input, field, verify_caps(o), instance_name(o));
        return print_report(r, o, out);
      },
      io::parse_field(o.field));
}

template <Field F>
AlgebraPtr<F> build_algebra(const nlohmann::json& spec, const F& field, const Options& o) {
  return normal_form_engine(io::parse_algebra_spec(spec, field), EngineCaps{o.degree_cap, o.dim_cap});
}

inline int cmd_algebra(const Options& o, std::ostream& out) {
  const auto spec = load_input(o);
  return std::visit(
      [&](const auto& field) {
        const auto a = build_algebra(spec, field, o);
        if (o.json) {
          out << io::algebra_to_json(*a).dump() << "\n";
        } else {
          out << "field " << field.descriptor() << ", dimension " << a->dimension() << "\nbasis:";
          for (const auto& l : a->labels()) out << " [" << l << "]";
          out << "\n";
        }
        return static_cast<int>(kOk);
      },
      io::parse_field(o.field));
}

inline int cmd_monoid(const Options& o, std::ostream& out) {
  const auto spec = load_input(o);
  return std::visit(
      [&](const auto& field) {
        const auto a = build_algebra(spec, field, o);
        const auto& vertices = a->normal_form()->presentation.quiver.vertices();
        const auto all = vertex_ideals(a);
        std::vector<std::string> labels = o.gens.empty() ? vertices : o.gens;
        std::vector<std::decay_t<decltype(all.front())>> gens;
        for (const auto& l : labels) {
          auto it = std::find(vertices.begin(), vertices.end(), l);
          if (it == vertices.end()) fail(ErrorKind::UnknownLabel, "no vertex '" + l + "'");
          gens.push_back(all[static_cast<std::size_t>(it - vertices.begin())]);
        }
        const auto m = monoid_closure(a, labels, gens, o.element_cap);
        if (o.json) {
          out << io::monoid_to_json(m).dump() << "\n";
        } else {
          out << "monoid of " << m.size() << " ideals generated by";
          for (const auto& l : labels) out << " " << l;
          out << "\n";
          for (std::size_t k = 0; k < m.size(); ++k)
            out << "  " << m.word_label(k) << "  dim " << m.elements[k].dimension()
                << (m.elements[k].is_zero() ? "  (zero ideal)" : "") << "\n";
        }
        return static_cast<int>(kOk);
      },
      io::parse_field(o.field));
}

/// Accepts a Cartan triple, an algebra spec carrying one, or a quiver.
inline WeylGroup weyl_from_json(const nlohmann::json& j, std::size_t cap) {
  if (j.contains("C")) {
    auto t = io::parse_cartan(j);
    return WeylGroup(t.C, t.index, cap);
  }
  if (j.contains("cartan")) {
    auto t = io::parse_cartan(j.at("cartan"));
    return WeylGroup(t.C, t.index, cap);
  }
  if (j.contains("quiver")) return WeylGroup::of_quiver(io::parse_bare_quiver(j.at("quiver")), cap);
  if (j.contains("vertices")) return WeylGroup::of_quiver(io::parse_bare_quiver(j), cap);
  fail(ErrorKind::InvalidInput, "expected a Cartan triple or a quiver");
}

inline int cmd_weyl(const Options& o, std::ostream& out) {
  const auto w = weyl_from_json(load_input(o), o.element_cap);
  const auto report = io::weyl_to_json(w);
  if (o.json) {
    out << report.dump() << "\n";
    return kOk;
  }
  out << "order " << w.order() << "\nlength histogram:";
  for (auto n : w.length_histogram()) out << " " << n;
  out << "\nlongest element:";
  for (const auto& l : report["longest_element"]) out << " " << l.get<std::string>();
  out << "\nrelations:\n";
  bool ok = true;
  for (const auto& r : report["relations"]) {
    out << "  " << r["i"].get<std::string>() << "," << r["j"].get<std::string>() << " order " << r["order"]
        << " group " << (r["group_relation"].get<bool>() ? "ok" : "FAIL") << " monoid "
        << (r["monoid_relation"].get<bool>() ? "ok" : "FAIL") << "\n";
    ok = ok && r["group_relation"].get<bool>() && r["monoid_relation"].get<bool>();
  }
  return ok ? kOk : kFailed;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"foldkit: preprojective algebras, quiver folding and ideal monoids"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "input JSON file");
    sub->add_option("--preset", o.preset, "bundled input by name");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--element-cap", o.element_cap, "cap on group and monoid sizes");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "f2, f3, fN (N prime) or q");
    sub->add_option("--degree-cap", o.degree_cap, "completion degree cap");
    sub->add_option("--dim-cap", o.dim_cap, "normal-word count cap");
  };

  auto* fold_cmd = app.add_subcommand("fold", "fold a quiver with group action into a Cartan triple");
  add_input(fold_cmd);
  auto* verify = app.add_subcommand("verify", "run a verification pipeline");
  verify->require_subcommand(1);
  auto* prop_a = verify->add_subcommand("prop-a", "folding square for ideal monoids");
  add_input(prop_a);
  add_engine(prop_a);
  auto* theorem_b = verify->add_subcommand("theorem-b", "finite consequences of the skew group Morita equivalence");
  add_input(theorem_b);
  add_engine(theorem_b);
  auto* algebra = app.add_subcommand("algebra", "normal-word basis and structure constants");
  add_input(algebra);
  add_engine(algebra);
  auto* monoid = app.add_subcommand("monoid", "ideal monoid generated by vertex ideals");
  add_input(monoid);
  add_engine(monoid);
  monoid->add_option("--gens", o.gens, "vertex labels (default: all)")->delimiter(',');
  auto* weyl = app.add_subcommand("weyl", "Weyl group report");
  add_input(weyl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (fold_cmd->parsed()) return cmd_fold(o, out);
    if (prop_a->parsed()) return cmd_verify(o, false, out);
    if (theorem_b->parsed()) return cmd_verify(o, true, out);
    if (algebra->parsed()) return cmd_algebra(o, out);
    if (monoid->parsed()) return cmd_monoid(o, out);
    if (weyl->parsed()) return cmd_weyl(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.is_cap()) return kCap;
    if (fold_cmd->parsed() && (e.kind() == ErrorKind::NonIntegralFold || e.kind() == ErrorKind::MixedOrientation))
      return kCap;
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

}  // namespace foldkit::cli
