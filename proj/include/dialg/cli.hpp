#pragma once

// Command layer of the dialg tool. Each command takes the parsed bundle and
// returns an exit code plus the text to print: 0 pass, 1 semantic failure,
// 2 unreadable input.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dialg/dialg.hpp"
#include "dialg/io.hpp"

namespace dialg::cli {

using io::Json;

struct Options {
  std::string command;
  std::string input;  // bundle text
  std::optional<std::size_t> n;
  std::optional<std::size_t> order;
  bool pretty = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"trees",          "check",         "cohomology",
                                              "equivariant-cohomology", "extend", "extract",
                                              "cocycle-check",  "deform-check",  "infinitesimal",
                                              "equivalence-check", "rigidity"};
  return names;
}

namespace detail {

struct Outcome {
  bool ok = true;
  Json json;
  std::string summary;
};

inline std::string report_summary(const std::string& title, const CheckReport& r) {
  std::ostringstream out;
  out << title << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
  for (const auto& c : r.clauses) {
    out << "  [" << (c.passed ? "ok" : "xx") << "] " << c.clause;
    if (!c.passed) out << "  " << c.detail;
    out << "\n";
  }
  return out.str();
}

inline std::size_t need_n(const Options& o, const char* cmd) {
  if (!o.n) throw Error(ErrorKind::Parse, std::string(cmd) + " needs --n");
  return *o.n;
}

inline const io::Bundle& need_dialgebra(const io::Bundle& b) {
  if (!b.dialgebra) throw Error(ErrorKind::Parse, "bundle has no dialgebra");
  return b;
}

inline void check_base_caps(const io::Bundle& b) {
  check_resources(b.oriented(), b.config);
}

inline Outcome cmd_trees(const Options& o) {
  const std::size_t n = need_n(o, "trees");
  if (n > 6) throw Error(ErrorKind::Resource, "tree level " + std::to_string(n) + " exceeds 6");
  Outcome r;
  std::string lines;
  for (const auto& t : enumerate_trees(n)) lines += io::to_json(t).dump() + "\n";
  r.summary = lines;
  r.json = nullptr;
  return r;
}

inline Outcome cmd_check(const io::Bundle& b) {
  Outcome r;
  Json checks = Json::array();
  std::string summary;
  auto add = [&](const std::string& name, const CheckReport& rep) {
    Json item = io::to_json(rep);
    checks.push_back(Json{{"check", name}, {"ok", item["ok"]}, {"clauses", item["clauses"]}});
    summary += report_summary(name, rep);
    r.ok = r.ok && rep.ok();
  };
  if (b.has_group || !b.dialgebra) add("oriented group", check_oriented_group(b.group));
  if (b.dialgebra) {
    const auto OD = b.oriented();
    add("dialgebra", check_axioms(OD.base));
    add("oriented dialgebra", check_oriented_dialgebra(OD));
    if (b.cocycle) {
      CheckReport rep;
      const auto cc = is_degree1_cocycle(OD, *b.cocycle);
      if (cc.ok) rep.pass("degree-1 cocycle");
      else rep.fail("degree-1 cocycle", {}, "nonzero residual");
      add("cocycle", rep);
    }
    if (b.extension) add("extension", check_extension(OD, *b.extension));
    if (b.deformation) add("deformation", check_deformation(OD, *b.deformation));
    if (b.deformation2) add("deformation2", check_deformation(OD, *b.deformation2));
    if (b.deformation && b.deformation2 && b.equivalence) {
      add("equivalence", check_equivalence(OD, *b.deformation, *b.deformation2, *b.equivalence));
    }
  }
  r.json = Json{{"ok", r.ok}, {"checks", checks}};
  r.summary = summary;
  return r;
}

inline Outcome cmd_cohomology(const io::Bundle& b, const Options& o) {
  need_dialgebra(b);
  check_base_caps(b);
  const std::size_t n = need_n(o, "cohomology");
  const auto h = dialgebra_cohomology(*b.dialgebra, n, b.config);
  Json reps = Json::array();
  for (const auto& v : h.representatives) reps.push_back(io::to_json(v));
  Outcome r;
  r.json = Json{{"dim", h.dim}, {"representatives", reps}};
  r.summary = "dim HY^" + std::to_string(n) + " = " + std::to_string(h.dim) + "\n";
  return r;
}

inline Outcome cmd_equivariant(const io::Bundle& b, const Options& o) {
  need_dialgebra(b);
  const auto OD = b.oriented();
  const std::size_t n = need_n(o, "equivariant-cohomology");
  const auto h = equivariant_cohomology(OD, n, b.config);
  const TotalLayout layout(n, OD.group.order(), OD.dim());
  Json reps = Json::array();
  for (const auto& v : h.representatives) reps.push_back(io::total_element_to_json(split_total(layout, v)));
  Outcome r;
  r.json = Json{{"dim", h.dim}, {"representatives", reps}};
  r.summary = "dim H~^" + std::to_string(n) + "_G = " + std::to_string(h.dim) + "\n";
  return r;
}

inline Outcome cmd_extend(const io::Bundle& b) {
  need_dialgebra(b);
  if (!b.cocycle) throw Error(ErrorKind::Parse, "extend needs a cocycle");
  const auto OD = b.oriented();
  const auto E = build_extension(OD, *b.cocycle);
  Outcome r;
  r.json = io::base_to_json(OD);
  r.json["cocycle"] = io::to_json(*b.cocycle);
  r.json["extension"] = io::to_json(E);
  r.summary = "extension of dimension " + std::to_string(E.total.dim()) + " built\n" +
              report_summary("extension", check_extension(OD, E));
  return r;
}

inline Outcome cmd_extract(const io::Bundle& b) {
  need_dialgebra(b);
  if (!b.extension) throw Error(ErrorKind::Parse, "extract needs an extension");
  const auto OD = b.oriented();
  const Matrix s = b.section ? *b.section : canonical_section(OD.dim());
  const auto pair = extract_cocycle(OD, *b.extension, s);
  Outcome r;
  r.json = io::base_to_json(OD);
  r.json["cocycle"] = io::to_json(pair);
  r.summary = "extracted a degree-1 cocycle\n";
  return r;
}

inline Outcome cmd_cocycle_check(const io::Bundle& b) {
  need_dialgebra(b);
  if (!b.cocycle) throw Error(ErrorKind::Parse, "cocycle-check needs a cocycle");
  const auto cc = is_degree1_cocycle(b.oriented(), *b.cocycle);
  std::size_t nonzero = 0;
  for (const auto& x : cc.residual) nonzero += !is_zero(x);
  Outcome r;
  r.ok = cc.ok;
  r.json = Json{{"cocycle", cc.ok}, {"nonzero_residuals", nonzero}};
  r.summary = std::string(cc.ok ? "cocycle" : "not a cocycle") + " (" + std::to_string(nonzero) + " nonzero residuals)\n";
  return r;
}

/// Applies --order to every deformation section.
inline io::Bundle at_order(io::Bundle b, const Options& o) {
  if (!o.order) return b;
  if (b.deformation) b.deformation = truncate(*b.deformation, *o.order);
  if (b.deformation2) b.deformation2 = truncate(*b.deformation2, *o.order);
  if (b.equivalence) b.equivalence = truncate(*b.equivalence, *o.order);
  return b;
}

inline Outcome cmd_deform_check(const io::Bundle& b) {
  need_dialgebra(b);
  if (!b.deformation) throw Error(ErrorKind::Parse, "deform-check needs a deformation");
  const auto rep = check_deformation(b.oriented(), *b.deformation);
  Outcome r;
  r.ok = rep.ok();
  r.json = io::to_json(rep);
  r.summary = report_summary("deformation", rep);
  return r;
}

inline Outcome cmd_infinitesimal(const io::Bundle& b, const Options& o) {
  need_dialgebra(b);
  if (!b.deformation) throw Error(ErrorKind::Parse, "infinitesimal needs a deformation");
  const auto OD = b.oriented();
  const std::size_t n = o.n.value_or(1);
  const auto pair = infinitesimal(OD, *b.deformation, n);
  const bool ok = is_degree1_cocycle(OD, pair).ok;
  Outcome r;
  r.ok = ok;
  r.json = io::base_to_json(OD);
  r.json["cocycle"] = io::to_json(pair);
  r.json["is_cocycle"] = ok;
  r.summary = "infinitesimal of order " + std::to_string(n) + (ok ? " is a cocycle\n" : " is NOT a cocycle\n");
  return r;
}

inline Outcome cmd_equivalence(const io::Bundle& b) {
  need_dialgebra(b);
  if (!b.deformation || !b.deformation2 || !b.equivalence) {
    throw Error(ErrorKind::Parse, "equivalence-check needs deformation, deformation2 and equivalence");
  }
  const auto OD = b.oriented();
  const auto rep = check_equivalence(OD, *b.deformation, *b.deformation2, *b.equivalence);
  Outcome r;
  r.ok = rep.ok();
  r.json = io::to_json(rep);
  r.summary = report_summary("equivalence", rep);
  if (rep.ok() && b.equivalence->order >= 1) {
    const Matrix gamma = infinitesimals_cohomologous(OD, *b.deformation, *b.deformation2, *b.equivalence, b.config);
    r.json["certificate"] = io::to_json(gamma);
    r.summary += "infinitesimals are cohomologous (certificate psi_1)\n";
  }
  return r;
}

inline Outcome cmd_rigidity(const io::Bundle& b) {
  need_dialgebra(b);
  const auto rep = rigidity_probe(b.oriented(), b.config);
  Json cands = Json::array();
  for (const auto& c : rep.candidates) cands.push_back(io::to_json(c));
  Outcome r;
  r.json = Json{{"dim", rep.dim}, {"obstruction_space_trivial", rep.obstruction_space_trivial}, {"candidates", cands}};
  r.summary = rep.obstruction_space_trivial ? "dim H~^1_G = 0: obstruction space trivial\n"
                                            : "dim H~^1_G = " + std::to_string(rep.dim) + "\n";
  return r;
}

inline CommandResult emit(const Outcome& out, bool pretty) {
  if (out.json.is_null()) return {out.ok ? 0 : 1, out.summary};
  return {out.ok ? 0 : 1, pretty ? out.summary : out.json.dump() + "\n"};
}

}  // namespace detail

inline CommandResult run(const Options& o) {
  try {
    if (o.command == "trees") return detail::emit(detail::cmd_trees(o), o.pretty);
    const io::Bundle b = detail::at_order(io::bundle_from_text(o.input), o);
    detail::Outcome out;
    if (o.command == "check") out = detail::cmd_check(b);
    else if (o.command == "cohomology") out = detail::cmd_cohomology(b, o);
    else if (o.command == "equivariant-cohomology") out = detail::cmd_equivariant(b, o);
    else if (o.command == "extend") out = detail::cmd_extend(b);
    else if (o.command == "extract") out = detail::cmd_extract(b);
    else if (o.command == "cocycle-check") out = detail::cmd_cocycle_check(b);
    else if (o.command == "deform-check") out = detail::cmd_deform_check(b);
    else if (o.command == "infinitesimal") out = detail::cmd_infinitesimal(b, o);
    else if (o.command == "equivalence-check") out = detail::cmd_equivalence(b);
    else if (o.command == "rigidity") out = detail::cmd_rigidity(b);
    else throw Error(ErrorKind::Parse, "unknown command '" + o.command + "'");
    return detail::emit(out, o.pretty);
  } catch (const Error& e) {
    const int code = e.kind() == ErrorKind::Parse ? 2 : 1;
    const Json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    return {code, o.pretty ? std::string(e.what()) + "\n" : j.dump() + "\n"};
  }
}

}  // namespace dialg::cli
