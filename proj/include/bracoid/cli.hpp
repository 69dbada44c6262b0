#pragma once

// Subcommands of the `bracoid` tool. Each writes to the given streams and
// returns the exit code: 0 all checks pass, 1 a check failed, 2 bad input.

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracoid/descriptor.hpp"
#include "bracoid/io.hpp"

namespace bracoid::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

namespace detail {

inline std::string join(const WitnessList& w) {
  std::string out;
  for (const auto& s : w) out += (out.empty() ? "" : " ") + s;
  return out;
}

inline void print_report(std::ostream& out, const CheckReport& r) {
  for (const auto& p : r.results) {
    out << to_string(p.status) << "  " << p.property;
    if (p.witness) out << "  " << join(*p.witness);
    out << "\n";
  }
}

inline void print_verdicts(std::ostream& out, const std::vector<TheoremVerdict>& vs) {
  for (const auto& v : vs) {
    out << to_string(v.flag) << "  " << v.theorem;
    if (v.witness) out << "  " << join(*v.witness);
    out << "\n";
  }
}

inline bool any_counterexample(const std::vector<TheoremVerdict>& vs) {
  return std::any_of(vs.begin(), vs.end(),
                     [](const TheoremVerdict& v) { return v.flag == VerdictFlag::counterexample_to_theorem; });
}

inline int input_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << "\n";
  if (const auto* be = dynamic_cast<const Error*>(&e); be && !be->witness().empty()) {
    err << "  " << join(be->witness()) << "\n";
  }
  return kInputError;
}

inline CheckReport left_report(const SkewLeftBracoid& b) {
  CheckReport r = check_left_bracoid_axioms(b);
  if (r.ok()) r.append(check_left_identities(b));
  return r;
}

inline CheckReport right_report(const SkewRightBracoid& b) {
  CheckReport r = check_right_bracoid_axioms(b);
  if (r.ok()) r.append(check_right_identities(b));
  return r;
}

inline CheckReport two_sided_report(const TwoSidedSkewBracoid& t) {
  CheckReport r = check_two_sided_axioms(t);
  if (r.ok()) {
    r.append(check_left_identities(t.left()));
    r.append(check_right_identities(t.right()));
  }
  return r;
}

inline CheckReport brace_report(const SkewBrace& br) {
  CheckReport r;
  r.add("brace.eq1", to_witness(find_eq1_violation(br)));
  if (!r.ok()) return r;
  r.append(left_report(brace_to_left_bracoid(br)));
  r.append(check_brace_bridges(br));
  return r;
}

}  // namespace detail

/// Every applicable validator and checker for a loaded structure. Identities
/// are only checked once the defining axioms hold.
inline CheckReport verify_structure(const Structure& s) {
  struct Visitor {
    CheckReport operator()(const SkewLeftBracoid& b) const { return detail::left_report(b); }
    CheckReport operator()(const SkewRightBracoid& b) const { return detail::right_report(b); }
    CheckReport operator()(const TwoSidedSkewBracoid& t) const { return detail::two_sided_report(t); }
    CheckReport operator()(const SkewBrace& br) const { return detail::brace_report(br); }
  };
  return std::visit(Visitor{}, s);
}

inline std::vector<TheoremVerdict> two_sided_verdicts(const TwoSidedSkewBracoid& t) {
  const auto& right = t.right().action();
  return {check_theorem_two_sided(t), check_prop_action_beta(t.left(), right),
          check_prop_inverse_beta(t.left(), right), check_lau_converse(t.left(), right)};
}

/// Theorem-shaped statements applicable to a structure. One-sided bracoids
/// have none.
inline std::vector<TheoremVerdict> theorem_verdicts(const Structure& s) {
  if (const auto* t = std::get_if<TwoSidedSkewBracoid>(&s)) return two_sided_verdicts(*t);
  if (const auto* br = std::get_if<SkewBrace>(&s)) {
    std::vector<TheoremVerdict> out{check_rump_radical_ring(*br), check_lau_brace(*br)};
    if (!find_eq1_violation(*br) && brace_is_two_sided(*br)) {
      for (auto& v : two_sided_verdicts(brace_both_sided_bracoid(*br))) out.push_back(std::move(v));
    }
    return out;
  }
  return {};
}

inline int cmd_verify(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  CheckReport report;
  try {
    report = verify_structure(load_structure(path));
  } catch (const Error& e) {
    return detail::input_error(err, e);
  }
  if (json) {
    out << to_canonical_string(to_json(report));
  } else {
    detail::print_report(out, report);
    out << (report.ok() ? "ok" : "failed: " + std::to_string(report.failures())) << "\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

inline int cmd_example(std::size_t t, std::size_t w, std::size_t d, const std::optional<std::string>& out_path,
                       bool json, std::ostream& out, std::ostream& err) {
  std::optional<TwoSidedSkewBracoid> ex;
  try {
    ex = dihedral_example({t, w, d});
    if (out_path) store_structure(*ex, *out_path);
  } catch (const Error& e) {
    return detail::input_error(err, e);
  }
  const auto report = verify_structure(*ex);
  const auto verdicts = two_sided_verdicts(*ex);
  const bool abelian = is_abelian(ex->n_group());
  if (json) {
    Json j;
    j["params"] = {{"t", t}, {"w", w}, {"d", d}};
    j["orders"] = {{"G", ex->g_group().order()}, {"H", ex->h_group().order()}, {"N", ex->n_group().order()}};
    j["N_abelian"] = abelian;
    j["report"] = to_json(report);
    j["verdicts"] = to_json(verdicts);
    j["structure"] = to_json(*ex);
    out << to_canonical_string(j);
  } else {
    out << "|G| = " << ex->g_group().order() << "\n"
        << "|H| = " << ex->h_group().order() << "\n"
        << "|N| = " << ex->n_group().order() << "\n"
        << "N abelian: " << (abelian ? "yes" : "no") << "\n";
    detail::print_report(out, report);
    detail::print_verdicts(out, verdicts);
    if (out_path) out << "wrote " << *out_path << "\n";
  }
  return report.ok() && !detail::any_counterexample(verdicts) ? kOk : kCheckFailed;
}

struct EnumerateArgs {
  std::optional<std::string> g_spec;
  std::optional<std::string> n_spec;
  std::optional<std::string> h_spec;
  bool two_sided = false;
  bool up_to_iso = false;
  bool count_only = false;
  bool contains_example = false;
  bool braces = false;
  std::string strategy = "action";
  unsigned threads = 0;
};

namespace detail {

/// Parameter of a single-family descriptor such as "GT3", if it is one.
inline std::optional<std::size_t> family_parameter(const std::optional<std::string>& spec, std::string_view prefix) {
  if (!spec) return std::nullopt;
  const auto s = bracoid::detail::trim(*spec);
  if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = s.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  return bracoid::detail::parse_parameter(digits, s);
}

inline DihedralExampleParams example_params(const EnumerateArgs& a) {
  const auto d = family_parameter(a.n_spec, "D");
  const auto t = family_parameter(a.g_spec, "GT");
  const auto w = family_parameter(a.h_spec, "HW");
  if (!d || (a.g_spec && !t) || (a.h_spec && !w)) {
    throw Error(ErrorKind::InvalidParameter, "--contains-example needs --G GT<t>, --H HW<w> and --N D<d>");
  }
  return {t.value_or(*d), w.value_or(*d), *d};
}

template <class S>
Json enumeration_json(EnumerationResult<S> r, const EnumerateArgs& a, std::optional<bool> contains) {
  if (a.up_to_iso) r = dedupe_isomorphic(r);
  Json j = to_json(r, !a.count_only);
  if (contains) j["contains_example"] = *contains;
  return j;
}

}  // namespace detail

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  Json j;
  try {
    const auto caps = OrderCaps::from_env();
    EnumOptions opts{a.threads, caps};
    if (!a.n_spec) throw Error(ErrorKind::InvalidParameter, "--N is required");
    if (a.strategy != "action" && a.strategy != "gamma") {
      throw Error(ErrorKind::InvalidParameter, "--strategy must be 'action' or 'gamma'");
    }
    auto group = [&](const std::optional<std::string>& s) { return parse_group_descriptor(*s, caps.enumeration); };
    const auto n = group(a.n_spec);

    if (a.braces) {
      if (a.contains_example) throw Error(ErrorKind::InvalidParameter, "--contains-example does not apply to --braces");
      j = detail::enumeration_json(enumerate_braces(n, opts), a, std::nullopt);
    } else if (a.two_sided) {
      if (!a.g_spec || !a.h_spec) throw Error(ErrorKind::InvalidParameter, "--two-sided needs --G and --H");
      auto r = enumerate_two_sided(group(a.g_spec), group(a.h_spec), n, opts);
      std::optional<bool> c;
      if (a.contains_example) c = contains(r, dihedral_example(detail::example_params(a)));
      j = detail::enumeration_json(std::move(r), a, c);
    } else if (a.g_spec) {
      if (a.h_spec) throw Error(ErrorKind::InvalidParameter, "--H needs --two-sided when --G is given");
      const auto g = group(a.g_spec);
      auto r = a.strategy == "gamma" ? enumerate_left_bracoids_via_gamma(g, n, opts) : enumerate_left_bracoids(g, n, opts);
      std::optional<bool> c;
      if (a.contains_example) c = contains(r, dihedral_example(detail::example_params(a)).left());
      j = detail::enumeration_json(std::move(r), a, c);
    } else if (a.h_spec) {
      auto r = enumerate_right_bracoids(group(a.h_spec), n, opts);
      std::optional<bool> c;
      if (a.contains_example) c = contains(r, dihedral_example(detail::example_params(a)).right());
      j = detail::enumeration_json(std::move(r), a, c);
    } else {
      throw Error(ErrorKind::InvalidParameter, "give --G, --H or --braces");
    }
  } catch (const Error& e) {
    return detail::input_error(err, e);
  }
  out << to_canonical_string(j);
  return kOk;
}

inline int cmd_check_theorems(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  std::vector<TheoremVerdict> verdicts;
  try {
    verdicts = theorem_verdicts(load_structure(path));
  } catch (const Error& e) {
    return detail::input_error(err, e);
  }
  if (json) {
    out << to_canonical_string(to_json(verdicts));
  } else {
    detail::print_verdicts(out, verdicts);
    if (verdicts.empty()) out << "no applicable statements\n";
  }
  return detail::any_counterexample(verdicts) ? kCheckFailed : kOk;
}

/// Parses argv and dispatches. Usage errors exit 2, --help exits 0.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive checks and enumeration for skew bracoids and skew braces", "bracoid"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Check every axiom and identity of a structure file");
  verify->add_option("path", path, "structure JSON")->required();
  verify->add_flag("--json", json, "print the report as JSON");

  std::size_t t = 0, w = 0, d = 0;
  std::optional<std::string> out_path;
  auto* example = app.add_subcommand("example", "Build the dihedral two-sided example for (t, w, d)");
  example->add_option("t", t)->required();
  example->add_option("w", w)->required();
  example->add_option("d", d)->required();
  example->add_option("--out", out_path, "write the structure JSON here");
  example->add_flag("--json", json, "print the summary as JSON");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures on small groups");
  enumerate->add_option("--G", ea.g_spec, "left acting group descriptor");
  enumerate->add_option("--N", ea.n_spec, "group descriptor for N")->required();
  enumerate->add_option("--H", ea.h_spec, "right acting group descriptor");
  enumerate->add_flag("--two-sided", ea.two_sided, "pairs of left and right structures with commuting actions");
  enumerate->add_flag("--up-to-iso", ea.up_to_iso, "one representative per isomorphism class");
  enumerate->add_flag("--count-only", ea.count_only, "omit the structure list");
  enumerate->add_flag("--contains-example", ea.contains_example, "report whether the dihedral example is listed");
  enumerate->add_flag("--braces", ea.braces, "skew braces whose first group is N");
  enumerate->add_option("--strategy", ea.strategy, "left search: action or gamma")
      ->check(CLI::IsMember({"action", "gamma"}));
  enumerate->add_option("--threads", ea.threads, "worker threads, 0 for all cores");

  auto* theorems = app.add_subcommand("check-theorems", "Evaluate theorem statements on a structure file");
  theorems->add_option("path", path, "structure JSON")->required();
  theorems->add_flag("--json", json, "print verdicts as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  if (*verify) return cmd_verify(path, json, out, err);
  if (*example) return cmd_example(t, w, d, out_path, json, out, err);
  if (*enumerate) return cmd_enumerate(ea, out, err);
  return cmd_check_theorems(path, json, out, err);
}

}  // namespace bracoid::cli
