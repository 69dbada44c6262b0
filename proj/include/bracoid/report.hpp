#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bracoid/error.hpp"

namespace bracoid {

/// nullopt when a property holds, otherwise its first counterexample.
using Witness = std::optional<WitnessList>;

enum class Status { pass, fail, not_applicable };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "fail";
}

struct PropertyResult {
  std::string property;
  Status status = Status::pass;
  Witness witness;
};

/// Outcome of a checker: one entry per named property.
struct CheckReport {
  std::vector<PropertyResult> results;

  void add(std::string property, Witness failure) {
    const Status s = failure ? Status::fail : Status::pass;
    results.push_back({std::move(property), s, std::move(failure)});
  }

  void add_not_applicable(std::string property) {
    results.push_back({std::move(property), Status::not_applicable, std::nullopt});
  }

  void append(const CheckReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }

  /// True iff no property failed.
  bool ok() const {
    return std::none_of(results.begin(), results.end(),
                        [](const PropertyResult& r) { return r.status == Status::fail; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [](const PropertyResult& r) { return r.status == Status::fail; }));
  }

  const PropertyResult* find(std::string_view property) const {
    for (const auto& r : results) {
      if (r.property == property) return &r;
    }
    return nullptr;
  }
};

inline Witness to_witness(const std::optional<Violation>& v) {
  if (!v) return std::nullopt;
  WitnessList out{"violation=" + std::string(to_string(v->kind))};
  out.insert(out.end(), v->witness.begin(), v->witness.end());
  return out;
}

enum class VerdictFlag { ok, counterexample_to_theorem, not_applicable };

constexpr std::string_view to_string(VerdictFlag f) {
  switch (f) {
    case VerdictFlag::ok: return "ok";
    case VerdictFlag::counterexample_to_theorem: return "counterexample_to_theorem";
    case VerdictFlag::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

/// Result of checking one theorem-shaped statement on a concrete structure.
/// The witness is the first failing statement (hypothesis or conclusion),
/// prefixed by "statement=<name>".
struct TheoremVerdict {
  std::string theorem;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::optional<bool> conclusion;
  Witness witness;
  VerdictFlag flag = VerdictFlag::not_applicable;

  bool hypotheses_satisfied() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.second; });
  }

  std::optional<bool> hypothesis(std::string_view name) const {
    for (const auto& [n, v] : hypotheses) {
      if (n == name) return v;
    }
    return std::nullopt;
  }
};

/// Accumulates hypotheses and conclusions, then settles the flag.
class VerdictBuilder {
 public:
  explicit VerdictBuilder(std::string theorem) { verdict_.theorem = std::move(theorem); }

  VerdictBuilder& hypothesis(std::string name, const Witness& failure) {
    verdict_.hypotheses.emplace_back(name, !failure);
    note(name, failure);
    return *this;
  }

  bool hypotheses_hold() const { return verdict_.hypotheses_satisfied(); }

  /// Conclusions are conjunctive; each failing one may carry a witness.
  VerdictBuilder& conclusion(std::string name, const Witness& failure) {
    verdict_.conclusion = verdict_.conclusion.value_or(true) && !failure;
    note(name, failure);
    return *this;
  }

  TheoremVerdict finish() && {
    if (!verdict_.hypotheses_satisfied()) {
      verdict_.flag = VerdictFlag::not_applicable;
    } else if (verdict_.conclusion.value_or(true)) {
      verdict_.flag = VerdictFlag::ok;
    } else {
      verdict_.flag = VerdictFlag::counterexample_to_theorem;
    }
    return std::move(verdict_);
  }

 private:
  void note(const std::string& name, const Witness& failure) {
    if (!failure || verdict_.witness) return;
    WitnessList w{"statement=" + name};
    w.insert(w.end(), failure->begin(), failure->end());
    verdict_.witness = std::move(w);
  }

  TheoremVerdict verdict_;
};

}  // namespace bracoid
