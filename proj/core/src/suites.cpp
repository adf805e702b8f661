/*
 *   Copyright 2026 The ehresmann-lab developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ehresmann/suites.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ehresmann/census.hpp"
#include "ehresmann/embedding.hpp"
#include "ehresmann/enumerate.hpp"
#include "ehresmann/powerset.hpp"

namespace ehresmann {

InstanceCheck check_instance(const InstanceFile& f) {
  InstanceCheck out;
  std::ostringstream summary;
  switch (f.kind) {
    case InstanceKind::Category: {
      auto checked = validate_category(std::get<FiniteCategory>(f.body));
      if (!checked.ok()) {
        out.why = checked.violation();
        return out;
      }
      summary << "CATEGORY valid: " << checked.value().size() << " morphisms, "
              << checked.value().object_count() << " objects";
      break;
    }
    case InstanceKind::Semigroup: {
      auto checked = check_ehresmann(std::get<EhresmannSemigroup>(f.body));
      if (!checked.ok()) {
        out.why = checked.violation();
        return out;
      }
      summary << "SEMIGROUP valid: " << checked.value().size() << " elements, "
              << checked.value().projections.size() << " projections"
              << (checked.value().one ? ", monoid" : "");
      break;
    }
    case InstanceKind::Boolean: {
      const auto& b = std::get<BooleanInstance>(f.body);
      auto sg = check_ehresmann(b.sg);
      if (!sg.ok()) {
        out.why = sg.violation();
        return out;
      }
      auto m = check_boolean(std::move(sg).value(), down_rows(b.leq));
      if (!m.ok()) {
        out.why = m.violation();
        return out;
      }
      summary << "BOOLEAN valid: " << m.value().size() << " elements, "
              << atoms(m.value()).size() << " atoms";
      break;
    }
    case InstanceKind::Biaction: {
      auto checked = check_biaction(std::get<EhresmannBiaction>(f.body));
      if (!checked.ok()) {
        out.why = checked.violation();
        return out;
      }
      summary << "BIACTION valid: " << checked.value().size() << " morphisms, "
              << checked.value().objects() << " objects";
      break;
    }
    case InstanceKind::Map: {
      const auto& m = std::get<MapInstance>(f.body);
      summary << "MAP: " << m.pairs.size() << " pairs (" << m.source << " -> " << m.target
              << ")";
      break;
    }
  }
  out.ok = true;
  out.summary = summary.str();
  return out;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

// Rolls per-instance outcomes of one law into a single report line.
class Aggregate {
 public:
  Aggregate(std::string id, int witness_limit) : id_(std::move(id)), limit_(witness_limit) {}

  void record(bool pass, const std::string& witness = {}) {
    ++total_;
    if (pass) return;
    ++failures_;
    if (static_cast<int>(notes_.size()) < limit_) notes_.push_back(witness);
  }
  void record_na() { ++not_applicable_; }

  SuiteCheck finish() const {
    SuiteCheck check;
    check.id = id_;
    check.pass = failures_ == 0;
    std::ostringstream note;
    if (failures_ == 0) {
      note << total_ << " instances";
      if (not_applicable_ > 0) note << " (" << not_applicable_ << " not applicable)";
    } else {
      note << failures_ << " of " << total_ << " failed";
      for (const auto& w : notes_) note << "; " << w;
    }
    check.note = note.str();
    return check;
  }

 private:
  std::string id_;
  int limit_;
  long long total_ = 0;
  long long failures_ = 0;
  long long not_applicable_ = 0;
  std::vector<std::string> notes_;
};

Checked<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Violation v;
    v.law = "io/read";
    v.detail = "cannot read '" + path + "'";
    return v;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of("/\\");
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

void check_extra_files(SuiteReport& report, const SuiteOptions& options) {
  for (const auto& path : options.extra_files) {
    SuiteCheck check;
    check.id = "file/" + basename_of(path);
    auto text = read_file(path);
    if (!text.ok()) {
      check.pass = false;
      check.note = to_string(text.violation());
      report.checks.push_back(std::move(check));
      continue;
    }
    auto parsed = parse_instance(text.value());
    if (!parsed.ok()) {
      check.pass = false;
      check.note = to_string(parsed.violation());
      report.checks.push_back(std::move(check));
      continue;
    }
    auto verdict = check_instance(parsed.value());
    check.pass = verdict.ok;
    check.note = verdict.ok ? verdict.summary : to_string(verdict.why);
    report.checks.push_back(std::move(check));
    ++report.instances;
  }
}

long long cube(long long n) { return n * n * n; }

// The scale flag bounds category size for the enumeration-driven suites.
int scale_or(const SuiteOptions& options, int fallback, int cap) {
  int scale = options.max > 0 ? options.max : fallback;
  if (scale > cap) scale = cap;
  return scale;
}

void suite_axioms(SuiteReport& report, const SuiteOptions& options) {
  check_extra_files(report, options);
  const int scale = scale_or(options, 4, kMaxEnumerableMorphisms);
  report.scale = scale;

  Aggregate es("powerset/ehresmann-laws", options.witness_limit);
  Aggregate oe("powerset/boolean-laws", options.witness_limit);
  Aggregate closure("powerset/pi-closure", options.witness_limit);
  Aggregate pi_laws("bisections/ehresmann-laws", options.witness_limit);
  Aggregate pi_restriction("bisections/restriction", options.witness_limit);

  const auto cats = enumerate_categories(scale);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const auto tag = "C" + std::to_string(i);
    auto m = build_powerset_monoid(cats[i]);
    if (!m.ok()) {
      es.record(false, tag + ": " + to_string(m.violation()));
      continue;
    }
    report.volume += cube(m.value().size());
    auto sg = check_ehresmann(m.value().sg);
    es.record(sg.ok(), sg.ok() ? "" : tag + ": " + to_string(sg.violation()));
    if (!sg.ok()) continue;
    auto full = check_boolean(std::move(sg).value(), m.value().down);
    oe.record(full.ok(), full.ok() ? "" : tag + ": " + to_string(full.violation()));
    if (!full.ok()) continue;
    const auto closed = pi_product_closed(full.value());
    closure.record(closed.ok, closed.ok ? "" : tag + ": " + to_string(closed.why));

    const auto bisections = local_bisections(cats[i]);
    report.volume += cube(bisections.size());
    auto pi_sg = check_ehresmann(bisections.sg);
    pi_laws.record(pi_sg.ok(), pi_sg.ok() ? "" : tag + ": " + to_string(pi_sg.violation()));
    const auto restriction = is_restriction(bisections.sg);
    pi_restriction.record(restriction.ok,
                          restriction.ok ? "" : tag + ": " + to_string(restriction.why));
    ++report.instances;
  }
  report.checks.push_back(es.finish());
  report.checks.push_back(oe.finish());
  report.checks.push_back(closure.finish());
  report.checks.push_back(pi_laws.finish());
  report.checks.push_back(pi_restriction.finish());
}

void record_lemma_report(std::map<std::string, Aggregate>& aggregates, const LemmaReport& lemmas,
                         const std::string& tag, int witness_limit) {
  for (const auto& check : lemmas.checks) {
    auto it = aggregates.find(check.id);
    if (it == aggregates.end()) {
      it = aggregates.emplace(check.id, Aggregate(check.id, witness_limit)).first;
    }
    if (check.status == LemmaStatus::NotApplicable) {
      it->second.record_na();
    } else {
      it->second.record(check.status == LemmaStatus::Pass,
                        tag + ": " + to_string(check.why));
    }
  }
}

void suite_lemmas(SuiteReport& report, const SuiteOptions& options) {
  const int scale = scale_or(options, 4, kMaxEnumerableMorphisms);
  report.scale = scale;
  std::map<std::string, Aggregate> aggregates;

  const auto cats = enumerate_categories(scale);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const auto tag = "C" + std::to_string(i);
    auto m = build_powerset_monoid(cats[i]);
    if (!m.ok()) continue;
    report.volume += cube(m.value().size());
    record_lemma_report(aggregates, basic_lemma_report(m.value().sg), "P/" + tag,
                        options.witness_limit);
    record_lemma_report(aggregates,
                        {boolean_lemma_report(m.value()).checks}, "P/" + tag,
                        options.witness_limit);

    const auto bisections = local_bisections(cats[i]);
    report.volume += cube(bisections.size());
    record_lemma_report(aggregates, basic_lemma_report(bisections.sg), "PI/" + tag,
                        options.witness_limit);
    record_lemma_report(aggregates, restriction_lemma_report(bisections.sg), "PI/" + tag,
                        options.witness_limit);
    ++report.instances;
  }
  for (const auto& sl : enumerate_semilattices(4)) {
    const auto tag = "semilattice-" + std::to_string(sl.size());
    record_lemma_report(aggregates, basic_lemma_report(sl), tag, options.witness_limit);
    record_lemma_report(aggregates, restriction_lemma_report(sl), tag, options.witness_limit);
    ++report.instances;
  }
  for (auto& [id, agg] : aggregates) report.checks.push_back(agg.finish());
}

void suite_theorem_two(SuiteReport& report, const SuiteOptions& options) {
  const int scale = scale_or(options, 4, kMaxEnumerableMorphisms);
  report.scale = scale;
  Aggregate rebuilt("theorem-two/reconstruct", options.witness_limit);
  Aggregate isomorphic("theorem-two/isomorphic-to-source", options.witness_limit);
  Aggregate verified("theorem-two/phi-assertions", options.witness_limit);

  const auto cats = enumerate_categories(scale);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const auto tag = "C" + std::to_string(i);
    auto m = build_powerset_monoid(cats[i]);
    if (!m.ok()) {
      rebuilt.record(false, tag + ": " + to_string(m.violation()));
      continue;
    }
    report.volume += cube(m.value().size());
    auto phi = phi_isomorphism(m.value());
    if (!phi.ok()) {
      rebuilt.record(false, tag + ": " + to_string(phi.violation()));
      continue;
    }
    rebuilt.record(true);
    const auto iso = find_isomorphism(phi.value().category, cats[i]);
    isomorphic.record(iso.has_value(), tag + ": no isomorphism onto the source found");
    bool all = true;
    std::string first;
    for (const auto& assertion : phi.value().asserted) {
      if (!assertion.result.ok) {
        all = false;
        first = tag + ": " + to_string(assertion.result.why);
        break;
      }
    }
    verified.record(all, first);
    ++report.instances;
  }
  report.checks.push_back(rebuilt.finish());
  report.checks.push_back(isomorphic.finish());
  report.checks.push_back(verified.finish());
}

void suite_theorem_three(SuiteReport& report, const SuiteOptions& options) {
  const int scale = scale_or(options, 4, kMaxEnumerableMorphisms);
  report.scale = scale;
  Aggregate alpha("theorem-three/alpha-embedding", options.witness_limit);

  auto visit = [&](const EhresmannSemigroup& s, const std::string& tag) {
    auto embedding = embed_alpha(s);
    if (!embedding.ok()) {
      alpha.record(false, tag + ": " + to_string(embedding.violation()));
    } else {
      const auto& verdict = embedding.value().verdict;
      alpha.record(verdict.ok(), verdict.ok() ? "" : tag + ": " + to_string(verdict.why));
    }
    report.volume += cube(s.size());
    ++report.instances;
  };

  for (const auto& sl : enumerate_semilattices(4)) {
    const auto tag = "L" + std::to_string(sl.size());
    visit(sl, tag);
    const auto subs = ehresmann_subalgebras(sl);
    for (std::size_t j = 0; j < subs.size(); ++j) {
      visit(subs[j], tag + "/sub" + std::to_string(j));
    }
  }
  const auto cats = enumerate_categories(scale);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const auto tag = "PI/C" + std::to_string(i);
    const auto bisections = local_bisections(cats[i]);
    visit(bisections.sg, tag);
    if (bisections.size() > 16) continue;  // subalgebra sweep stays at mask width
    const auto subs = ehresmann_subalgebras(bisections.sg);
    for (std::size_t j = 0; j < subs.size(); ++j) {
      visit(subs[j], tag + "/sub" + std::to_string(j));
    }
  }
  report.checks.push_back(alpha.finish());
}

// Partial injections on {0..k-1}, counted directly: every assignment of
// targets-or-undefined, injective on the defined part. Independent of the
// bisection enumeration it cross-checks.
long long count_partial_injections(int k) {
  long long count = 0;
  std::vector<int> assign(k, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      ++count;
      return;
    }
    rec(i + 1);  // undefined at i
    for (int target = 0; target < k; ++target) {
      bool used = false;
      for (int j = 0; j < i; ++j) {
        if (assign[j] == target) used = true;
      }
      if (used) continue;
      assign[i] = target;
      rec(i + 1);
      assign[i] = -1;
    }
  };
  rec(0);
  return count;
}

void suite_theorem_four(SuiteReport& report, const SuiteOptions& options) {
  report.scale = 3;
  (void)options;

  for (int k = 2; k <= 3; ++k) {
    const std::string tag = "pair" + std::to_string(k);
    const auto g = pair_groupoid(k);
    const auto groupoid = is_groupoid(g);
    const auto bisections = local_bisections(g);
    report.volume += cube(bisections.size());
    ++report.instances;

    const long long expected = count_partial_injections(k);
    SuiteCheck count_check;
    count_check.id = "theorem-four/" + tag + "/bisection-count";
    count_check.pass = bisections.size() == expected;
    count_check.note = std::to_string(bisections.size()) + " bisections, counting oracle " +
                       std::to_string(expected);
    report.checks.push_back(std::move(count_check));

    std::vector<Index> inv(bisections.size());
    bool inv_ok = true;
    for (Index i = 0; i < bisections.size(); ++i) {
      std::uint64_t mask = 0;
      for (std::uint64_t rest = bisections.masks[i]; rest != 0; rest &= rest - 1) {
        mask |= std::uint64_t{1} << groupoid.inverse[__builtin_ctzll(rest)];
      }
      const auto it = bisections.index_of.find(mask);
      if (it == bisections.index_of.end()) {
        inv_ok = false;
        break;
      }
      inv[i] = it->second;
    }
    SuiteCheck inverse_check;
    inverse_check.id = "theorem-four/" + tag + "/inverse-laws";
    if (!inv_ok) {
      inverse_check.pass = false;
      inverse_check.note = "member-wise inverse escaped the bisections";
    } else {
      auto view = check_inverse(bisections.sg, inv);
      inverse_check.pass = view.ok();
      inverse_check.note =
          view.ok() ? std::to_string(bisections.size()) + " elements" : to_string(view.violation());
    }
    report.checks.push_back(std::move(inverse_check));
  }

  {
    // The bisections of the pair groupoid on two points, embedded through
    // the groupoid carried by their own restricted product.
    const auto g2 = pair_groupoid(2);
    const auto groupoid = is_groupoid(g2);
    const auto bisections = local_bisections(g2);
    std::vector<Index> inv(bisections.size());
    for (Index i = 0; i < bisections.size(); ++i) {
      std::uint64_t mask = 0;
      for (std::uint64_t rest = bisections.masks[i]; rest != 0; rest &= rest - 1) {
        mask |= std::uint64_t{1} << groupoid.inverse[__builtin_ctzll(rest)];
      }
      inv[i] = bisections.index_of.at(mask);
    }
    SuiteCheck check;
    check.id = "theorem-four/nice-embed-bisections";
    auto view = check_inverse(bisections.sg, inv);
    if (!view.ok()) {
      check.pass = false;
      check.note = to_string(view.violation());
    } else {
      const auto carrier = groupoid_from_inverse(view.value());
      std::vector<Index> identity(bisections.size());
      for (Index i = 0; i < bisections.size(); ++i) identity[i] = i;
      auto embedded =
          nice_embedding_from_groupoid(bisections.sg, carrier.groupoid, identity);
      if (!embedded.ok()) {
        check.pass = false;
        check.note = to_string(embedded.violation());
      } else {
        check.pass = embedded.value().ok();
        check.note = check.pass
                         ? "verdict true"
                         : to_string(embedded.value().nice.why);
      }
    }
    report.checks.push_back(std::move(check));
    ++report.instances;
  }

  {
    // A two-chain semilattice embedded into the pair groupoid on two points.
    EhresmannSemigroup chain;
    chain.names = {"bot", "top"};
    chain.mult = {0, 0, 0, 1};
    chain.projections = {0, 1};
    chain.star = {0, 1};
    chain.plus = {0, 1};
    SuiteCheck check;
    check.id = "theorem-four/nice-embed-semilattice";
    auto embedded = nice_embedding_from_groupoid(chain, pair_groupoid(2), {0, 1});
    if (!embedded.ok()) {
      check.pass = false;
      check.note = to_string(embedded.violation());
    } else {
      check.pass = embedded.value().ok();
      check.note = check.pass ? "verdict true" : to_string(embedded.value().nice.why);
    }
    report.checks.push_back(std::move(check));
    ++report.instances;
  }
}

void suite_roundtrip(SuiteReport& report, const SuiteOptions& options) {
  const int scale = scale_or(options, 4, kMaxEnumerableMorphisms);
  report.scale = scale;
  Aggregate valid("roundtrip/biaction-laws", options.witness_limit);
  Aggregate restored("roundtrip/tables-restored", options.witness_limit);
  Aggregate expansion("roundtrip/pseudoproduct-expansion", options.witness_limit);

  auto visit = [&](const EhresmannSemigroup& s, const std::string& tag) {
    ++report.instances;
    report.volume += cube(s.size());
    try {
      const auto biaction = biaction_from_ehresmann(s);
      valid.record(true);
      const auto back = semigroup_from_biaction(biaction);
      const bool same = back.mult == s.mult && back.star == s.star && back.plus == s.plus &&
                        back.projections == s.projections;
      restored.record(same, tag + ": tables differ after the round trip");
      const auto agreement = pseudoproduct_expansion_check(biaction);
      expansion.record(agreement.ok, agreement.ok ? "" : tag + ": " + to_string(agreement.why));
    } catch (const InternalError& e) {
      valid.record(false, tag + ": " + e.what());
    }
  };

  const auto cats = enumerate_categories(scale);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    auto m = build_powerset_monoid(cats[i]);
    if (!m.ok()) continue;
    visit(m.value().sg, "P/C" + std::to_string(i));
  }
  for (const auto& sl : enumerate_semilattices(4)) {
    visit(sl, "semilattice-" + std::to_string(sl.size()));
  }
  report.checks.push_back(valid.finish());
  report.checks.push_back(restored.finish());
  report.checks.push_back(expansion.finish());
}

void suite_census(SuiteReport& report, const SuiteOptions& options) {
  const int scale = scale_or(options, 3, 4);
  report.scale = scale;
  for (int k = 1; k <= scale; ++k) {
    const auto monoids = enumerate_boolean_monoids(k);
    report.instances += static_cast<long long>(monoids.size());

    long long closed_count = 0;
    std::vector<std::string> counterexamples;
    Aggregate rebuilt("census/atoms-" + std::to_string(k) + "/reconstruct-verified",
                      options.witness_limit);
    for (std::size_t i = 0; i < monoids.size(); ++i) {
      report.volume += cube(monoids[i].size());
      const auto closed = pi_product_closed(monoids[i]);
      if (closed.ok) {
        ++closed_count;
        auto phi = phi_isomorphism(monoids[i]);
        const bool ok = phi.ok() && phi.value().verified();
        rebuilt.record(ok, "B" + std::to_string(i) + ": reconstruction assertions failed");
      } else if (static_cast<int>(counterexamples.size()) < options.witness_limit) {
        counterexamples.push_back("B" + std::to_string(i) + " " + to_string(closed.why));
      }
    }

    SuiteCheck inventory;
    inventory.id = "census/atoms-" + std::to_string(k) + "/inventory";
    inventory.pass = true;
    std::ostringstream note;
    note << monoids.size() << " monoids, " << closed_count << " with closed partial isometries";
    if (!counterexamples.empty()) {
      note << "; open:";
      for (const auto& c : counterexamples) note << " [" << c << "]";
    }
    inventory.note = note.str();
    report.checks.push_back(std::move(inventory));
    report.checks.push_back(rebuilt.finish());
  }
}

}  // namespace

Checked<SuiteReport> run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = options.name;
  const auto start = std::chrono::steady_clock::now();

  if (options.name == "axioms") {
    suite_axioms(report, options);
  } else if (options.name == "lemmas") {
    suite_lemmas(report, options);
  } else if (options.name == "theorem-two") {
    suite_theorem_two(report, options);
  } else if (options.name == "theorem-three") {
    suite_theorem_three(report, options);
  } else if (options.name == "theorem-four") {
    suite_theorem_four(report, options);
  } else if (options.name == "roundtrip") {
    suite_roundtrip(report, options);
  } else if (options.name == "census") {
    suite_census(report, options);
  } else {
    Violation v;
    v.law = "suite/unknown";
    v.detail = "unknown suite '" + options.name +
               "'; expected axioms, lemmas, theorem-two, theorem-three, theorem-four, "
               "roundtrip or census";
    return v;
  }

  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string render_suite_text(const SuiteReport& report, bool include_timing) {
  std::ostringstream out;
  out << "# suite " << report.suite << " scale " << report.scale << "\n";
  for (const auto& check : report.checks) {
    out << (check.pass ? "PASS" : "FAIL") << " " << check.id;
    if (!check.note.empty()) out << "  " << check.note;
    out << "\n";
  }
  out << "# instances " << report.instances << "\n";
  out << "# volume " << report.volume << "\n";
  if (include_timing) out << "# wall_ms " << report.wall_ms << "\n";
  return out.str();
}

}  // namespace ehresmann
