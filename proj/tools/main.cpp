#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl2q/chartab.hpp"
#include "sl2q/decomposition.hpp"
#include "sl2q/groupsim.hpp"
#include "sl2q/render.hpp"

namespace {

using namespace sl2q;

constexpr std::int64_t kOracleQBound = 49;

GroupKind parse_group(const std::string& s) {
  if (s == "sl2" || s == "SL2" || s == "Sl2") return GroupKind::SL2;
  if (s == "psl2" || s == "PSL2" || s == "Psl2") return GroupKind::PSL2;
  throw CLI::ValidationError("--group", "expected sl2 or psl2, got '" + s + "'");
}

struct QRange {
  std::int64_t lo = 0, hi = 0;
};

QRange parse_range(const std::string& s) {
  QRange r;
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoll(s);
    } else {
      r.lo = std::stoll(s.substr(0, pos));
      r.hi = std::stoll(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--q", "expected N or MIN..MAX, got '" + s + "'");
  }
  if (r.lo < 4 || r.lo > r.hi)
    throw CLI::ValidationError("--q", "range must satisfy 4 <= min <= max");
  return r;
}

int cmd_decompose(const std::string& group, std::int64_t q,
                  const std::string& format, bool ascii) {
  WedderburnDecomposition w = decompose(parse_group(group), q);
  if (format == "json") {
    std::cout << decomposition_document(w).dump(2) << "\n";
  } else {
    std::cout << render_decomposition(w, {ascii}) << "\n";
    for (const auto& note : decomposition_notes(w))
      std::cout << "note: " << note << "\n";
  }
  return 0;
}

int cmd_count(const std::string& group, std::int64_t q,
              const std::string& format) {
  PrimePower pp = factor_prime_power(q);
  GroupKind kind = parse_group(group);
  if (format == "json")
    std::cout << counts_document(kind, pp).dump(2) << "\n";
  else
    std::cout << render_counts(kind, pp);
  return 0;
}

int cmd_table(const std::string& group, std::int64_t q) {
  PrimePower pp = factor_prime_power(q);
  std::cout << render_table(build_table(parse_group(group), pp));
  return 0;
}

int cmd_verify(const std::string& range_str, const std::string& level) {
  QRange range = parse_range(range_str);
  int checked = 0;
  std::vector<std::string> failures;
  auto note_fail = [&failures](std::int64_t q, GroupKind kind,
                               const std::string& what) {
    failures.push_back("q=" + std::to_string(q) + " " + group_name(kind) +
                       ": " + what);
  };

  for (std::int64_t q = range.lo; q <= range.hi; ++q) {
    PrimePower pp;
    try {
      pp = factor_prime_power(q);
    } catch (const std::domain_error&) {
      continue;
    }
    ++checked;
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      WedderburnDecomposition w = decompose(kind, q);
      AuditReport audit = dimension_audit(w);
      if (!audit.pass())
        note_fail(q, kind,
                  "dimension audit: sum " + std::to_string(audit.dim_sum) +
                      " vs order " + std::to_string(audit.group_order) +
                      ", count " + std::to_string(audit.component_count) +
                      " vs " + std::to_string(audit.expected_count));

      bool run_oracle = (level == "oracle" || level == "group") &&
                        q <= kOracleQBound &&
                        !(kind == GroupKind::SL2 && pp.even);
      if (run_oracle) {
        CharacterTable t = build_table(kind, pp);
        OrthoReport ortho = verify_orthogonality(t);
        if (!ortho.pass)
          note_fail(q, kind,
                    "orthogonality: " + std::to_string(ortho.failures.size()) +
                        " relations failed");
        MatchReport match = compare(w, oracle_decompose(kind, q));
        if (!match.match)
          for (const auto& s : match.mismatches)
            note_fail(q, kind, "oracle mismatch: " + s);
      }

      bool run_group = level == "group" &&
                       group_order(kind, pp) <= kGroupOrderBound &&
                       !(kind == GroupKind::SL2 && pp.even);
      if (run_group) {
        ClassCheckReport cc = verify_class_data(kind, pp);
        if (!cc.pass)
          for (const auto& s : cc.problems)
            note_fail(q, kind, "class data: " + s);
      }
    }
  }

  for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
  std::cout << checked << " prime powers checked, "
            << (failures.empty() ? "all pass"
                                 : std::to_string(failures.size()) + " failures")
            << "\n";
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wedderburn decompositions of the rational group algebras "
               "Q[SL2(q)] and Q[PSL2(q)]"};
  app.require_subcommand(1);

  std::string group, format = "text", level = "closed", qrange;
  std::int64_t q = 0;
  bool ascii = false;

  auto* dec = app.add_subcommand("decompose", "closed-form decomposition");
  dec->add_option("--group", group, "sl2 or psl2")->required();
  dec->add_option("--q", q, "prime power q >= 4")->required();
  dec->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  dec->add_flag("--ascii", ascii, "ASCII math rendering");

  auto* cnt = app.add_subcommand("count", "rational module counts and dimensions");
  cnt->add_option("--group", group, "sl2 or psl2")->required();
  cnt->add_option("--q", q, "prime power q >= 4")->required();
  cnt->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* tab = app.add_subcommand("table", "exact character table");
  tab->add_option("--group", group, "sl2 or psl2")->required();
  tab->add_option("--q", q, "prime power q >= 4")->required();

  auto* ver = app.add_subcommand("verify", "verification sweep");
  ver->add_option("--q", qrange, "q range, e.g. 4..199")->required();
  ver->add_option("--level", level, "closed, oracle, or group")
      ->check(CLI::IsMember({"closed", "oracle", "group"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(group, q, format, ascii);
    if (cnt->parsed()) return cmd_count(group, q, format);
    if (tab->parsed()) return cmd_table(group, q);
    if (ver->parsed()) return cmd_verify(qrange, level);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
