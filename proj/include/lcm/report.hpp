#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcm/model.hpp"

namespace lcm {

/// A model under a scheduler, e.g. LUMI^S.
struct Variant {
  ModelTag model = ModelTag::kOblot;
  Scheduler scheduler = Scheduler::kFsync;

  std::string str() const;
  static Variant parse(std::string_view text);
  bool operator==(const Variant&) const = default;
};

inline constexpr int kVariantCount = 12;
/// Index of a variant in report order (models outer, F/S/A inner).
int variant_index(const Variant& v);
Variant variant_at(int index);

struct LemmaVerdict {
  std::string problem;
  Variant variant;
  bool solvable = false;
  std::string source;
};

/// `<problem> <MODEL>^<F|S|A> solvable|unsolvable [# source]`, one per line.
std::vector<LemmaVerdict> parse_verdicts(std::string_view text);
std::string to_text(const std::vector<LemmaVerdict>& verdicts);

enum class Relation { kEquivalent, kGreater, kLess, kIncomparable, kUnresolved };

std::string_view symbol(Relation r);

/// `problem` is solvable in the column variant's side and unsolvable in the
/// other, each fact traced back to an input verdict.
struct Separation {
  std::string problem;
  int solvable_input = -1;
  int unsolvable_input = -1;
};

struct ReportCell {
  Relation relation = Relation::kUnresolved;
  /// Row >= column by the dominance rules and axioms.
  bool row_ge = false;
  /// Column >= row.
  bool col_ge = false;
  /// Why row is not >= column, and why column is not >= row.
  std::optional<Separation> row_not_ge;
  std::optional<Separation> col_not_ge;
};

/// Solvability of one problem in one variant after closure.
struct Solvability {
  std::optional<bool> solvable;
  /// Input verdict the fact derives from.
  int input = -1;
};

struct RelationReport {
  std::vector<LemmaVerdict> inputs;
  std::vector<std::string> problems;
  /// [problem][variant]
  std::vector<std::array<Solvability, kVariantCount>> solvability;
  /// [row][column]: relation of the row variant to the column variant.
  std::array<std::array<ReportCell, kVariantCount>, kVariantCount> cells;

  const ReportCell& cell(const Variant& row, const Variant& col) const {
    return cells[variant_index(row)][variant_index(col)];
  }
  /// Every closed solvability fact as a verdict (sources name the input used).
  std::vector<LemmaVerdict> derived_verdicts() const;
  std::string to_text() const;
};

/// X >= Y facts that hold with no verdicts at all: scheduler dominance,
/// model inclusion, and the two imported equivalences.
std::array<std::array<bool, kVariantCount>, kVariantCount> axiomatic_dominance();

/// Closes the verdicts under the dominance rules and derives every relation
/// they determine. Throws InvariantError on contradictory inputs.
RelationReport build_report(const std::vector<LemmaVerdict>& verdicts);

}  // namespace lcm
