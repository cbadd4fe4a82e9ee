#pragma once

// Loop algebras of cyclically graded algebras and their thin structure:
// covering, diamonds and their types, centralizer chains, periodicity.
//
// The loop algebra is never materialized. Its component of degree i is the
// subspace of S obtained from span{X, Y} by i - 1 rounds of bracketing with
// X and Y, and lives in the degree class i mod N of the grading of S.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlie/grading.hpp"

namespace modlie::thin {

using dp::AlgebraElement;
using ff::Field;
using ff::FieldElement;
using par::Exec;

struct LoopConfig {
  lie::AlgebraPtr alg;
  grading::GradedBasis basis;
  AlgebraElement X;
  AlgebraElement Y;
  std::int64_t max_degree = 0;
};

/// Picks X (label j = -1) and Y (label j = q - 2) among the degree-1 basis
/// vectors. Throws Error when degree 1 does not hold exactly these two.
LoopConfig make_loop_config(lie::AlgebraPtr alg, grading::GradedBasis basis, std::int64_t max_degree);

struct ComponentRecord {
  std::int64_t degree = 0;
  std::vector<AlgebraElement> basis_vectors;

  std::size_t dim() const { return basis_vectors.size(); }
};

/// Components of degrees 1..through; entry i - 1 holds degree i.
std::vector<ComponentRecord> expand_loop(const LoopConfig& cfg, std::int64_t through);

struct CheckResult {
  bool pass = true;
  std::optional<std::string> counterexample;
  bool informational = false;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// For every nonzero u in L_i, [u,X] and [u,Y] span L_{i+1} and L_{i+1} != 0.
/// Two-dimensional L_i is checked on one representative of each line.
CheckResult check_covering(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t i,
                           Exec exec = Exec::Parallel);

enum class DiamondKind { Genuine, Fake, Anomaly };

struct DiamondRecord {
  std::int64_t degree = 0;
  DiamondKind kind = DiamondKind::Genuine;
  std::optional<FieldElement> type;  // Genuine: nullopt is the infinite type; Fake: 0 or 1
  std::string description;           // Anomaly payload

  bool infinite() const { return kind == DiamondKind::Genuine && !type; }
  std::string type_text() const;
  friend bool operator==(const DiamondRecord&, const DiamondRecord&) = default;
};

std::string_view kind_name(DiamondKind k);

bool is_diamond_slot(std::int64_t degree, std::int64_t q);

/// Diamond record at degree i, or nullopt for a one-dimensional component
/// away from the diamond slots. Needs comps through degree i + 1.
std::optional<DiamondRecord> classify_component(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps,
                                                std::int64_t i, std::int64_t q);

/// Subspace of L_1 centralizing L_i, as coefficient pairs on (X, Y).
struct Centralizer {
  std::int64_t degree = 0;
  std::vector<std::pair<FieldElement, FieldElement>> basis;

  bool is_span_of_Y() const;
};

std::vector<Centralizer> centralizer_chain(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps,
                                           std::int64_t bound, Exec exec = Exec::Parallel);

/// L_{i+N} = L_i inside S for every i in [1, N] reached by the expansion.
CheckResult periodicity_check(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t period);

/// sum_{i=1}^{N} dim L_i = dim S.
CheckResult dimension_accounting(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t period);

/// [V,X,X] = 0 = [V,Y,Y] and [V,Y,X] = -2[V,X,Y] for V spanning L_{q-1}.
CheckResult normalization(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t q);

/// Expected diamond pattern: slots t(q-1)+1; finite exactly for t = 1 + m P
/// with type -1 + m * increment (fake when this is 0 or 1); infinite elsewhere.
struct PatternParams {
  std::int64_t q = 0;
  std::int64_t finite_period = 1;
  FieldElement increment;
};

struct ReportParams {
  std::uint32_t p = 0;
  unsigned n = 0;
  unsigned s = 0;
  std::string grading_case;
  std::string family;
  std::string field;
  std::string pi;
  std::string sigma;
  std::int64_t N = 0;
  std::int64_t q = 0;
  std::optional<std::string> nu;
  std::int64_t max_degree = 0;

  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

struct ComponentSummary {
  std::int64_t degree = 0;
  std::size_t dim = 0;

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct ThinReport {
  ReportParams params;
  std::vector<ComponentSummary> components;
  std::vector<DiamondRecord> diamonds;
  std::map<std::string, CheckResult> checks;

  /// True when every non-informational check passes.
  bool ok() const;
  friend bool operator==(const ThinReport&, const ThinReport&) = default;
};

/// Discrepancies between the report's diamonds and the expected pattern.
std::vector<std::string> verify_pattern(const ThinReport& report, const PatternParams& params);

/// Whether the second centralizer chain is promised for this p and q.
bool second_chain_applies(std::uint32_t p, std::int64_t q);

/// Full analysis; pattern == nullopt reports the pattern check as informational.
ThinReport analyze(const LoopConfig& cfg, ReportParams params, const std::optional<PatternParams>& pattern,
                   Exec exec = Exec::Parallel);

}  // namespace modlie::thin
