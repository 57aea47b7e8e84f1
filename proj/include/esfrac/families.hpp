#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "esfrac/coverage_types.hpp"
#include "esfrac/egyptian.hpp"
#include "esfrac/formula.hpp"

namespace esfrac::families {

using formula::Binding;
using formula::CondPtr;
using formula::ExprPtr;

/// Raised when an in-domain binding produces a non-integer or non-positive
/// denominator or an inexact sum. Indicates a registry bug, never user error.
struct IdentityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

enum class ParamKind { Int, Rat, IntList, RatList };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Int;
  // Sampling/grid ranges. Int: value in [lo, hi]. IntList: length in
  // [len_lo, len_hi], entries in [lo, hi]. Rat: numerator in [lo, hi],
  // denominator in [1, rat_den_hi].
  long lo = 1, hi = 12;
  long len_lo = 1, len_hi = 3;
  long rat_den_hi = 4;
  /// Derived parameters are computed from earlier ones instead of sampled.
  ExprPtr derive;
};

struct Constraint {
  CondPtr cond;
  std::string label;
};

struct DenomSpec {
  ExprPtr expr;
  int sign = +1;
  /// When set, the term expands once per index 1..len(list)-spread_drop and
  /// formula::SpreadIndex inside expr refers to that index.
  std::string spread_list;
  long spread_drop = 0;
};

/// Pseudo-random source with a stable cross-platform output sequence.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}
  uint64_t next();
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  uint64_t state_;
};

struct FamilyDef {
  std::string id;          // registry entry id, e.g. "F32.4"
  std::string catalog_id;  // e.g. "F32"
  std::string title;       // one-line role
  std::string anchor;      // derivation label shown by `families list`
  std::string class_template;  // printable covered-class form; "" when none
  std::vector<ParamSpec> params;
  std::vector<Constraint> domain;
  ExprPtr target_num;  // must evaluate to a positive integer
  ExprPtr target_den;  // must evaluate to a positive integer
  std::vector<DenomSpec> denoms;
  std::optional<std::string> free_var;
  /// Optional generator for in-domain candidates; draws still pass through
  /// check_domain before acceptance.
  std::function<bool(Binding&, Rng&)> sampler;

  bool has_param(const std::string& name) const;
  const ParamSpec& param(const std::string& name) const;
};

class Registry {
 public:
  static const Registry& instance();

  const FamilyDef* find(const std::string& entry_id) const;
  const FamilyDef& entry(const std::string& entry_id) const;
  /// All entries whose id equals `id` or starts with `id + "."`.
  std::vector<const FamilyDef*> resolve(const std::string& id) const;
  const std::vector<FamilyDef>& entries() const { return entries_; }

 private:
  Registry();
  std::vector<FamilyDef> entries_;
};

struct DomainReport {
  bool ok = false;
  std::vector<std::string> violated;
};

/// Checks binding completeness, fills derived parameters, and evaluates every
/// domain constraint. Throws DomainError on an incomplete binding.
DomainReport check_domain(const FamilyDef& f, Binding b);

/// Evaluates the family at an in-domain binding into a verified DecompRecord.
/// Out-of-domain bindings are rejected with the violated predicates named.
DecompRecord evaluate(const FamilyDef& f, const Binding& b);
DecompRecord evaluate(const std::string& entry_id, const Binding& b);

/// Covered-n progression with every parameter except the free variable fixed:
/// scans admissible free-variable values, requires them to form an arithmetic
/// progression with the target denominator linear along it.
ResidueClass residue_signature(const FamilyDef& f, const Binding& partial);

struct VerifyFailure {
  std::string binding;
  std::string reason;
};

struct VerifyReport {
  std::string id;
  int requested = 0;
  int evaluated = 0;
  long draws = 0;
  bool gave_up = false;  // could not find enough in-domain samples
  std::vector<VerifyFailure> failures;
};

/// Draws `samples` seeded in-domain bindings (rejection sampling, capped at
/// 10^5 draws), evaluates each, and records any exactness failure.
VerifyReport verify_identity(const FamilyDef& f, int samples, uint64_t seed);

/// Exhaustive small-grid sweep: all integer parameters up to `cap` (list
/// lengths <= 2, list entries <= 4, rationals with small numerator and
/// denominator), bounded by `max_candidates` odometer steps.
VerifyReport grid_sweep(const FamilyDef& f, long cap = 6, long max_candidates = 200000);

std::string binding_to_string(const FamilyDef& f, const Binding& b);

/// Default uniform candidate generator (used when no custom sampler is set).
bool default_sample(const FamilyDef& f, Binding& b, Rng& rng);

}  // namespace esfrac::families
