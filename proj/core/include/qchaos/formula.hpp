#pragma once

// CNF formulas in product-of-sums form, their truth evaluation, the mod-2
// Boolean polynomial encoding, and the exhaustive root counter.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qchaos {

/// A variable x_k (negated == false) or its negation.
struct Literal {
  std::uint32_t var = 1;  // 1-based
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Set of literals. Duplicates are collapsed on construction; a clause may
/// hold both x and its negation, and may be empty.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  /// Builds from DIMACS-style signed integers (-k is the negation of x_k).
  static Clause from_ints(std::span<const int> lits);
  static Clause from_ints(std::initializer_list<int> lits) {
    return from_ints(std::span<const int>(lits.begin(), lits.size()));
  }

  std::span<const Literal> literals() const noexcept { return literals_; }
  bool empty() const noexcept { return literals_.empty(); }
  std::size_t size() const noexcept { return literals_.size(); }
  std::uint32_t max_var() const noexcept;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;  // sorted, unique
};

/// Conjunction of clauses over variables 1..num_vars.
class ClauseSet {
 public:
  ClauseSet(std::uint32_t num_vars, std::vector<Clause> clauses);
  explicit ClauseSet(std::uint32_t num_vars) : ClauseSet(num_vars, {}) {}

  std::uint32_t num_vars() const noexcept { return num_vars_; }
  std::span<const Clause> clauses() const noexcept { return clauses_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }

  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;

 private:
  std::uint32_t num_vars_;
  std::vector<Clause> clauses_;
};

/// Truth values t(x_1), ..., t(x_n); values()[k - 1] belongs to x_k.
class Assignment {
 public:
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
  Assignment(std::initializer_list<int> bits);

  /// Decodes an n-bit integer with x_1 in the most significant position,
  /// matching the computational-basis order of the state vector.
  static Assignment from_bits(std::uint32_t n, std::uint64_t bits);

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](std::uint32_t var) const { return values_.at(var - 1); }  // 1-based
  std::uint64_t to_bits() const;

 private:
  std::vector<bool> values_;
};

/// One factor's index data: S holds positive-literal variables, T negated ones.
struct IndexPair {
  std::vector<std::uint32_t> positives;  // S_i
  std::vector<std::uint32_t> negatives;  // T_i

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// The family {S_1..S_N, T_1..T_N} indexing the polynomial
/// f(x) = prod_i (1 + prod_{a in S_i} (1 - x_a) prod_{b in T_i} x_b) mod 2.
struct IndexSetFamily {
  std::uint32_t n = 0;
  std::vector<IndexPair> entries;

  friend bool operator==(const IndexSetFamily&, const IndexSetFamily&) = default;
};

bool truth_of_literal(const Literal& lit, const Assignment& a);
bool truth_of_clause(const Clause& clause, const Assignment& a);
bool truth_of_clause_set(const ClauseSet& cs, const Assignment& a);

IndexSetFamily to_index_sets(const ClauseSet& cs);

/// Evaluates the mod-2 polynomial literally; returns 0 or 1.
int eval_boolean_polynomial(const IndexSetFamily& fam, const Assignment& a);

inline constexpr std::uint32_t kDefaultEnumerationLimit = 30;
inline constexpr std::uint32_t kMaxEnumerationLimit = 62;
inline constexpr const char* kEnumerationLimitEnv = "QCHAOS_ENUM_LIMIT";

/// Default limit, overridden by the QCHAOS_ENUM_LIMIT environment variable
/// when it holds an integer in [1, 62].
std::uint32_t enumeration_limit();

/// Bitmask view of a formula for fast evaluation of packed assignments
/// (x_1 at bit n-1, x_n at bit 0). Requires num_vars <= 62.
class PackedFormula {
 public:
  explicit PackedFormula(const ClauseSet& cs);

  std::uint32_t num_vars() const noexcept { return num_vars_; }
  bool satisfied_by(std::uint64_t bits) const noexcept;

 private:
  struct Masks {
    std::uint64_t positive;
    std::uint64_t negative;
  };
  std::uint32_t num_vars_;
  std::uint64_t full_mask_;
  std::vector<Masks> clauses_;
};

struct CountOptions {
  std::uint32_t limit = enumeration_limit();
  unsigned workers = 1;  // 0 means hardware concurrency
};

/// Number of satisfying assignments r, by enumerating all 2^n assignments.
/// Throws ResourceError when num_vars exceeds options.limit.
std::uint64_t count_roots(const ClauseSet& cs, const CountOptions& options = {});

}  // namespace qchaos
