#include "qchaos/formula.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>

#include "qchaos/error.hpp"

namespace qchaos {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  for (const auto& lit : literals_) {
    if (lit.var == 0) throw InputError("literal variable index must be >= 1");
  }
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

Clause Clause::from_ints(std::span<const int> lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (int v : lits) {
    if (v == 0) throw InputError("literal 0 is not a variable");
    const auto mag = static_cast<std::uint32_t>(v < 0 ? -static_cast<long long>(v) : v);
    out.push_back({mag, v < 0});
  }
  return Clause(std::move(out));
}

std::uint32_t Clause::max_var() const noexcept {
  std::uint32_t m = 0;
  for (const auto& lit : literals_) m = std::max(m, lit.var);
  return m;
}

ClauseSet::ClauseSet(std::uint32_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ == 0) throw InputError("formula must have at least one variable");
  for (const auto& c : clauses_) {
    if (c.max_var() > num_vars_) {
      throw InputError("literal x" + std::to_string(c.max_var()) +
                       " exceeds num_vars " + std::to_string(num_vars_));
    }
  }
}

Assignment::Assignment(std::initializer_list<int> bits) {
  values_.reserve(bits.size());
  for (int b : bits) values_.push_back(b != 0);
}

Assignment Assignment::from_bits(std::uint32_t n, std::uint64_t bits) {
  if (n > 64) throw InputError("packed assignment holds at most 64 variables");
  std::vector<bool> v(n);
  for (std::uint32_t k = 1; k <= n; ++k) v[k - 1] = (bits >> (n - k)) & 1U;
  return Assignment(std::move(v));
}

std::uint64_t Assignment::to_bits() const {
  if (values_.size() > 64) throw InputError("assignment too long to pack");
  std::uint64_t bits = 0;
  for (bool b : values_) bits = (bits << 1) | (b ? 1U : 0U);
  return bits;
}

bool truth_of_literal(const Literal& lit, const Assignment& a) {
  if (lit.var == 0 || lit.var > a.size()) {
    throw InputError("variable x" + std::to_string(lit.var) +
                     " not covered by assignment of length " + std::to_string(a.size()));
  }
  return a[lit.var] != lit.negated;
}

bool truth_of_clause(const Clause& clause, const Assignment& a) {
  // Validate everything before short-circuiting so bad input never slips by.
  for (const auto& lit : clause.literals()) {
    if (lit.var > a.size()) {
      throw InputError("variable x" + std::to_string(lit.var) +
                       " not covered by assignment of length " + std::to_string(a.size()));
    }
  }
  return std::any_of(clause.literals().begin(), clause.literals().end(),
                     [&](const Literal& lit) { return truth_of_literal(lit, a); });
}

bool truth_of_clause_set(const ClauseSet& cs, const Assignment& a) {
  if (a.size() != cs.num_vars()) {
    throw InputError("assignment length " + std::to_string(a.size()) +
                     " != num_vars " + std::to_string(cs.num_vars()));
  }
  return std::all_of(cs.clauses().begin(), cs.clauses().end(),
                     [&](const Clause& c) { return truth_of_clause(c, a); });
}

IndexSetFamily to_index_sets(const ClauseSet& cs) {
  IndexSetFamily fam;
  fam.n = cs.num_vars();
  fam.entries.reserve(cs.num_clauses());
  for (const auto& clause : cs.clauses()) {
    IndexPair pair;
    for (const auto& lit : clause.literals()) {
      (lit.negated ? pair.negatives : pair.positives).push_back(lit.var);
    }
    fam.entries.push_back(std::move(pair));
  }
  return fam;
}

int eval_boolean_polynomial(const IndexSetFamily& fam, const Assignment& a) {
  if (a.size() != fam.n) {
    throw InputError("assignment length " + std::to_string(a.size()) +
                     " != polynomial arity " + std::to_string(fam.n));
  }
  auto x = [&](std::uint32_t idx) -> int {
    if (idx == 0 || idx > fam.n) throw InputError("index outside 1..n");
    return a[idx] ? 1 : 0;
  };
  int product = 1;
  for (const auto& entry : fam.entries) {
    int monomial = 1;
    for (auto s : entry.positives) monomial = (monomial * (1 - x(s))) % 2;
    for (auto t : entry.negatives) monomial = (monomial * x(t)) % 2;
    product = (product * ((1 + monomial) % 2)) % 2;
  }
  return product;
}

std::uint32_t enumeration_limit() {
  const char* env = std::getenv(kEnumerationLimitEnv);
  if (env == nullptr) return kDefaultEnumerationLimit;
  std::string_view text(env);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0 ||
      value > kMaxEnumerationLimit) {
    return kDefaultEnumerationLimit;
  }
  return value;
}

PackedFormula::PackedFormula(const ClauseSet& cs) : num_vars_(cs.num_vars()) {
  if (num_vars_ > kMaxEnumerationLimit) {
    throw ResourceError("packed formula", num_vars_, kMaxEnumerationLimit);
  }
  full_mask_ = (std::uint64_t{1} << num_vars_) - 1;
  clauses_.reserve(cs.num_clauses());
  for (const auto& clause : cs.clauses()) {
    Masks m{0, 0};
    for (const auto& lit : clause.literals()) {
      const std::uint64_t bit = std::uint64_t{1} << (num_vars_ - lit.var);
      (lit.negated ? m.negative : m.positive) |= bit;
    }
    clauses_.push_back(m);
  }
}

bool PackedFormula::satisfied_by(std::uint64_t bits) const noexcept {
  const std::uint64_t inverted = ~bits & full_mask_;
  for (const auto& c : clauses_) {
    if ((bits & c.positive) == 0 && (inverted & c.negative) == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t count_range(const PackedFormula& f, std::uint64_t begin, std::uint64_t end) {
  std::uint64_t r = 0;
  for (std::uint64_t x = begin; x < end; ++x) r += f.satisfied_by(x) ? 1 : 0;
  return r;
}

}  // namespace

std::uint64_t count_roots(const ClauseSet& cs, const CountOptions& options) {
  const std::uint32_t limit = std::min(options.limit, kMaxEnumerationLimit);
  if (cs.num_vars() > limit) throw ResourceError("count_roots", cs.num_vars(), limit);

  const PackedFormula packed(cs);
  const std::uint64_t total = std::uint64_t{1} << cs.num_vars();

  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::max(1U, workers);
  if (workers == 1 || total < (std::uint64_t{1} << 16)) return count_range(packed, 0, total);

  // Contiguous chunks; each worker writes its own slot, summed in order.
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = total / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = chunk * w;
    const std::uint64_t end = (w + 1 == workers) ? total : begin + chunk;
    threads.emplace_back([&, w, begin, end] { partial[w] = count_range(packed, begin, end); });
  }
  threads.clear();
  std::uint64_t r = 0;
  for (auto p : partial) r += p;
  return r;
}

}  // namespace qchaos
