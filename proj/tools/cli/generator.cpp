#include <numeric>
#include <random>

#include "cli/commands.hpp"
#include "qchaos/error.hpp"

namespace qchaos::cli {

namespace {

// Uniform draw from [0, bound) by rejection on the raw engine output; the
// std distributions are not specified bit-for-bit across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

ClauseSet generate_random_kcnf(const GenOptions& options) {
  if (options.n == 0) throw InputError("gen: n must be positive");
  if (options.k == 0 || options.k > options.n) throw InputError("gen: k must lie in 1..n");

  std::mt19937_64 rng(options.seed);
  std::vector<std::uint32_t> vars(options.n);
  std::iota(vars.begin(), vars.end(), 1U);

  std::vector<Clause> clauses;
  clauses.reserve(options.m);
  for (std::size_t c = 0; c < options.m; ++c) {
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    std::vector<Literal> lits;
    lits.reserve(options.k);
    for (std::uint32_t i = 0; i < options.k; ++i) {
      const auto j = i + static_cast<std::uint32_t>(draw_below(rng, options.n - i));
      std::swap(vars[i], vars[j]);
      lits.push_back({vars[i], (rng() & 1U) != 0});
    }
    clauses.emplace_back(std::move(lits));
  }
  return ClauseSet(options.n, std::move(clauses));
}

}  // namespace qchaos::cli
