#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reesalg/rees.hpp"

namespace reesalg {

enum class Verdict { Consistent, Violation, Inconclusive };

const char* verdict_name(Verdict v);

struct CheckerVerdict {
  std::string name;
  std::string instance;
  int n_max = 0;
  nlohmann::ordered_json quantities = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::Inconclusive;
  std::string explanation;

  nlohmann::ordered_json to_json() const;
};

struct AnalysisOptions {
  int n_max = 6;
  // A tail counts as stable once this many trailing values agree.
  int window = 3;
  std::uint64_t seed = 1;
  // Echoed into verdicts.
  std::string instance;
};

struct StableTail {
  int start = 0;  // first n of the constant tail
  int length = 0;
};

// Smallest N with values[N..] constant over at least `window` entries;
// values[i] belongs to n = first + i.
template <class T>
std::optional<StableTail> find_stable_tail(const std::vector<T>& values, int window, int first = 1) {
  if (values.empty() || window < 1) return std::nullopt;
  std::size_t i = values.size() - 1;
  while (i > 0 && values[i - 1] == values.back()) --i;
  int length = static_cast<int>(values.size() - i);
  if (length < window) return std::nullopt;
  return StableTail{first + static_cast<int>(i), length};
}

struct DepthSequence {
  std::vector<ExtendedInt> values;  // n = 1..n_max
  std::optional<StableTail> tail;

  // The constant tail value; empty without a tail.
  std::optional<ExtendedInt> tail_value() const;
  bool has_zero() const;
};

struct AssSequence {
  std::vector<AssociatedPrimes> values;  // n = 1..n_max
  std::optional<StableTail> tail;
};

nlohmann::ordered_json to_json(const ExtendedInt& v);
nlohmann::ordered_json to_json(const DepthSequence& seq);
nlohmann::ordered_json to_json(const Ring& ring, const AssSequence& seq);

// Windowed invariants of the Rees powers of one module and the checkers
// built on them. Per-n results are computed once and cached.
class Asymptotics {
 public:
  // DomainError unless 1 <= n_max and window >= 1.
  Asymptotics(const ReesContext& ctx, AnalysisOptions options = {});

  const ReesContext& context() const { return ctx_; }
  const AnalysisOptions& options() const { return options_; }

  // depth(G_n/E_n) for n = 1..n_max.
  const DepthSequence& depth_sequence() const;
  // depth(E_n) for n = 0..n_max from the presentation of each E_n.
  const std::vector<ExtendedInt>& depth_powers() const;
  // dim(G_n/E_n) for n = 1..n_max.
  const std::vector<int>& quotient_dimensions() const;
  // UnsupportedInstance unless every E_n has componentwise monomial relations.
  AssSequence ass_sequence() const;
  // (d + mu) - pd of k[x, y] / J.
  ExtendedInt depth_rees() const;

  // A linear form regular on every G_n/E_n in the window, or empty.
  std::optional<Polynomial> superficial_element() const;

  CheckerVerdict bar_reduce_check(const Polynomial& a, int n_max) const;
  CheckerVerdict burch_check() const;
  CheckerVerdict grade_and_depth_checks() const;
  CheckerVerdict cm_equality_check() const;
  CheckerVerdict cowsik_nori_check(const std::vector<Submodule>& supplied_primes = {}) const;

 private:
  CheckerVerdict verdict(const std::string& name) const;
  bool regular_in_window(const Polynomial& a) const;

  const ReesContext& ctx_;
  AnalysisOptions options_;

  mutable std::recursive_mutex mutex_;
  mutable std::optional<DepthSequence> depths_;
  mutable std::optional<std::vector<ExtendedInt>> power_depths_;
  mutable std::optional<std::vector<int>> dims_;
  mutable std::optional<ExtendedInt> depth_rees_;
};

}  // namespace reesalg
