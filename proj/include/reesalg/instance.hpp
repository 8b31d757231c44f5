#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "reesalg/rees.hpp"

namespace reesalg {

// A hand-written problem description:
//
//   [ring]
//   char = 32003          # 0 for the rationals
//   vars = x, y
//   grading = 1, 1        # optional, all ones by default
//
//   [module]
//   name = maximal-ideal
//   rank = 1
//   gen = x               # one line per generator, entries comma separated
//   gen = y
//
//   [options]
//   n_max = 6
//   window = 3
//   max_degree = 64
//   seed = 1
//   prime = x, y          # optional, repeatable: generators of a prime ideal
struct InstanceSpec {
  std::string name = "instance";
  std::uint32_t characteristic = Field::kDefaultPrime;
  std::vector<std::string> variables;
  std::vector<int> weights;
  int rank = 1;
  std::vector<std::vector<std::string>> generators;

  int n_max = 6;
  int window = 3;
  int max_degree = 64;
  std::uint64_t seed = 1;
  std::vector<std::vector<std::string>> primes;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// ParseError (with line and column) on malformed text, ValidationError on
// values out of range. Polynomial entries come back in canonical form.
InstanceSpec parse_instance(std::string_view text);
InstanceSpec load_instance_file(const std::string& path);
std::string print_instance(const InstanceSpec& spec);

// The ring, the module and any supplied primes built from a spec.
struct Instance {
  InstanceSpec spec;
  std::shared_ptr<const Ring> ring;
  std::unique_ptr<ReesContext> context;
  std::vector<Submodule> primes;
};

// Also checks column-gradedness and E != G.
std::unique_ptr<Instance> build_instance(const InstanceSpec& spec);

}  // namespace reesalg
