#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "reesalg/report.hpp"

using namespace reesalg;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + out_path);
  out << text;
}

void print_error(const std::string& code, const std::string& message) {
  nlohmann::ordered_json j{{"schemaVersion", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
  std::cerr << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebras of modules: powers, depths, spreads and checks"};
  app.require_subcommand(1);

  std::optional<int> n_max;
  std::optional<int> window;
  std::optional<long long> characteristic;
  std::optional<std::uint64_t> seed;
  bool no_meta = false;
  std::string out_path;
  app.add_option("--n-max", n_max, "largest power n examined")->check(CLI::Range(1, 20));
  app.add_option("--window", window, "trailing values that must agree for a stable tail")->check(CLI::Range(1, 20));
  app.add_option("--char", characteristic, "field characteristic: 0 or a prime");
  app.add_option("--seed", seed, "seed for the random fallback of the superficial element search");
  app.add_flag("--no-meta", no_meta, "omit timings and tool metadata");
  app.add_option("--out", out_path, "write the output to this file");

  std::string instance_path;
  int power_n = 1;
  std::string command;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "power") {
      sub->add_option("n", power_n, "power")->required()->check(CLI::NonNegativeNumber);
    }
    sub->add_option("instance", instance_path, "instance file")->required();
    sub->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("USAGE_ERROR", e.what());
    return 2;
  }

  try {
    InstanceSpec spec = load_instance_file(instance_path);
    if (n_max) spec.n_max = *n_max;
    if (window) spec.window = *window;
    if (seed) spec.seed = *seed;
    if (characteristic) {
      if (*characteristic < 0 || *characteristic > 0x7fffffff ||
          (*characteristic != 0 && !is_prime(static_cast<std::uint64_t>(*characteristic)))) {
        throw ValidationError("--char " + std::to_string(*characteristic) + " is neither 0 nor a prime");
      }
      spec.characteristic = static_cast<std::uint32_t>(*characteristic);
    }
    auto inst = build_instance(spec);
    RunOptions options;
    options.meta = !no_meta;
    options.power_n = power_n;
    CommandResult result = run_command(*inst, command, options);
    emit(result.json.is_null() ? result.csv : result.json.dump(2) + "\n", out_path);
    return result.violation ? 1 : 0;
  } catch (const Error& err) {
    std::cerr << error_json(err).dump(2) << "\n";
    return exit_code(err.code());
  } catch (const std::exception& err) {
    print_error("INTERNAL_INCONSISTENCY", err.what());
    return 5;
  }
}
