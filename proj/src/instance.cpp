#include "reesalg/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <regex>
#include <sstream>

#include "reesalg/error.hpp"

namespace reesalg {

namespace {

struct Entry {
  std::string text;
  int column = 1;  // 1-based column of text in its line
};

struct Line {
  int number = 0;
  int value_column = 1;
  std::string value;
};

std::string_view trim(std::string_view s, int* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += static_cast<int>(b);
  return s.substr(b, e - b);
}

std::vector<Entry> split_list(const Line& line) {
  std::vector<Entry> out;
  std::size_t start = 0;
  const std::string& v = line.value;
  while (true) {
    std::size_t comma = v.find(',', start);
    std::string_view piece = std::string_view(v).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int col = line.value_column + static_cast<int>(start);
    std::string_view t = trim(piece, &col);
    if (t.empty()) throw ParseError("empty list entry", line.number, col);
    out.push_back(Entry{std::string(t), col});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

long long parse_integer(const Line& line, long long lo, long long hi, const std::string& key) {
  const std::string& v = line.value;
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    throw ParseError(key + " expects an integer", line.number, line.value_column);
  }
  if (used != v.size()) throw ParseError(key + " expects an integer", line.number, line.value_column + static_cast<int>(used));
  if (x < lo || x > hi) {
    throw ValidationError(key + " = " + v + " on line " + std::to_string(line.number) + " is outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x;
}

Polynomial parse_entry(const Ring& ring, const Entry& entry, int line) {
  try {
    return ring.parse(entry.text, line);
  } catch (const ParseError& err) {
    throw ParseError(err.what(), line, entry.column + err.column() - 1);
  }
}

using Section = std::map<std::string, std::vector<Line>>;

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"ring", {"char", "vars", "grading"}},
      {"module", {"name", "rank", "gen"}},
      {"options", {"n_max", "window", "max_degree", "seed", "prime"}},
  };
  return keys;
}

bool repeatable(const std::string& key) { return key == "gen" || key == "prime"; }

}  // namespace

InstanceSpec parse_instance(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    int col = 1;
    std::string_view line = trim(raw, &col);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", number, col);
      std::string name(trim(line.substr(1, line.size() - 2)));
      if (!known_keys().count(name)) throw ParseError("unknown section [" + name + "]", number, col);
      if (sections.count(name)) throw ParseError("duplicate section [" + name + "]", number, col);
      sections[name];
      current = name;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", number, col);
    if (current.empty()) throw ParseError("key outside of any section", number, col);
    std::string key(trim(line.substr(0, eq)));
    const auto& allowed = known_keys().at(current);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError("unknown key " + key + " in [" + current + "]", number, col);
    }
    int value_col = col + static_cast<int>(eq) + 1;
    std::string value(trim(line.substr(eq + 1), &value_col));
    auto& lines = sections[current][key];
    if (!lines.empty() && !repeatable(key)) throw ParseError("duplicate key " + key, number, col);
    lines.push_back(Line{number, value_col, value});
  }

  auto single = [&](const std::string& section, const std::string& key) -> const Line* {
    auto s = sections.find(section);
    if (s == sections.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second.front();
  };
  auto all = [&](const std::string& section, const std::string& key) {
    std::vector<Line> out;
    if (auto s = sections.find(section); s != sections.end()) {
      if (auto k = s->second.find(key); k != s->second.end()) out = k->second;
    }
    return out;
  };

  InstanceSpec spec;
  if (!sections.count("ring")) throw ParseError("missing [ring] section", number, 1);

  if (const Line* l = single("ring", "char")) {
    long long c = parse_integer(*l, 0, std::numeric_limits<std::int32_t>::max(), "char");
    if (c != 0 && !is_prime(static_cast<std::uint64_t>(c))) {
      throw ValidationError("char = " + l->value + " is neither 0 nor a prime");
    }
    spec.characteristic = static_cast<std::uint32_t>(c);
  }
  static const std::regex identifier("^[A-Za-z][A-Za-z0-9_]*$");
  if (const Line* l = single("ring", "vars")) {
    if (!l->value.empty()) {
      for (const auto& e : split_list(*l)) {
        if (!std::regex_match(e.text, identifier)) {
          throw ParseError("invalid variable name " + e.text, l->number, e.column);
        }
        spec.variables.push_back(e.text);
      }
    }
  } else {
    throw ParseError("[ring] needs vars", number, 1);
  }
  if (const Line* l = single("ring", "grading")) {
    if (!l->value.empty()) {
      for (const auto& e : split_list(*l)) {
        Line item{l->number, e.column, e.text};
        spec.weights.push_back(static_cast<int>(parse_integer(item, 1, 255, "grading")));
      }
    }
    if (spec.weights.size() != spec.variables.size()) {
      throw ValidationError("grading lists " + std::to_string(spec.weights.size()) + " weights for " +
                            std::to_string(spec.variables.size()) + " variables");
    }
  } else {
    spec.weights.assign(spec.variables.size(), 1);
  }

  if (!sections.count("module")) throw ParseError("missing [module] section", number, 1);
  if (const Line* l = single("module", "name")) {
    if (l->value.empty()) throw ParseError("empty name", l->number, l->value_column);
    spec.name = l->value;
  }
  if (const Line* l = single("module", "rank")) {
    spec.rank = static_cast<int>(parse_integer(*l, 1, 64, "rank"));
  } else {
    throw ParseError("[module] needs rank", number, 1);
  }

  if (const Line* l = single("options", "n_max")) spec.n_max = static_cast<int>(parse_integer(*l, 1, 20, "n_max"));
  if (const Line* l = single("options", "window")) spec.window = static_cast<int>(parse_integer(*l, 1, 20, "window"));
  if (const Line* l = single("options", "max_degree")) {
    spec.max_degree = static_cast<int>(parse_integer(*l, 1, 255, "max_degree"));
  }
  if (const Line* l = single("options", "seed")) {
    spec.seed = static_cast<std::uint64_t>(parse_integer(*l, 0, std::numeric_limits<long long>::max(), "seed"));
  }

  RingOptions ropts;
  ropts.max_degree = spec.max_degree;
  auto ring = Ring::make(Field(spec.characteristic), spec.variables, spec.weights, ropts);

  auto gens = all("module", "gen");
  if (gens.empty()) throw ParseError("[module] needs at least one gen", number, 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto entries = split_list(gens[j]);
    if (static_cast<int>(entries.size()) != spec.rank) {
      throw ValidationError("generator " + std::to_string(j + 1) + " on line " + std::to_string(gens[j].number) +
                            " has " + std::to_string(entries.size()) + " entries, expected rank " +
                            std::to_string(spec.rank));
    }
    std::vector<std::string> row;
    for (const auto& e : entries) row.push_back(parse_entry(*ring, e, gens[j].number).to_string());
    spec.generators.push_back(std::move(row));
  }
  for (const auto& l : all("options", "prime")) {
    std::vector<std::string> row;
    for (const auto& e : split_list(l)) row.push_back(parse_entry(*ring, e, l.number).to_string());
    spec.primes.push_back(std::move(row));
  }
  return spec;
}

InstanceSpec load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string print_instance(const InstanceSpec& spec) {
  auto join = [](const auto& items) {
    std::ostringstream out;
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : "") << items[i];
    return out.str();
  };
  std::ostringstream out;
  out << "[ring]\n";
  out << "char = " << spec.characteristic << "\n";
  out << "vars = " << join(spec.variables) << "\n";
  out << "grading = " << join(spec.weights) << "\n";
  out << "\n[module]\n";
  out << "name = " << spec.name << "\n";
  out << "rank = " << spec.rank << "\n";
  for (const auto& g : spec.generators) out << "gen = " << join(g) << "\n";
  out << "\n[options]\n";
  out << "n_max = " << spec.n_max << "\n";
  out << "window = " << spec.window << "\n";
  out << "max_degree = " << spec.max_degree << "\n";
  out << "seed = " << spec.seed << "\n";
  for (const auto& p : spec.primes) out << "prime = " << join(p) << "\n";
  return out.str();
}

std::unique_ptr<Instance> build_instance(const InstanceSpec& spec) {
  auto inst = std::make_unique<Instance>();
  inst->spec = spec;
  RingOptions ropts;
  ropts.max_degree = spec.max_degree;
  std::vector<int> weights = spec.weights.empty() ? std::vector<int>(spec.variables.size(), 1) : spec.weights;
  inst->ring = Ring::make(Field(spec.characteristic), spec.variables, weights, ropts);
  const Ring& r = *inst->ring;
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < spec.generators.size(); ++j) {
    const auto& row = spec.generators[j];
    if (static_cast<int>(row.size()) != spec.rank) {
      throw ValidationError("generator " + std::to_string(j + 1) + " has " + std::to_string(row.size()) +
                            " entries, expected rank " + std::to_string(spec.rank));
    }
    std::vector<Polynomial> comps;
    for (const auto& s : row) comps.push_back(r.parse(s));
    gens.push_back(Vector(r, std::move(comps)));
  }
  inst->context = std::make_unique<ReesContext>(inst->ring, spec.rank, std::move(gens));
  for (const auto& p : spec.primes) {
    std::vector<Polynomial> polys;
    for (const auto& s : p) polys.push_back(r.parse(s));
    inst->primes.push_back(Submodule::ideal(inst->ring, std::move(polys)));
  }
  return inst;
}

}  // namespace reesalg
