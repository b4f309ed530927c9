// Copyright 2026 The posetkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// posetkit command-line front end. Talks to the library only through the C
// interface and prints one JSON document per run.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetkit/posetkit.h"

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotTwoDimensional = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

class Failure {
 public:
  Failure(int exit_code, std::string message)
      : exit_code_(exit_code), message_(std::move(message)) {}
  int exit_code() const { return exit_code_; }
  const std::string& message() const { return message_; }

 private:
  int exit_code_;
  std::string message_;
};

void Check(pk_status status) {
  if (status == PK_OK) return;
  int code = kExitUsage;
  if (status == PK_ERR_NOT_TWO_DIMENSIONAL) code = kExitNotTwoDimensional;
  if (status == PK_ERR_CAP_EXCEEDED) code = kExitCapExceeded;
  if (status == PK_ERR_INTERNAL) code = kExitInternal;
  throw Failure(code, std::string(pk_status_name(status)) + ": " + pk_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { pk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string Take(char* s) { return OwnedString(s).get(); }

struct PosetDeleter {
  void operator()(pk_poset* p) const { pk_poset_free(p); }
};
using PosetHandle = std::unique_ptr<pk_poset, PosetDeleter>;

std::string Fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitUsage, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Input {
  std::string text;
  PosetHandle poset;
};

Input LoadPoset(const std::string& path) {
  Input in{ReadFile(path), nullptr};
  pk_poset* p = nullptr;
  Check(pk_poset_parse(in.text.c_str(), &p));
  in.poset.reset(p);
  return in;
}

json OneBased(const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (std::size_t x : ids) out.push_back(x + 1);
  return out;
}

std::string Label(const pk_poset* p, std::size_t x) {
  char* s = nullptr;
  Check(pk_poset_label(p, x, &s));
  return Take(s);
}

std::vector<std::size_t> ParseLengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || item.front() == '-') {
      throw Failure(kExitUsage, "bad chain length '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(value));
  }
  if (out.empty() || text.back() == ',') {
    throw Failure(kExitUsage, "expected a comma-separated list of chain lengths");
  }
  return out;
}

json Report(const std::string& command, const std::string& digest_source,
            json args, json result) {
  return {{"command", command},
          {"arguments", std::move(args)},
          {"input_digest", "fnv1a64:" + Fnv1a64(digest_source)},
          {"result", std::move(result)},
          {"version", pk_version()}};
}

json LedBool(unsigned n) {
  if (n < 1 || n > 10000) throw Failure(kExitUsage, "N must be in 1..10000");
  char* led = nullptr;
  Check(pk_led_boolean(n, &led));
  return Report("led-bool", std::to_string(n), {{"n", n}}, {{"led", Take(led)}});
}

json LedChains(const std::string& spec) {
  const std::vector<std::size_t> lengths = ParseLengths(spec);
  char* led = nullptr;
  Check(pk_led_chain_union(lengths.data(), lengths.size(), &led));
  return Report("led-chains", spec, {{"lengths", lengths}}, {{"led", Take(led)}});
}

json CountAntichains(const std::string& path) {
  const Input in = LoadPoset(path);
  char* count = nullptr;
  Check(pk_count_antichains(in.poset.get(), &count));
  return Report("count-antichains", in.text, {{"file", path}},
                {{"antichains", Take(count)}});
}

json LedDownset(const std::string& path, bool breakdown, bool upper_bound_only) {
  const Input in = LoadPoset(path);
  const json args = {{"file", path},
                     {"breakdown", breakdown},
                     {"upper_bound_only", upper_bound_only}};
  if (upper_bound_only) {
    char* bound = nullptr;
    Check(pk_led_upper_bound(in.poset.get(), kDefaultCap, &bound));
    return Report("led-downset", in.text, args, {{"upper_bound", Take(bound)}});
  }
  pk_led_breakdown b{};
  Check(pk_led_downset(in.poset.get(), &b));
  json result = {{"led", b.led}};
  if (breakdown) {
    result["alpha"] = b.alpha;
    result["beta"] = b.beta;
    result["gamma"] = b.gamma;
    result["delta"] = b.delta;
  }
  pk_led_breakdown_clear(&b);
  return Report("led-downset", in.text, args, std::move(result));
}

json Diametral(const std::string& path, std::size_t max_lattice,
               const std::string& svg_path, unsigned scale) {
  const Input in = LoadPoset(path);
  pk_diametral* raw = nullptr;
  Check(pk_diametral_build(in.poset.get(), max_lattice, &raw));
  std::unique_ptr<pk_diametral, void (*)(pk_diametral*)> d(raw, pk_diametral_free);

  const std::size_t n = pk_poset_size(in.poset.get());
  std::vector<std::size_t> sigma(n);
  Check(pk_diametral_sigma(d.get(), sigma.data()));
  json extensions = json::array();
  std::vector<std::size_t> members(n);
  for (int which = 0; which < 2; ++which) {
    json seq = json::array();
    for (std::size_t pos = 0; pos < pk_diametral_lattice_size(d.get()); ++pos) {
      std::size_t count = 0;
      Check(pk_diametral_downset(d.get(), which, pos, members.data(), &count));
      seq.push_back(OneBased({members.begin(), members.begin() + count}));
    }
    extensions.push_back(std::move(seq));
  }
  char* distance = nullptr;
  Check(pk_diametral_distance(d.get(), &distance));
  json result = {{"sigma", OneBased(sigma)},
                 {"lattice_size", std::to_string(pk_diametral_lattice_size(d.get()))},
                 {"first", extensions[0]},
                 {"second", extensions[1]},
                 {"distance", Take(distance)}};
  if (!svg_path.empty()) {
    char* svg = nullptr;
    Check(pk_diametral_svg(d.get(), scale, &svg));
    const std::string text = Take(svg);
    std::ofstream out(svg_path, std::ios::binary);
    out << text;
    if (!out) throw Failure(kExitUsage, "cannot write " + svg_path);
    result["svg"] = svg_path;
  }
  return Report("diametral", in.text,
                {{"file", path}, {"max_lattice", max_lattice}, {"scale", scale}},
                std::move(result));
}

json OracleDiameter(const pk_poset* target, std::size_t cap) {
  pk_diameter* raw = nullptr;
  Check(pk_oracle_diameter(target, cap, &raw));
  std::unique_ptr<pk_diameter, void (*)(pk_diameter*)> d(raw, pk_diameter_free);
  char* value = nullptr;
  Check(pk_diameter_value(d.get(), &value));
  const std::size_t m = pk_diameter_order_size(d.get());
  std::vector<std::size_t> first(m), second(m);
  json pairs = json::array();
  for (std::size_t i = 0; i < pk_diameter_pair_count(d.get()); ++i) {
    Check(pk_diameter_pair(d.get(), i, first.data(), second.data()));
    json pair = json::array();
    for (const auto* order : {&first, &second}) {
      json seq = json::array();
      for (std::size_t x : *order) seq.push_back(Label(target, x));
      pair.push_back(std::move(seq));
    }
    pairs.push_back(std::move(pair));
  }
  return {{"diameter", Take(value)},
          {"extensions", std::to_string(pk_diameter_extension_count(d.get()))},
          {"pair_count", std::to_string(pk_diameter_pair_count(d.get()))},
          {"pairs", std::move(pairs)},
          {"census_complete", pk_diameter_census_complete(d.get()) != 0}};
}

json OracleClasses(const pk_poset* p, std::size_t cap) {
  pk_class_list* raw = nullptr;
  Check(pk_oracle_classes(p, cap, &raw));
  std::unique_ptr<pk_class_list, void (*)(pk_class_list*)> list(raw,
                                                                pk_class_list_free);
  const std::size_t n = pk_poset_size(p);
  std::vector<std::size_t> d(n), i(n);
  json classes = json::array();
  unsigned long long total = 0;
  for (std::size_t k = 0; k < pk_class_list_size(list.get()); ++k) {
    std::size_t d_size = 0, i_size = 0, components = 0, pairs = 0;
    Check(pk_class_info(list.get(), k, d.data(), &d_size, i.data(), &i_size,
                        &components, &pairs));
    total += pairs;
    classes.push_back({{"D", OneBased({d.begin(), d.begin() + d_size})},
                       {"I", OneBased({i.begin(), i.begin() + i_size})},
                       {"components", components},
                       {"pairs", std::to_string(pairs)}});
  }
  return {{"class_count", std::to_string(classes.size())},
          {"total_pairs", std::to_string(total)},
          {"classes", std::move(classes)}};
}

json OracleCritical(const pk_poset* p, std::size_t cap) {
  std::size_t count = 0;
  Check(pk_oracle_critical_pairs(p, nullptr, 0, &count));
  std::vector<std::size_t> flat(2 * count);
  Check(pk_oracle_critical_pairs(p, flat.data(), count, &count));
  json pairs = json::array();
  for (std::size_t k = 0; k < count; ++k) {
    pairs.push_back({flat[2 * k] + 1, flat[2 * k + 1] + 1});
  }
  int reversing = 0;
  Check(pk_oracle_diametrally_reversing(p, cap, &reversing));
  return {{"critical_pairs", std::move(pairs)},
          {"diametrally_reversing", reversing != 0}};
}

json Oracle(const std::string& path, const std::string& mode, std::size_t cap,
            bool lattice) {
  const Input in = LoadPoset(path);
  PosetHandle target;
  if (lattice) {
    pk_poset* raw = nullptr;
    Check(pk_poset_lattice(in.poset.get(), cap, &raw));
    target.reset(raw);
  }
  const pk_poset* subject = lattice ? target.get() : in.poset.get();
  json result;
  if (mode == "diameter") {
    result = OracleDiameter(subject, cap);
  } else if (mode == "classes") {
    result = OracleClasses(subject, cap);
  } else {
    result = OracleCritical(subject, cap);
  }
  if (lattice) {
    result["lattice_size"] = std::to_string(pk_poset_size(target.get()));
  }
  return Report("oracle", in.text,
                {{"file", path}, {"mode", mode}, {"cap", cap}, {"lattice", lattice}},
                std::move(result));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear extension diameters of downset lattices"};
  app.set_version_flag("--version", pk_version());
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print timing to stderr");

  unsigned bool_n = 0;
  auto* led_bool = app.add_subcommand("led-bool", "led of the Boolean lattice B_N");
  led_bool->add_option("N", bool_n, "Number of atoms")->required();

  std::string file;
  bool breakdown = false;
  bool upper_bound_only = false;
  auto* led_downset =
      app.add_subcommand("led-downset", "led of the downset lattice of a poset");
  led_downset->add_option("FILE", file, "Poset file")->required();
  led_downset->add_flag("--breakdown", breakdown, "Also print alpha, beta, gamma, delta");
  led_downset->add_flag("--upper-bound-only", upper_bound_only,
                        "Quarter-count upper bound; any dimension");

  std::string svg_path;
  std::size_t max_lattice = kDefaultCap;
  unsigned scale = 24;
  auto* diametral =
      app.add_subcommand("diametral", "Diametral pair of the downset lattice");
  diametral->add_option("FILE", file, "Poset file")->required();
  diametral->add_option("--svg", svg_path, "Write a dominance drawing");
  diametral->add_option("--max-lattice", max_lattice, "Bound on the number of downsets");
  diametral->add_option("--scale", scale, "SVG pixels per unit")
      ->check(CLI::Range(1u, 1000u));

  std::string mode;
  std::size_t cap = kDefaultCap;
  bool lattice = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force checks at small scale");
  oracle->add_option("FILE", file, "Poset file")->required();
  oracle->add_option("MODE", mode, "diameter, classes or critical")
      ->required()
      ->check(CLI::IsMember({"diameter", "classes", "critical"}));
  oracle->add_option("--cap", cap, "Bound on enumerated objects");
  oracle->add_flag("--lattice", lattice, "Run on the downset lattice of FILE");

  auto* count = app.add_subcommand("count-antichains", "Number of antichains");
  count->add_option("FILE", file, "Poset file")->required();

  std::string lengths;
  auto* chains = app.add_subcommand("led-chains", "led for a disjoint union of chains");
  chains->add_option("LENGTHS", lengths, "Comma-separated chain lengths")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  try {
    if (*led_bool) {
      report = LedBool(bool_n);
    } else if (*led_downset) {
      report = LedDownset(file, breakdown, upper_bound_only);
    } else if (*diametral) {
      report = Diametral(file, max_lattice, svg_path, scale);
    } else if (*oracle) {
      report = Oracle(file, mode, cap, lattice);
    } else if (*count) {
      report = CountAntichains(file);
    } else {
      report = LedChains(lengths);
    }
  } catch (const Failure& f) {
    std::cerr << "posetkit: " << f.message() << '\n';
    return f.exit_code();
  }
  std::cout << report.dump(2) << '\n';
  if (verbose) {
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "posetkit: " << app.get_subcommands().front()->get_name() << " took "
              << elapsed.count() << " ms\n";
  }
  return kExitOk;
}
