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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "posetkit/poset_io.hpp"
#include "support.hpp"

namespace {

using nlohmann::json;

struct Run {
  int exit_code = -1;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string command = std::string(POSETKIT_CLI) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Data(const std::string& name) {
  return std::string(POSETKIT_TEST_DATA) + "/" + name;
}

json Result(const std::string& args) {
  const Run run = Cli(args);
  REQUIRE(run.exit_code == 0);
  const json doc = json::parse(run.out);
  CHECK(doc.contains("command"));
  CHECK(doc.contains("input_digest"));
  CHECK(doc.contains("version"));
  return doc.at("result");
}

std::filesystem::path TempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("posetkit_cli_test_" + name);
}

TEST_CASE("led-bool") {
  CHECK(Result("led-bool 4")["led"] == "44");
  CHECK(Result("led-bool 1")["led"] == "0");
  CHECK(Result("led-bool 5")["led"] == "208");
  CHECK(Cli("led-bool 0").exit_code == 1);
  CHECK(Cli("led-bool 10001").exit_code == 1);
  CHECK(Cli("led-bool x").exit_code == 1);
  CHECK(Result("led-bool 100")["led"].get<std::string>().size() > 20);
}

TEST_CASE("led-downset") {
  CHECK(Result("led-downset " + Data("antichain3.poset"))["led"] == "8");
  const json b = Result("led-downset --breakdown " + Data("chain_union_2_2.poset"));
  CHECK(b["led"] == Result("led-chains 2,2")["led"]);
  for (const char* key : {"alpha", "beta", "gamma", "delta"}) CHECK(b.contains(key));
  CHECK(Cli("led-downset " + Data("chevron.poset")).exit_code == 2);
  const json bound = Result("led-downset --upper-bound-only " + Data("chevron.poset"));
  CHECK(bound.contains("upper_bound"));
  CHECK_FALSE(bound.contains("led"));
}

TEST_CASE("diametral") {
  const auto svg = TempFile("antichain4.svg");
  const json r = Result("diametral " + Data("antichain4.poset") + " --svg " + svg.string());
  CHECK(r["distance"] == "44");
  CHECK(r["lattice_size"] == "16");
  CHECK(r["distance"] == Result("led-downset " + Data("antichain4.poset"))["led"]);

  std::ifstream in(svg);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const std::regex circle("<circle cx=\"(\\d+)\" cy=\"(\\d+)\"");
  std::size_t points = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), circle);
       it != std::sregex_iterator(); ++it) {
    // Points are listed in the order of the first extension.
    CHECK(std::stoul((*it)[1]) == points + 1);
    ++points;
  }
  CHECK(points == 16);
  std::filesystem::remove(svg);

  const json chain = Result("diametral " + Data("chain3.poset"));
  CHECK(chain["first"] == chain["second"]);
  CHECK(chain["distance"] == "0");

  const json crown = Result("diametral " + Data("crown.poset"));
  CHECK(crown["distance"] == Result("led-downset " + Data("crown.poset"))["led"]);

  CHECK(Cli("diametral " + Data("antichain4.poset") + " --max-lattice 15").exit_code == 3);
  CHECK(Cli("diametral " + Data("chevron.poset")).exit_code == 2);
}

TEST_CASE("oracle") {
  CHECK(Result("oracle " + Data("chevron.poset") + " diameter")["diameter"] == "6");
  const json lattice = Result("oracle " + Data("antichain3.poset") + " diameter --lattice");
  CHECK(lattice["diameter"] == "8");
  CHECK(lattice["pair_count"] == "3");
  CHECK(lattice["pairs"].size() == 3);

  const json classes = Result("oracle " + Data("chain4.poset") + " classes");
  for (const auto& c : classes["classes"]) {
    const unsigned long pairs = std::stoul(c["pairs"].get<std::string>());
    CHECK((pairs & (pairs - 1)) == 0);
  }
  CHECK(classes["total_pairs"] == "25");

  const json critical = Result("oracle " + Data("antichain3.poset") + " critical");
  CHECK(critical["critical_pairs"].size() == 6);

  CHECK(Cli("oracle " + Data("antichain4.poset") + " diameter --lattice --cap 100")
            .exit_code == 3);
  CHECK(Cli("oracle " + Data("chevron.poset") + " bogus").exit_code == 1);
}

TEST_CASE("count-antichains") {
  CHECK(Result("count-antichains " + Data("antichain10.poset"))["antichains"] == "1024");
  CHECK(Result("count-antichains " + Data("chain7.poset"))["antichains"] == "8");
  CHECK(Cli("count-antichains " + Data("chevron.poset")).exit_code == 2);

  std::mt19937_64 rng(77);
  const auto path = TempFile("random8.poset");
  for (int trial = 0; trial < 5; ++trial) {
    const posetkit::Poset p = posetkit::testing::RandomTwoDimensional(8, rng);
    std::ofstream(path) << posetkit::FormatPoset(p);
    CHECK(Result("count-antichains " + path.string())["antichains"] ==
          std::to_string(posetkit::testing::BruteAntichainCount(p)));
  }
  std::filesystem::remove(path);
}

TEST_CASE("led-chains") {
  CHECK(Result("led-chains 1,1")["led"] == "1");
  CHECK(Result("led-chains 5")["led"] == "0");
  CHECK(Cli("led-chains 2,,1").exit_code == 1);
  CHECK(Cli("led-chains 2,0").exit_code == 1);
  CHECK(Cli("led-chains a").exit_code == 1);
}

TEST_CASE("input errors") {
  CHECK(Cli("led-downset " + Data("cycle.poset")).exit_code == 1);
  CHECK(Cli("led-downset " + Data("bad_index.poset")).exit_code == 1);
  CHECK(Cli("led-downset " + Data("missing.poset")).exit_code == 1);
  CHECK(Cli("").exit_code == 1);
}

TEST_CASE("output is byte-deterministic") {
  for (const std::string args :
       {"oracle " + Data("chevron.poset") + " diameter",
        "diametral " + Data("crown.poset"),
        "led-downset --breakdown " + Data("antichain4.poset")}) {
    const Run a = Cli(args);
    const Run b = Cli(args + " --verbose");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

}  // namespace
