// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: multilin_acceptance <cli-binary> <fixtures-dir> [seed]

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "multilin/json_io.hpp"
#include "multilin/verify.hpp"
#include "run_command.hpp"

namespace {

using multilin::io::Json;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome suites_outcome(int criterion, std::uint64_t seed) {
  Outcome o;
  for (const auto& r : multilin::verify::run_criterion(criterion, seed)) {
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.total);
    if (!r.ok()) {
      o.ok = false;
      o.detail += " (first failure: " + r.first_failure + ")";
    }
  }
  return o;
}

// Emitted JSON must re-parse to an equal value and re-emit the same bytes.
template <class Reader>
bool round_trips(const std::string& text, Reader read) {
  const Json parsed = Json::parse(text);
  return multilin::io::to_json(read(parsed)).dump(2) + "\n" == text;
}

Outcome cli_outcome(const std::string& cli, const std::string& fixtures, std::uint64_t seed) {
  namespace io = multilin::io;
  Outcome o;
  auto fail = [&](const std::string& what) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : ", ") + what;
  };
  auto f = [&](const std::string& name) { return quoted(fixtures + "/" + name); };
  const std::string verify = quoted(cli) + " verify --seed " + std::to_string(seed);
  const CommandResult first = run_command(verify), second = run_command(verify);
  if (first.status != 0) fail("verify exited " + std::to_string(first.status));
  if (first.out != second.out) fail("verify reports differ between runs");
  if (first.out.empty()) fail("verify printed nothing");

  struct Case {
    std::string args;
    int kind;
  };
  const std::vector<Case> cases = {
      {"odot " + f("odot_a.json") + " " + f("odot_b.json"), 0},
      {"sym-power " + f("odot_a.json") + " --k 3", 0},
      {"wedge " + f("alt_ones.json") + " " + f("alt_ones.json"), 1},
      {"wedge-power " + f("alt_ones.json") + " --k 2 --raw", 1},
      {"compose " + f("phi_square.json") + " " + f("psi_shift.json"), 2},
      {"change-vars " + f("phi_square.json") + " " + f("psi_shift.json") + " " + f("psi_shift.json"), 2},
      {"mlprod --kind sym " + f("sym_map_scalar.json") + " " + f("sym_map_scalar.json") + " " +
           f("pairing_product.json"),
       3},
      {"mlprod --kind alt " + f("alt_map_row.json") + " " + f("alt_map_row.json") + " " + f("pairing_product.json"),
       4},
  };
  int checked = 0;
  for (const auto& c : cases) {
    const CommandResult r = run_command(quoted(cli) + " " + c.args);
    if (r.status != 0) {
      fail("exit " + std::to_string(r.status) + " for " + c.args);
      continue;
    }
    bool ok = false;
    try {
      switch (c.kind) {
        case 0: ok = round_trips(r.out, [](const Json& j) { return io::sym_from_json(j); }); break;
        case 1: ok = round_trips(r.out, [](const Json& j) { return io::alt_from_json(j); }); break;
        case 2: ok = round_trips(r.out, [](const Json& j) { return io::polymap_from_json(j); }); break;
        case 3: ok = round_trips(r.out, [](const Json& j) { return io::sym_multimap_from_json(j); }); break;
        default: ok = round_trips(r.out, [](const Json& j) { return io::alt_multimap_from_json(j); }); break;
      }
    } catch (const std::exception& e) {
      fail(std::string("re-parse threw: ") + e.what());
      continue;
    }
    if (!ok) fail("round trip changed output of " + c.args);
    ++checked;
  }
  o.detail = "verify twice byte-identical: " + std::string(first.out == second.out ? "yes" : "no") +
             ", CLI round trips " + std::to_string(checked) + "/" + std::to_string(cases.size()) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: multilin_acceptance <cli-binary> <fixtures-dir> [seed]\n";
    return 2;
  }
  const std::string cli = argv[1], fixtures = argv[2];
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 42;
  std::cout << "acceptance seed=" << seed << "\n";
  int failures = 0;
  for (int c = 1; c <= 10; ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = suites_outcome(c, seed);
    if (c == 10) {
      const Outcome cli_part = cli_outcome(cli, fixtures, seed);
      o.ok = o.ok && cli_part.ok;
      o.detail += "; " + cli_part.detail;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::cout << "criterion " << c << ": " << (o.ok ? "PASS" : "FAIL") << " [" << o.detail << "] ("
              << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  std::cout << "criteria passed: " << (10 - failures) << "/10" << std::endl;
  return failures == 0 ? 0 : 1;
}
