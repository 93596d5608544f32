// Copyright 2026 The gmacwt Authors.
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

// Black-box checks of the command-line binary.  argv[1] is the binary path;
// each case shells out, captures combined output, and matches exit codes and
// key lines against the command contracts.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cout << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok]   " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  char buffer[512];
  while (std::fgets(buffer, sizeof(buffer), pipe)) {
    result.output += buffer;
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n' ? 1 : 0;
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 1;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const fs::path tmp = fs::path("cli_test_tmp");
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  const fs::path blocking_cfg = tmp / "blocking.json";
  write_text(blocking_cfg,
             "{\"gammas\": [1.0, 0.4], \"h\": [0.1, 1.5], \"lambda\": 0.1}\n");
  const fs::path blocking_nojam_cfg = tmp / "blocking_nojam.json";
  write_text(blocking_nojam_cfg,
             "{\"gammas\": [1.0, 0.4], \"h\": [0.1, 1.5]}\n");
  const fs::path pooled_cfg = tmp / "pooled.json";
  write_text(pooled_cfg, "{\"gammas\": [2.0, 1.4], \"h\": 0.3}\n");
  const fs::path uneven_cfg = tmp / "uneven.json";
  write_text(uneven_cfg,
             "{\"gammas\": [1.0, 0.4], \"h\": [0.6, 0.8], \"lambda\": 0.1}\n");
  const fs::path broken_cfg = tmp / "broken.json";
  write_text(broken_cfg, "{\"gammas\": [1.0, 0.4], \"h\": \n");
  const fs::path triple_gain_cfg = tmp / "triple_gain.json";
  write_text(triple_gain_cfg,
             "{\"gammas\": [1.0, 0.4], \"h\": [0.1, 0.2, 0.3]}\n");

  // value: grand coalition by default, explicit lists, empty list.
  {
    RunResult r = run(bin + " value " + blocking_cfg.string());
    check(r.exit_code == 0 && contains(r.output, "0.209445"),
          "value defaults to the grand coalition");
    r = run(bin + " value " + blocking_cfg.string() + " 1");
    check(r.exit_code == 0 && contains(r.output, "0.236275"),
          "value of a singleton");
    r = run(bin + " value " + blocking_cfg.string() + " 1,2");
    check(r.exit_code == 0 && contains(r.output, "0.209445"),
          "value of an explicit pair");
    r = run(bin + " value " + blocking_cfg.string() + " \"\"");
    check(r.exit_code == 0 && contains(r.output, "0.000000"),
          "empty coalition prints zero");
    r = run(bin + " --precision 3 value " + blocking_cfg.string());
    check(r.exit_code == 0 && contains(r.output, "0.209"),
          "precision flag narrows output");
  }

  // value: error paths and exit codes.
  {
    RunResult r = run(bin + " value " + blocking_cfg.string() + " 1,x");
    check(r.exit_code == 2, "garbled coalition member exits 2");
    r = run(bin + " value " + blocking_cfg.string() + " 3");
    check(r.exit_code == 3 && contains(r.output, "IndexOutOfRange"),
          "out-of-range member exits 3");
    r = run(bin + " value " + (tmp / "missing.json").string());
    check(r.exit_code == 2, "missing config exits 2");
    r = run(bin + " value " + broken_cfg.string());
    check(r.exit_code == 2, "malformed JSON exits 2");
    r = run(bin + " value " + triple_gain_cfg.string());
    check(r.exit_code == 3 && contains(r.output, "UnsupportedGame"),
          "three-entry gain array exits 3");
    r = run(bin + " value");
    check(r.exit_code == 2, "missing config argument exits 2");
    r = run(bin);
    check(r.exit_code == 2, "missing subcommand exits 2");
    r = run(bin + " --help");
    check(r.exit_code == 0, "--help exits 0");
  }

  // allocate: report file, printed rates, NotCovered verdict.
  {
    const fs::path report_path = tmp / "pooled_allocation.json";
    RunResult r = run(bin + " allocate " + pooled_cfg.string() + " --out " +
                      report_path.string());
    check(r.exit_code == 0 && contains(r.output, "R1 = 0.300001") &&
              contains(r.output, "R2 = 0.261573"),
          "allocate prints the shared-gain split");
    nlohmann::json report;
    bool parsed = false;
    try {
      report = nlohmann::json::parse(slurp(report_path));
      parsed = true;
    } catch (const nlohmann::json::exception&) {
    }
    check(parsed && report.at("axioms").at("all_ok").get<bool>() &&
              report.at("rates_bits").size() == 2 &&
              std::fabs(report.at("rates_bits")[0].get<double>() -
                        0.3000007023179487) < 1e-9,
          "allocation report carries rates and clean axioms");

    const fs::path uneven_report = tmp / "uneven_allocation.json";
    r = run(bin + " allocate " + uneven_cfg.string() + " --out " +
            uneven_report.string());
    check(r.exit_code == 0 && contains(r.output, "R1 = 0.102959") &&
              contains(r.output, "R2 = 0.018700"),
          "allocate prints the per-transmitter split");
    try {
      report = nlohmann::json::parse(slurp(uneven_report));
      check(report.at("gamma_star").at("transmitter").get<int>() == 1 &&
                std::fabs(report.at("gamma_star").at("value").get<double>() -
                          0.096) < 1e-9,
            "uneven report records the budget reduction");
    } catch (const nlohmann::json::exception&) {
      check(false, "uneven report parses");
    }

    r = run(bin + " allocate " + blocking_cfg.string());
    check(r.exit_code == 4 && contains(r.output, "NotCovered"),
          "allocate exits 4 outside the covered gain range");
  }

  // sweep: row count, header, the blocking cell, axis validation.
  {
    const fs::path sweep_path = tmp / "sweep.csv";
    RunResult r = run(bin + " sweep " + blocking_cfg.string() + " --out " +
                      sweep_path.string());
    const std::string csv = slurp(sweep_path);
    check(r.exit_code == 0 && contains(r.output, "441 cells"),
          "sweep reports 441 cells");
    check(count_lines(csv) == 442 &&
              contains(csv, "h1,h2,v1_bits,v2_bits,v12_bits,beneficial"),
          "sweep CSV has a header and 441 rows");
    check(contains(csv, "0.100000,1.500000,0.236275,0.000000,0.209445,0"),
          "the non-beneficial cell is flagged");
    check(contains(csv, "0.600000,0.800000,0.000000,0.000000,0.121659,1"),
          "a beneficial cell is flagged");

    r = run(bin + " sweep " + blocking_cfg.string() + " --h1 2:0:0.1");
    check(r.exit_code == 2, "backwards sweep axis exits 2");
    r = run(bin + " sweep " + blocking_cfg.string() + " --h2 0:1:-0.5");
    check(r.exit_code == 2, "non-positive sweep step exits 2");
  }

  // region: golden core segment, empty core in-band, JSON sidecar.
  {
    const fs::path core_path = tmp / "core.csv";
    RunResult r = run(bin + " region " + pooled_cfg.string() +
                      " --which core --out " + core_path.string());
    check(r.exit_code == 0 &&
              slurp(core_path) == "r1_bits,r2_bits\n"
                                  "0.561574,0.000000\n"
                                  "0.098199,0.463376\n",
          "core segment matches the golden CSV");

    const fs::path stable_path = tmp / "stable.csv";
    const fs::path stable_json = tmp / "stable.json";
    r = run(bin + " region " + pooled_cfg.string() + " --which cstar --out " +
            stable_path.string() + " --json " + stable_json.string());
    bool json_ok = false;
    try {
      const nlohmann::json doc = nlohmann::json::parse(slurp(stable_json));
      json_ok = doc.at("kind") == "cstar" && !doc.at("empty").get<bool>() &&
                doc.at("vertices").size() == 2;
    } catch (const nlohmann::json::exception&) {
    }
    check(r.exit_code == 0 && json_ok, "stable-set JSON sidecar is written");

    const fs::path empty_path = tmp / "empty_core.csv";
    r = run(bin + " region " + blocking_nojam_cfg.string() +
            " --which core --out " + empty_path.string());
    check(r.exit_code == 0 && contains(r.output, "empty") &&
              slurp(empty_path) ==
                  "# empty core: no feasible rate pairs\nr1_bits,r2_bits\n",
          "empty core is reported in-band with exit 0");

    r = run(bin + " region " + pooled_cfg.string() + " --which blob");
    check(r.exit_code == 2, "unknown region kind exits 2");
    r = run(bin + " region " + uneven_cfg.string() + " --which cstar --out " +
            (tmp / "bad.csv").string());
    check(r.exit_code == 3, "cstar for per-transmitter gains exits 3");
  }

  // verify: pass on the cooperative instances, fail on the blocking pair.
  {
    RunResult r = run(bin + " verify " + pooled_cfg.string());
    check(r.exit_code == 0 && contains(r.output, "result: PASS") &&
              contains(r.output, "[PASS] superadditivity") &&
              contains(r.output, "[PASS] allocation in core"),
          "verify passes the pooled pair");
    r = run(bin + " verify " + uneven_cfg.string());
    check(r.exit_code == 0 && contains(r.output, "result: PASS"),
          "verify passes the uneven pair");
    r = run(bin + " verify " + blocking_cfg.string());
    check(r.exit_code == 1 && contains(r.output, "[FAIL] superadditivity") &&
              contains(r.output, "[FAIL] core nonempty") &&
              contains(r.output, "[SKIP] fair allocation") &&
              contains(r.output, "result: FAIL"),
          "verify fails the blocking pair with exit 1");
  }

  // oracle: clean scan, JSON report, deterministic output.
  {
    const fs::path oracle_path = tmp / "oracle.json";
    const std::string cmd = bin + " oracle --seed 7 --draws 5 --grid 41 --out " +
                            oracle_path.string();
    RunResult first = run(cmd);
    check(first.exit_code == 0 && contains(first.output, "[PASS] f1") &&
              contains(first.output, "[PASS] f6") &&
              contains(first.output, "result: PASS"),
          "oracle scan passes");
    bool json_ok = false;
    try {
      const nlohmann::json doc = nlohmann::json::parse(slurp(oracle_path));
      json_ok = doc.at("all_ok").get<bool>() &&
                doc.at("functions").size() == 6 &&
                doc.at("seed").get<int>() == 7;
    } catch (const nlohmann::json::exception&) {
    }
    check(json_ok, "oracle report is well formed");
    const RunResult second = run(cmd);
    check(first.output == second.output, "oracle output is deterministic");
    const RunResult r = run(bin + " oracle --draws 0");
    check(r.exit_code == 2, "zero draws exits 2");
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all cases passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << g_failures << " case(s) failed\n";
  return 1;
}
