#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "verma_fusion.h"

using json = nlohmann::json;

namespace {

struct Session {
  vf_session* handle = vf_session_new();
  ~Session() { vf_session_free(handle); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;
  Session() = default;
};

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { vf_string_free(text); }
};

int reportError(const Session& session, vf_status status) {
  std::cerr << "error: " << vf_last_error(session.handle) << "\n";
  return static_cast<int>(status);
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string summandText(const json& s) {
  std::string w = s.at("weight").get<std::string>();
  return s.at("type") == "projective_cover" ? "P(" + w + ")" : "M(" + w + ")";
}

void printDecomposeHuman(const json& document) {
  const json& r = document.at("results");
  const json& fs = r.at("fusion_sets");
  auto printSet = [](const char* name, const json& set) {
    std::cout << name << " = {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) std::cout << ", ";
      if (set[i].is_string())
        std::cout << set[i].get<std::string>();
      else
        std::cout << set[i];
    }
    std::cout << "}\n";
  };
  printSet("A      ", fs.at("A"));
  printSet("A*     ", fs.at("A_star"));
  printSet("A'     ", fs.at("A_prime"));
  printSet("B (truncated)", fs.at("B_truncated"));

  std::cout << "summands: ";
  const json& summands = r.at("summands");
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) std::cout << " + ";
    std::cout << summandText(summands[i]);
  }
  std::cout << " + ...\n";

  if (r.contains("orbits")) {
    std::cout << "oracle: " << (r.at("oracle_agrees").get<bool>() ? "agrees" : "DISAGREES")
              << "\n";
    for (const json& o : r.at("orbits")) {
      std::cout << "  orbit nu=" << o.at("nu").get<std::string>()
                << " (layer " << o.at("layer") << ")";
      if (o.contains("partner"))
        std::cout << " partner=" << o.at("partner").get<std::string>() << " (layer "
                  << o.at("partner_layer") << ")";
      const json& e = o.at("evidence");
      std::cout << " -> " << o.at("classification").get<std::string>()
                << " [singular low/high " << e.at("singular_count_low") << "/"
                << e.at("singular_count_high") << ", casimir "
                << (e.at("casimir_nilpotent").get<bool>() ? "nilpotent" : "semisimple")
                << "]" << (o.at("agrees").get<bool>() ? "" : "  MISMATCH") << "\n";
    }
  }
}

int runDecompose(const std::string& mu1, const std::string& mu2, unsigned cutoff,
                 bool verify, bool dumpMatrices, bool asJson) {
  Session session;
  OwnedString out;
  unsigned flags = (verify ? VF_DECOMPOSE_VERIFY : 0u) |
                   (dumpMatrices ? VF_DECOMPOSE_DUMP_MATRICES : 0u);
  vf_status status =
      vf_decompose(session.handle, mu1.c_str(), mu2.c_str(), cutoff, flags, &out.text);
  if (status != VF_OK && !out.text) return reportError(session, status);
  json document = json::parse(out.text);
  if (asJson)
    std::cout << document.dump(2) << "\n";
  else
    printDecomposeHuman(document);
  if (status != VF_OK) {
    std::cerr << "error: " << vf_last_error(session.handle) << "\n";
    return static_cast<int>(status);
  }
  return 0;
}

int runRc(const std::string& lam1, const std::string& lam2, const std::string& lam3,
          const std::string& fPath, const std::string& gPath, bool asJson) {
  Session session;
  OwnedString out;
  vf_status status;
  if (!fPath.empty()) {
    std::string f = readFile(fPath);
    std::string g = readFile(gPath);
    status = vf_rc_apply(session.handle, lam1.c_str(), lam2.c_str(), lam3.c_str(),
                         f.c_str(), g.c_str(), &out.text);
  } else {
    status = vf_rc(session.handle, lam1.c_str(), lam2.c_str(), lam3.c_str(), &out.text);
  }
  if (status != VF_OK) return reportError(session, status);
  json document = json::parse(out.text);
  if (asJson) {
    std::cout << document.dump(2) << "\n";
    return 0;
  }
  const json& r = document.at("results");
  std::cout << "ell = " << r.at("ell") << "\ncoeffs = " << r.at("coeffs").dump()
            << "\nis_zero = " << (r.at("is_zero").get<bool>() ? "true" : "false") << "\n";
  if (r.contains("applied")) std::cout << "applied = " << r.at("applied").dump() << "\n";
  return 0;
}

int runHomdim(const std::string& lam1, const std::string& lam2, const std::string& lam3,
              unsigned cutoff, bool asJson) {
  Session session;
  OwnedString out;
  vf_status status = vf_homdim(session.handle, lam1.c_str(), lam2.c_str(), lam3.c_str(),
                               cutoff, &out.text);
  if (status != VF_OK) return reportError(session, status);
  json document = json::parse(out.text);
  if (asJson) {
    std::cout << document.dump(2) << "\n";
    return 0;
  }
  const json& r = document.at("results");
  std::cout << "dim H = " << r.at("dim") << "\n";
  if (r.contains("layer"))
    std::cout << "layer = " << r.at("layer")
              << ", unrestricted singular dim = " << r.at("singular_dim_unrestricted")
              << "\n";
  return 0;
}

struct CaseOutcome {
  bool pass = false;
  bool inputError = false;
  std::string suite;
  std::string detail;
};

CaseOutcome runOneCase(const std::string& line, unsigned cutoff) {
  Session session;
  OwnedString out;
  CaseOutcome outcome;
  vf_status status = vf_verify_case(session.handle, line.c_str(), cutoff, &out.text);
  if (status == VF_ERR_INPUT || status == VF_ERR_PRECONDITION ||
      status == VF_ERR_INTERNAL) {
    outcome.inputError = true;
    outcome.detail = vf_last_error(session.handle);
    return outcome;
  }
  json document = json::parse(out.text);
  outcome.suite = document.at("suite").get<std::string>();
  outcome.pass = document.at("pass").get<bool>();
  outcome.detail = document.at("details").dump();
  return outcome;
}

int runVerify(const std::string& gridPath, unsigned cutoff, unsigned parallel) {
  std::vector<std::string> lines;
  {
    std::ifstream in(gridPath);
    if (!in) {
      std::cerr << "error: cannot open grid file " << gridPath << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) {
    std::cout << "warning: empty grid, 0 cases run\n";
    return 0;
  }

  std::vector<CaseOutcome> outcomes(lines.size());
  if (parallel <= 1) {
    for (std::size_t i = 0; i < lines.size(); ++i)
      outcomes[i] = runOneCase(lines[i], cutoff);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
        outcomes[i] = runOneCase(lines[i], cutoff);
    };
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < parallel; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::size_t passed = 0, failed = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> bySuite;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const CaseOutcome& o = outcomes[i];
    if (o.inputError) {
      std::cerr << "error in case '" << lines[i] << "': " << o.detail << "\n";
      return 2;
    }
    auto& [p, f] = bySuite[o.suite];
    if (o.pass) {
      ++passed;
      ++p;
    } else {
      ++failed;
      ++f;
    }
  }

  for (const auto& [suite, counts] : bySuite)
    std::cout << suite << ": " << counts.first << " passed, " << counts.second
              << " failed\n";
  std::cout << "total: " << passed << " passed, " << failed << " failed\n";

  if (failed > 0) {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].pass) {
        std::cout << "first counterexample: " << lines[i] << "\n  " << outcomes[i].detail
                  << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indecomposable decomposition of sl2 Verma-module tensor products"};
  app.require_subcommand(1);

  unsigned maxCutoff = 64;

  auto* decompose = app.add_subcommand("decompose", "closed-form decomposition");
  std::string mu1, mu2;
  unsigned cutoff = 12;
  bool verify = false, dumpMatrices = false, asJson = false;
  decompose->add_option("--mu1", mu1, "highest weight mu'")->required();
  decompose->add_option("--mu2", mu2, "highest weight mu''")->required();
  decompose->add_option("--cutoff", cutoff, "number of retained layers");
  decompose->add_flag("--verify", verify, "run the brute-force oracle per orbit");
  decompose->add_flag("--dump-matrices", dumpMatrices, "include operator matrices");
  decompose->add_flag("--json", asJson, "print the JSON envelope");

  auto* rc = app.add_subcommand("rc", "Rankin-Cohen bracket");
  std::string lam1, lam2, lam3, fPath, gPath;
  rc->add_option("--lam1", lam1)->required();
  rc->add_option("--lam2", lam2)->required();
  rc->add_option("--lam3", lam3)->required();
  auto* applyOpt =
      rc->add_option("--apply", fPath, "polynomial JSON file for the first slot");
  rc->add_option("--apply2", gPath, "polynomial JSON file for the second slot")
      ->needs(applyOpt);
  rc->add_flag("--json", asJson, "print the JSON envelope");

  auto* homdim = app.add_subcommand("homdim", "multiplicity-space dimension");
  homdim->add_option("--lam1", lam1)->required();
  homdim->add_option("--lam2", lam2)->required();
  homdim->add_option("--lam3", lam3)->required();
  homdim->add_option("--cutoff", cutoff);
  homdim->add_flag("--json", asJson, "print the JSON envelope");

  auto* verifyCmd = app.add_subcommand("verify", "run a verification grid");
  std::string gridPath;
  unsigned parallel = 1;
  verifyCmd->add_option("--grid", gridPath, "grid file, one case per line")->required();
  verifyCmd->add_option("--cutoff", cutoff);
  verifyCmd->add_option("--parallel", parallel, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cutoff > maxCutoff) {
    std::cerr << "error: cutoff " << cutoff << " exceeds the maximum " << maxCutoff
              << "\n";
    return 2;
  }

  if (decompose->parsed())
    return runDecompose(mu1, mu2, cutoff, verify, dumpMatrices, asJson);
  if (rc->parsed()) {
    if (!fPath.empty() && gPath.empty()) {
      std::cerr << "error: --apply requires --apply2\n";
      return 2;
    }
    return runRc(lam1, lam2, lam3, fPath, gPath, asJson);
  }
  if (homdim->parsed()) return runHomdim(lam1, lam2, lam3, cutoff, asJson);
  if (verifyCmd->parsed()) return runVerify(gridPath, cutoff, parallel);
  return 2;
}
