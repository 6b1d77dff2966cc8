#define MMK_TEST_MAIN
#include "test_util.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MMK_CLI_PATH
#define MMK_CLI_PATH "mmk"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(MMK_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run_cli("classify 10").exit_code == 3);
  CHECK(run_cli("classify 6").exit_code == 0);
  CHECK(run_cli("parse \"forall y. (\"").exit_code == 2);
  CHECK(run_cli("higgs verify --all").exit_code == 0);
  CHECK(run_cli("check-indef --i 100 --j 2 --k 4").exit_code == 0);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  CHECK(run_cli("eval \"1/0\"").exit_code == 2);
}

TEST_CASE("hand-checked codec runs") {
  RunResult encode = run_cli("encode --kind formula \"M(x)\"");
  // tokens M ( x ): codes 27, 7, 15, 9 -> 2^27 * 3^7 * 5^15 * 7^9
  CHECK(encode.output.find("361485674532864000000000000000") != std::string::npos);

  RunResult decode = run_cli("decode 20662426080");
  CHECK(decode.exit_code == 0);
  CHECK(decode.output.find("forall y !") != std::string::npos);

  RunResult factor = run_cli("factor 2916");
  CHECK(factor.output.find("(1,2) (2,6)") != std::string::npos);
}

TEST_CASE("json output is deterministic across runs") {
  for (const std::string& args :
       {std::string("demo tarski --json"), std::string("demo goedel --json"),
        std::string("higgs verify --all --json"), std::string("nonequiv --json")}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
    auto parsed = nlohmann::json::parse(first.output);
    CHECK(parsed.is_object());
  }
}

TEST_CASE("certificate flow: verify, export, check, tamper") {
  std::string cert_path = "mmk_test_cert.json";
  RunResult verify = run_cli("higgs verify --all --json --out " + cert_path);
  CHECK(verify.exit_code == 0);

  RunResult check = run_cli("check-def --cert " + cert_path);
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("non-null-model") != std::string::npos);

  // witness decodes back to the 4-step chain
  RunResult check_json = run_cli("check-def --cert " + cert_path + " --json");
  auto report = nlohmann::json::parse(check_json.output);
  CHECK(report["witness"].is_array());
  CHECK(report["witness"].size() == 4);

  // tamper with one coefficient and watch the check refuse
  {
    std::ifstream in(cert_path);
    nlohmann::json cert = nlohmann::json::parse(in);
    std::string expr = cert["steps"][2]["expr"].get<std::string>();
    auto at = expr.find("1/2*dchi^2");
    REQUIRE(at != std::string::npos);
    expr.replace(at, 10, "1/3*dchi^2");
    cert["steps"][2]["expr"] = expr;
    std::ofstream out(cert_path);
    out << cert.dump(2);
  }
  RunResult tampered = run_cli("check-def --cert " + cert_path);
  CHECK(tampered.exit_code == 1);
  std::remove(cert_path.c_str());
}

TEST_CASE("normalize and eval subcommands") {
  RunResult nf = run_cli("normalize \"mu^2*rho^2 - lambda*rho^4\" --json");
  auto j = nlohmann::json::parse(nf.output);
  REQUIRE(j["monomials"].size() == 4);
  CHECK(j["monomials"][3] == "1/4 * mu^4 * lambda^-1");

  RunResult ev = run_cli("eval \"E*Ebar\" --assign theta=0.7");
  CHECK(ev.exit_code == 0);
  CHECK(ev.output.find("1") != std::string::npos);
}

TEST_CASE("derivation file encoding") {
  std::string path = "mmk_test_derivation.txt";
  {
    std::ofstream out(path);
    out << "# two-step derivation\n!M(#1)\nforall y. !G(x,y)\n";
  }
  RunResult encoded = run_cli("encode --kind derivation " + path + " --json");
  CHECK(encoded.exit_code == 0);
  auto j = nlohmann::json::parse(encoded.output);
  CHECK(j["code"].is_array());
  CHECK(j["code"].size() == 2);
  std::remove(path.c_str());
}
