#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plurigenus/cli.hpp"

using namespace plurigenus;
using json = nlohmann::json;

namespace {

struct Invocation {
  int exit;
  std::string out;
  std::string err;
};

Invocation call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_document(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("plurigenus_cli_test_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

const std::string kX26 = R"({"chi_O": 1, "K3": "1/26", "basket": [{"r": 26, "a": 1, "count": 1}]})";
const std::string kSmooth = R"({"chi_O": -1, "K3": "2", "basket": []})";

}  // namespace

TEST_CASE("worked examples through the CLI") {
  CHECK(call({"bounds", "certificate", "--C", "1"}).out.starts_with("lower_bound = 3/2, ok\n"));
  CHECK(call({"l", "--r", "26", "--a", "1", "--m", "13"}).out == "53/2\n");
  CHECK(call({"l", "--r", "26", "--a", "1", "--m", "13", "--form", "direct"}).out == "53/2\n");
  CHECK(call({"l", "--r", "26", "--m", "13", "--form", "onewave"}).out == "53/2\n");
  CHECK(call({"l", "--r", "5", "--a", "2", "--m", "3", "--form", "onewave"}).exit == cli::kDomainError);

  const Invocation bir = call({"bounds", "birationality", "--C", "1"});
  CHECK(bir.exit == 0);
  CHECK(bir.out == "R = 26771144400\nm = 15848517485244\nm_digits = 14\n");

  CHECK(call({"bounds", "hanamura", "--r", "6"}).out == "m0 = 27\n");
  CHECK(call({"bounds", "kollar", "--l", "13"}).out == "exponent = 148\n");
  CHECK(call({"dual-degree", "--n", "2", "--v", "4,4,2"}).out == "2\n");
  CHECK(call({"bezout", "--a", "2", "--d", "3", "--i", "2"}).out == "18\n");
  CHECK(call({"chi-bound", "--n", "4", "--h", "1,0,5"}).out == "6\n");
  CHECK(call({"fletcher", "--alpha", "26", "--beta", "25", "--m", "13"}).out == "true\n");
  CHECK(call({"map-count", "--base", "288", "--h0", "4"}).out == "bound = 288^15 (37 digits)\n");
  CHECK(call({"embedding", "--r", "1", "--K3", "2", "--p", "9"}).out ==
        "N_max = 1461\ndegX_max = 1458\ndegY_max = 1458\ngraph_deg_max = 11664\n");
}

TEST_CASE("defranchis output and expansion") {
  const Invocation d = call({"defranchis", "--s", "2", "--K3", "2", "--c1c2", "-24", "--c3", "6", "--chi", "-1"});
  CHECK(d.exit == 0);
  CHECK(d.out == "base = 178\nh0 = 4\nbound = 178^15 (34 digits)\n");

  const Invocation e = call({"defranchis", "--s", "2", "--K3", "2", "--c1c2", "-24", "--c3", "6",
                             "--chi", "-1", "--expand-threshold", "100"});
  CHECK(e.out.find("bound = 5705583093710824596689154731180032\n") != std::string::npos);

  const Invocation bad = call({"defranchis", "--s", "2", "--K3", "2", "--c1c2", "-24", "--c3", "6", "--chi", "3"});
  CHECK(bad.exit == cli::kDomainError);
  CHECK(bad.err.find("h^0(2K) = -8") != std::string::npos);
}

TEST_CASE("document commands") {
  const std::string x26 = write_document("x26", kX26);
  const std::string smooth = write_document("smooth", kSmooth);
  CHECK(call({"chi", "--input", x26, "--m", "13"}).out == "14\n");
  CHECK(call({"plurigenus", "--input", x26, "--m", "13"}).out == "14\n");
  CHECK(call({"plurigenus", "--input", x26, "--m", "13", "--drop-volume-term"}).out == "2\n");
  CHECK(call({"index", "--input", x26}).out == "26\n");
  CHECK(call({"hilbert", "--input", smooth}).out == "c3 = 1/3\nc2 = -1/2\nc1 = 13/6\nc0 = -1\n");

  const Invocation ok = call({"validate", "--input", smooth});
  CHECK(ok.exit == 0);
  CHECK(ok.out == "pass (m = 0..3)\n");
  const Invocation fail = call({"validate", "--input", x26});
  CHECK(fail.exit == cli::kDomainError);
  CHECK(fail.out == "fail: chi(mK) integral at m=2 (value -5/2)\n");

  const Invocation pg1 = call({"plurigenus", "--input", smooth, "--m", "1"});
  CHECK(pg1.exit == cli::kDomainError);
  CHECK(pg1.err == "error: plurigenus requires m >= 2, got 1\n");
}

TEST_CASE("malformed documents") {
  const Invocation syntax = call({"chi", "--input", write_document("syntax", "{\"chi_O\": 1,\n  \"K3\": }"), "--m", "2"});
  CHECK(syntax.exit == cli::kMalformedInput);
  CHECK(syntax.err.find("line 2") != std::string::npos);

  const Invocation floating = call({"chi", "--input", write_document("float", R"({"chi_O": 1, "K3": 0.5})"), "--m", "2"});
  CHECK(floating.exit == cli::kMalformedInput);
  CHECK(floating.err.find("K3: floating-point") != std::string::npos);

  const Invocation missing = call({"chi", "--input", write_document("missing", R"({"K3": "2"})"), "--m", "2"});
  CHECK(missing.exit == cli::kMalformedInput);
  CHECK(missing.err.find("chi_O") != std::string::npos);

  const Invocation field = call({"chi", "--input",
                                 write_document("field", R"({"chi_O": 1, "K3": "2", "basket": [{"r": 3, "a": 1}, {"r": 4, "a": "x"}]})"),
                                 "--m", "2"});
  CHECK(field.exit == cli::kMalformedInput);
  CHECK(field.err.find("basket[1].a") != std::string::npos);

  const Invocation weight = call({"chi", "--input",
                                  write_document("weight", R"({"chi_O": 1, "K3": "2", "basket": [{"r": 4, "a": 2}]})"),
                                  "--m", "2"});
  CHECK(weight.exit == cli::kDomainError);
  CHECK(weight.err.find("basket[0]") != std::string::npos);

  CHECK(call({"chi", "--input", "/nonexistent/file.json", "--m", "2"}).exit == cli::kMalformedInput);
}

TEST_CASE("document round trip") {
  const ThreefoldData x = cli::parse_threefold_document(
      R"({"chi_O": 3, "K3": "10/216", "basket": [{"r": 6, "a": 5, "count": 2}, {"r": 2, "a": 1}, {"r": 6, "a": 1}]})");
  CHECK(x.basket().entries().size() == 2);
  CHECK(x.basket().entries()[1].count == 3);
  CHECK(x.K3() == Rational(BigInt(5), BigInt(108)));
  const ThreefoldData y = cli::parse_threefold_document(cli::to_threefold_document(x));
  CHECK(y.basket() == x.basket());
  CHECK(y.K3() == x.K3());
  CHECK(y.chi_O() == x.chi_O());
}

TEST_CASE("usage errors") {
  CHECK(call({}).exit == cli::kMalformedInput);
  CHECK(call({"frobnicate"}).exit == cli::kMalformedInput);
  CHECK(call({"l", "--r", "3"}).exit == cli::kMalformedInput);
  CHECK(call({"l", "--r", "x3", "--a", "1", "--m", "1"}).exit == cli::kMalformedInput);
  CHECK(call({"bounds", "hanamura", "--r", "0"}).exit == cli::kDomainError);
  CHECK(call({"embedding", "--r", "26", "--K3", "1/26", "--p", "52"}).exit == cli::kDomainError);
  const Invocation help = call({"--help"});
  CHECK(help.exit == 0);
  CHECK(help.out.find("defranchis") != std::string::npos);
}

TEST_CASE("machine output") {
  const Invocation m = call({"--format", "machine", "bounds", "certificate", "--C", "1"});
  const json j = json::parse(m.out);
  CHECK(j["command"] == "bounds certificate");
  CHECK(j["inputs"]["C"] == "1");
  CHECK(j["result"]["lower_bound"] == "3/2");
  CHECK(j["result"]["ok"] == true);
  CHECK(j["errors"].empty());

  const Invocation trailing = call({"bounds", "certificate", "--C", "1", "--format", "machine"});
  CHECK(json::parse(trailing.out)["result"]["l_term"] == "53/2");

  const Invocation err = call({"--format", "machine", "bounds", "kollar", "--l", "0"});
  CHECK(err.exit == cli::kDomainError);
  const json je = json::parse(err.out);
  CHECK(je["result"].is_null());
  CHECK(je["errors"][0]["kind"] == "domain_error");
  CHECK(je["errors"][0]["message"] == "kollar_exponent: l must be >= 1, got 0");

  const Invocation usage = call({"--format", "machine", "frobnicate"});
  CHECK(usage.exit == cli::kMalformedInput);
  CHECK(json::parse(usage.out)["errors"][0]["kind"] == "malformed_input");
}

TEST_CASE("text and machine outputs carry the same numbers") {
  const std::string x26 = write_document("rt", kX26);
  const std::vector<std::vector<std::string>> invocations{
      {"bounds", "birationality", "--C", "2"},
      {"bounds", "certificate", "--C", "7"},
      {"embedding", "--r", "26", "--K3", "1/26", "--p", "234"},
      {"hilbert", "--input", x26},
      {"defranchis", "--s", "3", "--K3", "2", "--c1c2", "-24", "--c3", "6", "--chi", "-1"},
      {"chi", "--input", x26, "--m", "40"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args.front());
    const Invocation text = call(args);
    auto margs = args;
    margs.insert(margs.begin(), {"--format", "machine"});
    const json j = json::parse(call(margs).out);
    REQUIRE(text.exit == 0);
    std::vector<std::string> values;
    const std::function<void(const json&)> gather = [&](const json& node) {
      if (node.is_object()) {
        for (const auto& [k, v] : node.items()) {
          if (k != "digits" && k != "expanded") gather(v);
        }
      } else if (node.is_string()) {
        values.push_back(node.get<std::string>());
      } else if (node.is_number()) {
        values.push_back(node.dump());
      }
    };
    gather(j["result"]);
    REQUIRE_FALSE(values.empty());
    for (const auto& v : values) {
      CAPTURE(v);
      CHECK(text.out.find(v) != std::string::npos);
    }
  }
}

TEST_CASE("verify subcommand") {
  const Invocation v = call({"verify", "--check", "lcm_factorization"});
  CHECK(v.exit == 0);
  CHECK(v.out.starts_with("PASS lcm_factorization: 199 cases"));

  const Invocation m = call({"--format", "machine", "verify", "--check", "chi_identities", "--seed", "42"});
  CHECK(m.exit == 0);
  const json j = json::parse(m.out);
  CHECK(j["result"]["reports"][0]["seed"] == 42);
  CHECK(j["result"]["reports"][0]["passed"] == true);

  CHECK(call({"verify", "--check", "nope"}).exit == cli::kMalformedInput);
}
