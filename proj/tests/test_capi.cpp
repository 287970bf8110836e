#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "verma_fusion.h"

using json = nlohmann::json;

namespace {

struct Session {
  vf_session* s = vf_session_new();
  ~Session() { vf_session_free(s); }
};

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { vf_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

}  // namespace

TEST_CASE("version is exposed") {
  CHECK(std::string(vf_version()) == "0.1.0");
}

TEST_CASE("decompose M(i) (x) M(-i) with verification") {
  Session s;
  OwnedString out;
  vf_status st = vf_decompose(s.s, "i", "-i", 6, VF_DECOMPOSE_VERIFY, &out.text);
  REQUIRE(st == VF_OK);
  json doc = json::parse(out.str());
  CHECK(doc["command"] == "decompose");
  CHECK(doc["oracle_verified"] == true);
  CHECK(doc["inputs"]["mu1"] == "i");
  CHECK(doc["results"]["oracle_agrees"] == true);
  auto summands = doc["results"]["summands"];
  REQUIRE(summands.size() >= 3);
  CHECK(summands[0]["type"] == "projective_cover");
  CHECK(summands[0]["weight"] == "-2");
  CHECK(summands[1]["type"] == "verma");
  CHECK(summands[1]["weight"] == "-4");
  CHECK(doc["results"]["fusion_sets"]["A"] == json::array({-2}));
  CHECK(doc["results"]["fusion_sets"]["A_star"] == json::array({0}));
}

TEST_CASE("decompose output is byte-identical across runs") {
  Session s;
  OwnedString a, b;
  REQUIRE(vf_decompose(s.s, "1", "3", 8, VF_DECOMPOSE_VERIFY, &a.text) == VF_OK);
  REQUIRE(vf_decompose(s.s, "1", "3", 8, VF_DECOMPOSE_VERIFY, &b.text) == VF_OK);
  CHECK(a.str() == b.str());
}

TEST_CASE("decompose with matrix dump") {
  Session s;
  OwnedString out;
  REQUIRE(vf_decompose(s.s, "0", "0", 2, VF_DECOMPOSE_DUMP_MATRICES, &out.text) ==
          VF_OK);
  json doc = json::parse(out.str());
  auto layers = doc["results"]["matrices"];
  REQUIRE(layers.size() == 3);
  CHECK(layers[1]["k"] == 1);
  CHECK(layers[1]["weight"] == "-2");
  CHECK(layers[1]["casimir"].size() == 2);
}

TEST_CASE("input and precondition errors") {
  Session s;
  OwnedString out;
  CHECK(vf_decompose(s.s, "1x", "0", 4, 0, &out.text) == VF_ERR_INPUT);
  CHECK(std::string(vf_last_error(s.s)).size() > 0);
  // cutoff 2 cannot cover P(-2) at layer 3 for (1,3)
  CHECK(vf_decompose(s.s, "1", "3", 2, 0, &out.text) == VF_ERR_PRECONDITION);
  // rc parity
  CHECK(vf_rc(s.s, "0", "0", "3", &out.text) == VF_ERR_PRECONDITION);
  CHECK(vf_homdim(s.s, "0", "0", "30", 8, &out.text) == VF_ERR_PRECONDITION);
}

TEST_CASE("rc and rc_apply") {
  Session s;
  OwnedString out;
  REQUIRE(vf_rc(s.s, "1", "1", "4", &out.text) == VF_OK);
  json doc = json::parse(out.str());
  CHECK(doc["results"]["ell"] == 1);
  CHECK(doc["results"]["coeffs"] == json::array({"1", "-1"}));
  CHECK(doc["results"]["is_zero"] == false);

  OwnedString applied;
  REQUIRE(vf_rc_apply(s.s, "1", "1", "4", R"(["0","0","1"])", R"(["0","1"])",
                      &applied.text) == VF_OK);
  json adoc = json::parse(applied.str());
  CHECK(adoc["results"]["applied"] == json::array({"0", "0", "1"}));

  OwnedString missing;
  CHECK(vf_rc_apply(s.s, "1", "1", "4", nullptr, R"(["1"])", &missing.text) ==
        VF_ERR_INPUT);
}

TEST_CASE("homdim") {
  Session s;
  OwnedString out;
  REQUIRE(vf_homdim(s.s, "0", "0", "2", 8, &out.text) == VF_OK);
  json doc = json::parse(out.str());
  CHECK(doc["results"]["dim"] == 2);
  CHECK(doc["results"]["layer"] == 1);

  OwnedString zero;
  REQUIRE(vf_homdim(s.s, "0", "0", "3", 8, &zero.text) == VF_OK);
  CHECK(json::parse(zero.str())["results"]["dim"] == 0);
}

TEST_CASE("verify_case") {
  Session s;
  OwnedString out;
  REQUIRE(vf_verify_case(s.s, "decompose,i,-i", 8, &out.text) == VF_OK);
  json doc = json::parse(out.str());
  CHECK(doc["suite"] == "decompose");
  CHECK(doc["pass"] == true);

  OwnedString bad;
  CHECK(vf_verify_case(s.s, "nonsense,1", 8, &bad.text) == VF_ERR_INPUT);
}
