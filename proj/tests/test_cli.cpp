/* Copyright 2026 The Witt Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using witt::cli::run;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
  auto r = run({"eval", "--base", "Z", "--pi", "2", "--len", "1", "--alg", "Z/4", "--expr", "(1,0)+(1,0)"});
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "(2,3)");
  CHECK(r.out.find("traditionally W_2") != std::string::npos);

  r = run({"eval", "--base", "Z", "--pi", "2", "--len", "1", "--alg", "Z/4", "--expr", "[1]"});
  CHECK(first_line(r.out) == "(1,0)");

  r = run({"eval", "--expr", "(3,1) * (2,5)"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(6,59)\nghost <6,154>") == 0);

  r = run({"eval", "--base", "Z", "--pi", "3", "--len", "2", "--expr", "V(1,2) + F(0,0,1,5)"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("exit codes") {
  auto r = run({"eval", "--expr", "gh <1,2>"});
  CHECK(r.exit_code == 4);
  CHECK(r.err.find("CongruenceViolation") != std::string::npos);
  CHECK(run({"eval", "--expr", "(1,2"}).exit_code == 2);
  CHECK(run({"eval", "--expr", "(1,2)", "--bogus"}).exit_code == 2);
  CHECK(run({"eval", "--pi", "4", "--expr", "[1]"}).exit_code == 3);
  CHECK(run({"eval", "--base", "Fp[t]:4", "--pi", "t", "--expr", "[1]"}).exit_code == 3);
  CHECK(run({"selftest", "--suite", "nope"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(witt::cli::exit_code_for(witt::ErrorCode::ParseError) == 2);
  CHECK(witt::cli::exit_code_for(witt::ErrorCode::NotPrimeElement) == 3);
  CHECK(witt::cli::exit_code_for(witt::ErrorCode::CongruenceViolation) == 4);
}

TEST_CASE("json output is deterministic and uses decimal strings") {
  const std::vector<std::string> args{"eval", "--base", "Z", "--pi", "2", "--len", "2", "--expr",
                                      "(123456789012345678901,1,2) * (3,4,5)", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["components"][0] == "370370367037037036703");
  CHECK(j["context"]["traditional_length"] == "3");
  CHECK(j["convention_note"] == "our W_2 is traditionally denoted W_3");
  CHECK(j["ghost"].size() == 3);
  CHECK(j["kind"] == "vector");
}

TEST_CASE("ghost is omitted over rings with pi-torsion") {
  const auto r = run({"eval", "--alg", "Z/4", "--expr", "(1,1)", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  CHECK_FALSE(nlohmann::json::parse(r.out).contains("ghost"));
}

TEST_CASE("ghost and unghost") {
  auto r = run({"unghost", "--len", "2", "1,3,11"});
  CHECK(first_line(r.out) == "(1,1,2)");
  r = run({"ghost", "--base", "Z", "--pi", "3", "--len", "1", "--expr", "(1,1)"});
  CHECK(first_line(r.out) == "<1,4>");
  CHECK(run({"unghost", "--len", "1", "1,2"}).exit_code == 4);
}

TEST_CASE("structpoly") {
  auto r = run({"structpoly", "--base", "Z", "--pi", "2", "--len", "1", "--op", "sum"});
  CHECK(r.out.find("S_1 = -a0*b0 + a1 + b1") != std::string::npos);
  r = run({"structpoly", "--base", "Fp[t]:2", "--pi", "t", "--len", "1", "--op", "negation"});
  CHECK(r.out.find("N_0 = a0\n") != std::string::npos);
  r = run({"structpoly", "--base", "Z", "--pi", "3", "--len", "2", "--op", "product"});
  CHECK(r.out.find("P_0 = a0*b0\n") != std::string::npos);
  CHECK(run({"structpoly", "--op", "quotient"}).exit_code == 2);
  const auto j = run({"structpoly", "--len", "1", "--op", "product", "--format", "json"});
  CHECK(j.out == run({"structpoly", "--len", "1", "--op", "product", "--format", "json"}).out);
}

TEST_CASE("present, coaction, bigwitt, verify") {
  auto r = run({"present", "--vars", "x", "--rel", "x^2", "--len", "1", "--style", "theta"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2*theta0(x)^2*theta1(x) + 2*theta1(x)^2") != std::string::npos);

  r = run({"coaction", "--spec", R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})",
           "--element", "x", "--len", "2"});
  CHECK(first_line(r.out) == "(x,0,0)");

  r = run({"bigwitt", "--N", "6"});
  CHECK(r.exit_code == 0);
  CHECK(run({"bigwitt", "--set", "12,6,4,3,2,1"}).exit_code == 0);
  CHECK(run({"bigwitt", "--set", "1,2,4,3"}).exit_code == 3);
  CHECK(run({"bigwitt", "--set", "1,6"}).exit_code == 3);

  for (const char* check : {"wn-presentation", "coord-change", "descent"}) {
    CAPTURE(check);
    CHECK(run({"verify", "--check", check, "--len", "2", "--alg", "Z/4"}).exit_code == 0);
  }
  const std::string spec = R"({"base":"Z","primes":["2","3"]})";
  CHECK(run({"verify", "--check", "delta-axioms", "--spec", spec, "--samples", "100"}).exit_code == 0);
  CHECK(run({"verify", "--check", "delta-axioms"}).exit_code == 2);
  CHECK(run({"verify", "--check", "lift", "--spec",
             R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 5"}}})"})
            .exit_code == 1);
}

TEST_CASE("selftest") {
  const auto a = run({"selftest", "--suite", "ghost", "--size", "small", "--seed", "7", "--format", "json"});
  CHECK(a.exit_code == 0);
  const auto b = run({"selftest", "--suite", "ghost", "--size", "small", "--seed", "7", "--format", "json", "--jobs", "1"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  REQUIRE(j["claims"].size() > 0);
  for (const auto& c : j["claims"]) CHECK_FALSE(c["paper_ref"].get<std::string>().empty());
}

}  // TEST_SUITE
