#include "bernkit/classical.hpp"
#include "bernkit/identities.hpp"
#include "doctest.h"

using namespace bernkit;

namespace {

IdentityCase nj(const char* id, long n, long j) { return {id, {{"n", Rat(n)}, {"j", Rat(j)}}}; }
IdentityCase n_only(const char* id, long n) { return {id, {{"n", Rat(n)}}}; }

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("catalog") {
    const auto ids = identity_ids();
    CHECK(ids.size() == 22);
    CHECK(ids.front() == "MAIN");
    for (auto id : ids) {
      CHECK_FALSE(identity_statement(id).empty());
      CHECK_FALSE(identity_domain(id).empty());
    }
    CHECK_THROWS_AS(identity_statement("NOPE"), UnknownIdentity);
    CHECK_THROWS_AS(verify_identity("NOPE", Sweep{}), UnknownIdentity);
  }

  TEST_CASE("MAIN spot values") {
    SidePair s = eval_identity(nj("MAIN", 2, 1));
    CHECK(s.lhs == make_rat(-1, 2));
    CHECK(s.rhs == make_rat(-1, 2));
    s = eval_identity(nj("MAIN", 3, 2));
    CHECK(s.lhs == -1);
    CHECK(s.rhs == -1);
    s = eval_identity(nj("MAIN", 5, 0));
    CHECK(s.lhs == 0);
    CHECK(s.rhs == 0);
  }

  TEST_CASE("MAIN at j = n is indeterminate") {
    CHECK_THROWS_AS(eval_identity(nj("MAIN", 4, 4)), IndeterminateRhs);
    CHECK_FALSE(in_domain(nj("MAIN", 4, 4)));
    Sweep sweep;
    sweep.n_max = 6;
    sweep.include_j_equals_n = true;
    const IdentityReport r = verify_identity("MAIN", sweep);
    CHECK(r.failures.size() == 6);
    for (const Failure& f : r.failures) {
      CHECK_FALSE(f.rhs.has_value());
      CHECK(f.params.at("j") == f.params.at("n"));
    }
    CHECK(r.notes.size() == 2);
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(eval_identity(nj("MAIN", 2, 5)), IdentityDomainError);
    CHECK_THROWS_AS(eval_identity(n_only("H1", 1)), IdentityDomainError);
    CHECK_THROWS_AS(eval_identity(n_only("CUMSUM", 1)), IdentityDomainError);
    CHECK_THROWS_AS(eval_identity(nj("GEN_WORPITZKY", 5, 4)), IdentityDomainError);
    CHECK_THROWS_AS(eval_identity(n_only("MAIN", 3)), IdentityDomainError);
    CHECK_THROWS_AS(eval_identity({"NOPE", {}}), UnknownIdentity);
  }

  TEST_CASE("every identity passes the default sweep") {
    const Sweep sweep;
    for (auto id : identity_ids()) {
      CAPTURE(id);
      const IdentityReport r = verify_identity(id, sweep);
      CHECK(r.pass());
      CHECK(r.cases > 0);
    }
  }

  TEST_CASE("extended ranges") {
    Sweep sweep;
    sweep.n_max = 60;
    for (const char* id : {"GEN_WORPITZKY", "CUMSUM", "EQ14"}) {
      CAPTURE(id);
      CHECK(verify_identity(id, sweep).pass());
    }
  }

  TEST_CASE("boundary cases stay inside their domains") {
    SidePair s = eval_identity(n_only("EQ14", 1));
    CHECK(s.lhs == s.rhs);
    s = eval_identity(n_only("HW_CAUCHY", 1));
    CHECK(s.lhs == s.rhs);
    s = eval_identity(n_only("CUMSUM", 2));
    CHECK(s.lhs == make_rat(2, 3));
    CHECK(s.rhs == make_rat(2, 3));
  }

  TEST_CASE("GEN_WORPITZKY n - j = 1 probe") {
    const ConventionFinding f = probe_gen_worpitzky_edge(30);
    CHECK(f.cases == 29);
    CHECK(f.closed_plus_half == 29);
    CHECK(f.closed_minus_half == 0);
    for (const Rat& v : f.lhs_values) CHECK(v == make_rat(1, 2));
    CHECK(f.summary.find("B_1 = +1/2") != std::string::npos);
    const IdentityReport r = verify_identity("GEN_WORPITZKY", Sweep{});
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0] == f.summary);
  }

  TEST_CASE("j window restricts the MAIN sweep") {
    Sweep sweep;
    sweep.n_max = 10;
    sweep.j_min = 3;
    sweep.j_max = 4;
    const IdentityReport r = verify_identity("MAIN", sweep);
    // n from 4..10 for j=3 and 5..10 for j=4
    CHECK(r.cases == 7 + 6);
    CHECK(r.pass());
  }

  TEST_CASE("reports are deterministic") {
    Sweep sweep;
    sweep.n_max = 12;
    for (const char* id : {"POLYX", "AGOH_EQ11"}) {
      const IdentityReport a = verify_identity(id, sweep);
      const IdentityReport b = verify_identity(id, sweep);
      CHECK(a.cases == b.cases);
      CHECK(a.notes == b.notes);
    }
  }

  TEST_CASE("fault injection flips every identity") {
    Sweep sweep;
    sweep.n_max = 8;
    sweep.m_max = 4;
    sweep.samples = 2;
    for (auto id : identity_ids()) {
      CAPTURE(id);
      sweep.fault = std::string(id);
      const IdentityReport r = verify_identity(id, sweep);
      CHECK_FALSE(r.pass());
      CHECK(r.failures.size() == r.cases);
      for (const Failure& f : r.failures) REQUIRE(f.rhs.has_value());
      for (const Failure& f : r.failures) CHECK(f.lhs == *f.rhs + 1);
    }
  }
}
