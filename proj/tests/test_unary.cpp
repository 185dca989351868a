#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "nonblock/bignum.hpp"
#include "nonblock/bool_matrix.hpp"
#include "nonblock/compose.hpp"
#include "nonblock/determinize.hpp"
#include "nonblock/error.hpp"
#include "nonblock/random_gen.hpp"
#include "nonblock/reduce.hpp"
#include "nonblock/unary.hpp"
#include "test_util.hpp"

using namespace nonblock;
using namespace nonblock::testutil;

namespace {

Dfa proj_loop() {
  return dfa(4, {"a", "b"},
             {{0, "a", 1}, {1, "a", 0}, {1, "b", 2}, {2, "a", 3}, {3, "a", 0}},
             {0}, {0});
}

std::vector<Dfa> chain_pair() {
  return {dfa(2, {"a"}, {{0, "a", 1}}, {0}, {0, 1}),
          dfa(3, {"a"}, {{0, "a", 1}, {1, "a", 2}}, {0}, {0, 2})};
}

// One-step reachability of the four-state loop projected onto {a},
// rows top to bottom: 0110 / 1001 / 0001 / 1000.
BoolMatrix proj_loop_matrix() {
  BoolMatrix m(4);
  m.set(0, 1, true);
  m.set(0, 2, true);
  m.set(1, 0, true);
  m.set(1, 3, true);
  m.set(2, 3, true);
  m.set(3, 0, true);
  return m;
}

Dfa marked_selfloop() { return dfa(1, {"a"}, {{0, "a", 0}}, {0}, {0}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("BigUint round-trips decimal strings") {
  CHECK(BigUint(0).to_decimal() == "0");
  CHECK(BigUint(18446744073709551615ull).to_decimal() ==
        "18446744073709551615");
  const char* big = "340282366920938463463374607431768211456";  // 2^128
  BigUint v = BigUint::from_decimal(big);
  CHECK(v.to_decimal() == big);
  CHECK(v.bit_length() == 129);
  CHECK(v.bit(128));
  CHECK_FALSE(v.bit(64));
  CHECK_FALSE(v.fits_u64());
  CHECK(code_of([] { BigUint::from_decimal("12x"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { BigUint::from_decimal(""); }) == ErrorCode::ParseError);
}

TEST_CASE("BigUint ordering and increments") {
  CHECK(BigUint(7) < BigUint(19));
  CHECK(BigUint::from_decimal("18446744073709551616") > BigUint(1));
  CHECK(BigUint(4294967295u).plus_one().to_decimal() == "4294967296");
  BigUint carry_chain = BigUint::from_decimal("18446744073709551615");
  CHECK(carry_chain.plus_one().to_decimal() == "18446744073709551616");
  CHECK(BigUint(41).plus_one() == BigUint(42));
  CHECK(BigUint(123456789).to_u64() == 123456789);
}

TEST_CASE("bool_pow at zero is the identity") {
  BoolMatrix m = proj_loop_matrix();
  CHECK(bool_pow(m, uint64_t{0}) == BoolMatrix::identity(4));
  CHECK(bool_pow(m, BigUint(0)) == BoolMatrix::identity(4));
}

TEST_CASE("the fourth boolean power of the projection loop") {
  BoolMatrix p = bool_pow(proj_loop_matrix(), uint64_t{4});
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      bool zero = (i == 2 && j == 1) || (i == 2 && j == 2) ||
                  (i == 3 && j == 3);
      CHECK(p.get(i, j) == !zero);
    }
  }
}

TEST_CASE("bool_pow matches naive repeated multiplication") {
  RandomStream rs(31, "unary.bool_pow");
  for (int round = 0; round < 20; ++round) {
    BoolMatrix m = random_bool_matrix(rs, 6, 30);
    BoolMatrix naive = BoolMatrix::identity(6);
    for (uint64_t k = 0; k <= 10; ++k) {
      CHECK(bool_pow(m, k) == naive);
      CHECK(bool_pow(m, BigUint(k)) == naive);
      naive = naive_mul(naive, m);
    }
  }
}

TEST_CASE("bool_pow splits over exponent sums") {
  RandomStream rs(32, "unary.pow_sum");
  for (int round = 0; round < 20; ++round) {
    BoolMatrix m = random_bool_matrix(rs, 5, 40);
    uint64_t j = rs.below(9);
    uint64_t k = rs.below(9);
    CHECK(bool_pow(m, j + k) == bool_pow(m, j) * bool_pow(m, k));
  }
}

TEST_CASE("the fourth counting power of the projection loop") {
  IntMatrix p = int_pow_counts(proj_loop_matrix(), 4);
  const uint64_t expected[4][4] = {
      {1, 2, 2, 2}, {3, 1, 1, 2}, {1, 0, 0, 2}, {2, 1, 1, 0}};
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      CHECK(p.get(i, j) == expected[i][j]);
    }
  }
}

TEST_CASE("the first counting power is the 0/1 matrix itself") {
  BoolMatrix m = proj_loop_matrix();
  IntMatrix p = int_pow_counts(m, 1);
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      CHECK(p.get(i, j) == (m.get(i, j) ? 1 : 0));
    }
  }
}

TEST_CASE("two-step counts equal explicit path enumeration") {
  RandomStream rs(33, "unary.counts");
  for (int round = 0; round < 20; ++round) {
    BoolMatrix m = random_bool_matrix(rs, 5, 40);
    IntMatrix p = int_pow_counts(m, 2);
    for (size_t s = 0; s < 5; ++s) {
      for (size_t t = 0; t < 5; ++t) {
        uint64_t paths = 0;
        for (size_t mid = 0; mid < 5; ++mid) {
          if (m.get(s, mid) && m.get(mid, t)) ++paths;
        }
        CHECK(p.get(s, t) == paths);
      }
    }
  }
}

TEST_CASE("counting powers refuse to overflow") {
  // The all-ones 2x2 matrix doubles every entry per step: 2^63 paths still
  // fit, one more squaring does not.
  BoolMatrix m(2);
  for (size_t i = 0; i < 2; ++i) {
    for (size_t j = 0; j < 2; ++j) m.set(i, j, true);
  }
  CHECK(int_pow_counts(m, 64).get(0, 0) == uint64_t{1} << 63);
  CHECK(code_of([&] { int_pow_counts(m, 66); }) == ErrorCode::Overflow);
}

TEST_CASE("support of counting powers equals boolean powers") {
  RandomStream rs(34, "unary.support");
  for (int round = 0; round < 25; ++round) {
    BoolMatrix m = random_bool_matrix(rs, 6, 25);
    uint64_t k = rs.below(7);
    IntMatrix counted = int_pow_counts(m, k);
    BoolMatrix summed = bool_pow(m, k);
    for (size_t i = 0; i < 6; ++i) {
      for (size_t j = 0; j < 6; ++j) {
        CHECK((counted.get(i, j) > 0) == summed.get(i, j));
      }
    }
  }
}

TEST_CASE("unary_abstract reproduces the projection loop matrix") {
  UnarySystem sys = unary_abstract({proj_loop()}, std::string("a"));
  REQUIRE(sys.components.size() == 1);
  CHECK(sys.shared_event == "a");
  CHECK(sys.components[0].matrix == proj_loop_matrix());
  CHECK(sys.components[0].initial_subset == std::vector<StateId>{0});
  CHECK(sys.components[0].marked == std::vector<StateId>{0});
}

TEST_CASE("a component without the shared event abstracts to nothing") {
  Dfa first = dfa(1, {"a", "p"}, {{0, "a", 0}, {0, "p", 0}}, {0}, {0});
  Dfa second = dfa(2, {"a", "r"}, {{0, "r", 1}, {1, "a", 1}}, {0}, {1});
  Dfa silent = dfa(2, {"q"}, {{0, "q", 1}}, {0}, {1});
  UnarySystem sys = unary_abstract({first, second});
  CHECK(sys.shared_event == "a");
  // 'silent' shares nothing with anyone, so it cannot pin the event by
  // itself, but alongside the other two it rides on their derived "a": all
  // of its moves are erased, leaving an all-false matrix and the silent
  // closure of its initial state.
  CHECK(code_of([&] { unary_abstract({first, silent}); }) ==
        ErrorCode::SharedAlphabetViolation);
  UnarySystem with_silent = unary_abstract({first, silent, second});
  CHECK(with_silent.components[1].matrix == BoolMatrix(2));
  CHECK(with_silent.components[1].initial_subset ==
        std::vector<StateId>{0, 1});
  CHECK(with_silent.components[1].marked == std::vector<StateId>{0, 1});
}

TEST_CASE("unary_abstract rejects multiple shared events") {
  Dfa one = dfa(1, {"a", "b"}, {{0, "a", 0}, {0, "b", 0}}, {0}, {0});
  Dfa two = dfa(1, {"a", "b"}, {{0, "a", 0}}, {0}, {0});
  CHECK(code_of([&] { unary_abstract({one, two}); }) ==
        ErrorCode::SharedAlphabetViolation);
}

TEST_CASE("unary_abstract needs an explicit event for a single component") {
  CHECK(code_of([] { unary_abstract({marked_selfloop()}); }) ==
        ErrorCode::SharedAlphabetViolation);
  CHECK_NOTHROW(unary_abstract({marked_selfloop()}, std::string("a")));
}

TEST_CASE("unary_abstract rejects a mismatched explicit event") {
  std::vector<Dfa> pair = chain_pair();
  CHECK(code_of([&] { unary_abstract(pair, std::string("b")); }) ==
        ErrorCode::SharedAlphabetViolation);
  CHECK_NOTHROW(unary_abstract(pair, std::string("a")));
}

TEST_CASE("tuple_state at zero is the tuple of initial subsets") {
  UnarySystem sys = unary_abstract(chain_pair());
  std::optional<TupleState> t = tuple_state(sys, uint64_t{0});
  REQUIRE(t.has_value());
  CHECK(t->subsets ==
        std::vector<std::vector<StateId>>{{0}, {0}});
  CHECK(is_marked(sys, *t));
}

TEST_CASE("tuple_state of the projection loop covers everything at four") {
  UnarySystem sys = unary_abstract({proj_loop()}, std::string("a"));
  std::optional<TupleState> t = tuple_state(sys, uint64_t{4});
  REQUIRE(t.has_value());
  CHECK(t->subsets[0] == std::vector<StateId>{0, 1, 2, 3});
}

TEST_CASE("tuple_state dies when a component runs out of steps") {
  UnarySystem sys = unary_abstract(chain_pair());
  CHECK(tuple_state(sys, uint64_t{1}).has_value());
  CHECK_FALSE(tuple_state(sys, uint64_t{2}).has_value());
  CHECK_FALSE(tuple_state(sys, BigUint(1000)).has_value());
}

TEST_CASE("huge exponents walk cycles by matrix powers") {
  UnarySystem sys =
      unary_abstract({lasso_dfa(0, 5, 0), lasso_dfa(0, 7, 0)});
  // 10^30 mod 5 = 0 and mod 7: 10^30 ≡ 3^30 ≡ (3^6)^5 ≡ 1 mod 7.
  BigUint huge = BigUint::from_decimal("1000000000000000000000000000000");
  std::optional<TupleState> t = tuple_state(sys, huge);
  REQUIRE(t.has_value());
  CHECK(t->subsets == std::vector<std::vector<StateId>>{{0}, {1}});
}

TEST_CASE("a marked self-loop certifies as (0, 1)") {
  UnarySystem sys = unary_abstract({marked_selfloop()}, std::string("a"));
  CHECK(verify_certificate(sys, {BigUint(0), BigUint(1)}));
  UnaryDecision d = decide_one_shared_event({marked_selfloop()},
                                            std::string("a"));
  CHECK(d.verdict.nonblocking);
  REQUIRE(d.certificate.has_value());
  CHECK(d.certificate->k == BigUint(0));
  REQUIRE(d.certificate->ell.has_value());
  CHECK(*d.certificate->ell == BigUint(1));
}

TEST_CASE("a walk-ends certificate needs the next step to be undefined") {
  UnarySystem sys = unary_abstract(chain_pair());
  // Step 1 is still defined, so (0, absent) does not verify; step 2 is the
  // first undefined one, but the tuple at 1 is unmarked, so nothing does.
  CHECK_FALSE(verify_certificate(sys, {BigUint(0), std::nullopt}));
  CHECK_FALSE(verify_certificate(sys, {BigUint(1), std::nullopt}));
  CHECK_FALSE(verify_certificate(sys, {BigUint(2), std::nullopt}));
}

TEST_CASE("certificates reject a non-increasing lasso") {
  UnarySystem sys = unary_abstract({marked_selfloop()}, std::string("a"));
  CHECK_FALSE(verify_certificate(sys, {BigUint(1), BigUint(1)}));
  CHECK_FALSE(verify_certificate(sys, {BigUint(2), BigUint(1)}));
}

TEST_CASE("the two_clause formula's system certifies at (40, 70)") {
  // (x or y or z) and (not x or y or z): residue targets give z_1 = 0 and
  // z_2 = 15 modulo 30.
  Cnf3 f{3,
         {{Literal{0}, Literal{1}, Literal{2}},
          {Literal{0, true}, Literal{1}, Literal{2}}}};
  std::vector<Dfa> components = cnf3_to_unary(f);
  UnarySystem sys = unary_abstract(components);
  CHECK(verify_certificate(sys, {BigUint(40), BigUint(70)}));
  CHECK_FALSE(verify_certificate(sys, {BigUint(0), BigUint(30)}));

  UnaryDecision d = decide_one_shared_event(components);
  CHECK(d.verdict.nonblocking);
  REQUIRE(d.certificate.has_value());
  // Lengths 0..5 are all excluded (0 and 15 by the clauses, 2 and 5 by the
  // mod-3 filter, 4 by a mod-5 filter, 1 and 3 lie before the cycle closes
  // at step 4), so the walk first certifies at 6 with period 30.
  CHECK(d.certificate->k == BigUint(6));
  CHECK(*d.certificate->ell == BigUint(36));
  CHECK(verify_certificate(sys, *d.certificate));
}

TEST_CASE("the chain pair walk blocks after one shared step") {
  UnaryDecision d = decide_one_shared_event(chain_pair());
  CHECK_FALSE(d.verdict.nonblocking);
  CHECK_FALSE(d.certificate.has_value());
  REQUIRE(d.verdict.witness.has_value());
  CHECK(*d.verdict.witness == EventString{"a"});
  CHECK(d.verdict.stats.explored == 2);
}

TEST_CASE("an unmarked walk blocks with the empty witness") {
  Dfa never = dfa(2, {"a"}, {{0, "a", 1}, {1, "a", 0}}, {0}, {});
  Dfa always = marked_selfloop();
  UnaryDecision d = decide_one_shared_event({never, always});
  CHECK_FALSE(d.verdict.nonblocking);
  REQUIRE(d.verdict.witness.has_value());
  CHECK(d.verdict.witness->empty());
}

TEST_CASE("lasso components certify at the joint cycle length") {
  UnaryDecision d =
      decide_one_shared_event({lasso_dfa(0, 5, 0), lasso_dfa(0, 7, 0)});
  CHECK(d.verdict.nonblocking);
  CHECK(d.certificate->k == BigUint(0));
  CHECK(*d.certificate->ell == BigUint(35));
  CHECK(d.verdict.stats.explored == 35);
}

TEST_CASE("decide agrees with the observer-product check") {
  RandomStream rs(35, "unary.agreement");
  for (int round = 0; round < 50; ++round) {
    std::vector<Dfa> components =
        random_one_shared_instance(rs, 2 + rs.below(2), 5);
    UnaryDecision d = decide_one_shared_event(components);

    std::vector<Dfa> observers;
    for (const Dfa& c : components) observers.push_back(observer(c, {"a"}));
    Verdict explicit_check =
        check_dfa_nonblocking(parallel_compose(observers));
    CHECK(d.verdict.nonblocking == explicit_check.nonblocking);

    UnarySystem sys = unary_abstract(components);
    if (d.verdict.nonblocking) {
      REQUIRE(d.certificate.has_value());
      CHECK(verify_certificate(sys, *d.certificate));
    } else {
      // No small certificate slips through on a blocking instance.
      for (uint64_t k = 0; k < 20; ++k) {
        CHECK_FALSE(verify_certificate(sys, {BigUint(k), std::nullopt}));
        for (uint64_t ell = k + 1; ell < 24; ++ell) {
          CHECK_FALSE(verify_certificate(sys, {BigUint(k), BigUint(ell)}));
        }
      }
    }
  }
}

TEST_CASE("the tuple walk stays within its theoretical budget") {
  RandomStream rs(36, "unary.budget");
  for (int round = 0; round < 20; ++round) {
    std::vector<Dfa> components = random_one_shared_instance(rs, 2, 4);
    UnaryDecision d = decide_one_shared_event(components);
    uint64_t bound = 1;
    for (const Dfa& c : components) bound *= uint64_t{1} << c.num_states();
    CHECK(d.verdict.stats.explored <= bound + 1);
  }
}

TEST_CASE("the tuple budget raises LimitExceeded") {
  SearchLimits limits;
  limits.max_states = 3;
  try {
    decide_one_shared_event({lasso_dfa(0, 5, 0), lasso_dfa(0, 7, 0)},
                            std::nullopt, limits);
    FAIL("expected LimitError");
  } catch (const LimitError& e) {
    CHECK(e.stats().limit_hit);
    CHECK(e.stats().explored == 4);
  }
}
