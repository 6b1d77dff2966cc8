#define MMK_TEST_MAIN
#include "test_util.hpp"

#include <random>
#include <unordered_set>

#include "mmk/codec/goedel.hpp"
#include "mmk/codec/primes.hpp"

using namespace mmk;
using codec::CodeClass;
using codec::GoedelNumber;
using codec::Natural;
using fol::SymbolTable;

namespace {

// independent 64-bit oracle: prod of primes^codes, for small cases
std::uint64_t small_product(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& factors) {
  std::uint64_t acc = 1;
  for (auto [p, e] : factors)
    for (std::uint64_t i = 0; i < e; ++i) acc *= p;
  return acc;
}

}  // namespace

TEST_CASE("encode_symbol returns the registered odd code") {
  SymbolTable table;
  CHECK(codec::encode_symbol(*table.find("!")).value() == Natural(1));
  CHECK(codec::encode_symbol(*table.find("forall")).value() == Natural(5));
  CHECK(codec::encode_symbol(*table.find("G")).value() == Natural(25));
}

TEST_CASE("formula encoding: prime powers of the token codes") {
  SymbolTable table;
  // single negation token
  CHECK(codec::encode_tokens({1}).value() == Natural(2));
  // two negations: 2 * 3
  CHECK(codec::encode_tokens({1, 1}).value() == Natural(6));
  // [forall, y, !] with codes 5, 17, 1: 2^5 * 3^17 * 5
  std::uint64_t expected = small_product({{2, 5}, {3, 17}, {5, 1}});
  CHECK(expected == 20662426080ull);
  CHECK(codec::encode_tokens({5, 17, 1}).value() == Natural(expected));
}

TEST_CASE("derivation encoding") {
  SymbolTable table;
  // step codes 2 and 6 (the token strings [!] and [!, !])
  std::vector<GoedelNumber> codes{GoedelNumber::exact(std::uint64_t{2}),
                                  GoedelNumber::exact(std::uint64_t{6})};
  GoedelNumber g = codec::encode_code_sequence(codes);
  CHECK_FALSE(g.is_exact());
  REQUIRE(g.factors().size() == 2);
  CHECK(g.factors()[0].exponent.value() == Natural(2));
  CHECK(g.factors()[1].exponent.value() == Natural(6));

  // exact on request: 2^2 * 3^6 = 2916
  GoedelNumber exact = codec::encode_code_sequence(codes, {}, true);
  CHECK(exact.value() == Natural(2916));

  // single-step sequence with step code 2: 2^2 = 4
  CHECK(codec::encode_code_sequence({GoedelNumber::exact(std::uint64_t{2})}, {}, true).value() ==
        Natural(4));

  // a tree-level derivation takes the factored route through formula codes
  fol::Derivation d;
  d.steps.push_back(fol::parse_formula("S", table));
  d.steps.push_back(fol::parse_formula("!S", table));
  GoedelNumber dg = codec::encode_derivation(d);
  REQUIRE(dg.factors().size() == 2);
  CHECK(dg.factors()[0].exponent.value() == Natural::pow(Natural(2), 35));
  CHECK(codec::decode_derivation(dg, table) == d);
}

TEST_CASE("factor: trial division with prime indices") {
  auto factors = codec::factor(Natural(12));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].prime_index == 1);
  CHECK(factors[0].exponent.value() == Natural(2));
  CHECK(factors[1].prime_index == 2);
  CHECK(factors[1].exponent.value() == Natural(1));

  CHECK(codec::factor(Natural(2)).size() == 1);
  auto f2916 = codec::factor(Natural(2916));
  REQUIRE(f2916.size() == 2);
  CHECK(f2916[0].exponent.value() == Natural(2));
  CHECK(f2916[1].exponent.value() == Natural(6));

  auto f10 = codec::factor(Natural(10));
  REQUIRE(f10.size() == 2);
  CHECK(f10[0].prime_index == 1);
  CHECK(f10[1].prime_index == 3);

  CHECK_THROWS_AS(codec::factor(Natural(1)), codec::InvalidCode);
  // a prime past the default ceiling: 104729 is the 10000th prime, 104743 the next
  CHECK_THROWS_AS(codec::factor(Natural(2) * Natural(104743)), codec::InvalidCode);
}

TEST_CASE("factor reconstructs n for all n in [2, 100000]") {
  auto primes = mmk::testutil::sieve_primes(2000000);
  std::uint64_t failures = 0;
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    auto factors = codec::factor(Natural(n));
    std::uint64_t product = 1;
    for (const auto& f : factors) {
      std::uint64_t p = primes[f.prime_index - 1];
      std::uint64_t e = f.exponent.value().to_uint64();
      for (std::uint64_t i = 0; i < e; ++i) product *= p;
    }
    if (product != n) {
      ++failures;
      REQUIRE(product == n);  // stop at the first failure with context
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("classification of the documented cases") {
  SymbolTable table;
  CHECK(codec::classify(GoedelNumber::exact(7), table).is(CodeClass::Kind::Symbol));
  CHECK(codec::classify(GoedelNumber::exact(1), table).is(CodeClass::Kind::Symbol));
  CHECK(codec::classify(GoedelNumber::exact(6), table).is(CodeClass::Kind::Formula));
  CHECK(codec::classify(GoedelNumber::exact(4), table).is(CodeClass::Kind::Derivation));
  CHECK(codec::classify(GoedelNumber::exact(2916), table).is(CodeClass::Kind::Derivation));

  CodeClass gap = codec::classify(GoedelNumber::exact(10), table);
  CHECK(gap.is(CodeClass::Kind::Invalid));
  CHECK(gap.reason.find("gap at prime index 2") != std::string::npos);

  // 2^1 * 3^2: odd exponent next to an even one
  CodeClass mixed = codec::classify(GoedelNumber::exact(18), table);
  CHECK(mixed.is(CodeClass::Kind::Invalid));
  CHECK(mixed.reason.find("mixed-parity") != std::string::npos);

  // odd but unregistered (table has 18 entries, codes up to 35)
  CodeClass unregistered = codec::classify(GoedelNumber::exact(37), table);
  CHECK(unregistered.is(CodeClass::Kind::Invalid));

  // formula exponent that is not a registered symbol code: 2^37
  CodeClass bad_exp = codec::classify(GoedelNumber::exact(Natural::pow(Natural(2), 37)), table);
  CHECK(bad_exp.is(CodeClass::Kind::Invalid));

  // even with a prime factor beyond the index ceiling
  CodeClass too_long = codec::classify(GoedelNumber::exact(Natural(2) * Natural(104743)), table);
  CHECK(too_long.is(CodeClass::Kind::Invalid));
  CHECK(too_long.reason.find("ceiling") != std::string::npos);

  // the ceiling is configurable
  codec::CodecOptions tight;
  tight.max_prime_index = 2;
  CHECK(codec::classify(GoedelNumber::exact(30), table, tight).is(CodeClass::Kind::Invalid));
}

TEST_CASE("decode inverts the hand-checked example") {
  SymbolTable table;
  codec::Decoded d = codec::decode(GoedelNumber::exact(Natural::from_decimal("20662426080")), table);
  CHECK(d.kind == CodeClass::Kind::Formula);
  CHECK(d.formula_tokens == fol::TokenString{5, 17, 1});

  codec::Decoded der = codec::decode(GoedelNumber::exact(2916), table);
  CHECK(der.kind == CodeClass::Kind::Derivation);
  REQUIRE(der.derivation_steps.size() == 2);
  CHECK(der.derivation_steps[0] == fol::TokenString{1});
  CHECK(der.derivation_steps[1] == fol::TokenString{1, 1});

  CHECK_THROWS_AS(codec::decode(GoedelNumber::exact(10), table), codec::InvalidCode);
}

TEST_CASE("exact and factored forms interconvert") {
  SymbolTable table;
  GoedelNumber factored = GoedelNumber::factored(
      {{1, GoedelNumber::exact(std::uint64_t{2})}, {2, GoedelNumber::exact(std::uint64_t{6})}});
  Natural v;
  REQUIRE(factored.to_exact(v));
  CHECK(v == Natural(2916));
  CHECK(factored == GoedelNumber::exact(2916));

  // json round trip, both forms
  CHECK(GoedelNumber::from_json(factored.to_json()) == factored);
  GoedelNumber exact = GoedelNumber::exact(Natural::from_decimal("123456789123456789"));
  CHECK(GoedelNumber::from_json(exact.to_json()) == exact);
}

TEST_CASE("round trip and laws over a random corpus") {
  SymbolTable table;
  std::mt19937_64 rng(mmk::testutil::g_seed);
  mmk::testutil::FormulaGen gen(table, rng);

  std::unordered_set<std::string> codes_seen;
  std::unordered_set<std::string> formulas_seen;
  int distinct = 0;

  for (int i = 0; i < 1000; ++i) {
    fol::Formula f = gen.formula_max_tokens(12);
    GoedelNumber g = codec::encode_formula(f);

    // parity law: formula codes are even (and composite by construction)
    if (g.is_exact()) CHECK(g.value().is_even());

    // classify agrees with construction
    CHECK(codec::classify(g, table).is(CodeClass::Kind::Formula));

    // decode . encode = identity on token strings
    codec::Decoded back = codec::decode(g, table);
    CHECK(back.formula_tokens == f.tokens());

    // injectivity: distinct token strings get distinct codes
    std::string key;
    for (auto t : f.tokens()) key += std::to_string(t) + ",";
    if (formulas_seen.insert(key).second) {
      ++distinct;
      CHECK(codes_seen.insert(g.to_string()).second);
    }
  }
  CHECK(distinct > 100);

  for (int i = 0; i < 100; ++i) {
    fol::Derivation d = gen.derivation(4, 8);
    GoedelNumber g = codec::encode_derivation(d);
    CHECK(codec::classify(g, table).is(CodeClass::Kind::Derivation));
    fol::Derivation back = codec::decode_derivation(g, table);
    CHECK(back == d);
  }
}

TEST_CASE("classification is total over random naturals") {
  SymbolTable table;
  std::mt19937_64 rng(mmk::testutil::g_seed + 9);
  for (int i = 0; i < 2000; ++i) {
    Natural n(1 + rng() % 5000000);
    codec::CodeClass cls = codec::classify(GoedelNumber::exact(n), table);
    if (cls.is(CodeClass::Kind::Invalid)) {
      CHECK_FALSE(cls.reason.empty());
    } else {
      // anything accepted must decode without throwing
      CHECK_NOTHROW(static_cast<void>(codec::decode(GoedelNumber::exact(n), table)));
    }
  }
  // random factored forms: anything with an index gap must come back Invalid
  for (int i = 0; i < 500; ++i) {
    GoedelNumber::FactorList factors;
    std::uint32_t index = 0;
    bool contiguous = true;
    std::size_t count = 1 + rng() % 4;
    for (std::size_t f = 0; f < count; ++f) {
      std::uint32_t stride = 1 + rng() % 3;
      contiguous = contiguous && stride == 1;
      index += stride;
      factors.push_back({index, GoedelNumber::exact(1 + rng() % 64)});
    }
    codec::CodeClass cls = codec::classify(GoedelNumber::factored(factors), table);
    if (!contiguous) CHECK(cls.is(CodeClass::Kind::Invalid));
  }
}

TEST_CASE("symbol codes stay odd over dynamic registrations") {
  SymbolTable table;
  for (int i = 0; i < 50; ++i) {
    const auto& e = table.register_symbol("sym" + std::to_string(i), fol::SymbolKind::Predicate);
    CHECK(e.code % 2 == 1);
    CHECK(codec::encode_symbol(e).value().is_odd());
  }
}
