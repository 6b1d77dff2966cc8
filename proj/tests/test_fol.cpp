#define MMK_TEST_MAIN
#include "test_util.hpp"

#include <algorithm>
#include <random>
#include <atomic>
#include <thread>

using namespace mmk;
using fol::Formula;
using fol::SymbolKind;
using fol::SymbolTable;

TEST_CASE("built-in table: codes are the odd numbers in registration order") {
  SymbolTable table;
  CHECK(table.size() == 18);
  CHECK(table.find("!")->code == 1);
  CHECK(table.find("->")->code == 3);
  CHECK(table.find("forall")->code == 5);
  CHECK(table.find("'")->code == 23);  // 12th entry
  CHECK(table.find("G")->code == 25);  // 13th entry
  CHECK(table.find("S")->code == 35);
  for (std::uint64_t code = 1; code <= 35; code += 2) CHECK(table.find_code(code).has_value());
  CHECK_FALSE(table.find_code(37).has_value());
  CHECK_FALSE(table.find_code(4).has_value());
}

TEST_CASE("registration appends odd codes and rejects duplicates") {
  SymbolTable table;
  const auto& entry = table.register_symbol("Q", SymbolKind::Predicate);
  CHECK(entry.code == 37);  // 19th symbol: 2*19-1
  CHECK(table.register_symbol("R", SymbolKind::Predicate).code == 39);
  CHECK_THROWS_AS(table.register_symbol("!", SymbolKind::Logical), fol::DuplicateSymbol);
  CHECK_THROWS_AS(table.register_symbol("Q", SymbolKind::Predicate), fol::DuplicateSymbol);
}

TEST_CASE("parsing the working formulas") {
  SymbolTable table;
  Formula p = fol::parse_formula("forall y. !G(x,y)", table);
  CHECK(p.free_variables() == std::set<std::string>{"x"});
  CHECK(p.print() == "forall y. !G(x,y)");

  Formula gauge = fol::parse_formula("forall y. forall z. (!G(x,y) -> !M(z))", table);
  CHECK(gauge.free_variables() == std::set<std::string>{"x"});

  Formula breaking = fol::parse_formula("forall y. forall z. (D(x,y) -> M(z))", table);
  CHECK(breaking.print() == "forall y. forall z. (D(x,y) -> M(z))");
  CHECK(breaking != gauge);

  CHECK_THROWS_AS(fol::parse_formula("forall y. (", table), fol::ParseError);
  CHECK_THROWS_AS(fol::parse_formula("forall w. !M(w)", table), fol::ParseError);
  CHECK_THROWS_AS(fol::parse_formula("!Q(x)", table), fol::ParseError);
  CHECK_THROWS_AS(fol::parse_formula("!M(x) extra", table), fol::ParseError);

  // parse errors carry a position and an expected set
  try {
    fol::parse_formula("(!M(x) -> ", table);
    CHECK(false);
  } catch (const fol::ParseError& e) {
    CHECK(e.position > 0);
    CHECK_FALSE(e.expected.empty());
  }
}

TEST_CASE("single-atom formulas print as their token") {
  SymbolTable table;
  Formula s = Formula::atom(*table.find("S"));
  CHECK(s.print() == "S");
  CHECK(s.tokens() == fol::TokenString{35});
  CHECK(fol::parse_formula("S", table) == s);
}

TEST_CASE("token strings follow the symbol alphabet") {
  SymbolTable table;
  Formula p = fol::parse_formula("forall y. !G(x,y)", table);
  // forall y ! G ( x , y )
  CHECK(p.tokens() == fol::TokenString{5, 17, 1, 25, 7, 15, 11, 17, 9});
}

TEST_CASE("numerals: abbreviated and successor forms") {
  SymbolTable table;
  Formula f = fol::parse_formula("M(#7)", table);
  CHECK(f.print() == "M(#7)");
  CHECK(table.find("#7").has_value());
  CHECK(table.find("#7")->kind == SymbolKind::NumeralAbbrev);

  Formula succ = fol::parse_formula("M(0'')", table);
  CHECK(succ.print() == "M(0'')");
  // successor-form numeral occupies value+1 tokens: M ( 0 ' ' )
  CHECK(succ.tokens().size() == 6);
  CHECK(succ.args()[0].numeral.value == codec::Natural(2));

  // the same value in both representations stays distinguishable
  CHECK(fol::parse_formula("M(#2)", table) != succ);
  CHECK_THROWS_AS(fol::parse_formula("M(x')", table), fol::ParseError);
}

TEST_CASE("substitution replaces exactly the free occurrences") {
  SymbolTable table;
  Formula gauge = fol::parse_formula("forall y. forall z. (!G(x,y) -> !M(z))", table);
  Formula inst = fol::substitute(gauge, "x", codec::Natural(7), table);
  CHECK(inst.print() == "forall y. forall z. (!G(#7,y) -> !M(z))");
  CHECK(inst.free_variables().empty());

  // diagonal shape: P(x) gets its own notional code substituted in
  Formula p = fol::parse_formula("forall y. !G(x,y)", table);
  Formula s = fol::substitute(p, "x", codec::Natural(123456789), table);
  CHECK(s.print() == "forall y. !G(#123456789,y)");

  CHECK_THROWS_AS(fol::substitute(gauge, "y", codec::Natural(1), table), fol::NoFreeOccurrence);
  CHECK_THROWS_AS(fol::substitute(inst, "x", codec::Natural(1), table), fol::NoFreeOccurrence);

  // substitution removes the variable from the free set and preserves form
  Formula twice = fol::parse_formula("(M(x) -> G(x,y))", table);
  Formula done = fol::substitute(twice, "x", codec::Natural(3), table);
  CHECK(done.print() == "(M(#3) -> G(#3,y))");
  CHECK(done.free_variables() == std::set<std::string>{"y"});
}

TEST_CASE("successor substitution mode") {
  SymbolTable table;
  Formula p = fol::parse_formula("M(x)", table);
  Formula s = fol::substitute(p, "x", codec::Natural(3), table, /*abbreviated=*/false);
  CHECK(s.print() == "M(0''')");
  CHECK(s.tokens().size() == 7);  // M ( 0 ' ' ' )
}

TEST_CASE("round trip: parse . print is the identity on 1000 random formulas") {
  SymbolTable table;
  std::mt19937_64 rng(mmk::testutil::g_seed);
  mmk::testutil::FormulaGen gen(table, rng);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.formula_max_tokens(12);
    Formula back = fol::parse_formula(f.print(), table);
    CHECK(back == f);
    CHECK(back.tokens() == f.tokens());
  }
}

TEST_CASE("token parser inverts tokenization") {
  SymbolTable table;
  std::mt19937_64 rng(mmk::testutil::g_seed + 7);
  mmk::testutil::FormulaGen gen(table, rng);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(2);
    CHECK(fol::parse_tokens(f.tokens(), table) == f);
  }
}

TEST_CASE("derivation text format") {
  SymbolTable table;
  fol::Derivation d = fol::parse_derivation_text(
      "# chain of two\nM(#1)\n\nforall y. !G(x,y)  # with trailing comment\n", table);
  CHECK(d.steps.size() == 2);
  CHECK(d.steps[0].print() == "M(#1)");
  CHECK(d.steps[1].print() == "forall y. !G(x,y)");
  CHECK_THROWS_AS(fol::parse_derivation_text("# only comments\n", table), fol::ParseError);
}

TEST_CASE("symbol table: concurrent readers with exclusive registration") {
  SymbolTable table;
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&table, &ok, t] {
      for (int i = 0; i < 200; ++i) {
        const auto& entry = table.numeral_symbol(codec::Natural(i % 50));
        if (entry.code % 2 != 1) ok = false;
        if (!table.find("G") || !table.find_code(25)) ok = false;
        table.register_symbol("t" + std::to_string(t) + "_" + std::to_string(i),
                              fol::SymbolKind::Predicate);
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok);
  // 18 builtins + 50 shared numerals + 4*200 registrations
  CHECK(table.size() == 18 + 50 + 800);
  // codes are still exactly the odd numbers in order
  CHECK(table.find_code(2 * table.size() - 1).has_value());
  CHECK_FALSE(table.find_code(2 * table.size() + 1).has_value());
}

TEST_CASE("free variables are consistent between tree and tokens") {
  SymbolTable table;
  std::mt19937_64 rng(mmk::testutil::g_seed + 8);
  mmk::testutil::FormulaGen gen(table, rng);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(2);
    auto tokens = f.tokens();
    for (const auto& v : f.free_variables()) {
      std::uint64_t code = table.find(v)->code;
      CHECK(std::count(tokens.begin(), tokens.end(), code) > 0);
    }
  }
}
