#include "mmk/logic/checks.hpp"

namespace mmk::logic {

using nlohmann::json;

json DefinabilityReport::to_json() const {
  json trace_json = json::array();
  for (const auto& t : trace) trace_json.push_back({{"label", t.label}, {"text", t.text}});
  return json{{"verdict", verdict == Verdict::NullModel ? "null-model" : "non-null-model"},
              {"witness", witness.to_json()},
              {"witness_role", witness_is_member ? "member" : "contradiction"},
              {"trace", trace_json}};
}

namespace {

fol::SymbolEntry entry(fol::SymbolTable& table, std::string_view name) {
  auto e = table.find(name);
  if (!e) throw EvalError("missing built-in symbol");
  return *e;
}

}  // namespace

fol::Formula build_gauge_formula(fol::SymbolTable& table) {
  return fol::parse_formula("forall y. forall z. (!G(x,y) -> !M(z))", table);
}

fol::Formula build_breaking_formula(fol::SymbolTable& table) {
  return fol::parse_formula("forall y. forall z. (D(x,y) -> M(z))", table);
}

fol::Formula instantiate_gauge(const Natural& i, const Natural& j, const Natural& k,
                               fol::SymbolTable& table) {
  using fol::Formula;
  using fol::Term;
  auto numeral = [&](const Natural& n) {
    return Term::make_numeral(fol::make_abbreviated_numeral(n, table));
  };
  Formula g = Formula::predicate(entry(table, "G"), {numeral(i), numeral(j)});
  Formula m = Formula::predicate(entry(table, "M"), {numeral(k)});
  return Formula::implies(Formula::negation(g), Formula::negation(m));
}

fol::Formula instantiate_breaking(const Natural& i, const Natural& k, const Natural& j,
                                  fol::SymbolTable& table) {
  using fol::Formula;
  using fol::Term;
  auto numeral = [&](const Natural& n) {
    return Term::make_numeral(fol::make_abbreviated_numeral(n, table));
  };
  Formula d = Formula::predicate(entry(table, "D"), {numeral(i), numeral(k)});
  Formula m = Formula::predicate(entry(table, "M"), {numeral(j)});
  return Formula::implies(d, m);
}

DefinabilityReport check_massiveness_indefinable(const Natural& i, const Natural& j,
                                                 const Natural& k, const FactBase& facts,
                                                 fol::SymbolTable& table) {
  if (facts.g_facts.count({i, j}))
    throw PreconditionViolated("a derivation fact for (" + i.to_decimal() + ", " +
                               j.to_decimal() + ") is recorded; the argument does not apply");

  fol::Formula instance = instantiate_gauge(i, j, k, table);

  DefinabilityReport report;
  report.verdict = DefinabilityReport::Verdict::NullModel;
  report.witness_is_member = false;
  report.witness = codec::GoedelNumber::exact(k);
  report.trace = {
      {"expressibility",
       "no derivation fact is recorded for (" + i.to_decimal() + ", " + j.to_decimal() +
           "), so !G(#" + i.to_decimal() + ",#" + j.to_decimal() + ") holds"},
      {"propositional",
       "from the instance " + instance.print() + " and its antecedent, infer !M(#" +
           k.to_decimal() + ")"},
      {"model-assumption",
       "suppose k = " + k.to_decimal() +
           " were the code of a formula satisfying M, i.e. k is in X; !M(#" + k.to_decimal() +
           ") puts k outside X; contradiction"},
      {"conclusion", "no element can witness M, so X is the null model"},
  };
  return report;
}

DefinabilityReport check_massiveness_definable(const cas::DerivationRecord& cert,
                                               fol::SymbolTable& table) {
  if (!cert.overall) throw UnverifiedDerivation();

  fol::Derivation chain = cas::export_chain(cert, table);
  codec::GoedelNumber j = codec::encode_derivation(chain);
  // the code of the chain's first step (the massless Lagrangian as one atom)
  codec::GoedelNumber first = codec::encode_formula(chain.steps.front());
  std::string i_text = first.is_exact() ? first.value().to_decimal() : first.to_string();

  DefinabilityReport report;
  report.verdict = DefinabilityReport::Verdict::NonNullModel;
  report.witness_is_member = true;
  report.witness = j;
  report.trace = {
      {"expressibility",
       "the verified chain records the derivation relation between the massless Lagrangian (code " +
           i_text + ") and its massive form, so D holds for that pair"},
      {"propositional",
       "from the instance D -> M and its antecedent, infer M(j) for the chain code j"},
      {"model-assumption", "X = { j | j is the code of the verified chain } contains j"},
      {"conclusion", "X is inhabited, so the mass predicate has a non-null model"},
  };
  return report;
}

json NonEquivalenceWitness::to_json() const {
  return json{{"interpretation", interpretation.to_json()},
              {"gauge_closure", gauge_value},
              {"breaking_closure", breaking_value}};
}

NonEquivalenceWitness check_nonequivalence(fol::SymbolTable& table) {
  fol::Formula gauge = build_gauge_formula(table);
  fol::Formula breaking = build_breaking_formula(table);
  Natural zero(0);
  fol::Formula gauge_closed = fol::substitute(gauge, "x", zero, table);
  fol::Formula breaking_closed = fol::substitute(breaking, "x", zero, table);

  for (unsigned mask = 0; mask < 8; ++mask) {
    Interpretation itp;
    itp.domain.insert(zero);
    if (mask & 1) itp.ext_M.insert(zero);
    if (mask & 2) itp.ext_D.insert({zero, zero});
    if (mask & 4) itp.ext_G.insert({zero, zero});
    bool gauge_value = eval(gauge_closed, itp);
    bool breaking_value = eval(breaking_closed, itp);
    if (gauge_value != breaking_value) return {itp, gauge_value, breaking_value};
  }
  throw NoCounterexample();
}

}  // namespace mmk::logic
