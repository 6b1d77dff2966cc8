#include "mmk/logic/demos.hpp"

namespace mmk::logic {

using nlohmann::json;

json FixedPoint::to_json() const {
  return json{{"open_formula", open_formula.print()},
              {"m", m.to_decimal()},
              {"sentence", sentence.print()},
              {"n", n.to_decimal()},
              {"decode_matches", decode_matches}};
}

namespace {

json assumption_json(const Assumption& a) {
  return json{{"name", a.name}, {"text", a.text}, {"status", a.status}};
}

json argument_json(const UnprovabilityArgument& arg) {
  json steps = json::array();
  for (const auto& s : arg.steps) steps.push_back(s);
  json assumptions = json::array();
  for (const auto& a : arg.assumptions) assumptions.push_back(assumption_json(a));
  return json{{"claim", arg.claim}, {"steps", steps}, {"assumptions", assumptions}};
}

// Exact Natural from a formula code; diagonalization needs the decimal value.
Natural exact_code(const fol::Formula& f) {
  codec::GoedelNumber g = codec::encode_formula(f);
  Natural out;
  if (!g.to_exact(out)) throw EvalError("formula code does not fit exact form");
  return out;
}

FixedPoint diagonalize(const fol::Formula& open_formula, fol::SymbolTable& table) {
  FixedPoint fp;
  fp.open_formula = open_formula;
  fp.m = exact_code(open_formula);
  fp.sentence = fol::substitute(open_formula, "x", fp.m, table);
  fp.n = exact_code(fp.sentence);
  codec::Decoded back = codec::decode(codec::GoedelNumber::exact(fp.n), table);
  fp.decode_matches = back.kind == codec::CodeClass::Kind::Formula &&
                      back.formula_tokens == fp.sentence.tokens();
  return fp;
}

}  // namespace

json GoedelSentenceReport::to_json() const {
  json arguments_json = json::array();
  for (const auto& a : arguments) arguments_json.push_back(argument_json(a));
  return json{{"fixed_point", fixed_point.to_json()},
              {"recorded_facts", recorded_facts.to_json()},
              {"arguments", arguments_json}};
}

GoedelSentenceReport goedel_sentence_demo(fol::SymbolTable& table) {
  GoedelSentenceReport report;
  fol::Formula p = fol::parse_formula("forall y. !G(x,y)", table);
  report.fixed_point = diagonalize(p, table);
  const std::string m = report.fixed_point.m.to_decimal();
  report.recorded_facts.d_facts.insert({report.fixed_point.m, report.fixed_point.n});

  Assumption expressibility{
      "expressibility",
      "a relation holding between naturals makes the matching predicate instance provable, "
      "and a relation failing makes its negation provable",
      "assumption-not-verified"};
  Assumption consistency{
      "consistency",
      "for any sentence, exactly one of the sentence and its negation is provable "
      "(the completeness half of this reading is itself an assumption here)",
      "assumption-not-verified"};
  Assumption omega{
      "omega-consistency",
      "if !G(#" + m + ",#j) is provable for every particular j, then forall y. !G(#" + m +
          ",y) is provable",
      "assumption-not-verified"};

  UnprovabilityArgument first;
  first.claim = "the diagonal sentence is not provable";
  first.steps = {
      "suppose the sentence had a proof; that proof would have a code j",
      "the proof relation would then hold at (" + m + ", j), making G(#" + m + ",#j) provable",
      "but the sentence itself says !G(#" + m + ",y) for every y; contradiction",
  };
  first.assumptions = {expressibility, consistency};

  UnprovabilityArgument second;
  second.claim = "the negation of the diagonal sentence is not provable";
  second.steps = {
      "suppose the negation were provable; then the sentence itself is not provable",
      "so no j codes a proof of it, and !G(#" + m + ",#j) is provable for every particular j",
      "passing to forall y. !G(#" + m + ",y) makes the sentence provable; contradiction",
  };
  second.assumptions = {expressibility, consistency, omega};

  report.arguments = {first, second};
  return report;
}

json TarskiSentenceReport::to_json() const {
  return json{{"fixed_point", fixed_point.to_json()},
              {"recorded_facts", recorded_facts.to_json()},
              {"definability", definability.to_json()}};
}

TarskiSentenceReport tarski_sentence_demo(fol::SymbolTable& table) {
  TarskiSentenceReport report;
  fol::Formula a = fol::parse_formula("forall y. (D(x,y) -> !T(y))", table);
  report.fixed_point = diagonalize(a, table);
  report.recorded_facts.d_facts.insert({report.fixed_point.m, report.fixed_point.n});

  const std::string m = report.fixed_point.m.to_decimal();
  const std::string lg = report.fixed_point.n.to_decimal();

  DefinabilityReport dr;
  dr.verdict = DefinabilityReport::Verdict::NullModel;
  dr.witness_is_member = false;
  dr.witness = codec::GoedelNumber::exact(report.fixed_point.n);
  dr.trace = {
      {"expressibility",
       "diagonalization records d(" + m + ", " + lg + "), so D(#" + m + ",#" + lg + ") holds"},
      {"propositional",
       "the diagonal sentence instantiated at y = #" + lg + " gives (D(#" + m + ",#" + lg +
           ") -> !T(#" + lg + ")); infer !T(#" + lg + ")"},
      {"model-assumption",
       "suppose the sentence's own code " + lg +
           " were in a model X of T; !T(#" + lg + ") puts it outside X; contradiction"},
      {"conclusion", "no code can witness T, so any model of T is null"},
  };
  report.definability = dr;
  return report;
}

}  // namespace mmk::logic
