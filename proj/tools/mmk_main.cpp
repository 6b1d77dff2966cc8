#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "mmk/cas/higgs.hpp"
#include "mmk/cas/normal_form.hpp"
#include "mmk/cas/numeric.hpp"
#include "mmk/codec/goedel.hpp"
#include "mmk/logic/checks.hpp"
#include "mmk/logic/demos.hpp"

using nlohmann::json;
using namespace mmk;

namespace {

// exit codes: 0 ok / verified / expected verdict; 1 check failed;
// 2 input or parse error; 3 invalid code
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kInvalidCode = 3;

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

codec::GoedelNumber parse_number_arg(const std::string& input) {
  if (!input.empty() && input.front() == '[') return codec::GoedelNumber::from_json(json::parse(input));
  return codec::GoedelNumber::exact(codec::Natural::from_decimal(input));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// format: "exact" forces exact (error when impossible), "factored" forces
// factored, empty picks the natural form for the kind.
int run_encode(fol::SymbolTable& table, const std::string& kind, const std::string& input,
               const std::string& format, bool as_json) {
  codec::GoedelNumber g;
  if (kind == "symbol") {
    auto entry = table.find(input);
    if (!entry) {
      std::cerr << "unknown symbol: " << input << "\n";
      return kInputError;
    }
    g = codec::encode_symbol(*entry);
  } else if (kind == "formula") {
    fol::Formula f = fol::parse_formula(input, table);
    codec::CodecOptions opts;
    if (format == "factored") opts.max_exact_bits = 0;
    g = codec::encode_formula(f, opts);
  } else {
    fol::Derivation d = fol::parse_derivation_text(read_file(input), table);
    g = codec::encode_derivation(d, {}, format == "exact");
  }
  if (format == "exact" && !g.is_exact()) {
    codec::Natural v;
    if (!g.to_exact(v)) {
      std::cerr << "value is not representable in exact form\n";
      return kInputError;
    }
    g = codec::GoedelNumber::exact(v);
  }
  emit(as_json, json{{"code", g.to_json()}}, g.to_string());
  return kOk;
}

json decoded_to_json(const codec::Decoded& d, const fol::SymbolTable& table) {
  auto token_names = [&table](const fol::TokenString& tokens) {
    json arr = json::array();
    for (auto code : tokens) arr.push_back(table.find_code(code)->name);
    return arr;
  };
  switch (d.kind) {
    case codec::CodeClass::Kind::Symbol:
      return json{{"kind", "symbol"},
                  {"name", d.symbol.name},
                  {"code", d.symbol.code},
                  {"symbol_kind", std::string(fol::to_string(d.symbol.kind))}};
    case codec::CodeClass::Kind::Formula:
      return json{{"kind", "formula"}, {"tokens", token_names(d.formula_tokens)}};
    case codec::CodeClass::Kind::Derivation: {
      json steps = json::array();
      for (const auto& s : d.derivation_steps) steps.push_back(token_names(s));
      return json{{"kind", "derivation"}, {"steps", steps}};
    }
    default:
      return json{{"kind", "invalid"}};
  }
}

std::string decoded_to_text(const codec::Decoded& d, const fol::SymbolTable& table) {
  auto token_line = [&table](const fol::TokenString& tokens) {
    std::string out;
    for (auto code : tokens) {
      if (!out.empty()) out += " ";
      out += table.find_code(code)->name;
    }
    return out;
  };
  switch (d.kind) {
    case codec::CodeClass::Kind::Symbol:
      return "symbol " + d.symbol.name + " (code " + std::to_string(d.symbol.code) + ")";
    case codec::CodeClass::Kind::Formula:
      return "formula: " + token_line(d.formula_tokens);
    case codec::CodeClass::Kind::Derivation: {
      std::string out = "derivation with " + std::to_string(d.derivation_steps.size()) + " steps:";
      for (const auto& s : d.derivation_steps) out += "\n  " + token_line(s);
      return out;
    }
    default:
      return "invalid";
  }
}

int run_higgs_verify(int step, bool whole_chain, const std::string& out_path,
                     std::uint64_t seed, bool as_json) {
  cas::DerivationRecord record = cas::verify_higgs_chain();

  // numeric spot check of every adjacent pair, independent of the normalizer
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> small(-1.0, 1.0);
  std::uniform_real_distribution<double> positive(0.5, 2.0);
  double max_rel = 0.0;
  for (int round = 0; round < 20; ++round) {
    cas::Assignment a;
    a.A = small(rng);
    a.dtheta = small(rng);
    a.dchi = small(rng);
    a.chi = small(rng);
    a.theta = 3.0 * small(rng);
    a.F = 2.0 * small(rng);
    a.e = positive(rng);
    a.mu = positive(rng);
    a.lambda = positive(rng);
    for (std::size_t s = 0; s + 1 < record.steps.size(); ++s) {
      std::complex<double> lhs = cas::numeric_eval(record.steps[s].expr, a);
      std::complex<double> rhs = cas::numeric_eval(record.steps[s + 1].expr, a);
      double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      max_rel = std::max(max_rel, std::abs(lhs - rhs) / scale);
    }
  }

  bool requested_ok = true;
  std::string text;
  for (std::size_t c = 0; c < record.checks.size(); ++c) {
    const auto& chk = record.checks[c];
    bool adjacent = c + 1 < record.checks.size();
    bool selected = (step == 0) || (adjacent && static_cast<std::size_t>(step) == c + 1) ||
                    (!adjacent && whole_chain);
    if (!selected) continue;
    if (!chk.verified) requested_ok = false;
    text += chk.from + " => " + chk.to + ": " + (chk.verified ? "verified" : "mismatch") + "\n";
    if (!chk.verified) text += "  residual:\n" + chk.residual + "\n";
  }
  text += std::string("overall: ") + (record.overall ? "verified" : "mismatch");
  text += "\nnumeric max relative deviation: " + format_double(max_rel);

  json out = record.to_json();
  out["numeric_max_relative_deviation"] = format_double(max_rel);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write file: " << out_path << "\n";
      return kInputError;
    }
    f << record.to_json().dump(2) << "\n";
  }
  emit(as_json, out, text);
  return requested_ok && record.overall ? kOk : kCheckFailed;
}

std::string report_text(const logic::DefinabilityReport& r) {
  std::string text = "verdict: ";
  text += r.verdict == logic::DefinabilityReport::Verdict::NullModel ? "null-model"
                                                                     : "non-null-model";
  text += "\nwitness (";
  text += r.witness_is_member ? "member" : "contradiction";
  text += "): " + r.witness.to_string();
  for (const auto& t : r.trace) text += "\n  [" + t.label + "] " + t.text;
  return text;
}

cas::Assignment parse_assignment(const std::string& spec) {
  cas::Assignment a;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("expected key=value: " + item);
    std::string key = item.substr(0, eq);
    double value = std::stod(item.substr(eq + 1));
    if (key == "A") a.A = value;
    else if (key == "dtheta") a.dtheta = value;
    else if (key == "dchi") a.dchi = value;
    else if (key == "chi") a.chi = value;
    else if (key == "theta") a.theta = value;
    else if (key == "F") a.F = value;
    else if (key == "e") a.e = value;
    else if (key == "mu") a.mu = value;
    else if (key == "lambda") a.lambda = value;
    else throw std::runtime_error("unknown assignment key: " + key);
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goedel-numbering toolkit: prime-power codec for formulas and derivations, "
               "finite-model definability checks, and a verified abelian Higgs rewriting chain"};
  app.require_subcommand(1);

  fol::SymbolTable table;

  std::string input, kind = "formula", format, facts_path, cert_path, out_path;
  std::string i_arg, j_arg = "2", k_arg = "4", assign_spec, which_demo;
  bool as_json = false, whole_chain = false;
  int step = 0;
  std::uint64_t seed = 12345;

  auto* encode = app.add_subcommand("encode", "encode a symbol, formula, or derivation file");
  encode->add_option("--kind", kind, "symbol|formula|derivation")->default_str("formula");
  encode->add_option("--format", format, "exact|factored (default: exact for formulas, factored for derivations)");
  encode->add_option("input", input, "symbol name, formula text, or derivation file path")
      ->required();
  encode->add_flag("--json", as_json, "machine output");

  auto* decode = app.add_subcommand("decode", "decode a code back to its object");
  decode->add_option("input", input, "decimal string or factored JSON")->required();
  decode->add_flag("--json", as_json, "machine output");

  auto* classify = app.add_subcommand("classify", "classify a natural as symbol/formula/derivation code");
  classify->add_option("input", input, "decimal string or factored JSON")->required();
  classify->add_flag("--json", as_json, "machine output");

  auto* factor = app.add_subcommand("factor", "trial-divide into (prime index, exponent) pairs");
  factor->add_option("input", input, "decimal string")->required();
  factor->add_flag("--json", as_json, "machine output");

  auto* parse = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse->add_option("input", input, "formula text")->required();
  parse->add_flag("--json", as_json, "machine output");

  auto* indef = app.add_subcommand("check-indef", "run the null-model argument for massiveness");
  indef->add_option("--i", i_arg, "code of the massless Lagrangian (default: computed)");
  indef->add_option("--j", j_arg, "code of the assumed derivation")->default_str("2");
  indef->add_option("--k", k_arg, "code of the assumed massive formula")->default_str("4");
  indef->add_option("--facts", facts_path, "fact base JSON file");
  indef->add_flag("--json", as_json, "machine output");

  auto* def = app.add_subcommand("check-def", "verify a chain certificate and inhabit the model");
  def->add_option("--cert", cert_path, "DerivationRecord JSON file")->required();
  def->add_flag("--json", as_json, "machine output");

  auto* nonequiv = app.add_subcommand("nonequiv",
                                      "search single-element interpretations distinguishing the "
                                      "gauge and breaking formulas");
  nonequiv->add_flag("--json", as_json, "machine output");

  auto* demo = app.add_subcommand("demo", "diagonalization demos");
  demo->add_option("which", which_demo, "goedel|tarski")->required();
  demo->add_flag("--json", as_json, "machine output");

  auto* higgs = app.add_subcommand("higgs", "Higgs chain verifier");
  auto* verify = higgs->add_subcommand("verify", "check the rewriting chain step by step");
  verify->add_option("--step", step, "check only the given adjacent step (1..3)")
      ->check(CLI::Range(1, 3));
  verify->add_flag("--all", whole_chain, "include the whole-chain check");
  verify->add_option("--out", out_path, "write the certificate JSON to this file");
  verify->add_option("--seed", seed, "seed for the numeric spot check");
  verify->add_flag("--json", as_json, "machine output");
  higgs->require_subcommand(1);

  auto* normalize_cmd = app.add_subcommand("normalize", "canonical polynomial of a field expression");
  normalize_cmd->add_option("input", input, "field expression")->required();
  normalize_cmd->add_flag("--json", as_json, "machine output");

  auto* eval_cmd = app.add_subcommand("eval", "numeric evaluation of a field expression");
  eval_cmd->add_option("input", input, "field expression")->required();
  eval_cmd->add_option("--assign", assign_spec, "comma-separated key=value list");
  eval_cmd->add_flag("--json", as_json, "machine output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*encode) return run_encode(table, kind, input, format, as_json);

    if (*decode) {
      codec::Decoded d = codec::decode(parse_number_arg(input), table);
      emit(as_json, decoded_to_json(d, table), decoded_to_text(d, table));
      return kOk;
    }

    if (*classify) {
      codec::CodeClass cls = codec::classify(parse_number_arg(input), table);
      json j{{"class", std::string(codec::to_string(cls.kind))}};
      std::string text(codec::to_string(cls.kind));
      if (cls.is(codec::CodeClass::Kind::Invalid)) {
        j["reason"] = cls.reason;
        text += ": " + cls.reason;
      }
      emit(as_json, j, text);
      return cls.is(codec::CodeClass::Kind::Invalid) ? kInvalidCode : kOk;
    }

    if (*factor) {
      auto factors = codec::factor(codec::Natural::from_decimal(input));
      json arr = json::array();
      std::string text;
      for (const auto& f : factors) {
        arr.push_back(json::array({f.prime_index, f.exponent.to_json()}));
        if (!text.empty()) text += " ";
        text += "(" + std::to_string(f.prime_index) + "," + f.exponent.to_string() + ")";
      }
      emit(as_json, json{{"factors", arr}}, text);
      return kOk;
    }

    if (*parse) {
      fol::Formula f = fol::parse_formula(input, table);
      json vars = json::array();
      for (const auto& v : f.free_variables()) vars.push_back(v);
      json tokens = json::array();
      for (auto code : f.tokens()) tokens.push_back(code);
      emit(as_json,
           json{{"formula", f.print()}, {"free_variables", vars}, {"token_codes", tokens}},
           f.print());
      return kOk;
    }

    if (*indef) {
      logic::FactBase facts;
      if (!facts_path.empty()) facts = logic::FactBase::from_json(json::parse(read_file(facts_path)));
      codec::Natural i;
      if (i_arg.empty()) {
        // default: the symmetric-signs massless Lagrangian, registered as one atom
        std::string name = cas::massless_lagrangian_symmetric_signs().print();
        auto existing = table.find(name);
        const fol::SymbolEntry& entry =
            existing ? *existing : table.register_symbol(name, fol::SymbolKind::Predicate);
        codec::GoedelNumber g = codec::encode_formula(fol::Formula::atom(entry));
        g.to_exact(i);
      } else {
        i = codec::Natural::from_decimal(i_arg);
      }
      auto report = logic::check_massiveness_indefinable(
          i, codec::Natural::from_decimal(j_arg), codec::Natural::from_decimal(k_arg), facts,
          table);
      emit(as_json, report.to_json(), report_text(report));
      return report.verdict == logic::DefinabilityReport::Verdict::NullModel ? kOk : kCheckFailed;
    }

    if (*def) {
      cas::DerivationRecord record = cas::DerivationRecord::from_json(json::parse(read_file(cert_path)));
      auto report = logic::check_massiveness_definable(record, table);
      emit(as_json, report.to_json(), report_text(report));
      return report.verdict == logic::DefinabilityReport::Verdict::NonNullModel ? kOk
                                                                                : kCheckFailed;
    }

    if (*nonequiv) {
      auto witness = logic::check_nonequivalence(table);
      std::string text = "gauge closure: " + std::string(witness.gauge_value ? "true" : "false") +
                         "\nbreaking closure: " +
                         std::string(witness.breaking_value ? "true" : "false") +
                         "\ninterpretation: " + witness.interpretation.to_json().dump();
      emit(as_json, witness.to_json(), text);
      return kOk;
    }

    if (*demo) {
      if (which_demo == "goedel") {
        auto report = logic::goedel_sentence_demo(table);
        std::string text = "fixed point: m = " + report.fixed_point.m.to_decimal() +
                           ", n = " + report.fixed_point.n.to_decimal() +
                           "\nsentence: " + report.fixed_point.sentence.print() +
                           "\ndecode check: " +
                           (report.fixed_point.decode_matches ? "ok" : "FAILED");
        for (const auto& arg : report.arguments) {
          text += "\nclaim: " + arg.claim;
          for (const auto& s : arg.steps) text += "\n  - " + s;
          for (const auto& a : arg.assumptions) text += "\n  assumes [" + a.name + "] (" + a.status + ")";
        }
        emit(as_json, report.to_json(), text);
        return kOk;
      }
      if (which_demo == "tarski") {
        auto report = logic::tarski_sentence_demo(table);
        std::string text = "fixed point: m = " + report.fixed_point.m.to_decimal() +
                           ", n = " + report.fixed_point.n.to_decimal() +
                           "\nsentence: " + report.fixed_point.sentence.print() +
                           "\ndecode check: " +
                           (report.fixed_point.decode_matches ? "ok" : "FAILED") + "\n" +
                           report_text(report.definability);
        emit(as_json, report.to_json(), text);
        return kOk;
      }
      std::cerr << "unknown demo: " << which_demo << "\n";
      return kInputError;
    }

    if (*higgs) return run_higgs_verify(step, whole_chain, out_path, seed, as_json);

    if (*normalize_cmd) {
      cas::NormalForm nf = cas::normalize(cas::parse_expr(input));
      json lines = json::array();
      std::string text = nf.to_string();
      std::stringstream ss(text);
      std::string line;
      while (std::getline(ss, line)) lines.push_back(line);
      emit(as_json, json{{"monomials", lines}}, text);
      return kOk;
    }

    if (*eval_cmd) {
      cas::Assignment a = parse_assignment(assign_spec);
      std::complex<double> v = cas::numeric_eval(cas::parse_expr(input), a);
      emit(as_json, json{{"re", format_double(v.real())}, {"im", format_double(v.imag())}},
           format_double(v.real()) + (v.imag() >= 0 ? " + " : " - ") +
               format_double(std::abs(v.imag())) + "i");
      return kOk;
    }
  } catch (const codec::InvalidCode& e) {
    std::cerr << "invalid code: " << e.what() << "\n";
    return kInvalidCode;
  } catch (const logic::PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const logic::UnverifiedDerivation& e) {
    std::cerr << e.what() << "\n";
    return kCheckFailed;
  } catch (const fol::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const cas::CasError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
