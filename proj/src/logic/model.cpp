#include "mmk/logic/model.hpp"

#include <map>
#include <optional>

namespace mmk::logic {

using nlohmann::json;

namespace {

json pairs_to_json(const std::set<NaturalPair>& pairs) {
  json arr = json::array();
  for (const auto& [a, b] : pairs) arr.push_back(json::array({a.to_decimal(), b.to_decimal()}));
  return arr;
}

json set_to_json(const std::set<Natural>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_decimal());
  return arr;
}

}  // namespace

json Interpretation::to_json() const {
  return json{{"domain", set_to_json(domain)},
              {"ext_G", pairs_to_json(ext_G)},
              {"ext_D", pairs_to_json(ext_D)},
              {"ext_M", set_to_json(ext_M)},
              {"ext_T", set_to_json(ext_T)}};
}

json FactBase::to_json() const {
  return json{{"g_facts", pairs_to_json(g_facts)}, {"d_facts", pairs_to_json(d_facts)}};
}

FactBase FactBase::from_json(const json& j) {
  FactBase out;
  auto read_pairs = [](const json& arr, std::set<NaturalPair>& into) {
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2) throw EvalError("fact must be a pair");
      auto read = [](const json& v) {
        return v.is_string() ? Natural::from_decimal(v.get<std::string>())
                             : Natural(v.get<std::uint64_t>());
      };
      into.insert({read(p[0]), read(p[1])});
    }
  };
  if (j.contains("g_facts")) read_pairs(j.at("g_facts"), out.g_facts);
  if (j.contains("d_facts")) read_pairs(j.at("d_facts"), out.d_facts);
  return out;
}

namespace {

using Env = std::map<std::string, Natural>;

Natural term_value(const fol::Term& t, const Env& env) {
  if (t.kind == fol::Term::Kind::Variable) {
    auto it = env.find(t.name);
    if (it == env.end()) throw EvalError("free variable in evaluation: " + t.name);
    return it->second;
  }
  return t.numeral.value;
}

bool eval_rec(const fol::Formula& f, const Interpretation& itp, Env& env) {
  using Kind = fol::Formula::Kind;
  switch (f.kind()) {
    case Kind::Forall: {
      for (const auto& d : itp.domain) {
        auto saved = env.find(f.head_name()) != env.end()
                         ? std::optional<Natural>(env[f.head_name()])
                         : std::nullopt;
        env[f.head_name()] = d;
        bool ok = eval_rec(f.child(0), itp, env);
        if (saved)
          env[f.head_name()] = *saved;
        else
          env.erase(f.head_name());
        if (!ok) return false;
      }
      return true;
    }
    case Kind::Not:
      return !eval_rec(f.child(0), itp, env);
    case Kind::Implies:
      return !eval_rec(f.child(0), itp, env) || eval_rec(f.child(1), itp, env);
    case Kind::Pred: {
      const std::string& p = f.head_name();
      if (p == "G" || p == "D") {
        if (f.args().size() != 2) throw EvalError("predicate " + p + " expects 2 arguments");
        NaturalPair pair{term_value(f.args()[0], env), term_value(f.args()[1], env)};
        return (p == "G" ? itp.ext_G : itp.ext_D).count(pair) > 0;
      }
      if (p == "M" || p == "T") {
        if (f.args().size() != 1) throw EvalError("predicate " + p + " expects 1 argument");
        Natural v = term_value(f.args()[0], env);
        return (p == "M" ? itp.ext_M : itp.ext_T).count(v) > 0;
      }
      throw EvalError("predicate without an extension: " + p);
    }
    case Kind::Atom:
      throw EvalError("atomic sentence without an extension: " + f.head_name());
  }
  throw EvalError("unreachable");
}

}  // namespace

bool eval(const fol::Formula& f, const Interpretation& itp) {
  Env env;
  return eval_rec(f, itp, env);
}

}  // namespace mmk::logic
