#include "mmk/codec/goedel.hpp"

#include <cmath>

#include "mmk/codec/primes.hpp"

namespace mmk::codec {

using nlohmann::json;

std::string_view to_string(CodeClass::Kind k) {
  switch (k) {
    case CodeClass::Kind::Symbol: return "symbol";
    case CodeClass::Kind::Formula: return "formula";
    case CodeClass::Kind::Derivation: return "derivation";
    case CodeClass::Kind::Invalid: return "invalid";
  }
  return "?";
}

GoedelNumber GoedelNumber::factored(FactorList factors) {
  if (factors.empty()) throw InvalidCode("factored form must be non-empty");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].prime_index == 0) throw InvalidCode("prime indices are 1-based");
    if (i > 0 && factors[i].prime_index <= factors[i - 1].prime_index)
      throw InvalidCode("prime indices must be strictly increasing");
  }
  return GoedelNumber(std::make_shared<const FactorList>(std::move(factors)));
}

const GoedelNumber::FactorList& GoedelNumber::factors() const {
  return *std::get<std::shared_ptr<const FactorList>>(repr_);
}

bool GoedelNumber::to_exact(Natural& out, std::size_t max_bits) const {
  if (is_exact()) {
    out = value();
    return true;
  }
  Natural acc(1);
  for (const auto& f : factors()) {
    Natural exp_value;
    if (!f.exponent.to_exact(exp_value, max_bits)) return false;
    if (!exp_value.fits_uint64()) return false;
    std::uint64_t e = exp_value.to_uint64();
    std::uint32_t p = nth_prime(f.prime_index);
    // predicted size check before computing the power
    double bits = static_cast<double>(e) * std::log2(static_cast<double>(p));
    if (static_cast<double>(acc.bit_length()) + bits > static_cast<double>(max_bits) + 1) return false;
    acc *= Natural::pow(Natural(p), e);
    if (acc.bit_length() > max_bits) return false;
  }
  out = std::move(acc);
  return true;
}

json GoedelNumber::to_json() const {
  if (is_exact()) return value().to_decimal();
  json arr = json::array();
  for (const auto& f : factors()) arr.push_back(json::array({f.prime_index, f.exponent.to_json()}));
  return arr;
}

GoedelNumber GoedelNumber::from_json(const json& j) {
  if (j.is_string()) return exact(Natural::from_decimal(j.get<std::string>()));
  if (j.is_number_unsigned()) return exact(Natural(j.get<std::uint64_t>()));
  if (!j.is_array()) throw InvalidCode("expected decimal string or factor array");
  FactorList factors;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidCode("factor must be [index, exponent]");
    factors.push_back(Factor{pair[0].get<std::uint32_t>(), from_json(pair[1])});
  }
  return factored(std::move(factors));
}

std::string GoedelNumber::to_string() const {
  if (is_exact()) return value().to_decimal();
  return to_json().dump();
}

bool GoedelNumber::operator==(const GoedelNumber& o) const {
  if (is_exact() && o.is_exact()) return value() == o.value();
  if (!is_exact() && !o.is_exact()) {
    const auto& a = factors();
    const auto& b = o.factors();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].prime_index != b[i].prime_index) return false;
      if (!(a[i].exponent == b[i].exponent)) return false;
    }
    return true;
  }
  // mixed: equal iff the factored side materializes to the exact side
  const GoedelNumber& exact_side = is_exact() ? *this : o;
  const GoedelNumber& factored_side = is_exact() ? o : *this;
  Natural v;
  if (!factored_side.to_exact(v, exact_side.value().bit_length() + 64)) return false;
  return v == exact_side.value();
}

// ---------------------------------------------------------------------------

GoedelNumber encode_symbol(const fol::SymbolEntry& s) { return GoedelNumber::exact(s.code); }

namespace {

// Estimated bit length of prod q_i^c_i, used to pick exact vs factored form.
double estimate_bits(const fol::TokenString& tokens) {
  double bits = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    double p = static_cast<double>(nth_prime(static_cast<std::uint32_t>(i + 1)));
    bits += static_cast<double>(tokens[i]) * std::log2(p);
  }
  return bits;
}

GoedelNumber::FactorList token_factors(const fol::TokenString& tokens) {
  GoedelNumber::FactorList out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    out.push_back({static_cast<std::uint32_t>(i + 1), GoedelNumber::exact(tokens[i])});
  return out;
}

}  // namespace

GoedelNumber encode_tokens(const fol::TokenString& tokens, const CodecOptions& opts) {
  if (tokens.empty()) throw InvalidCode("cannot encode an empty token string");
  if (estimate_bits(tokens) > static_cast<double>(opts.max_exact_bits))
    return GoedelNumber::factored(token_factors(tokens));
  Natural acc(1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::uint32_t p = nth_prime(static_cast<std::uint32_t>(i + 1));
    acc *= Natural::pow(Natural(p), tokens[i]);
  }
  if (acc.bit_length() > opts.max_exact_bits)
    return GoedelNumber::factored(token_factors(tokens));
  return GoedelNumber::exact(std::move(acc));
}

GoedelNumber encode_formula(const fol::Formula& f, const CodecOptions& opts) {
  return encode_tokens(f.tokens(), opts);
}

GoedelNumber encode_code_sequence(const std::vector<GoedelNumber>& formula_codes,
                                  const CodecOptions& opts, bool prefer_exact) {
  if (formula_codes.empty()) throw InvalidCode("cannot encode an empty sequence");
  GoedelNumber::FactorList factors;
  factors.reserve(formula_codes.size());
  for (std::size_t i = 0; i < formula_codes.size(); ++i)
    factors.push_back({static_cast<std::uint32_t>(i + 1), formula_codes[i]});
  GoedelNumber g = GoedelNumber::factored(std::move(factors));
  if (prefer_exact) {
    Natural v;
    if (!g.to_exact(v, opts.max_exact_bits))
      throw InvalidCode("derivation code is not representable in exact form");
    return GoedelNumber::exact(std::move(v));
  }
  return g;
}

GoedelNumber encode_derivation(const fol::Derivation& d, const CodecOptions& opts,
                               bool prefer_exact) {
  if (d.steps.empty()) throw InvalidCode("cannot encode an empty derivation");
  std::vector<GoedelNumber> codes;
  codes.reserve(d.steps.size());
  for (const auto& step : d.steps) codes.push_back(encode_formula(step, opts));
  return encode_code_sequence(codes, opts, prefer_exact);
}

GoedelNumber::FactorList factor(const Natural& n, const CodecOptions& opts) {
  if (n < Natural(2)) throw InvalidCode("factor requires n >= 2");
  GoedelNumber::FactorList out;
  Natural rest = n;
  for (std::uint32_t idx = 1; !rest.is_one(); ++idx) {
    if (idx > opts.max_prime_index)
      throw InvalidCode("cofactor survives past prime index ceiling " +
                        std::to_string(opts.max_prime_index));
    std::uint32_t p = nth_prime(idx);
    std::uint64_t multiplicity = 0;
    for (;;) {
      Natural q = rest;
      if (q.divmod_small(p) != 0) break;
      rest = std::move(q);
      ++multiplicity;
    }
    if (multiplicity > 0) out.push_back({idx, GoedelNumber::exact(multiplicity)});
    if (rest.fits_uint64()) {
      // remaining cofactor smaller than p^2 must itself be prime
      std::uint64_t r = rest.to_uint64();
      if (r > 1 && r < static_cast<std::uint64_t>(p) * p) {
        // locate its index by scanning forward
        for (std::uint32_t j = idx + 1;; ++j) {
          if (j > opts.max_prime_index)
            throw InvalidCode("cofactor survives past prime index ceiling " +
                              std::to_string(opts.max_prime_index));
          if (nth_prime(j) == r) {
            out.push_back({j, GoedelNumber::exact(std::uint64_t{1})});
            return out;
          }
          if (nth_prime(j) > r) throw InvalidCode("internal factoring error");
        }
      }
    }
  }
  return out;
}

namespace {

CodeClass classify_factors(const GoedelNumber::FactorList& factors, const fol::SymbolTable& table,
                           const CodecOptions& opts);

CodeClass classify_impl(const GoedelNumber& g, const fol::SymbolTable& table,
                        const CodecOptions& opts) {
  if (g.is_exact()) {
    const Natural& n = g.value();
    if (n.is_zero()) return CodeClass::invalid("0 is not a code");
    if (n.is_odd()) {
      if (n.fits_uint64() && table.is_registered_code(n.to_uint64()))
        return CodeClass::symbol();
      return CodeClass::invalid("odd number is not a registered symbol code");
    }
    try {
      return classify_factors(factor(n, opts), table, opts);
    } catch (const InvalidCode& e) {
      return CodeClass::invalid(e.what());
    }
  }
  return classify_factors(g.factors(), table, opts);
}

CodeClass classify_factors(const GoedelNumber::FactorList& factors, const fol::SymbolTable& table,
                           const CodecOptions& opts) {
  if (factors.empty()) return CodeClass::invalid("empty factorization");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].prime_index != i + 1)
      return CodeClass::invalid("gap at prime index " + std::to_string(i + 1));
  }
  bool all_symbol_exponents = true;
  bool all_formula_exponents = true;
  for (const auto& f : factors) {
    const GoedelNumber& e = f.exponent;
    if (e.is_exact() && e.value().is_odd()) {
      all_formula_exponents = false;
      if (!(e.value().fits_uint64() && table.is_registered_code(e.value().to_uint64())))
        return CodeClass::invalid("exponent " + e.value().to_decimal() +
                                  " is not a registered symbol code");
    } else {
      all_symbol_exponents = false;
      CodeClass inner = classify_impl(e, table, opts);
      if (!inner.is(CodeClass::Kind::Formula))
        return CodeClass::invalid(
            inner.is(CodeClass::Kind::Invalid)
                ? "exponent is not a formula code: " + inner.reason
                : "exponent is not a formula code");
    }
  }
  if (all_symbol_exponents) return CodeClass::formula();
  if (all_formula_exponents) return CodeClass::derivation();
  return CodeClass::invalid("mixed-parity exponents");
}

}  // namespace

CodeClass classify(const GoedelNumber& g, const fol::SymbolTable& table,
                   const CodecOptions& opts) {
  return classify_impl(g, table, opts);
}

Decoded decode(const GoedelNumber& g, const fol::SymbolTable& table, const CodecOptions& opts) {
  CodeClass cls = classify(g, table, opts);
  if (cls.is(CodeClass::Kind::Invalid)) throw InvalidCode(cls.reason);

  Decoded out;
  out.kind = cls.kind;
  if (cls.is(CodeClass::Kind::Symbol)) {
    out.symbol = *table.find_code(g.value().to_uint64());
    return out;
  }

  GoedelNumber::FactorList factors_local;
  const GoedelNumber::FactorList* factors_ptr;
  if (g.is_exact()) {
    factors_local = factor(g.value(), opts);
    factors_ptr = &factors_local;
  } else {
    factors_ptr = &g.factors();
  }

  if (cls.is(CodeClass::Kind::Formula)) {
    for (const auto& f : *factors_ptr) out.formula_tokens.push_back(f.exponent.value().to_uint64());
    return out;
  }
  for (const auto& f : *factors_ptr) {
    Decoded step = decode(f.exponent, table, opts);
    out.derivation_steps.push_back(std::move(step.formula_tokens));
  }
  return out;
}

fol::Derivation decode_derivation(const GoedelNumber& g, fol::SymbolTable& table,
                                  const CodecOptions& opts) {
  Decoded d = decode(g, table, opts);
  if (d.kind != CodeClass::Kind::Derivation) throw InvalidCode("not a derivation code");
  fol::Derivation out;
  for (const auto& step : d.derivation_steps) out.steps.push_back(fol::parse_tokens(step, table));
  return out;
}

}  // namespace mmk::codec
