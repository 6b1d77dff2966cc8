#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mmk/codec/natural.hpp"
#include "mmk/fol/derivation.hpp"
#include "mmk/fol/formula.hpp"
#include "mmk/fol/symbols.hpp"

namespace mmk::codec {

struct InvalidCode : std::runtime_error {
  explicit InvalidCode(const std::string& reason) : std::runtime_error(reason) {}
};

// A code in exact form (a natural) or factored form: contiguous prime
// indices 1..n with exponents that are themselves codes. Factored form is
// what keeps derivation codes representable; their exact magnitudes are
// towers far beyond any fixed-width storage.
class GoedelNumber {
public:
  struct Factor;
  using FactorList = std::vector<Factor>;

  GoedelNumber() : repr_(Natural(0)) {}
  static GoedelNumber exact(Natural n) { return GoedelNumber(std::move(n)); }
  static GoedelNumber exact(std::uint64_t n) { return GoedelNumber(Natural(n)); }
  static GoedelNumber factored(FactorList factors);

  bool is_exact() const { return std::holds_alternative<Natural>(repr_); }
  const Natural& value() const { return std::get<Natural>(repr_); }
  const FactorList& factors() const;

  // Reconstructs the exact value when it stays within max_bits.
  bool to_exact(Natural& out, std::size_t max_bits = 4096) const;

  nlohmann::json to_json() const;
  static GoedelNumber from_json(const nlohmann::json& j);
  std::string to_string() const;  // decimal, or the factored JSON text

  bool operator==(const GoedelNumber& o) const;
  bool operator!=(const GoedelNumber& o) const { return !(*this == o); }

private:
  explicit GoedelNumber(Natural n) : repr_(std::move(n)) {}
  explicit GoedelNumber(std::shared_ptr<const FactorList> f) : repr_(std::move(f)) {}
  std::variant<Natural, std::shared_ptr<const FactorList>> repr_;
};

struct GoedelNumber::Factor {
  std::uint32_t prime_index;  // 1-based
  GoedelNumber exponent;
};

struct CodeClass {
  enum class Kind { Symbol, Formula, Derivation, Invalid };
  Kind kind = Kind::Invalid;
  std::string reason;  // set when kind == Invalid

  static CodeClass symbol() { return {Kind::Symbol, {}}; }
  static CodeClass formula() { return {Kind::Formula, {}}; }
  static CodeClass derivation() { return {Kind::Derivation, {}}; }
  static CodeClass invalid(std::string reason) { return {Kind::Invalid, std::move(reason)}; }
  bool is(Kind k) const { return kind == k; }
};

std::string_view to_string(CodeClass::Kind k);

struct CodecOptions {
  std::size_t max_exact_bits = 4096;    // exact form ceiling for formula codes
  std::uint32_t max_prime_index = 10000;  // trial-division ceiling
};

// --- encoding ---------------------------------------------------------------

GoedelNumber encode_symbol(const fol::SymbolEntry& s);

// g = q1^c1 * q2^c2 * ... for token codes c1..cn; exact when it fits,
// factored otherwise.
GoedelNumber encode_tokens(const fol::TokenString& tokens, const CodecOptions& opts = {});
GoedelNumber encode_formula(const fol::Formula& f, const CodecOptions& opts = {});

// q1^c1 * q2^c2 * ... for a sequence of formula codes c1..cn. Factored by
// default; pass prefer_exact to materialize small cases.
GoedelNumber encode_code_sequence(const std::vector<GoedelNumber>& formula_codes,
                                  const CodecOptions& opts = {}, bool prefer_exact = false);

// encode_code_sequence over the step codes of a derivation.
GoedelNumber encode_derivation(const fol::Derivation& d, const CodecOptions& opts = {},
                               bool prefer_exact = false);

// --- factoring / classification / decoding ----------------------------------

// Trial division by successive primes; prime indices need not be contiguous.
// Throws InvalidCode when a cofactor survives past the prime-index ceiling.
GoedelNumber::FactorList factor(const Natural& n, const CodecOptions& opts = {});

CodeClass classify(const GoedelNumber& g, const fol::SymbolTable& table,
                   const CodecOptions& opts = {});

struct Decoded {
  CodeClass::Kind kind;
  fol::SymbolEntry symbol;                        // Symbol
  fol::TokenString formula_tokens;                // Formula
  std::vector<fol::TokenString> derivation_steps; // Derivation
};

// Inverse of the encoders; throws InvalidCode with the classify reason.
Decoded decode(const GoedelNumber& g, const fol::SymbolTable& table,
               const CodecOptions& opts = {});

// Convenience: decode and rebuild trees (steps must be well-formed).
fol::Derivation decode_derivation(const GoedelNumber& g, fol::SymbolTable& table,
                                  const CodecOptions& opts = {});

}  // namespace mmk::codec
