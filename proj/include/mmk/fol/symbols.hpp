#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "mmk/codec/natural.hpp"

namespace mmk::fol {

enum class SymbolKind {
  Logical,
  Punctuation,
  Variable,
  Predicate,
  Function,
  NumeralAbbrev,
};

std::string_view to_string(SymbolKind k);

struct SymbolEntry {
  std::string name;
  std::uint64_t code = 0;  // odd; the p-th registered symbol gets 2p-1
  SymbolKind kind = SymbolKind::Logical;
};

struct DuplicateSymbol : std::runtime_error {
  explicit DuplicateSymbol(const std::string& name)
      : std::runtime_error("symbol already registered: " + name) {}
};

// Append-only symbol table. The 18 built-in symbols occupy codes 1..35;
// everything registered afterwards continues the odd sequence.
// Reads are shared, registration is exclusive.
class SymbolTable {
public:
  SymbolTable();

  const SymbolEntry& register_symbol(std::string name, SymbolKind kind);

  // Finds the abbreviated numeral symbol "#<value>", registering it on first use.
  const SymbolEntry& numeral_symbol(const codec::Natural& value);

  std::optional<SymbolEntry> find(std::string_view name) const;
  std::optional<SymbolEntry> find_code(std::uint64_t code) const;
  bool is_registered_code(std::uint64_t code) const;
  std::size_t size() const;

  // Fixed codes of the built-in alphabet.
  static constexpr std::uint64_t kNot = 1;
  static constexpr std::uint64_t kImplies = 3;
  static constexpr std::uint64_t kForall = 5;
  static constexpr std::uint64_t kLParen = 7;
  static constexpr std::uint64_t kRParen = 9;
  static constexpr std::uint64_t kComma = 11;
  static constexpr std::uint64_t kEquals = 13;
  static constexpr std::uint64_t kVarX = 15;
  static constexpr std::uint64_t kVarY = 17;
  static constexpr std::uint64_t kVarZ = 19;
  static constexpr std::uint64_t kZero = 21;
  static constexpr std::uint64_t kSuccessor = 23;

private:
  const SymbolEntry& register_locked(std::string name, SymbolKind kind);

  std::deque<SymbolEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_name_;
  mutable std::shared_mutex mutex_;
};

}  // namespace mmk::fol
