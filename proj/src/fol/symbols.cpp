#include "mmk/fol/symbols.hpp"

#include <mutex>

namespace mmk::fol {

std::string_view to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::Logical: return "logical";
    case SymbolKind::Punctuation: return "punctuation";
    case SymbolKind::Variable: return "variable";
    case SymbolKind::Predicate: return "predicate";
    case SymbolKind::Function: return "function";
    case SymbolKind::NumeralAbbrev: return "numeral-abbrev";
  }
  return "?";
}

SymbolTable::SymbolTable() {
  // Canonical alphabet, in registration order. Codes 1, 3, ..., 35.
  register_locked("!", SymbolKind::Logical);        // negation
  register_locked("->", SymbolKind::Logical);       // implication
  register_locked("forall", SymbolKind::Logical);   // universal quantifier
  register_locked("(", SymbolKind::Punctuation);
  register_locked(")", SymbolKind::Punctuation);
  register_locked(",", SymbolKind::Punctuation);
  register_locked("=", SymbolKind::Logical);
  register_locked("x", SymbolKind::Variable);
  register_locked("y", SymbolKind::Variable);
  register_locked("z", SymbolKind::Variable);
  register_locked("0", SymbolKind::Function);
  register_locked("'", SymbolKind::Function);       // successor
  register_locked("G", SymbolKind::Predicate);
  register_locked("M", SymbolKind::Predicate);
  register_locked("D", SymbolKind::Predicate);
  register_locked("T", SymbolKind::Predicate);
  register_locked("P", SymbolKind::Predicate);
  register_locked("S", SymbolKind::Predicate);
}

const SymbolEntry& SymbolTable::register_locked(std::string name, SymbolKind kind) {
  if (by_name_.count(name)) throw DuplicateSymbol(name);
  std::uint64_t code = 2 * static_cast<std::uint64_t>(entries_.size() + 1) - 1;
  entries_.push_back(SymbolEntry{name, code, kind});
  by_name_.emplace(std::move(name), entries_.size() - 1);
  return entries_.back();
}

const SymbolEntry& SymbolTable::register_symbol(std::string name, SymbolKind kind) {
  std::unique_lock lock(mutex_);
  return register_locked(std::move(name), kind);
}

const SymbolEntry& SymbolTable::numeral_symbol(const codec::Natural& value) {
  std::string name = "#" + value.to_decimal();
  {
    std::shared_lock lock(mutex_);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return entries_[it->second];
  }
  std::unique_lock lock(mutex_);
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return entries_[it->second];
  return register_locked(std::move(name), SymbolKind::NumeralAbbrev);
}

std::optional<SymbolEntry> SymbolTable::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return entries_[it->second];
}

std::optional<SymbolEntry> SymbolTable::find_code(std::uint64_t code) const {
  if (code == 0 || code % 2 == 0) return std::nullopt;
  std::size_t index = static_cast<std::size_t>((code - 1) / 2);
  std::shared_lock lock(mutex_);
  if (index >= entries_.size()) return std::nullopt;
  return entries_[index];
}

bool SymbolTable::is_registered_code(std::uint64_t code) const {
  return find_code(code).has_value();
}

std::size_t SymbolTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace mmk::fol
