#pragma once

#include <string>
#include <vector>

#include "hlgeo/catalog.hpp"

namespace hlgeo {

enum class LedgerStatus { exact_match, paper_typo_suspected, convention_dependent };

std::string to_string(LedgerStatus s);

/// One published value compared against the engine.
struct LedgerEntry {
  std::string location;  // table the value was printed in
  std::string quantity;  // e.g. "[E4,E6]", "N_J(E1,E2)"
  std::string printed;
  std::string engine;
  LedgerStatus status = LedgerStatus::exact_match;
  std::string note;
};

struct DiscrepancyLedger {
  std::string algebra;
  std::vector<LedgerEntry> entries;
  /// Quantities that carry a published value; each must have an entry.
  std::vector<std::string> printed_quantities;

  std::size_t mismatches() const;
  /// Every printed quantity has an entry, and every non-matching entry
  /// records the engine value.
  bool complete() const;
};

/// Published values for the catalog spaces compared against the engine.
/// Spaces without published tables (user files, flat_c3) get an empty ledger.
DiscrepancyLedger ledger(const HomogeneousSpace& space);

}  // namespace hlgeo
