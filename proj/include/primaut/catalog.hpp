#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primaut/group.hpp"

namespace primaut::catalog {

/// One catalog group. Entries are self-verifying: loading the catalog
/// recomputes order, transitivity and primitivity from the generator
/// strings and compares element-order statistics where stored.
struct CatalogEntry {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generators;  // cycle strings, 1-indexed
  mpz_class expected_order;
  bool expected_primitive = true;
  std::string onan_scott_tag;  // informational
  bool table1_member = false;
  std::optional<std::map<unsigned, std::uint64_t>> class_stats;  // order -> count
  std::string notes;

  PermutationGroup group() const;
};

/// The embedded catalog, parsed and self-verified on first use. Any
/// verification failure aborts the load naming the offending entry.
const std::vector<CatalogEntry>& load_catalog();

const CatalogEntry& find(const std::string& name, unsigned degree);

/// Builds fresh entries from the synthesis recipes (element-order statistics
/// included for groups of order <= 200000). Used to regenerate the data file.
std::vector<CatalogEntry> entries_from_recipes();

std::string render_catalog_json(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_catalog_json(const std::string& text);

/// Verifies one entry against its stored expectations; throws on mismatch.
void verify_entry(const CatalogEntry& entry);

/// Resolves "catalog:NAME@DEGREE" to a catalog group, or loads a group from
/// a file in either the text or the JSON format.
PermutationGroup group_from_source(const std::string& source);

/// Catalog name of the source when it refers to a catalog entry.
std::optional<std::pair<std::string, unsigned>> parse_catalog_source(
    const std::string& source);

}  // namespace primaut::catalog
