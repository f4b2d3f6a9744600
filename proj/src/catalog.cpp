#include "primaut/catalog.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "primaut/embedded.hpp"
#include "primaut/synth.hpp"

namespace primaut::catalog {

namespace {

constexpr std::uint64_t kStatsOrderLimit = 200000;

std::map<unsigned, std::uint64_t> element_order_stats(const PermutationGroup& g) {
  std::map<unsigned, std::uint64_t> stats;
  g.for_each_element([&](const Permutation& x) {
    const mpz_class order = cycle_data(x).order;
    stats[static_cast<unsigned>(order.get_ui())]++;
  });
  return stats;
}

}  // namespace

PermutationGroup CatalogEntry::group() const {
  std::vector<Permutation> gens;
  for (const auto& text : generators)
    gens.push_back(parse_permutation(text, degree));
  return PermutationGroup::from_generators(degree, std::move(gens));
}

void verify_entry(const CatalogEntry& entry) {
  auto fail = [&](const std::string& what) {
    throw InputError("catalog entry " + entry.name + "@" +
                     std::to_string(entry.degree) +
                     " failed self-verification: " + what);
  };
  PermutationGroup g = PermutationGroup::trivial(1);
  try {
    g = entry.group();
  } catch (const Error& e) {
    fail(std::string("generators do not parse: ") + e.what());
  }
  if (g.order() != entry.expected_order)
    fail("order " + g.order().get_str() + " != expected " +
         entry.expected_order.get_str());
  if (!g.is_transitive()) fail("not transitive");
  if (g.is_primitive() != entry.expected_primitive) fail("primitivity flag");
  const bool is_giant = entry.name.rfind("Alt(", 0) == 0 ||
                        entry.name.rfind("Sym(", 0) == 0;
  if (!is_giant && g.contains_alternating())
    fail("contains Alt(n) but is not named Alt/Sym");
  if (entry.class_stats) {
    if (entry.expected_order > kStatsOrderLimit)
      fail("class statistics stored for a group too large to enumerate");
    if (element_order_stats(g) != *entry.class_stats)
      fail("element-order statistics mismatch");
  }
}

std::vector<CatalogEntry> entries_from_recipes() {
  std::vector<CatalogEntry> entries;
  for (const auto& recipe : synth::synthesize_catalog()) {
    CatalogEntry entry;
    entry.name = recipe.name;
    entry.degree = recipe.degree;
    for (const auto& g : recipe.generators)
      entry.generators.push_back(to_cycle_string(g));
    entry.expected_order = recipe.order;
    entry.expected_primitive = recipe.primitive;
    entry.onan_scott_tag = recipe.onan_scott;
    entry.table1_member = recipe.table1;
    entry.notes = recipe.notes;
    if (recipe.order <= kStatsOrderLimit) {
      const auto group = PermutationGroup::from_generators(
          recipe.degree, recipe.generators);
      entry.class_stats = element_order_stats(group);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string render_catalog_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["description"] =
      "Primitive permutation groups of small degree with generator recipes; "
      "regenerate with: primaut catalog synth";
  auto& list = doc["entries"];
  list = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["degree"] = e.degree;
    j["order"] = e.expected_order.get_str();
    j["primitive"] = e.expected_primitive;
    j["onan_scott"] = e.onan_scott_tag;
    j["table1"] = e.table1_member;
    j["generators"] = e.generators;
    if (e.class_stats) {
      nlohmann::ordered_json stats;
      for (const auto& [order, count] : *e.class_stats)
        stats[std::to_string(order)] = count;
      j["class_stats"] = stats;
    }
    if (!e.notes.empty()) j["notes"] = e.notes;
    list.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<CatalogEntry> parse_catalog_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("catalog JSON malformed: ") + e.what());
  }
  if (doc.value("schema_version", 0) != 1)
    throw InputError("unsupported catalog schema version");
  std::vector<CatalogEntry> entries;
  for (const auto& j : doc.at("entries")) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.degree = j.at("degree").get<unsigned>();
    e.expected_order = mpz_class(j.at("order").get<std::string>());
    e.expected_primitive = j.at("primitive").get<bool>();
    e.onan_scott_tag = j.value("onan_scott", std::string{});
    e.table1_member = j.at("table1").get<bool>();
    e.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("class_stats")) {
      std::map<unsigned, std::uint64_t> stats;
      for (const auto& [key, value] : j.at("class_stats").items())
        stats[static_cast<unsigned>(std::stoul(key))] =
            value.get<std::uint64_t>();
      e.class_stats = std::move(stats);
    }
    e.notes = j.value("notes", std::string{});
    entries.push_back(std::move(e));
  }
  return entries;
}

const std::vector<CatalogEntry>& load_catalog() {
  static std::vector<CatalogEntry> entries;
  static std::once_flag flag;
  std::call_once(flag, [] {
    entries = parse_catalog_json(embedded::primaut_catalog_json);
    std::set<std::pair<std::string, unsigned>> names;
    for (const auto& e : entries) {
      if (!names.emplace(e.name, e.degree).second)
        throw InputError("duplicate catalog entry " + e.name + "@" +
                         std::to_string(e.degree));
      verify_entry(e);
    }
  });
  return entries;
}

const CatalogEntry& find(const std::string& name, unsigned degree) {
  for (const auto& e : load_catalog())
    if (e.name == name && e.degree == degree) return e;
  throw InputError("catalog entry not found: " + name + "@" +
                   std::to_string(degree));
}

std::optional<std::pair<std::string, unsigned>> parse_catalog_source(
    const std::string& source) {
  if (source.rfind("catalog:", 0) != 0) return std::nullopt;
  const std::string rest = source.substr(8);
  const auto at = rest.rfind('@');
  if (at == std::string::npos)
    throw InputError("catalog source must look like catalog:NAME@DEGREE");
  const std::string name = rest.substr(0, at);
  unsigned degree = 0;
  try {
    degree = static_cast<unsigned>(std::stoul(rest.substr(at + 1)));
  } catch (const std::exception&) {
    throw InputError("invalid degree in catalog source: " + source);
  }
  return std::make_pair(name, degree);
}

PermutationGroup group_from_source(const std::string& source) {
  if (const auto named = parse_catalog_source(source))
    return find(named->first, named->second).group();
  std::ifstream in(source);
  if (!in) throw InputError("cannot open group file: " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("group JSON malformed: ") + e.what());
    }
    const unsigned degree = doc.at("degree").get<unsigned>();
    std::vector<Permutation> gens;
    for (const auto& s : doc.at("generators"))
      gens.push_back(parse_permutation(s.get<std::string>(), degree));
    return PermutationGroup::from_generators(degree, std::move(gens));
  }
  return parse_group_text(text);
}

}  // namespace primaut::catalog
