#include "klc/cache.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "klc/serialize.hpp"

namespace klc {

void cache_load(HeckeContext& ctx, const std::string& path,
                std::ostream& warn) {
  if (!std::filesystem::exists(path)) return;  // fresh cache
  nlohmann::json doc;
  try {
    std::ifstream in(path);
    in >> doc;
  } catch (const std::exception& e) {
    warn << "warning: ignoring unreadable cache '" << path << "': " << e.what()
         << "\n";
    return;
  }
  try {
    if (doc.value("schema_version", -1) != kCacheSchemaVersion) {
      warn << "warning: ignoring cache '" << path
           << "' with unknown schema version\n";
      return;
    }
    if (doc.value("system_hash", std::string()) !=
        ctx.system().content_hash()) {
      warn << "warning: ignoring cache '" << path
           << "' built for a different Coxeter system\n";
      return;
    }
    std::map<Element, HeckeElt> entries;
    for (const auto& [xkey, column] : doc.at("kl").items()) {
      const Element x = element_from_str(ctx.system(), xkey);
      HeckeElt h(ctx.system());
      for (const auto& [ykey, poly] : column.items())
        h.add(element_from_str(ctx.system(), ykey), laurent_from_json(poly));
      entries.emplace(x, std::move(h));
    }
    ctx.seed(std::move(entries));
  } catch (const std::exception& e) {
    warn << "warning: ignoring corrupted cache '" << path << "': " << e.what()
         << "\n";
  }
}

void cache_store(HeckeContext& ctx, const std::string& path,
                 std::ostream& warn) {
  nlohmann::json kl = nlohmann::json::object();
  for (const auto& [x, h] : ctx.snapshot()) {
    nlohmann::json column = nlohmann::json::object();
    for (const auto& [y, p] : h.terms()) column[y.str()] = laurent_to_json(p);
    kl[x.str()] = std::move(column);
  }
  nlohmann::json doc{{"schema_version", kCacheSchemaVersion},
                     {"system_hash", ctx.system().content_hash()},
                     {"kl", std::move(kl)}};
  std::ofstream out(path);
  if (!out) {
    warn << "warning: cannot write cache '" << path << "'\n";
    return;
  }
  out << doc.dump(1) << "\n";
  if (!out) warn << "warning: failed while writing cache '" << path << "'\n";
}

}  // namespace klc
