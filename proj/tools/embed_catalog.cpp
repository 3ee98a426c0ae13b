// Regenerates include/qdesign/catalog_data.hpp from data/catalog/*.json.
// The header embeds each entry verbatim in its canonical (dump-stable) form.
//
//   embed_catalog <data/catalog dir> <output header>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: embed_catalog <entry dir> <output header>\n";
    return 2;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& p : std::filesystem::directory_iterator(argv[1]))
    if (p.path().extension() == ".json") files.push_back(p.path());
  std::sort(files.begin(), files.end());
  std::ofstream h(argv[2]);
  h << "#pragma once\n\n"
    << "// Generated from data/catalog/*.json; regenerate with tools/embed_catalog.\n"
    << "// Do not edit by hand.\n\n"
    << "#include <utility>\n\n"
    << "namespace qdesign {\n\n"
    << "inline constexpr std::pair<const char*, const char*> kCatalogData[] = {\n";
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& ex) {
      std::cerr << f << ": " << ex.what() << "\n";
      return 1;
    }
    std::string canon = j.dump(1);
    h << "  {\"" << f.stem().string() << "\", R\"qdcat(" << canon << ")qdcat\"},\n";
  }
  h << "};\n\n}  // namespace qdesign\n";
  return 0;
}
