// qdesign: verification and search for graph decompositions over finite
// fields. Subcommands: verify, search, admissible, sizes, catalog, develop.
// Exit codes: 0 pass/found, 1 fail/exhausted, 2 usage or schema error,
// 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdesign/admissible.hpp"
#include "qdesign/catalog.hpp"

namespace {

using namespace qdesign;
using nlohmann::json;

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3;

void write_out(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(output);
    f << text << "\n";
  }
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs)
    out.push_back({{"residue", v.residue}, {"expected", v.expected}, {"got", v.got}});
  return out;
}

json certificate_json(const CatalogEntry& e, const EntryVerdict& v) {
  json cert = {
      {"schema", "qdesign-certificate-v1"},
      {"entry", e.id},
      {"kind", e.kind},
      {"lambda", e.lambda},
      {"verdict",
       {{"actual", v.actual_pass ? "pass" : "fail"},
        {"expected", e.expected},
        {"as_expected", v.as_expected}}},
      {"violations", violations_json(v.certificate.violations)},
  };
  if (v.line_partition_pass)
    cert["verdict"]["line_partition"] = {{"actual", *v.line_partition_pass ? "pass" : "fail"},
                                         {"expected", e.line_partition_expected}};
  if (!v.detail.empty()) cert["verdict"]["detail"] = v.detail;
  return cert;
}

CatalogEntry entry_from_args(const std::string& catalog_id, const std::string& input) {
  if (!catalog_id.empty()) return load_entry(catalog_id);
  std::ifstream in(input);
  if (!in) throw error(errc::bad_params, "cannot open " + input);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw error(errc::corrupt_entry, std::string("input is not valid JSON: ") + ex.what());
  }
  return parse_entry(j);
}

json field_json(const FieldDescriptor& f) {
  return {{"p", f.p}, {"e", f.e}, {"v", f.v}, {"modulus", f.modulus}};
}

int cmd_verify(const std::string& catalog_id, const std::string& input, const std::string& output,
               bool /*jobs are irrelevant here: family checks are sequential*/) {
  CatalogEntry e = entry_from_args(catalog_id, input);
  EntryVerdict v = verify_entry(e);
  write_out(certificate_json(e, v).dump(1), output);
  return v.as_expected ? kExitPass : kExitFail;
}

int cmd_develop(const std::string& catalog_id, const std::string& input, const std::string& output,
                int jobs) {
  CatalogEntry e = entry_from_args(catalog_id, input);
  SingerPtr ctx = e.field ? detail::entry_context(e) : nullptr;
  uint64_t modulus = ctx ? ctx->v_q : e.group_order;
  FamilyCandidate c;
  c.modulus = modulus;
  c.ctx = ctx;
  c.lambda = e.lambda;
  c.subgroup = e.subgroup;
  c.subspace_required = e.subspace_required;
  AbstractGraph g = graph_from_spec(e.graph_spec);
  for (const auto& b : e.blocks) {
    LabeledGraph lg;
    lg.graph = g;
    lg.labels = b;
    lg.modulus = modulus;
    c.blocks.push_back(std::move(lg));
  }
  if (e.kind == "initial_blocks") {
    InitialBlocks ib;
    ib.ctx = ctx;
    ib.blocks = c.blocks;
    ib.lambda = e.lambda;
    ib.subgroup = e.subgroup;
    ib.subspace_required = e.subspace_required;
    c = expand_initial_blocks(ib);
  }
  DesignInstance d = develop(c);
  DesignCertificate cert = verify_design(d, jobs);
  json out = {{"schema", "qdesign-design-certificate-v1"},
              {"entry", e.id},
              {"lambda", d.lambda},
              {"blocks", d.blocks.size()},
              {"pairs_checked", cert.pairs_checked},
              {"improper_degree", d.improper_degree},
              {"verdict", cert.pass ? "pass" : "fail"},
              {"violations", violations_json(cert.violations)}};
  write_out(out.dump(1), output);
  return cert.pass ? kExitPass : kExitFail;
}

json witness_entry_json(const json& spec, const SearchResult& r) {
  json e;
  std::string type = spec.at("type");
  e["provenance"] = "search witness";
  e["expected"] = "pass";
  e["lambda"] = spec.value("lambda", 1u);
  if (spec.contains("field")) e["field"] = spec.at("field");
  if (spec.contains("group_order")) e["group_order"] = spec.at("group_order");
  if (type == "graceful") {
    e["kind"] = "graceful_labeling";
    e["graph"] = spec.at("graph");
    e["D"] = spec.at("D");
    e["labels"] = r.witness->labels;
    e["id"] = "search-graceful-witness";
  } else if (type == "subspace_block") {
    e["kind"] = "initial_blocks";
    e["graph"] = spec.at("graph");
    e["blocks"] = json::array({r.witness->labels});
    e["subgroup"] = spec.value("subgroup", std::vector<Point>{});
    e["subspace_required"] = true;
    e["id"] = "search-subspace-block-witness";
  } else if (type == "family") {
    e["kind"] = spec.contains("subgroup") && !spec.at("subgroup").empty() ? "relative_family"
                                                                          : "family";
    e["graph"] = {{"type", "cycle"}, {"n", spec.at("cycle")}};
    json blocks = json::array();
    for (const auto& b : *r.family_witness) blocks.push_back(b.labels);
    e["blocks"] = blocks;
    e["subgroup"] = spec.value("subgroup", std::vector<Point>{});
    e["subspace_required"] = true;
    e["id"] = "search-family-witness";
  } else if (type == "nested_set") {
    e["kind"] = "nested_set";
    e["D"] = spec.at("D");
    e["D_sub"] = *r.set_witness;
    e["lambda"] = spec.at("D_lambda");
    e["sub_lambda"] = spec.value("lambda", 1u);
    e["id"] = "search-nested-set-witness";
  }
  return e;
}

int cmd_search(const std::string& input, const std::string& output, const SearchBudget& budget,
               bool emit_certificate, uint64_t seed) {
  std::ifstream in(input);
  if (!in) throw error(errc::bad_params, "cannot open " + input);
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::exception& ex) {
    throw error(errc::corrupt_entry, std::string("spec is not valid JSON: ") + ex.what());
  }
  std::string type;
  SearchResult r;
  try {
    type = spec.at("type");
    uint32_t lambda = spec.value("lambda", 1u);
    if (type == "graceful") {
      r = search_graceful(spec.at("group_order"), spec.at("D").get<std::vector<Point>>(),
                          graph_from_spec(spec.at("graph")), lambda, budget);
    } else if (type == "subspace_block" || type == "family") {
      const auto& jf = spec.at("field");
      auto f = build_field(jf.at("p"), jf.at("e"), jf.at("v"),
                           jf.at("modulus").get<std::vector<int64_t>>());
      auto ctx = make_singer(std::move(f));
      auto subgroup = spec.value("subgroup", std::vector<Point>{});
      if (type == "subspace_block")
        r = search_subspace_block(*ctx, graph_from_spec(spec.at("graph")), lambda, budget,
                                  subgroup);
      else
        r = search_family(*ctx, spec.at("cycle"), lambda, subgroup, budget);
    } else if (type == "nested_set") {
      r = search_nested_set(spec.at("group_order"), spec.at("D").get<std::vector<Point>>(),
                            spec.at("k"), lambda, budget);
    } else {
      throw error(errc::bad_params, "unknown search type: " + type);
    }
  } catch (const json::exception& ex) {
    throw error(errc::corrupt_entry, std::string("spec schema violation: ") + ex.what());
  }
  const char* status = r.status == SearchStatus::found        ? "found"
                       : r.status == SearchStatus::exhausted ? "exhausted"
                                                             : "budget-exceeded";
  json out = {{"schema", "qdesign-search-v1"},
              {"status", status},
              {"nodes_explored", r.nodes_explored},
              {"seed", seed}};
  if (r.witness) out["witness"] = {{"labels", r.witness->labels}, {"modulus", r.witness->modulus}};
  if (r.family_witness) {
    json blocks = json::array();
    for (const auto& b : *r.family_witness) blocks.push_back(b.labels);
    out["witness"] = {{"blocks", blocks}};
  }
  if (r.set_witness) out["witness"] = {{"set", *r.set_witness}};
  if (emit_certificate && r.status == SearchStatus::found)
    out["certificate"] = witness_entry_json(spec, r);
  write_out(out.dump(1), output);
  switch (r.status) {
    case SearchStatus::found: return kExitPass;
    case SearchStatus::exhausted: return kExitFail;
    default: return kExitBudget;
  }
}

int cmd_admissible(int v, int k, uint64_t q, uint32_t lambda, const std::string& shape, bool table,
                   const std::string& format, const std::string& output) {
  if (table) {
    auto rows = admissible_table(v, q, lambda);
    if (format == "tsv") {
      std::ostringstream ss;
      ss << "order\tsizes\tregular\n";
      for (const auto& row : rows) {
        ss << row.order << "\t";
        for (size_t i = 0; i < row.sizes.size(); ++i) ss << (i ? "," : "") << row.sizes[i];
        ss << "\t";
        for (size_t i = 0; i < row.sizes.size(); ++i)
          ss << (i ? "," : "") << (row.regular_possible[i] ? 1 : 0);
        ss << "\n";
      }
      std::string s = ss.str();
      s.pop_back();
      write_out(s, output);
    } else {
      json out = json::array();
      for (const auto& row : rows)
        out.push_back({{"order", row.order},
                       {"sizes", row.sizes},
                       {"regular_possible", row.regular_possible}});
      write_out(out.dump(1), output);
    }
    return kExitPass;
  }
  bool adm;
  if (shape == "steiner")
    adm = steiner_admissible(v, k, q);
  else if (shape == "cycle")
    adm = cycle_admissible(v, k, q);
  else if (shape == "path")
    adm = path_admissible(v, k, q);
  else
    throw error(errc::bad_params, "need --steiner, --cycle, or --path (or --table)");
  json out = {{"v", v}, {"k", k}, {"q", q}, {"shape", shape},
              {"admissible", adm}};
  write_out(format == "tsv" ? std::string(adm ? "admissible" : "not-admissible") : out.dump(1),
            output);
  return adm ? kExitPass : kExitFail;
}

int cmd_sizes(int v, int k, uint64_t q, const std::string& format, const std::string& output) {
  SteinerSizes s = steiner_family_sizes(v, k, q);
  if (format == "tsv") {
    std::ostringstream ss;
    ss << "family_size\t" << s.family_size.str();
    if (s.initial_size) ss << "\ninitial_count\t" << s.initial_size->str();
    write_out(ss.str(), output);
  } else {
    json out = {{"v", v}, {"k", k}, {"q", q}, {"family_size", s.family_size.str()}};
    if (s.initial_size) out["initial_count"] = s.initial_size->str();
    write_out(out.dump(1), output);
  }
  return kExitPass;
}

int cmd_catalog(const std::string& action, const std::string& output) {
  if (action == "list") {
    std::ostringstream ss;
    for (const auto& id : list_entries()) ss << id << "\n";
    std::string s = ss.str();
    if (!s.empty()) s.pop_back();
    write_out(s, output);
    return kExitPass;
  }
  if (action == "export") {
    std::filesystem::path dir = output.empty() ? "catalog-export" : output;
    std::filesystem::create_directories(dir);
    for (const auto& id : list_entries()) {
      std::ofstream f(dir / (id + ".json"));
      f << serialize_entry(load_entry(id)) << "\n";
    }
    std::cerr << "exported " << list_entries().size() << " entries to " << dir << "\n";
    return kExitPass;
  }
  if (action == "verify") {
    bool all_ok = true;
    for (const auto& id : list_entries()) {
      EntryVerdict v = verify_entry(id);
      std::cout << id << "\t" << (v.actual_pass ? "pass" : "fail") << "\t"
                << (v.as_expected ? "as-expected" : "MISMATCH") << "\n";
      all_ok = all_ok && v.as_expected;
    }
    return all_ok ? kExitPass : kExitFail;
  }
  throw error(errc::bad_params, "catalog action must be list, export, or verify");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and search for graph decompositions over finite fields"};
  app.require_subcommand(1);

  std::string catalog_id, input, output, format = "json", shape_flagged;
  int jobs = 1, v = 0, k = 0;
  uint64_t q = 2, seed = 0;
  uint32_t lambda = 1;
  bool emit_certificate = false, table = false;
  SearchBudget budget;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "write the result to a file instead of stdout");
    sub->add_option("--format", format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--jobs", jobs, "worker threads (output is identical for any value)");
    sub->add_option("--seed", seed, "reserved; recorded in output, no effect");
  };

  auto* sv = app.add_subcommand("verify", "re-verify a catalog entry or an entry file");
  sv->add_option("--catalog", catalog_id, "catalog entry id");
  sv->add_option("--input", input, "entry JSON file");
  add_common(sv);

  auto* sd = app.add_subcommand("develop", "develop a family into a design and check pair coverage");
  sd->add_option("--catalog", catalog_id, "catalog entry id");
  sd->add_option("--input", input, "entry JSON file");
  add_common(sd);

  auto* ss = app.add_subcommand("search", "run a search from a spec JSON");
  ss->add_option("--input", input, "search spec JSON file")->required();
  ss->add_option("--budget-nodes", budget.nodes, "node budget");
  ss->add_option("--budget-seconds", budget.seconds, "time budget in seconds");
  ss->add_flag("--emit-certificate", emit_certificate,
               "include the verified witness in catalog-entry form");
  add_common(ss);

  auto* sa = app.add_subcommand("admissible", "admissibility tests and tables");
  sa->add_option("--v", v, "ambient dimension")->required();
  sa->add_option("--k", k, "block dimension");
  sa->add_option("--q", q, "field order")->required();
  sa->add_option("--lambda", lambda, "index");
  bool f_steiner = false, f_cycle = false, f_path = false;
  sa->add_flag("--steiner", f_steiner, "Steiner (complete-graph block) admissibility");
  sa->add_flag("--cycle", f_cycle, "cycle-block admissibility");
  sa->add_flag("--path", f_path, "path-block admissibility");
  sa->add_flag("--table", table, "enumerate the full (order, size) table");
  add_common(sa);

  auto* sz = app.add_subcommand("sizes", "family and initial-block counts for Steiner parameters");
  sz->add_option("--v", v, "ambient dimension")->required();
  sz->add_option("--k", k, "block dimension")->required();
  sz->add_option("--q", q, "field order")->required();
  add_common(sz);

  auto* sc = app.add_subcommand("catalog", "list, export, or re-verify the embedded corpus");
  std::string action;
  sc->add_option("action", action, "list | export | verify")->required();
  add_common(sc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sv->parsed()) {
      if (catalog_id.empty() == input.empty()) {
        std::cerr << "verify needs exactly one of --catalog or --input\n";
        return kExitUsage;
      }
      return cmd_verify(catalog_id, input, output, jobs > 1);
    }
    if (sd->parsed()) {
      if (catalog_id.empty() == input.empty()) {
        std::cerr << "develop needs exactly one of --catalog or --input\n";
        return kExitUsage;
      }
      return cmd_develop(catalog_id, input, output, jobs);
    }
    if (ss->parsed()) return cmd_search(input, output, budget, emit_certificate, seed);
    if (sa->parsed()) {
      std::string shape = f_steiner ? "steiner" : f_cycle ? "cycle" : f_path ? "path" : "";
      if (!table && shape.empty()) {
        std::cerr << "admissible needs --steiner, --cycle, --path, or --table\n";
        return kExitUsage;
      }
      return cmd_admissible(v, k, q, lambda, shape, table, format, output);
    }
    if (sz->parsed()) return cmd_sizes(v, k, q, format, output);
    if (sc->parsed()) return cmd_catalog(action, output);
  } catch (const qdesign::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code) {
      case qdesign::errc::unknown_id:
      case qdesign::errc::corrupt_entry:
      case qdesign::errc::bad_params:
        return kExitUsage;
      default:
        return kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
