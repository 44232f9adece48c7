#include "postlie/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "postlie/catalog.hpp"
#include "postlie/document.hpp"
#include "postlie/search.hpp"

namespace postlie {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  std::uint64_t seed = 0;
};

/// Verification failure: the report is printed and the exit code is 1.
struct Outcome {
  bool passed = true;
  std::string text;
  Json json;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PairDocument load_document(const std::string& path) {
  try {
    return parse_pair_document(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

PostLiePair load_pair(const std::string& path) {
  auto doc = load_document(path);
  if (!doc.is_pair())
    throw Error(path + ": expected a pair document with g, n and product");
  return doc.pair();
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v)
    out.push_back(s.to_string());
  return out;
}

Json to_json(const CheckReport& report) {
  Json items = Json::array();
  for (const auto& item : report.items()) {
    Json j{{"identity", item.identity}, {"passed", item.passed}};
    if (!item.passed) {
      Json witness = Json::array();
      for (auto w : item.witness)
        witness.push_back(w + 1);
      j["witness"] = witness;
      j["discrepancy"] = to_json(item.discrepancy);
      j["failures"] = item.failures;
    }
    items.push_back(j);
  }
  return Json{{"passed", report.passed()}, {"items", items}};
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m(r, c);
  }
  os << ']';
  return os.str();
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(to_json(m.row(r)));
  return rows;
}

/// Prefixes every item with the algebra it came from.
CheckReport tagged(const CheckReport& report, const std::string& prefix) {
  CheckReport out;
  for (auto item : report.items()) {
    item.identity = prefix + item.identity;
    out.add(std::move(item));
  }
  return out;
}

Outcome cmd_check(const std::string& path) {
  auto pair = load_pair(path);
  CheckReport report;
  report.append(tagged(check_lie_axioms(pair.g()), "g:"));
  report.append(tagged(check_lie_axioms(pair.n()), "n:"));
  report.append(check_structure(pair));
  return {report.passed(), report.to_text(), to_json(report)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json algebra_json(const LieAlgebra& raw, std::ostringstream& text, const std::string& label) {
  auto l = raw.validated();
  Json out;
  auto z = center(l);
  auto derived = series(l, SeriesKind::Derived);
  auto lower = series(l, SeriesKind::LowerCentral);
  auto dims = [](const std::vector<Subspace>& s) {
    std::vector<std::size_t> out;
    for (const auto& t : s)
      out.push_back(t.dim());
    return out;
  };
  auto der = derivation_algebra(l);
  auto cls = nilpotency_class(l);
  out["dim"] = l.dim();
  out["center_dim"] = z.dim();
  Json zb = Json::array();
  for (const auto& v : z.basis())
    zb.push_back(to_json(v));
  out["center_basis"] = zb;
  out["derived_series"] = dims(derived);
  out["lower_central_series"] = dims(lower);
  out["solvable"] = derived.back().dim() == 0;
  out["nilpotent"] = cls.has_value();
  out["nilpotency_class"] = cls ? Json(*cls) : Json(nullptr);
  out["derivation_dim"] = der.dim();
  out["complete"] = is_complete_lie(l);

  auto join = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
      s += (k ? " > " : "") + std::to_string(v[k]);
    return s;
  };
  text << label << "dim: " << l.dim() << "\n";
  text << label << "center: dim " << z.dim();
  for (const auto& v : z.basis())
    text << " " << to_string(v);
  text << "\n";
  text << label << "derived series: " << join(dims(derived)) << "\n";
  text << label << "lower central series: " << join(dims(lower)) << "\n";
  text << label << "solvable: " << yes_no(derived.back().dim() == 0) << "\n";
  text << label << "nilpotent: "
       << (cls ? "yes (class " + std::to_string(*cls) + ")" : std::string("no")) << "\n";
  text << label << "derivations: dim " << der.dim() << "\n";
  text << label << "complete (trivial center, all derivations inner): "
       << yes_no(is_complete_lie(l)) << "\n";
  if (l.field().is_rational()) {
    auto k = killing_is_semisimple(l);
    out["killing_rank"] = rank(k.form);
    out["semisimple"] = k.nondegenerate;
    text << label << "killing form: rank " << rank(k.form)
         << (k.nondegenerate ? ", nondegenerate (semisimple)" : ", degenerate") << "\n";
    if (l.dim() <= 3) {
      auto c = classify_low_dim(l);
      out["class"] = c.to_string();
      text << label << "class: " << c.to_string() << "\n";
    }
  } else {
    auto inv = fp_invariants(l);
    out["fp_invariants"] = inv.to_string();
    text << label << "invariants: " << inv.to_string() << "\n";
    text << label << "killing form: skipped (needs characteristic 0)\n";
  }
  return out;
}

Outcome cmd_analyze(const std::string& path, const std::string& builtin,
                    const std::string& field, const std::string& which, const Options& opts) {
  std::ostringstream text;
  Json json;
  if (!builtin.empty()) {
    json["algebra"] = algebra_json(builtin_algebra(builtin, Field::parse(field)), text, "");
    return {true, text.str(), json};
  }
  auto doc = load_document(path);
  if (doc.algebra) {
    json["algebra"] = algebra_json(*doc.algebra, text, "");
    return {true, text.str(), json};
  }
  auto pair = doc.pair();
  if (which == "g" || which == "n") {
    json[which] = algebra_json(which == "g" ? pair.g() : pair.n(), text, "");
    return {true, text.str(), json};
  }
  auto report = check_structure(pair);
  if (!report.passed()) {
    text << "not a post-Lie algebra structure:\n" << report.to_text();
    return {false, text.str(), Json{{"structure", to_json(report)}}};
  }
  auto valid = pair.validated();
  json["g"] = algebra_json(valid.g(), text, "g ");
  json["n"] = algebra_json(valid.n(), text, "n ");
  auto tags = special_case_detect(valid);
  bool complete = is_complete_structure(valid);
  bool sampled = sampled_left_nilpotency(valid, 50, opts.seed);
  json["tags"] = tags.to_string();
  json["complete"] = complete;
  json["right_complete"] = is_right_complete_structure(valid);
  json["sampled_left_nilpotency"] = sampled;
  text << "tags: " << tags.to_string() << "\n";
  text << "complete (all left multiplications nilpotent): " << yes_no(complete) << "\n";
  text << "right complete (all right multiplications nilpotent): "
       << yes_no(is_right_complete_structure(valid)) << "\n";
  text << "sampled cross-check (50 samples, seed " << opts.seed << "): "
       << (sampled == complete ? "agrees" : "DISAGREES") << "\n";
  return {sampled == complete, text.str(), json};
}

Outcome cmd_catalog_list() {
  std::ostringstream text;
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    std::string params;
    for (std::size_t k = 0; k < e.parameters.size(); ++k)
      params += (k ? "," : "") + e.parameters[k];
    Json samples = Json::array();
    std::string sample_text;
    for (const auto& s : e.samples) {
      samples.push_back(format_params(s));
      sample_text += (sample_text.empty() ? "" : " ") + format_params(s);
    }
    list.push_back(Json{{"id", e.id},
                        {"description", e.description},
                        {"parameters", e.parameters},
                        {"samples", samples}});
    text << e.id;
    if (!params.empty())
      text << "(" << params << ")";
    text << "  " << e.description;
    if (!params.empty())
      text << "  samples: " << sample_text;
    text << "\n";
  }
  return {true, text.str(), Json{{"entries", list}}};
}

Outcome cmd_catalog_verify() {
  std::ostringstream text;
  Json lines = Json::array();
  bool all = true;
  std::size_t failed = 0;
  auto results = catalog_verify();
  for (const auto& line : results) {
    all = all && line.passed;
    failed += line.passed ? 0 : 1;
    text << (line.passed ? "PASS " : "FAIL ") << line.id << line.params << "\n";
    for (const auto& f : line.failures)
      text << "     " << f << "\n";
    lines.push_back(Json{{"id", line.id},
                         {"params", line.params},
                         {"passed", line.passed},
                         {"failures", line.failures}});
  }
  text << (results.size() - failed) << "/" << results.size() << " passed\n";
  return {all, text.str(), Json{{"passed", all}, {"results", lines}}};
}

std::vector<Scalar> parse_param_list(const std::string& raw, Field f) {
  std::vector<Scalar> out;
  if (raw.empty())
    return out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(Scalar::parse(f, item));
  return out;
}

Outcome cmd_catalog_export(const std::string& id, const std::string& params,
                           const std::string& field) {
  const auto& entry = find_entry(id);
  auto f = Field::parse(field);
  auto values = parse_param_list(params, Field::rationals());
  if (params.empty() && !entry.samples.empty())
    values = entry.samples.front();
  auto pair = entry.instantiate(values, f);
  auto doc = make_document(pair);
  auto text = serialize_pair_document(doc);
  return {true, text, Json::parse(text)};
}

std::string product_text(const BilinearProduct& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!is_zero(m(i, j))) {
        os << (first ? "" : ", ") << "e" << i + 1 << "·e" << j + 1 << " = " << to_string(m(i, j));
        first = false;
      }
  return first ? "0" : os.str();
}

Json product_json(const BilinearProduct& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!is_zero(m(i, j)))
        out.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"value", to_json(m(i, j))}});
  return out;
}

struct SearchArgs {
  std::size_t dim = 2;
  unsigned p = 3;
  std::string g = "abelian";
  std::string n = "abelian";
  std::string mode = "symmetric";
  bool orbits = false;
  bool phi_ansatz = false;
  bool serial = false;
  bool list = false;
};

Outcome cmd_search(const SearchArgs& a) {
  auto f = Field::prime(a.p);
  auto exec = a.serial ? Execution::Serial : Execution::Parallel;
  std::ostringstream text;
  Json json;
  if (a.phi_ansatz) {
    auto report = nonexistence_probe(a.g, builtin_algebra(a.n, f, a.dim), exec);
    Json hits = Json::array();
    for (const auto* hit : report.matching())
      hits.push_back(Json{{"phi", matrix_json(hit->phi)}, {"g", hit->invariants.to_string()}});
    json = Json{{"banner", report.banner()},
                {"mode", "phi-ansatz"},
                {"p", a.p},
                {"target", a.g},
                {"n", a.n},
                {"endomorphisms", report.endomorphisms},
                {"structures", report.valid.size()},
                {"matching", hits}};
    return {true, report.to_text(), json};
  }
  SearchSpec spec{builtin_algebra(a.g, f, a.dim), builtin_algebra(a.n, f, a.dim)};
  if (a.mode == "all")
    spec.mode = SearchMode::AllProducts;
  else if (a.mode != "symmetric")
    throw Error("--mode must be 'symmetric' or 'all'");
  spec.guard = search_guard_from_env();
  auto hits = enumerate_products(spec, exec);
  const std::string banner = "characteristic-" + std::to_string(a.p) + " evidence: exhaustive over F_" +
                             std::to_string(a.p) + " only; results are not proofs over C";
  text << banner << "\n";
  text << "search: dim " << a.dim << ", p = " << a.p << ", g = " << a.g << ", n = " << a.n
       << ", mode " << a.mode << "\n";
  text << "candidates: " << search_space_size(spec) << "\n";
  text << "hits: " << hits.size() << "\n";
  json = Json{{"banner", banner}, {"dim", a.dim}, {"p", a.p},         {"g", a.g},
              {"n", a.n},         {"mode", a.mode}, {"candidates", search_space_size(spec)},
              {"hits", hits.size()}};
  if (a.list) {
    Json list = Json::array();
    for (const auto& h : hits) {
      text << "  " << product_text(h) << "\n";
      list.push_back(product_json(h));
    }
    json["products"] = list;
  }
  if (a.orbits) {
    auto orbits = orbit_reduce(hits, spec.g, spec.n, spec.guard, exec);
    text << "orbits: " << orbits.size() << "\n";
    Json list = Json::array();
    for (const auto& o : orbits) {
      text << "  size " << o.size() << ": " << product_text(o.representative) << "\n";
      list.push_back(Json{{"size", o.size()}, {"representative", product_json(o.representative)}});
    }
    json["orbits"] = list;
  }
  return {true, text.str(), json};
}

Outcome cmd_embed(const std::string& path) {
  auto raw = load_pair(path);
  auto check = check_structure(raw);
  if (!check.passed())
    return {false, "not a post-Lie algebra structure:\n" + check.to_text(),
            Json{{"structure", to_json(check)}}};
  auto pair = raw.validated();
  auto e = embed_semidirect(pair);
  std::ostringstream text;
  const auto d = pair.dim();
  text << "Der(n): dim " << e.derivations.dim() << "\n";
  Json ders = Json::array();
  for (std::size_t k = 0; k < e.derivations.dim(); ++k) {
    text << "  D" << k + 1 << " = " << matrix_text(e.derivations.basis()[k]) << "\n";
    ders.push_back(matrix_json(e.derivations.basis()[k]));
  }
  text << "semidirect product: dim " << e.semidirect.dim() << " (e1..e" << d << ", D1..D"
       << e.derivations.dim() << ")\n";
  auto lie = check_lie_axioms(e.semidirect);
  text << "semidirect jacobi: " << (lie.passed() ? "PASS" : "FAIL") << "\n";
  Json images = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    text << "  e" << i + 1 << " -> " << to_string(e.images[i]) << "\n";
    images.push_back(to_json(e.images[i]));
  }
  text << e.report.to_text();
  bool ok = e.report.passed() && lie.passed();
  return {ok, text.str(),
          Json{{"derivations", ders},
               {"semidirect_dim", e.semidirect.dim()},
               {"semidirect_jacobi", lie.passed()},
               {"images", images},
               {"homomorphism", to_json(e.report)}}};
}

Outcome cmd_audit(const std::string& path) {
  auto raw = load_pair(path);
  auto check = check_structure(raw);
  if (!check.passed())
    return {false, "not a post-Lie algebra structure:\n" + check.to_text(),
            Json{{"structure", to_json(check)}}};
  auto pair = raw.validated();
  auto identities = derived_identity_audit(pair);
  auto theorems = theorem_audit(pair);
  std::ostringstream text;
  text << "derived identities:\n" << identities.to_text();
  text << "theorem audit:\n" << theorems.to_text();
  Json entries = Json::array();
  for (const auto& e : theorems.entries)
    entries.push_back(
        Json{{"theorem", e.theorem}, {"status", to_string(e.status)}, {"detail", e.detail}});
  bool ok = identities.passed() && theorems.consistent();
  return {ok, text.str(),
          Json{{"identities", to_json(identities)},
               {"theorems", Json{{"advisory", theorems.advisory},
                                 {"consistent", theorems.consistent()},
                                 {"entries", entries}}}}};
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Post-Lie algebra structures: verification, analysis and finite-field search",
               "postlie"};
  app.require_subcommand(1);
  Options opts;
  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for randomized cross-checks")->capture_default_str();
  app.fallthrough(); // global options may follow the subcommand

  std::string file, builtin, field = "Q", which, id, params;

  auto* check = app.add_subcommand("check", "Verify the structure axioms of a pair document");
  check->add_option("file", file, "Pair document (JSON)")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "Structural report: center, series, Killing form, derivations, completeness");
  analyze->add_option("file", file, "Pair or algebra document");
  analyze->add_option("--builtin", builtin, "Built-in algebra, e.g. sl2, r3_lambda(-1)");
  analyze->add_option("--field", field, "Field for --builtin: Q or Fp:<p>")->capture_default_str();
  analyze->add_option("--which", which, "Analyze only g or n of a pair")
      ->check(CLI::IsMember({"g", "n"}));

  auto* catalog = app.add_subcommand("catalog", "Catalogued structures");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  auto* verify = catalog->add_subcommand("verify", "Verify every entry over its sample set");
  auto* exp = catalog->add_subcommand("export", "Print an entry as a pair document");
  exp->add_option("id", id, "Catalog id, e.g. V15")->required();
  exp->add_option("--params", params, "Comma-separated parameters, e.g. 2,1/2");
  exp->add_option("--field", field, "Q or Fp:<p>")->capture_default_str();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive search over F_p");
  search->add_option("--dim", sa.dim, "Dimension (1 to 3)")->capture_default_str();
  search->add_option("--p", sa.p, "Prime")->capture_default_str();
  search->add_option("--g", sa.g, "Built-in g (target class with --phi-ansatz)")
      ->capture_default_str();
  search->add_option("--n", sa.n, "Built-in n")->capture_default_str();
  search->add_option("--mode", sa.mode, "symmetric or all")->capture_default_str();
  search->add_flag("--orbits", sa.orbits, "Reduce hits to isomorphism orbits");
  search->add_flag("--phi-ansatz", sa.phi_ansatz, "Sweep x·y = {φx,y} over all φ");
  search->add_flag("--serial", sa.serial, "Use the serial reference implementation");
  search->add_flag("--list", sa.list, "Print every hit");

  auto* embed = app.add_subcommand("embed", "Embed g into n ⋊ Der(n) and audit the homomorphism");
  embed->add_option("file", file, "Pair document")->required();

  auto* audit = app.add_subcommand("audit", "Derived identities and theorem consistency audit");
  audit->add_option("file", file, "Pair document")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (auto* sub : app.get_subcommands())
      help = sub->help();
    return {2, std::string("error: ") + e.what() + "\n" + (help.empty() ? app.help() : help)};
  }
  opts.format = format == "json" ? Format::Json : Format::Text;

  Outcome outcome;
  try {
    if (check->parsed()) {
      outcome = cmd_check(file);
    } else if (analyze->parsed()) {
      if (file.empty() == builtin.empty())
        return {2, "error: analyze needs exactly one of a file or --builtin\n"};
      outcome = cmd_analyze(file, builtin, field, which, opts);
    } else if (list->parsed()) {
      outcome = cmd_catalog_list();
    } else if (verify->parsed()) {
      outcome = cmd_catalog_verify();
    } else if (exp->parsed()) {
      outcome = cmd_catalog_export(id, params, field);
    } else if (search->parsed()) {
      outcome = cmd_search(sa);
    } else if (embed->parsed()) {
      outcome = cmd_embed(file);
    } else if (audit->parsed()) {
      outcome = cmd_audit(file);
    }
  } catch (const Error& e) {
    if (opts.format == Format::Json)
      return {2, Json{{"error", e.what()}}.dump(2) + "\n"};
    return {2, std::string("error: ") + e.what() + "\n"};
  }

  const int code = outcome.passed ? 0 : 1;
  if (opts.format == Format::Json) {
    // catalog export already is a document; other commands get a verdict field
    if (exp->parsed())
      return {code, outcome.text};
    Json out{{"passed", outcome.passed}};
    for (auto& [k, v] : outcome.json.items())
      if (k != "passed")
        out[k] = v;
    return {code, out.dump(2) + "\n"};
  }
  return {code, outcome.text};
}

} // namespace postlie
